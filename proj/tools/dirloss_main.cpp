// SPDX-License-Identifier: Apache-2.0
//
// dirloss - directional path loss engine for mmWave radio links
// Copyright (C) 2026 the dirloss authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "dirloss/curve_csv.hpp"
#include "dirloss/errors.hpp"
#include "dirloss/mpm.hpp"
#include "dirloss/plcorr.hpp"
#include "dirloss/scenario_io.hpp"
#include "dirloss/svg_plot.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace
{

// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 numeric failure.
constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_invalid = 2;
constexpr int exit_numeric = 3;

constexpr double db_floor = -400.0; // stands in for -inf at pattern nulls

void run_sweep(const std::string& scenario_path, const std::string& out_path)
{
    const dirloss::Scenario scenario = dirloss::parse_scenario(scenario_path);
    const dirloss::PlCurve curve = dirloss::sweep_curve(scenario);
    for (const dirloss::PlPoint& p : curve.rows)
        if (p.refinement_warning)
            std::fprintf(stderr,
                         "warning: doubling the angular grid moves pl_corr by more than "
                         "0.001 dB at d = %g m; consider a larger n_phi\n",
                         p.d_m);
    dirloss::write_curve_csv(out_path, curve);
}

void run_plot(const std::vector<std::string>& csv_paths, const std::string& out_path)
{
    std::vector<dirloss::NamedCurve> curves;
    curves.reserve(csv_paths.size());
    for (const std::string& path : csv_paths)
        curves.push_back(dirloss::read_named_curve(path));
    dirloss::write_curves_svg(out_path, curves);
}

void run_pattern_dump(const std::string& scenario_path, const std::string& side,
                      const std::string& out_path)
{
    const dirloss::Scenario scenario = dirloss::parse_scenario(scenario_path);
    const dirloss::PatternSpec& spec = (side == "rx") ? scenario.rx_spec : scenario.tx_spec;
    const dirloss::AzimuthPattern pattern(spec);

    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw dirloss::ValidationError("cannot open output file: " + out_path);
    out << "phi_deg,gain_linear,gain_db\n";
    char row[96];
    for (int i = 0; i < scenario.n_phi; ++i)
    {
        const double phi = -180.0 + i * 360.0 / scenario.n_phi;
        const double g = pattern.gain(phi);
        const double g_db = g > 0.0 ? std::max(10.0 * std::log10(g), db_floor) : db_floor;
        std::snprintf(row, sizeof row, "%.4f,%.10g,%.4f\n", phi, g, g_db);
        out << row;
    }
    if (!out)
        throw dirloss::ValidationError("write failed: " + out_path);
}

void run_pas_dump(const std::string& scenario_path, double d_m, const std::string& out_path)
{
    const dirloss::Scenario scenario = dirloss::parse_scenario(scenario_path);
    const dirloss::PowerDelayProfile pdp =
        dirloss::scaled_tdl(scenario.tdl_model(), scenario.sigma_tau_s);
    const dirloss::MpmGeometry geom = dirloss::build_geometry(pdp, d_m, scenario.gamma);
    const dirloss::AzimuthPattern tx(scenario.tx_spec);
    const dirloss::AzimuthPattern rx(scenario.rx_spec);
    const dirloss::AngularSpectrum pas = dirloss::synthesize_pas(
        geom, tx, rx, scenario.alpha_t_deg, scenario.alpha_r_deg, scenario.n_phi);

    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw dirloss::ValidationError("cannot open output file: " + out_path);
    out << "phi_deg,density_linear\n";
    char row[96];
    for (int i = 0; i < pas.n_phi; ++i)
    {
        std::snprintf(row, sizeof row, "%.4f,%.10g\n", pas.phi_deg(i), pas.density[i]);
        out << row;
    }
    for (const dirloss::DeltaRay& delta : pas.deltas)
    {
        std::snprintf(row, sizeof row, "# delta %.4f %.10g\n", delta.phi_deg, delta.power);
        out << row;
    }
    if (!out)
        throw dirloss::ValidationError("write failed: " + out_path);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"directional path loss curves for mmWave links"};
    app.set_version_flag("--version", "dirloss 0.1.0");
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    std::string side = "tx";
    double distance_m = 0.0;
    std::vector<std::string> csv_paths;

    CLI::App* run_cmd = app.add_subcommand("run", "sweep a scenario and write a path loss CSV");
    run_cmd->add_option("scenario", scenario_path, "scenario file")->required();
    run_cmd->add_option("-o,--output", out_path, "output CSV path")->required();

    CLI::App* plot_cmd = app.add_subcommand("plot", "render one or more sweep CSVs as an SVG");
    plot_cmd->add_option("csv", csv_paths, "input CSV files")->required()->expected(-1);
    plot_cmd->add_option("-o,--output", out_path, "output SVG path")->required();

    CLI::App* pattern_cmd =
        app.add_subcommand("pattern-dump", "tabulate an antenna pattern over azimuth");
    pattern_cmd->add_option("scenario", scenario_path, "scenario file")->required();
    pattern_cmd->add_option("--side", side, "which antenna to dump")
        ->check(CLI::IsMember({"tx", "rx"}));
    pattern_cmd->add_option("-o,--output", out_path, "output CSV path")->required();

    CLI::App* pas_cmd =
        app.add_subcommand("pas-dump", "tabulate the power azimuth spectrum at one distance");
    pas_cmd->add_option("scenario", scenario_path, "scenario file")->required();
    pas_cmd->add_option("--distance", distance_m, "Tx-Rx ground distance in m")->required();
    pas_cmd->add_option("-o,--output", out_path, "output CSV path")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return exit_usage;
    }

    try
    {
        if (app.got_subcommand(run_cmd))
            run_sweep(scenario_path, out_path);
        else if (app.got_subcommand(plot_cmd))
            run_plot(csv_paths, out_path);
        else if (app.got_subcommand(pattern_cmd))
            run_pattern_dump(scenario_path, side, out_path);
        else if (app.got_subcommand(pas_cmd))
            run_pas_dump(scenario_path, distance_m, out_path);
    }
    catch (const dirloss::ValidationError& e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_invalid;
    }
    catch (const dirloss::NumericError& e)
    {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return exit_numeric;
    }
    catch (const std::exception& e)
    {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return exit_numeric;
    }
    return exit_ok;
}
