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

#include "dirloss/tr38901.hpp"

#include "dirloss/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace dirloss
{

namespace
{

// TR 38.901 states its path loss formulas with c = 3.0e8 m/s.
constexpr double tr_speed_of_light_mps = 3.0e8;

void check_range(double value, double lo, double hi, const char* what)
{
    if (!(value >= lo && value <= hi))
    {
        std::ostringstream msg;
        msg << what << " = " << value << " outside validity range [" << lo << ", " << hi << "]";
        throw ValidationError(msg.str());
    }
}

void check_fc(double fc_ghz)
{
    check_range(fc_ghz, 0.5, 100.0, "fc_ghz");
}

} // namespace

double UmaGeometry::d3d_m() const
{
    return std::hypot(d2d_m, h_bs_m - h_ut_m);
}

void UmaGeometry::validate() const
{
    check_range(d2d_m, 10.0, 5000.0, "d2d_m");
    check_range(h_ut_m, 1.5, 22.5, "h_ut_m");
    if (!(h_bs_m > h_ut_m))
        throw ValidationError("h_bs_m must exceed h_ut_m");
}

double breakpoint_distance(double fc_ghz, const UmaGeometry& geom)
{
    check_fc(fc_ghz);
    const double h_bs_eff = geom.h_bs_m - 1.0;
    const double h_ut_eff = geom.h_ut_m - 1.0;
    if (!(h_bs_eff > 0.0 && h_ut_eff > 0.0))
        throw ValidationError("effective antenna heights (h - 1 m) must be positive");
    return 4.0 * h_bs_eff * h_ut_eff * fc_ghz * 1e9 / tr_speed_of_light_mps;
}

double uma_pl_los(double fc_ghz, const UmaGeometry& geom)
{
    check_fc(fc_ghz);
    geom.validate();
    const double d3d = geom.d3d_m();
    const double d_bp = breakpoint_distance(fc_ghz, geom);
    if (geom.d2d_m <= d_bp)
        return 28.0 + 22.0 * std::log10(d3d) + 20.0 * std::log10(fc_ghz);
    const double dh = geom.h_bs_m - geom.h_ut_m;
    return 28.0 + 40.0 * std::log10(d3d) + 20.0 * std::log10(fc_ghz) -
           9.0 * std::log10(d_bp * d_bp + dh * dh);
}

double uma_pl_nlos(double fc_ghz, const UmaGeometry& geom)
{
    check_fc(fc_ghz);
    geom.validate();
    const double pl_nlos = 13.54 + 39.08 * std::log10(geom.d3d_m()) +
                           20.0 * std::log10(fc_ghz) - 0.6 * (geom.h_ut_m - 1.5);
    return std::max(uma_pl_los(fc_ghz, geom), pl_nlos);
}

double PowerDelayProfile::total_power() const
{
    double sum = 0.0;
    for (const auto& tap : taps)
        sum += tap.power;
    return sum;
}

void PowerDelayProfile::validate() const
{
    if (taps.empty())
        throw ValidationError("power delay profile has no taps");
    if (taps.front().delay_s != 0.0)
        throw ValidationError("first tap must have zero delay");
    int direct_count = 0;
    for (std::size_t i = 0; i < taps.size(); ++i)
    {
        if (taps[i].delay_s < 0.0 || taps[i].power < 0.0)
            throw ValidationError("taps need nonnegative delay and power");
        if (i > 0 && taps[i].delay_s < taps[i - 1].delay_s)
            throw ValidationError("taps must be sorted by nondecreasing delay");
        if (taps[i].is_direct)
        {
            ++direct_count;
            if (taps[i].delay_s != 0.0)
                throw ValidationError("direct ray must have zero delay");
        }
    }
    if (direct_count > 1)
        throw ValidationError("at most one direct ray allowed");
}

TdlTable load_tdl_table(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open TDL table file: " + path.string());

    TdlTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos)
            continue;
        std::istringstream fields(line);
        double delay = 0.0, power_db = 0.0;
        std::string kind, trailing;
        if (!(fields >> delay >> power_db >> kind) || (fields >> trailing) ||
            (kind != "R" && kind != "L"))
        {
            std::ostringstream msg;
            msg << path.string() << ":" << line_no
                << ": expected `<normalized_delay> <power_dB> <R|L>`";
            throw ValidationError(msg.str());
        }
        if (delay < 0.0)
        {
            std::ostringstream msg;
            msg << path.string() << ":" << line_no << ": negative normalized delay";
            throw ValidationError(msg.str());
        }
        table.push_back({delay, power_db, kind == "L"});
    }
    if (table.empty())
        throw ValidationError("TDL table file has no taps: " + path.string());
    return table;
}

std::filesystem::path find_data_file(const std::string& filename)
{
    std::vector<std::filesystem::path> candidates;
    if (const char* env = std::getenv("DIRLOSS_DATA_DIR"))
        candidates.emplace_back(env);
#ifdef DIRLOSS_INSTALL_DATA_DIR
    candidates.emplace_back(DIRLOSS_INSTALL_DATA_DIR);
#endif
#ifdef DIRLOSS_SOURCE_DATA_DIR
    candidates.emplace_back(DIRLOSS_SOURCE_DATA_DIR);
#endif
    for (const auto& dir : candidates)
    {
        auto p = dir / filename;
        if (std::filesystem::exists(p))
            return p;
    }
    throw ValidationError("data file not found: " + filename +
                          " (set DIRLOSS_DATA_DIR to the data directory)");
}

const TdlTable& tdl_table(TdlModelId model)
{
    static const TdlTable tdl_c = load_tdl_table(find_data_file("tdl_c.txt"));
    static const TdlTable tdl_e = load_tdl_table(find_data_file("tdl_e.txt"));
    switch (model)
    {
    case TdlModelId::TdlC: return tdl_c;
    case TdlModelId::TdlE: return tdl_e;
    }
    throw ValidationError("unknown TDL model id");
}

PowerDelayProfile scaled_tdl(const TdlTable& table, double sigma_tau_s)
{
    if (!(std::isfinite(sigma_tau_s) && sigma_tau_s > 0.0))
        throw ValidationError("sigma_tau must be positive and finite");

    PowerDelayProfile pdp;
    pdp.taps.reserve(table.size());
    double total = 0.0;
    for (const auto& row : table)
    {
        const double power = std::pow(10.0, row.power_db / 10.0);
        pdp.taps.push_back({row.normalized_delay * sigma_tau_s, power, row.is_los});
        total += power;
    }
    for (auto& tap : pdp.taps)
        tap.power /= total;

    std::stable_sort(pdp.taps.begin(), pdp.taps.end(),
                     [](const PdpTap& a, const PdpTap& b) { return a.delay_s < b.delay_s; });
    pdp.validate();
    return pdp;
}

PowerDelayProfile scaled_tdl(TdlModelId model, double sigma_tau_s)
{
    return scaled_tdl(tdl_table(model), sigma_tau_s);
}

PdpSplit pdp_split_tau0(const PowerDelayProfile& pdp)
{
    PdpSplit split;
    for (const auto& tap : pdp.taps)
    {
        if (tap.is_direct)
            split.direct_power += tap.power;
        else if (tap.delay_s == 0.0)
            split.local_power += tap.power;
        else
            split.delayed.push_back(tap);
    }
    return split;
}

} // namespace dirloss
