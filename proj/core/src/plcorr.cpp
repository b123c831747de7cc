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

#include "dirloss/plcorr.hpp"

#include "dirloss/errors.hpp"

#include <cmath>
#include <sstream>

namespace dirloss
{

namespace
{

constexpr double refinement_tolerance_db = 1e-3;

double pas_ratio_db(const MpmGeometry& geom, const AzimuthPattern& tx, const AzimuthPattern& rx,
                    double alpha_t_deg, double alpha_r_deg, int n_phi)
{
    const AzimuthPattern omni{omni_spec()};
    const double p_in =
        integrate_pas(synthesize_pas(geom, omni, omni, alpha_t_deg, alpha_r_deg, n_phi));
    const double p_out = integrate_pas(synthesize_pas(geom, tx, rx, alpha_t_deg, alpha_r_deg, n_phi));
    if (!(std::isfinite(p_in) && p_in > 0.0 && std::isfinite(p_out) && p_out > 0.0))
    {
        std::ostringstream msg;
        msg << "PAS integrals are not positive finite (P_in = " << p_in << ", P_out = " << p_out
            << "); the directional pair collects no power on this grid";
        throw NumericError(msg.str());
    }
    return 10.0 * std::log10(p_in / p_out);
}

} // namespace

TdlModelId Scenario::tdl_model() const
{
    return condition == Condition::Los ? TdlModelId::TdlE : TdlModelId::TdlC;
}

UmaGeometry Scenario::geometry_at(double d_m) const
{
    UmaGeometry geom;
    geom.h_bs_m = h_bs_m;
    geom.h_ut_m = h_ut_m;
    geom.d2d_m = d_m;
    return geom;
}

void Scenario::validate() const
{
    if (!(fc_ghz >= 0.5 && fc_ghz <= 100.0))
        throw ValidationError("fc_ghz outside [0.5, 100]");
    if (!(d_min_m >= 10.0))
        throw ValidationError("d_min_m must be >= 10 (path loss model validity floor)");
    if (!(d_max_m >= d_min_m))
        throw ValidationError("d_max_m must be >= d_min_m");
    if (!(d_step_m > 0.0))
        throw ValidationError("d_step_m must be positive");
    if (!(sigma_tau_s > 0.0))
        throw ValidationError("sigma_tau must be positive");
    if (!(gamma >= 0.0))
        throw ValidationError("gamma must be nonnegative");
    if (n_phi < 360)
        throw ValidationError("n_phi must be >= 360");
    tx_spec.validate();
    rx_spec.validate();
    geometry_at(d_min_m).validate();
}

Correction pl_correction(const Scenario& scenario, const PowerDelayProfile& pdp, double d_m)
{
    const MpmGeometry geom = build_geometry(pdp, d_m, scenario.gamma);
    const AzimuthPattern tx{scenario.tx_spec};
    const AzimuthPattern rx{scenario.rx_spec};

    const double coarse = pas_ratio_db(geom, tx, rx, scenario.alpha_t_deg, scenario.alpha_r_deg,
                                       scenario.n_phi);
    const double fine = pas_ratio_db(geom, tx, rx, scenario.alpha_t_deg, scenario.alpha_r_deg,
                                     2 * scenario.n_phi);

    Correction result;
    result.corr_db = coarse;
    result.refinement_delta_db = coarse - fine;
    result.refinement_warning = std::abs(result.refinement_delta_db) > refinement_tolerance_db;
    return result;
}

Correction pl_correction(const Scenario& scenario, double d_m)
{
    scenario.validate();
    return pl_correction(scenario, scaled_tdl(scenario.tdl_model(), scenario.sigma_tau_s), d_m);
}

PlPoint directional_pl(const Scenario& scenario, const PowerDelayProfile& pdp, double d_m)
{
    const UmaGeometry geom = scenario.geometry_at(d_m);
    const double pl_in = scenario.condition == Condition::Los ? uma_pl_los(scenario.fc_ghz, geom)
                                                              : uma_pl_nlos(scenario.fc_ghz, geom);
    const Correction corr = pl_correction(scenario, pdp, d_m);

    PlPoint point;
    point.d_m = d_m;
    point.pl_in_db = pl_in;
    point.pl_corr_db = corr.corr_db;
    point.pl_out_db = pl_in + corr.corr_db;
    point.refinement_warning = corr.refinement_warning;
    return point;
}

PlPoint directional_pl(const Scenario& scenario, double d_m)
{
    scenario.validate();
    return directional_pl(scenario, scaled_tdl(scenario.tdl_model(), scenario.sigma_tau_s), d_m);
}

PlCurve sweep_curve(const Scenario& scenario)
{
    scenario.validate();
    const PowerDelayProfile pdp = scaled_tdl(scenario.tdl_model(), scenario.sigma_tau_s);

    // Hits d_max exactly when the range divides evenly; a remainder shorter
    // than the step is not swept.
    const int steps =
        static_cast<int>(std::floor((scenario.d_max_m - scenario.d_min_m) / scenario.d_step_m + 1e-9));

    PlCurve curve;
    curve.rows.reserve(steps + 1);
    for (int i = 0; i <= steps; ++i)
        curve.rows.push_back(
            directional_pl(scenario, pdp, scenario.d_min_m + i * scenario.d_step_m));
    return curve;
}

} // namespace dirloss
