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

#pragma once

#include "dirloss/mpm.hpp"
#include "dirloss/patterns.hpp"
#include "dirloss/tr38901.hpp"

#include <vector>

namespace dirloss
{

// Full experiment description for one distance sweep.
struct Scenario
{
    double fc_ghz = 28.0;
    Condition condition = Condition::Los;
    double d_min_m = 60.0;
    double d_max_m = 180.0;
    double d_step_m = 10.0;
    double sigma_tau_s = 266e-9;
    double gamma = 60.0;
    double kappa_db = 22.0; // informational; realized by the TDL-E direct ray
    PatternSpec tx_spec;
    PatternSpec rx_spec;
    double alpha_t_deg = 180.0; // mutually facing boresights by default
    double alpha_r_deg = 0.0;
    int n_phi = 3600;
    double h_bs_m = 25.0;
    double h_ut_m = 1.5;

    TdlModelId tdl_model() const; // Los -> TDL-E, Nlos -> TDL-C
    UmaGeometry geometry_at(double d_m) const;
    void validate() const;
    bool operator==(const Scenario&) const = default;
};

// Correction value with its grid-refinement status. warning is set when the
// n_phi and 2*n_phi evaluations disagree by more than 1e-3 dB.
struct Correction
{
    double corr_db = 0.0;
    bool refinement_warning = false;
    double refinement_delta_db = 0.0;
};

// PAS-ratio correction 10*log10(int P_in / int P_out), the gain-cancelled
// form for peak-normalized patterns. Zero for omni/omni, nonnegative for any
// directional pair.
Correction pl_correction(const Scenario& scenario, double d_m);
Correction pl_correction(const Scenario& scenario, const PowerDelayProfile& pdp, double d_m);

struct PlPoint
{
    double d_m = 0.0;
    double pl_in_db = 0.0;
    double pl_corr_db = 0.0;
    double pl_out_db = 0.0;
    bool refinement_warning = false;
};

PlPoint directional_pl(const Scenario& scenario, double d_m);
PlPoint directional_pl(const Scenario& scenario, const PowerDelayProfile& pdp, double d_m);

struct PlCurve
{
    std::vector<PlPoint> rows; // ascending distance
};

// directional_pl at d_min, d_min + d_step, ..., d_max. The delay-scaled TDL
// is shared across distances; everything else is rebuilt per point.
PlCurve sweep_curve(const Scenario& scenario);

} // namespace dirloss
