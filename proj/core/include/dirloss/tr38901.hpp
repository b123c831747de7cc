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

#include <filesystem>
#include <vector>

namespace dirloss
{

enum class Condition
{
    Los,
    Nlos,
};

enum class TdlModelId
{
    TdlC, // NLOS profile
    TdlE, // LOS profile with a direct ray
};

// UMa link geometry. Defaults are the TR 38.901 urban-macro evaluation
// heights; the model works on the 3D distance derived from d2d.
struct UmaGeometry
{
    double h_bs_m = 25.0;
    double h_ut_m = 1.5;
    double d2d_m = 0.0;

    double d3d_m() const;
    void validate() const; // names the violated bound
};

// Breakpoint distance of the UMa LOS model. Uses the standard's rounded
// propagation constant (3.0e8 m/s) and 1 m effective environment height.
double breakpoint_distance(double fc_ghz, const UmaGeometry& geom);

// Mean path loss in dB (shadow fading excluded).
double uma_pl_los(double fc_ghz, const UmaGeometry& geom);
double uma_pl_nlos(double fc_ghz, const UmaGeometry& geom);

struct PdpTap
{
    double delay_s = 0.0;
    double power = 0.0;     // linear, profile sums to 1
    bool is_direct = false; // true only for the LOS ray
};

// Delay-scaled, power-normalized tapped delay line profile.
// Taps are sorted by delay; total linear power is 1.
struct PowerDelayProfile
{
    std::vector<PdpTap> taps;

    double total_power() const;
    void validate() const;
};

struct TdlRow
{
    double normalized_delay = 0.0;
    double power_db = 0.0;
    bool is_los = false;
};

using TdlTable = std::vector<TdlRow>;

// Parses a tap table file: `<normalized_delay> <power_dB> <R|L>` per line,
// `#` comments. Errors carry the file name and line number.
TdlTable load_tdl_table(const std::filesystem::path& path);

// Built-in tables (tdl_c.txt / tdl_e.txt from the data directory, cached).
const TdlTable& tdl_table(TdlModelId model);

// Resolves a data file: $DIRLOSS_DATA_DIR first, then the installed and
// source-tree data directories.
std::filesystem::path find_data_file(const std::string& filename);

// Scales normalized delays by sigma_tau, converts powers to linear and
// renormalizes the profile to unit total power.
PowerDelayProfile scaled_tdl(TdlModelId model, double sigma_tau_s);
PowerDelayProfile scaled_tdl(const TdlTable& table, double sigma_tau_s);

// Zero-delay split of a profile: direct ray power, local (remaining tau = 0)
// power, and the delayed taps. The three parts sum to the profile total.
struct PdpSplit
{
    double direct_power = 0.0;
    double local_power = 0.0;
    std::vector<PdpTap> delayed;
};

PdpSplit pdp_split_tau0(const PowerDelayProfile& pdp);

} // namespace dirloss
