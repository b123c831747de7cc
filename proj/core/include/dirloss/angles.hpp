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

#include <cmath>
#include <numbers>

namespace dirloss
{

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * pi;

// Exact vacuum value; TR 38.901 formulas use their own rounded constant.
inline constexpr double speed_of_light_mps = 299792458.0;

constexpr double deg2rad(double deg) { return deg * (pi / 180.0); }
constexpr double rad2deg(double rad) { return rad * (180.0 / pi); }

// Wrap an azimuth to [-180, 180).
inline double wrap_deg(double phi_deg)
{
    return phi_deg - 360.0 * std::floor((phi_deg + 180.0) / 360.0);
}

} // namespace dirloss
