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

#include <string>

namespace dirloss
{

// Azimuth power pattern families. All are peak-normalized (boresight gain 1);
// absolute gain is carried separately by directivity_2d().
enum class PatternKind
{
    Omni,
    Gaussian,    // main lobe only
    Sinc,        // main lobe plus side lobes
    Element3gpp, // single element, parabolic-in-dB with a side-lobe floor
    GnodebArray, // element * uniform linear array factor, broadside
    UeElement,   // Element3gpp with fixed UE constants
};

// Base station / UE element constants (TR 37.842 style azimuth cut).
inline constexpr double bs_element_phi3db_deg = 65.0;
inline constexpr double bs_element_floor_db = 30.0;
inline constexpr double ue_element_phi3db_deg = 90.0;
inline constexpr double ue_element_floor_db = 25.0;

struct PatternSpec
{
    PatternKind kind = PatternKind::Omni;
    double hpbw_deg = 0.0;    // Gaussian, Sinc
    double phi3db_deg = 0.0;  // Element3gpp
    double a_m_db = 0.0;      // Element3gpp side-lobe floor
    int columns = 8;          // GnodebArray
    double spacing_wl = 0.5;  // GnodebArray, element spacing in wavelengths

    void validate() const; // throws ValidationError
    bool operator==(const PatternSpec&) const = default;
};

PatternSpec omni_spec();
PatternSpec gaussian_spec(double hpbw_deg);
PatternSpec sinc_spec(double hpbw_deg);
PatternSpec element3gpp_spec(double phi3db_deg, double a_m_db);
PatternSpec gnodeb_spec(int columns = 8, double spacing_wl = 0.5);
PatternSpec ue_spec();

std::string pattern_kind_name(PatternKind kind);

// Gain primitives. phi is the azimuth offset from boresight in degrees,
// results are linear power gains in [0, 1].
double gaussian_gain(double phi_deg, double hpbw_deg);
double sinc_gain(double phi_deg, double hpbw_deg);
double element_gain_3gpp(double phi_deg, double phi3db_deg, double a_m_db);

// Positive root of (sin x / x)^2 = 1/2 in (0, pi), in radians. Calibrates the
// Sinc model so its half-power points sit at +-hpbw/2.
double solve_sinc_halfpower();

// Immutable, peak-normalized azimuth power pattern. Evaluation wraps the
// offset into [-180, 180) and is safe for unrestricted concurrent use.
class AzimuthPattern
{
  public:
    explicit AzimuthPattern(const PatternSpec& spec);

    double gain(double phi_deg) const;
    double operator()(double phi_deg) const { return gain(phi_deg); }
    const PatternSpec& spec() const { return spec_; }
    PatternKind kind() const { return spec_.kind; }

  private:
    PatternSpec spec_;
    double sinc_mu_ = 0.0; // rad per degree of offset
};

AzimuthPattern make_pattern(const PatternSpec& spec);

// gNodeB azimuth cut: 3GPP element pattern times the squared uniform linear
// array factor, broadside steering, peak 1 at phi = 0.
AzimuthPattern synthesize_gnodeb_azimuth(int columns = 8, double spacing_wl = 0.5);

// Width between the half-power crossings nearest boresight, in degrees.
// Throws ValidationError when the pattern never crosses 1/2 (Omni).
double measure_hpbw(const AzimuthPattern& pattern);

// 2D directivity: 2*pi divided by the azimuthal integral of the pattern,
// trapezoidal quadrature on an n_phi-point periodic grid.
double directivity_2d(const AzimuthPattern& pattern, int n_phi = 3600);

} // namespace dirloss
