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

#include "dirloss/patterns.hpp"

#include "dirloss/angles.hpp"
#include "dirloss/errors.hpp"
#include "dirloss/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace dirloss
{

namespace
{

constexpr double four_ln2 = 4.0 * std::numbers::ln2;

// Attenuation constant of the parabolic element model. The nominal "12" of
// the 3GPP formula assumes 3 dB = half power; using 40*log10(2) instead makes
// the half-power width of the element equal phi3db exactly.
const double element_att_coeff = 40.0 * std::log10(2.0);

double require_positive(double value, const char* what)
{
    if (!(std::isfinite(value) && value > 0.0))
        throw ValidationError(std::string(what) + " must be positive and finite");
    return value;
}

// sin(x)/x with a series fallback near zero.
double sinc(double x)
{
    if (std::abs(x) < 1e-4)
    {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double array_factor_sq(double phi_deg, int columns, double spacing_wl)
{
    const double psi = two_pi * spacing_wl * std::sin(deg2rad(phi_deg));
    const double den = std::sin(0.5 * psi);
    if (std::abs(den) < 1e-9)
        return 1.0; // grating-lobe limit, |AF| -> 1
    const double af = std::sin(0.5 * columns * psi) / (columns * den);
    return af * af;
}

} // namespace

double gaussian_gain(double phi_deg, double hpbw_deg)
{
    require_positive(hpbw_deg, "hpbw");
    const double u = wrap_deg(phi_deg) / hpbw_deg;
    return std::exp(-four_ln2 * u * u);
}

double solve_sinc_halfpower()
{
    static const double root = [] {
        auto f = [](double x) { return sinc(x) - 1.0 / std::numbers::sqrt2; };
        return detail::bisect(f, 1e-9, pi, 80);
    }();
    return root;
}

double sinc_gain(double phi_deg, double hpbw_deg)
{
    require_positive(hpbw_deg, "hpbw");
    const double mu = 2.0 * solve_sinc_halfpower() / hpbw_deg;
    const double s = sinc(mu * wrap_deg(phi_deg));
    return s * s;
}

double element_gain_3gpp(double phi_deg, double phi3db_deg, double a_m_db)
{
    require_positive(phi3db_deg, "phi3db");
    require_positive(a_m_db, "a_m");
    const double u = wrap_deg(phi_deg) / phi3db_deg;
    const double att_db = std::min(element_att_coeff * u * u, a_m_db);
    return std::pow(10.0, -0.1 * att_db);
}

void PatternSpec::validate() const
{
    switch (kind)
    {
    case PatternKind::Omni:
    case PatternKind::UeElement:
        return;
    case PatternKind::Gaussian:
    case PatternKind::Sinc:
        require_positive(hpbw_deg, "hpbw");
        if (hpbw_deg >= 360.0)
            throw ValidationError("hpbw must be below 360 degrees");
        return;
    case PatternKind::Element3gpp:
        require_positive(phi3db_deg, "phi3db");
        require_positive(a_m_db, "a_m");
        return;
    case PatternKind::GnodebArray:
        if (columns < 2)
            throw ValidationError("gnodeb array needs at least 2 columns");
        require_positive(spacing_wl, "spacing");
        return;
    }
    throw ValidationError("unknown pattern kind");
}

PatternSpec omni_spec()
{
    return {};
}

PatternSpec gaussian_spec(double hpbw_deg)
{
    PatternSpec s;
    s.kind = PatternKind::Gaussian;
    s.hpbw_deg = hpbw_deg;
    return s;
}

PatternSpec sinc_spec(double hpbw_deg)
{
    PatternSpec s;
    s.kind = PatternKind::Sinc;
    s.hpbw_deg = hpbw_deg;
    return s;
}

PatternSpec element3gpp_spec(double phi3db_deg, double a_m_db)
{
    PatternSpec s;
    s.kind = PatternKind::Element3gpp;
    s.phi3db_deg = phi3db_deg;
    s.a_m_db = a_m_db;
    return s;
}

PatternSpec gnodeb_spec(int columns, double spacing_wl)
{
    PatternSpec s;
    s.kind = PatternKind::GnodebArray;
    s.columns = columns;
    s.spacing_wl = spacing_wl;
    return s;
}

PatternSpec ue_spec()
{
    PatternSpec s;
    s.kind = PatternKind::UeElement;
    return s;
}

std::string pattern_kind_name(PatternKind kind)
{
    switch (kind)
    {
    case PatternKind::Omni: return "omni";
    case PatternKind::Gaussian: return "gaussian";
    case PatternKind::Sinc: return "sinc";
    case PatternKind::Element3gpp: return "element3gpp";
    case PatternKind::GnodebArray: return "gnodeb";
    case PatternKind::UeElement: return "ue";
    }
    return "unknown";
}

AzimuthPattern::AzimuthPattern(const PatternSpec& spec) : spec_(spec)
{
    spec_.validate();
    if (spec_.kind == PatternKind::Sinc)
        sinc_mu_ = 2.0 * solve_sinc_halfpower() / spec_.hpbw_deg;
}

double AzimuthPattern::gain(double phi_deg) const
{
    const double phi = wrap_deg(phi_deg);
    switch (spec_.kind)
    {
    case PatternKind::Omni:
        return 1.0;
    case PatternKind::Gaussian:
    {
        const double u = phi / spec_.hpbw_deg;
        return std::exp(-four_ln2 * u * u);
    }
    case PatternKind::Sinc:
    {
        const double s = sinc(sinc_mu_ * phi);
        return s * s;
    }
    case PatternKind::Element3gpp:
        return element_gain_3gpp(phi, spec_.phi3db_deg, spec_.a_m_db);
    case PatternKind::GnodebArray:
        return element_gain_3gpp(phi, bs_element_phi3db_deg, bs_element_floor_db) *
               array_factor_sq(phi, spec_.columns, spec_.spacing_wl);
    case PatternKind::UeElement:
        return element_gain_3gpp(phi, ue_element_phi3db_deg, ue_element_floor_db);
    }
    throw ValidationError("unknown pattern kind");
}

AzimuthPattern make_pattern(const PatternSpec& spec)
{
    return AzimuthPattern(spec);
}

AzimuthPattern synthesize_gnodeb_azimuth(int columns, double spacing_wl)
{
    // Element and array factor both peak at broadside, so the product is
    // already normalized to 1 at phi = 0.
    return AzimuthPattern(gnodeb_spec(columns, spacing_wl));
}

namespace
{

// First crossing of gain = 1/2 when scanning away from boresight in the
// given direction (+1 or -1), located by bisection.
double halfpower_crossing(const AzimuthPattern& pattern, double direction)
{
    constexpr double scan_step_deg = 0.02;
    double prev = 0.0;
    for (double phi = scan_step_deg; phi <= 180.0 + 0.5 * scan_step_deg; phi += scan_step_deg)
    {
        const double bounded = std::min(phi, 180.0);
        if (pattern.gain(direction * bounded) < 0.5)
        {
            auto f = [&](double p) { return pattern.gain(direction * p) - 0.5; };
            return direction * detail::bisect(f, prev, bounded, 60);
        }
        prev = bounded;
    }
    throw ValidationError("pattern has no half-power crossing (HPBW undefined)");
}

} // namespace

double measure_hpbw(const AzimuthPattern& pattern)
{
    if (std::abs(pattern.gain(0.0) - 1.0) > 1e-6)
        throw ValidationError("pattern peak is not at boresight");
    const double plus = halfpower_crossing(pattern, +1.0);
    const double minus = halfpower_crossing(pattern, -1.0);
    return plus - minus;
}

double directivity_2d(const AzimuthPattern& pattern, int n_phi)
{
    if (n_phi < 8)
        throw ValidationError("directivity_2d needs n_phi >= 8");
    const double step_deg = 360.0 / n_phi;
    double sum = 0.0;
    for (int i = 0; i < n_phi; ++i)
        sum += pattern.gain(-180.0 + i * step_deg);
    const double integral = deg2rad(step_deg) * sum;
    if (!(std::isfinite(integral) && integral > 0.0))
        throw ValidationError("degenerate pattern: azimuthal integral is not positive");
    return two_pi / integral;
}

} // namespace dirloss
