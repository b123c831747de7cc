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

#include "dirloss/mpm.hpp"

#include "dirloss/angles.hpp"
#include "dirloss/errors.hpp"
#include "dirloss/numerics.hpp"

#include <cmath>

namespace dirloss
{

Ellipse make_ellipse(double tau_s, double d_m, double cluster_power)
{
    if (!(d_m > 0.0))
        throw ValidationError("ellipse needs d > 0");
    if (!(tau_s > 0.0))
        throw ValidationError("ellipse needs tau > 0 (tau = 0 degenerates to the Tx-Rx segment)");
    if (!(cluster_power >= 0.0))
        throw ValidationError("cluster power must be nonnegative");

    const double excess = speed_of_light_mps * tau_s; // path length beyond d
    Ellipse ell;
    ell.tau_s = tau_s;
    ell.cluster_power = cluster_power;
    ell.a_m = 0.5 * (excess + d_m);
    // b^2 = a^2 - (d/2)^2 in the cancellation-free factored form.
    ell.b_m = std::sqrt(0.5 * excess * (0.5 * excess + d_m));
    ell.eccentricity = 0.5 * d_m / ell.a_m;
    return ell;
}

MpmGeometry build_geometry(const PowerDelayProfile& pdp, double d_m, double gamma)
{
    if (!(d_m > 0.0))
        throw ValidationError("build_geometry needs d > 0");
    if (!(gamma >= 0.0))
        throw ValidationError("gamma must be nonnegative");
    pdp.validate();

    MpmGeometry geom;
    geom.d_m = d_m;
    geom.gamma = gamma;

    const PdpSplit split = pdp_split_tau0(pdp);
    geom.local_power = split.local_power;
    geom.direct_power = split.direct_power;
    geom.ellipses.reserve(split.delayed.size());
    for (const auto& tap : split.delayed)
        geom.ellipses.push_back(make_ellipse(tap.delay_s, d_m, tap.power));
    return geom;
}

double radius_from_rx(const Ellipse& ell, double phi_r_deg)
{
    const double e = ell.eccentricity;
    const double semi_latus = ell.a_m * (1.0 - e * e);
    return semi_latus / (1.0 - e * std::cos(deg2rad(phi_r_deg)));
}

double departure_angle(const Ellipse& ell, double phi_r_deg, double d_m)
{
    const double r = radius_from_rx(ell, phi_r_deg);
    const double phi = deg2rad(phi_r_deg);
    const double sx = r * std::cos(phi);
    const double sy = r * std::sin(phi);
    return rad2deg(std::atan2(sy, sx - d_m));
}

double von_mises_pdf(double phi_rad, double gamma)
{
    if (!(gamma >= 0.0))
        throw ValidationError("gamma must be nonnegative");
    // exp(gamma cos phi) / (2 pi I0(gamma)) with both factor scaled by
    // exp(-gamma), so gamma = 60 and beyond never overflows.
    return std::exp(gamma * (std::cos(phi_rad) - 1.0)) / (two_pi * bessel_i0_scaled(gamma));
}

std::vector<double> cluster_pas(const Ellipse& ell, double d_m,
                                const AzimuthPattern& tx, const AzimuthPattern& rx,
                                double alpha_t_deg, double alpha_r_deg, int n_phi)
{
    const double step_deg = 360.0 / n_phi;
    const double step_rad = deg2rad(step_deg);
    const double e = ell.eccentricity;
    const double semi_latus = ell.a_m * (1.0 - e * e);

    // Arc length per unit arrival angle, ds/dphi = sqrt(r^2 + (dr/dphi)^2).
    std::vector<double> arc(n_phi);
    double perimeter = 0.0;
    for (int i = 0; i < n_phi; ++i)
    {
        const double phi = deg2rad(-180.0 + i * step_deg);
        const double denom = 1.0 - e * std::cos(phi);
        const double r = semi_latus / denom;
        const double dr = -r * e * std::sin(phi) / denom;
        arc[i] = std::sqrt(r * r + dr * dr);
        perimeter += arc[i];
    }
    perimeter *= step_rad;

    // Normalizing by the same quadrature makes the omni integral match
    // cluster_power at the grid level, not just in the limit.
    std::vector<double> density(n_phi);
    for (int i = 0; i < n_phi; ++i)
    {
        const double phi_deg = -180.0 + i * step_deg;
        const double phi_t = departure_angle(ell, phi_deg, d_m);
        const double weight = tx.gain(phi_t - alpha_t_deg) * rx.gain(phi_deg - alpha_r_deg);
        density[i] = ell.cluster_power * (arc[i] / perimeter) * weight;
    }
    return density;
}

std::vector<double> local_pas(double local_power, double gamma,
                              const AzimuthPattern& tx, const AzimuthPattern& rx,
                              double alpha_t_deg, double alpha_r_deg, int n_phi)
{
    if (!(local_power >= 0.0))
        throw ValidationError("local power must be nonnegative");

    // Local scatterers sit in a ring around the Rx that is small against d,
    // so every departure leaves the Tx toward the Rx (global azimuth 180).
    const double tx_weight = tx.gain(180.0 - alpha_t_deg);
    const double step_deg = 360.0 / n_phi;

    std::vector<double> density(n_phi);
    for (int i = 0; i < n_phi; ++i)
    {
        const double phi_deg = -180.0 + i * step_deg;
        density[i] = local_power * von_mises_pdf(deg2rad(phi_deg), gamma) * tx_weight *
                     rx.gain(phi_deg - alpha_r_deg);
    }
    return density;
}

std::optional<DeltaRay> los_term(double direct_power,
                                 const AzimuthPattern& tx, const AzimuthPattern& rx,
                                 double alpha_t_deg, double alpha_r_deg)
{
    if (!(direct_power >= 0.0))
        throw ValidationError("direct power must be nonnegative");
    if (direct_power == 0.0)
        return std::nullopt;
    const double weight = tx.gain(180.0 - alpha_t_deg) * rx.gain(0.0 - alpha_r_deg);
    return DeltaRay{0.0, direct_power * weight};
}

AngularSpectrum synthesize_pas(const MpmGeometry& geom,
                               const AzimuthPattern& tx, const AzimuthPattern& rx,
                               double alpha_t_deg, double alpha_r_deg, int n_phi)
{
    if (n_phi < 360)
        throw ValidationError("synthesize_pas needs n_phi >= 360");

    AngularSpectrum spectrum;
    spectrum.n_phi = n_phi;
    spectrum.density.assign(n_phi, 0.0);

    // Fixed accumulation order keeps results reproducible.
    for (const auto& ell : geom.ellipses)
    {
        const auto part = cluster_pas(ell, geom.d_m, tx, rx, alpha_t_deg, alpha_r_deg, n_phi);
        for (int i = 0; i < n_phi; ++i)
            spectrum.density[i] += part[i];
    }
    if (geom.local_power > 0.0)
    {
        const auto part =
            local_pas(geom.local_power, geom.gamma, tx, rx, alpha_t_deg, alpha_r_deg, n_phi);
        for (int i = 0; i < n_phi; ++i)
            spectrum.density[i] += part[i];
    }
    if (auto delta = los_term(geom.direct_power, tx, rx, alpha_t_deg, alpha_r_deg))
        spectrum.deltas.push_back(*delta);
    return spectrum;
}

double integrate_pas(const AngularSpectrum& spectrum)
{
    if (spectrum.n_phi <= 0 || spectrum.density.size() != static_cast<std::size_t>(spectrum.n_phi))
        throw ValidationError("angular spectrum grid is inconsistent");
    double sum = 0.0;
    for (double v : spectrum.density)
        sum += v;
    double total = deg2rad(spectrum.grid_step_deg()) * sum;
    for (const auto& delta : spectrum.deltas)
        total += delta.power;
    return total;
}

} // namespace dirloss
