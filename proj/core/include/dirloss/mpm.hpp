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

#include "dirloss/patterns.hpp"
#include "dirloss/tr38901.hpp"

#include <optional>
#include <vector>

namespace dirloss
{

// One confocal ellipse of the multi-elliptical geometry: the locus of
// single-bounce scatterers with a fixed excess delay tau. Tx and Rx sit at
// the foci, a distance d apart.
struct Ellipse
{
    double a_m = 0.0;          // semi-major axis
    double b_m = 0.0;          // semi-minor axis
    double eccentricity = 0.0; // d / (2a)
    double tau_s = 0.0;        // excess delay of the cluster
    double cluster_power = 0.0;
};

Ellipse make_ellipse(double tau_s, double d_m, double cluster_power);

// Frame convention: Rx at the origin, Tx at (d, 0); azimuths are measured
// counterclockwise from the Rx->Tx axis.
struct MpmGeometry
{
    double d_m = 0.0;
    std::vector<Ellipse> ellipses; // sorted by increasing tau
    double local_power = 0.0;
    double direct_power = 0.0;
    double gamma = 0.0; // von Mises concentration of the local ring
};

MpmGeometry build_geometry(const PowerDelayProfile& pdp, double d_m, double gamma);

// Focal-polar radius r(phi) = a(1-e^2)/(1 - e cos phi), phi at the Rx focus.
double radius_from_rx(const Ellipse& ell, double phi_r_deg);

// Departure azimuth at the Tx for the scatter point seen at phi_r from Rx,
// in the global frame.
double departure_angle(const Ellipse& ell, double phi_r_deg, double d_m);

// Von Mises density over [-pi, pi), mean direction 0, evaluated through the
// exponentially scaled Bessel I0 so large gamma stays finite.
double von_mises_pdf(double phi_rad, double gamma);

struct DeltaRay
{
    double phi_deg = 0.0;
    double power = 0.0;
};

// Continuous PAS density on a uniform azimuth grid plus discrete rays.
// density[i] is linear power per radian at phi = -180 + i * 360 / n_phi deg.
struct AngularSpectrum
{
    int n_phi = 0;
    std::vector<double> density;
    std::vector<DeltaRay> deltas;

    double grid_step_deg() const { return 360.0 / n_phi; }
    double phi_deg(int i) const { return -180.0 + i * grid_step_deg(); }
};

// Arrival-angle density of one cluster, scatterers uniform in arc length,
// each direction weighted by both antenna patterns. Integrates to
// cluster_power under omni antennas.
std::vector<double> cluster_pas(const Ellipse& ell, double d_m,
                                const AzimuthPattern& tx, const AzimuthPattern& rx,
                                double alpha_t_deg, double alpha_r_deg, int n_phi);

// Von Mises shaped density of the local scattering ring around the Rx. The
// Tx-side weight uses the single departure angle 180 deg (ring radius << d).
std::vector<double> local_pas(double local_power, double gamma,
                              const AzimuthPattern& tx, const AzimuthPattern& rx,
                              double alpha_t_deg, double alpha_r_deg, int n_phi);

// Direct ray as a discrete delta at arrival angle 0; absent when the profile
// has no direct power.
std::optional<DeltaRay> los_term(double direct_power,
                                 const AzimuthPattern& tx, const AzimuthPattern& rx,
                                 double alpha_t_deg, double alpha_r_deg);

// Full PAS: delayed clusters + local ring + direct ray on a shared grid.
AngularSpectrum synthesize_pas(const MpmGeometry& geom,
                               const AzimuthPattern& tx, const AzimuthPattern& rx,
                               double alpha_t_deg, double alpha_r_deg, int n_phi);

// Trapezoidal integral over the periodic grid plus the delta powers.
double integrate_pas(const AngularSpectrum& spectrum);

} // namespace dirloss
