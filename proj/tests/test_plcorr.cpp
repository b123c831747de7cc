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

#include "dirloss/errors.hpp"
#include "dirloss/plcorr.hpp"

#include "doctest.h"
#include "mc_oracle.hpp"

#include <cmath>

using namespace dirloss;

namespace
{

Scenario base_scenario(Condition condition, PatternSpec tx, PatternSpec rx)
{
    Scenario s;
    s.condition = condition;
    s.tx_spec = tx;
    s.rx_spec = rx;
    return s;
}

} // namespace

TEST_SUITE("plcorr")
{
    TEST_CASE("scenario defaults validate and map to the right profile")
    {
        Scenario s = base_scenario(Condition::Los, omni_spec(), omni_spec());
        CHECK_NOTHROW(s.validate());
        CHECK(s.tdl_model() == TdlModelId::TdlE);
        s.condition = Condition::Nlos;
        CHECK(s.tdl_model() == TdlModelId::TdlC);
        CHECK(s.geometry_at(77.0).d2d_m == 77.0);
        CHECK(s.geometry_at(77.0).h_bs_m == 25.0);
    }

    TEST_CASE("scenario validation rejects bad ranges")
    {
        Scenario s = base_scenario(Condition::Los, omni_spec(), omni_spec());
        s.fc_ghz = 0.1;
        CHECK_THROWS_AS(s.validate(), ValidationError);
        s = base_scenario(Condition::Los, omni_spec(), omni_spec());
        s.d_min_m = 5.0;
        CHECK_THROWS_AS(s.validate(), ValidationError);
        s = base_scenario(Condition::Los, omni_spec(), omni_spec());
        s.d_max_m = s.d_min_m - 1.0;
        CHECK_THROWS_AS(s.validate(), ValidationError);
        s = base_scenario(Condition::Los, omni_spec(), omni_spec());
        s.d_step_m = 0.0;
        CHECK_THROWS_AS(s.validate(), ValidationError);
        s = base_scenario(Condition::Los, omni_spec(), omni_spec());
        s.sigma_tau_s = 0.0;
        CHECK_THROWS_AS(s.validate(), ValidationError);
        s = base_scenario(Condition::Los, omni_spec(), omni_spec());
        s.gamma = -0.5;
        CHECK_THROWS_AS(s.validate(), ValidationError);
        s = base_scenario(Condition::Los, omni_spec(), omni_spec());
        s.n_phi = 100;
        CHECK_THROWS_AS(s.validate(), ValidationError);
        s = base_scenario(Condition::Los, gaussian_spec(-2.0), omni_spec());
        CHECK_THROWS_AS(s.validate(), ValidationError);
    }

    TEST_CASE("omni pair needs no correction, bit-exactly")
    {
        const Scenario s = base_scenario(Condition::Nlos, omni_spec(), omni_spec());
        for (double d : {60.0, 120.0, 180.0})
        {
            const Correction corr = pl_correction(s, d);
            CHECK(corr.corr_db == 0.0);
            CHECK_FALSE(corr.refinement_warning);
            CHECK(corr.refinement_delta_db == 0.0);
        }
        const Scenario s_los = base_scenario(Condition::Los, omni_spec(), omni_spec());
        CHECK(pl_correction(s_los, 120.0).corr_db == 0.0);
    }

    TEST_CASE("directional corrections are nonnegative")
    {
        for (Condition c : {Condition::Los, Condition::Nlos})
        {
            CHECK(pl_correction(base_scenario(c, sinc_spec(8.0), ue_spec()), 120.0).corr_db >=
                  0.0);
            CHECK(pl_correction(base_scenario(c, gnodeb_spec(), ue_spec()), 120.0).corr_db >=
                  0.0);
            CHECK(pl_correction(base_scenario(c, gaussian_spec(24.0), omni_spec()), 120.0)
                      .corr_db >= 0.0);
        }
    }

    TEST_CASE("quadrature matches the arc-length Monte Carlo oracle")
    {
        // 2e5 samples per cluster keeps this fast; the Monte Carlo noise is
        // well under the 0.1 dB comparison band.
        constexpr std::size_t samples = 200000;
        for (Condition c : {Condition::Los, Condition::Nlos})
        {
            const Scenario s = base_scenario(c, sinc_spec(8.0), ue_spec());
            const PowerDelayProfile pdp = scaled_tdl(s.tdl_model(), s.sigma_tau_s);
            const AzimuthPattern tx(s.tx_spec);
            const AzimuthPattern rx(s.rx_spec);
            const double quad = pl_correction(s, pdp, 120.0).corr_db;
            const double mc = testing::mc_pl_corr_db(pdp, 120.0, tx, rx, s.alpha_t_deg,
                                                     s.alpha_r_deg, s.gamma, samples, 7u);
            CHECK(std::abs(quad - mc) < 0.1);
        }
    }

    TEST_CASE("Monte Carlo agreement holds for an asymmetric steering too")
    {
        Scenario s = base_scenario(Condition::Nlos, gaussian_spec(16.0), ue_spec());
        s.alpha_t_deg = 150.0; // Tx beam 30 degrees off the link axis
        s.alpha_r_deg = 20.0;  // Rx boresight off axis as well
        const PowerDelayProfile pdp = scaled_tdl(s.tdl_model(), s.sigma_tau_s);
        const double quad = pl_correction(s, pdp, 90.0).corr_db;
        const double mc =
            testing::mc_pl_corr_db(pdp, 90.0, AzimuthPattern(s.tx_spec),
                                   AzimuthPattern(s.rx_spec), s.alpha_t_deg, s.alpha_r_deg,
                                   s.gamma, 200000, 11u);
        CHECK(std::abs(quad - mc) < 0.1);
    }

    TEST_CASE("wider transmit beams lose less power")
    {
        for (Condition c : {Condition::Los, Condition::Nlos})
        {
            const double c8 =
                pl_correction(base_scenario(c, sinc_spec(8.0), ue_spec()), 120.0).corr_db;
            const double c16 =
                pl_correction(base_scenario(c, sinc_spec(16.0), ue_spec()), 120.0).corr_db;
            const double c24 =
                pl_correction(base_scenario(c, sinc_spec(24.0), ue_spec()), 120.0).corr_db;
            CHECK(c8 >= c16);
            CHECK(c16 >= c24);
        }
    }

    TEST_CASE("blocking the direct ray raises the correction")
    {
        for (const PatternSpec& tx : {sinc_spec(8.0), gnodeb_spec()})
        {
            const double los =
                pl_correction(base_scenario(Condition::Los, tx, ue_spec()), 120.0).corr_db;
            const double nlos =
                pl_correction(base_scenario(Condition::Nlos, tx, ue_spec()), 120.0).corr_db;
            CHECK(nlos > los);
        }
    }

    TEST_CASE("composed output equals input plus correction")
    {
        const Scenario s = base_scenario(Condition::Los, gnodeb_spec(), ue_spec());
        const PlPoint p = directional_pl(s, 100.0);
        CHECK(p.d_m == 100.0);
        CHECK(p.pl_in_db == doctest::Approx(101.19995641669125).epsilon(1e-12));
        CHECK(p.pl_out_db == p.pl_in_db + p.pl_corr_db);

        const Scenario sn = base_scenario(Condition::Nlos, gnodeb_spec(), ue_spec());
        CHECK(directional_pl(sn, 100.0).pl_in_db ==
              doctest::Approx(121.09932332989962).epsilon(1e-12));
    }

    TEST_CASE("sweep covers the distance grid")
    {
        const Scenario s = base_scenario(Condition::Los, sinc_spec(8.0), ue_spec());
        const PlCurve curve = sweep_curve(s);
        REQUIRE(curve.rows.size() == 13);
        for (std::size_t i = 0; i < curve.rows.size(); ++i)
            CHECK(curve.rows[i].d_m == doctest::Approx(60.0 + 10.0 * i));
        // Free-space-like growth of the input model with distance.
        for (std::size_t i = 1; i < curve.rows.size(); ++i)
            CHECK(curve.rows[i].pl_in_db > curve.rows[i - 1].pl_in_db);
        // A partial last step is not swept past d_max.
        Scenario ragged = s;
        ragged.d_max_m = 75.0;
        CHECK(sweep_curve(ragged).rows.size() == 2);
    }

    TEST_CASE("grid refinement status on a deliberately coarse grid")
    {
        // The default grid resolves the presets; status quantifies it.
        Scenario fine = base_scenario(Condition::Nlos, sinc_spec(8.0), ue_spec());
        const Correction ok = pl_correction(fine, 120.0);
        CHECK_FALSE(ok.refinement_warning);
        CHECK(std::abs(ok.refinement_delta_db) <= 1e-3);

        // A 1-degree grid cannot resolve a half-degree receive beam steered
        // between grid nodes; the refinement delta must flag it rather than
        // silently returning the value.
        Scenario coarse = fine;
        coarse.n_phi = 360;
        coarse.tx_spec = sinc_spec(0.5);
        coarse.rx_spec = sinc_spec(0.5);
        coarse.alpha_r_deg = 0.3;
        const Correction flagged = pl_correction(coarse, 120.0);
        CHECK(flagged.refinement_warning);
        CHECK(std::abs(flagged.refinement_delta_db) > 1e-3);
    }

    TEST_CASE("narrow LOS beams barely move the output model")
    {
        // With 89% of the power in the aligned direct ray, even an 8 degree
        // beam keeps the correction below half a dB.
        const double corr =
            pl_correction(base_scenario(Condition::Los, sinc_spec(8.0), ue_spec()), 120.0)
                .corr_db;
        CHECK(corr < 0.5);
        CHECK(corr > 0.0);
    }
}
