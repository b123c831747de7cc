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
#include "dirloss/tr38901.hpp"

#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using namespace dirloss;

namespace
{

UmaGeometry geom_at(double d2d, double h_bs = 25.0, double h_ut = 1.5)
{
    return UmaGeometry{h_bs, h_ut, d2d};
}

// Writes a throwaway tap table and returns its path.
std::filesystem::path write_temp_table(const std::string& name, const std::string& body)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << body;
    out.close();
    return path;
}

} // namespace

TEST_SUITE("tr38901")
{
    TEST_CASE("UMa path loss against hand-evaluated references")
    {
        // Below-breakpoint LOS and the NLOS maximum, defaults 25 m / 1.5 m.
        CHECK(uma_pl_los(28.0, geom_at(100.0)) ==
              doctest::Approx(101.19995641669125).epsilon(1e-12));
        CHECK(uma_pl_nlos(28.0, geom_at(100.0)) ==
              doctest::Approx(121.09932332989962).epsilon(1e-12));
        CHECK(uma_pl_los(39.0, geom_at(100.0)) ==
              doctest::Approx(104.07808793037685).epsilon(1e-12));
        CHECK(uma_pl_los(28.0, geom_at(60.0)) ==
              doctest::Approx(96.74427905830433).epsilon(1e-12));
        CHECK(uma_pl_los(28.0, geom_at(180.0)) ==
              doctest::Approx(106.63989643906413).epsilon(1e-12));
        CHECK(uma_pl_nlos(28.0, geom_at(60.0)) ==
              doctest::Approx(113.18442009509229).epsilon(1e-12));
        CHECK(uma_pl_nlos(28.0, geom_at(180.0)) ==
              doctest::Approx(130.76263496964202).epsilon(1e-12));
        // Above the breakpoint the LOS slope steepens to 40 log10 d.
        CHECK(uma_pl_los(28.0, geom_at(5000.0)) ==
              doctest::Approx(139.17904086994622).epsilon(1e-12));
        CHECK(uma_pl_nlos(28.0, geom_at(5000.0)) ==
              doctest::Approx(187.0390958524877).epsilon(1e-12));
        // Bottom of the validity ranges.
        CHECK(uma_pl_los(0.5, geom_at(10.0)) ==
              doctest::Approx(52.937955052215216).epsilon(1e-12));
        // Antenna-height term of the NLOS branch, h_ut = 10 m.
        CHECK(uma_pl_nlos(28.0, geom_at(100.0, 25.0, 10.0)) ==
              doctest::Approx(115.73198183475947).epsilon(1e-12));
    }

    TEST_CASE("frequency offset between 39 and 28 GHz is 20 log10(39/28)")
    {
        const double expected = 20.0 * std::log10(39.0 / 28.0);
        for (double d : {60.0, 100.0, 180.0})
        {
            CHECK(uma_pl_los(39.0, geom_at(d)) - uma_pl_los(28.0, geom_at(d)) ==
                  doctest::Approx(expected).epsilon(1e-12));
            CHECK(uma_pl_nlos(39.0, geom_at(d)) - uma_pl_nlos(28.0, geom_at(d)) ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
    }

    TEST_CASE("breakpoint distance and slope continuity")
    {
        CHECK(breakpoint_distance(28.0, geom_at(100.0)) == doctest::Approx(4480.0).epsilon(1e-12));
        CHECK(breakpoint_distance(39.0, geom_at(100.0)) == doctest::Approx(6240.0).epsilon(1e-12));
        // The two LOS branches agree at the breakpoint.
        const double bp = breakpoint_distance(28.0, geom_at(100.0));
        const double below = uma_pl_los(28.0, geom_at(bp * (1.0 - 1e-9)));
        const double above = uma_pl_los(28.0, geom_at(bp * (1.0 + 1e-9)));
        CHECK(below == doctest::Approx(above).epsilon(1e-9));
    }

    TEST_CASE("geometry and frequency validation")
    {
        CHECK_NOTHROW(geom_at(10.0).validate());
        CHECK_NOTHROW(geom_at(5000.0).validate());
        CHECK_THROWS_WITH_AS((void)uma_pl_los(28.0, geom_at(9.9)), doctest::Contains("d2d"),
                             ValidationError);
        CHECK_THROWS_WITH_AS((void)uma_pl_los(28.0, geom_at(5000.1)), doctest::Contains("d2d"),
                             ValidationError);
        CHECK_THROWS_WITH_AS((void)uma_pl_los(28.0, geom_at(100.0, 25.0, 1.49)),
                             doctest::Contains("h_ut"), ValidationError);
        CHECK_THROWS_WITH_AS((void)uma_pl_los(28.0, geom_at(100.0, 25.0, 22.6)),
                             doctest::Contains("h_ut"), ValidationError);
        CHECK_THROWS_WITH_AS((void)uma_pl_los(28.0, geom_at(100.0, 1.0, 1.5)),
                             doctest::Contains("h_bs"), ValidationError);
        CHECK_THROWS_WITH_AS((void)uma_pl_los(0.4, geom_at(100.0)), doctest::Contains("fc"),
                             ValidationError);
        CHECK_THROWS_WITH_AS((void)uma_pl_los(100.5, geom_at(100.0)), doctest::Contains("fc"),
                             ValidationError);
    }

    TEST_CASE("bundled NLOS tap table")
    {
        const TdlTable& table = tdl_table(TdlModelId::TdlC);
        REQUIRE(table.size() == 24);
        CHECK(table.front().normalized_delay == 0.0);
        CHECK(table.front().power_db == doctest::Approx(-4.4));
        CHECK(table.front().is_los == false);
        for (const TdlRow& row : table)
            CHECK(row.is_los == false);
        // The normalized profile has unit rms delay spread by construction;
        // the published rounding leaves ~2e-4 slack.
        double p = 0.0, m1 = 0.0, m2 = 0.0;
        for (const TdlRow& row : table)
        {
            const double w = std::pow(10.0, row.power_db / 10.0);
            p += w;
            m1 += w * row.normalized_delay;
            m2 += w * row.normalized_delay * row.normalized_delay;
        }
        m1 /= p;
        m2 /= p;
        CHECK(std::sqrt(m2 - m1 * m1) == doctest::Approx(1.0).epsilon(3e-4));
    }

    TEST_CASE("bundled LOS tap table")
    {
        const TdlTable& table = tdl_table(TdlModelId::TdlE);
        REQUIRE(table.size() == 15);
        CHECK(table[0].normalized_delay == 0.0);
        CHECK(table[0].is_los == true);
        CHECK(table[0].power_db == doctest::Approx(-0.03));
        CHECK(table[1].normalized_delay == 0.0);
        CHECK(table[1].is_los == false);
        CHECK(table[1].power_db == doctest::Approx(-22.03));
        // Direct over coincident scattered power: the 22 dB Rice factor.
        CHECK(table[0].power_db - table[1].power_db == doctest::Approx(22.0).epsilon(1e-12));
        double p = 0.0, m1 = 0.0, m2 = 0.0;
        for (const TdlRow& row : table)
        {
            const double w = std::pow(10.0, row.power_db / 10.0);
            p += w;
            m1 += w * row.normalized_delay;
            m2 += w * row.normalized_delay * row.normalized_delay;
        }
        m1 /= p;
        m2 /= p;
        CHECK(std::sqrt(m2 - m1 * m1) == doctest::Approx(1.0).epsilon(3e-4));
    }

    TEST_CASE("table parser accepts comments and rejects malformed rows")
    {
        const auto good = write_temp_table("dirloss_good.txt",
                                           "# comment\n"
                                           "0.0 -1.0 R\n"
                                           "\n"
                                           "1.5 -3.0 L # trailing comment\n");
        const TdlTable table = load_tdl_table(good);
        REQUIRE(table.size() == 2);
        CHECK(table[1].normalized_delay == 1.5);
        CHECK(table[1].is_los == true);

        const auto missing = write_temp_table("dirloss_missing.txt", "0.0 -1.0\n");
        CHECK_THROWS_WITH_AS((void)load_tdl_table(missing), doctest::Contains(":1:"),
                             ValidationError);
        const auto badkind = write_temp_table("dirloss_badkind.txt", "0.0 -1.0 X\n");
        CHECK_THROWS_WITH_AS((void)load_tdl_table(badkind), doctest::Contains("R|L"),
                             ValidationError);
        const auto garbage = write_temp_table("dirloss_garbage.txt", "0.0 -1.0 R\nnot numbers\n");
        CHECK_THROWS_WITH_AS((void)load_tdl_table(garbage), doctest::Contains(":2:"),
                             ValidationError);
        const auto extra = write_temp_table("dirloss_extra.txt", "0.0 -1.0 R junk\n");
        CHECK_THROWS_AS((void)load_tdl_table(extra), ValidationError);
        CHECK_THROWS_WITH_AS((void)load_tdl_table("/nonexistent/tdl.txt"),
                             doctest::Contains("nonexistent"), ValidationError);
    }

    TEST_CASE("delay scaling and normalization")
    {
        const PowerDelayProfile pdp = scaled_tdl(TdlModelId::TdlC, 266e-9);
        REQUIRE(pdp.taps.size() == 24);
        CHECK(pdp.total_power() == doctest::Approx(1.0).epsilon(1e-12));
        for (std::size_t i = 1; i < pdp.taps.size(); ++i)
            CHECK(pdp.taps[i - 1].delay_s <= pdp.taps[i].delay_s);
        // Largest normalized delay 8.6523 scaled by 266 ns.
        CHECK(pdp.taps.back().delay_s == doctest::Approx(8.6523 * 266e-9).epsilon(1e-12));
        CHECK_THROWS_AS((void)scaled_tdl(TdlModelId::TdlC, 0.0), ValidationError);
        CHECK_THROWS_AS((void)scaled_tdl(TdlModelId::TdlC, -1e-9), ValidationError);

        // Delays scale linearly with the target spread; powers do not move.
        const PowerDelayProfile twice = scaled_tdl(TdlModelId::TdlC, 2.0 * 266e-9);
        REQUIRE(twice.taps.size() == pdp.taps.size());
        for (std::size_t i = 0; i < pdp.taps.size(); ++i)
        {
            CHECK(twice.taps[i].delay_s == doctest::Approx(2.0 * pdp.taps[i].delay_s));
            CHECK(twice.taps[i].power == doctest::Approx(pdp.taps[i].power).epsilon(1e-15));
        }
    }

    TEST_CASE("path loss grows with distance and frequency; NLOS dominates LOS")
    {
        for (double fc : {28.0, 39.0})
        {
            double prev_los = 0.0, prev_nlos = 0.0;
            for (double d = 60.0; d <= 180.0; d += 10.0)
            {
                const double los = uma_pl_los(fc, geom_at(d));
                const double nlos = uma_pl_nlos(fc, geom_at(d));
                CHECK(nlos >= los);
                CHECK(los > prev_los);
                CHECK(nlos > prev_nlos);
                prev_los = los;
                prev_nlos = nlos;
                CHECK(uma_pl_los(39.0, geom_at(d)) > uma_pl_los(28.0, geom_at(d)));
                CHECK(uma_pl_nlos(39.0, geom_at(d)) > uma_pl_nlos(28.0, geom_at(d)));
            }
        }
    }

    TEST_CASE("zero-delay split fractions")
    {
        // Independently hand-computed from the dB tables.
        const PdpSplit nlos = pdp_split_tau0(scaled_tdl(TdlModelId::TdlC, 266e-9));
        CHECK(nlos.direct_power == 0.0);
        CHECK(nlos.local_power == doctest::Approx(0.06180572872307223).epsilon(1e-12));
        CHECK(nlos.delayed.size() == 23);

        const PdpSplit los = pdp_split_tau0(scaled_tdl(TdlModelId::TdlE, 266e-9));
        CHECK(los.direct_power == doctest::Approx(0.8942268901700107).epsilon(1e-12));
        CHECK(los.local_power == doctest::Approx(0.005642190239844509).epsilon(1e-12));
        CHECK(los.delayed.size() == 13);
        CHECK(los.direct_power / los.local_power ==
              doctest::Approx(std::pow(10.0, 2.2)).epsilon(1e-12));

        double delayed_sum = 0.0;
        for (const PdpTap& tap : los.delayed)
            delayed_sum += tap.power;
        CHECK(delayed_sum == doctest::Approx(0.10013091959014474).epsilon(1e-12));
        CHECK(los.direct_power + los.local_power + delayed_sum ==
              doctest::Approx(1.0).epsilon(1e-12));
    }

    TEST_CASE("data file lookup honors the environment override")
    {
        const auto dir = std::filesystem::temp_directory_path() / "dirloss_data_override";
        std::filesystem::create_directories(dir);
        std::ofstream(dir / "probe.txt") << "0.0 0.0 R\n";

        ::setenv("DIRLOSS_DATA_DIR", dir.c_str(), 1);
        CHECK(find_data_file("probe.txt") == dir / "probe.txt");
        // Bundled names still resolve through the fallback directories.
        ::unsetenv("DIRLOSS_DATA_DIR");
        CHECK_NOTHROW((void)find_data_file("tdl_c.txt"));
        CHECK_THROWS_WITH_AS((void)find_data_file("no_such_table.txt"),
                             doctest::Contains("no_such_table.txt"), ValidationError);
    }

    TEST_CASE("profile validation")
    {
        PowerDelayProfile empty;
        CHECK_THROWS_AS(empty.validate(), ValidationError);
        PowerDelayProfile bad;
        bad.taps.push_back(PdpTap{0.0, -0.1, false});
        CHECK_THROWS_AS(bad.validate(), ValidationError);
    }
}
