// SPDX-License-Identifier: Apache-2.0
//
// sekit - spectral efficiency and radio resource utilization toolkit
// Copyright (C) 2026 The sekit authors
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

#include "sekit/bandwidth.hpp"
#include "sekit/propagation.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <numbers>

using namespace sekit;
using Catch::Approx;

TEST_CASE("Shannon rate", "[bandwidth]")
{
    // lin(s_r) / (lin(n0) * bw) = 1 gives R = bw.
    const double bw = 100e6;
    const double n0 = -173.6;
    const double s_r = n0 + 10.0 * std::log10(bw);
    CHECK(shannon_rate(s_r, bw, n0) == Approx(bw).epsilon(1e-12));
    CHECK(shannon_rate(-60.0, 100e6, -173.6) == Approx(1.116e9).margin(1e6));
    CHECK(shannon_rate(-60.0, 100e6, -173.6) == Approx(100e6 * oracle::log2p1(oracle::lin(33.6))).epsilon(1e-12));
    CHECK_THROWS_AS(shannon_rate(-60.0, 0.0, -173.6), std::invalid_argument);
}

TEST_CASE("Shannon rate laws over bandwidth", "[bandwidth]")
{
    const double s_r = GENERATE(-90.0, -75.0, -60.0, -40.0);
    const double n0 = -168.6;
    const double limit = shannon_rate_limit(s_r, n0);
    CHECK(limit == Approx(oracle::lin(s_r) / (oracle::lin(n0) * std::numbers::ln2)).epsilon(1e-12));

    double prev_rate = 0.0, prev_se = 1e300, prev_slope = 1e300, prev_bw = 0.0;
    for (double bw = 1e6; bw <= 1.6e10; bw *= 1.5)
    {
        const double r = shannon_rate(s_r, bw, n0);
        CHECK(r > prev_rate);
        CHECK(r / bw < prev_se);
        CHECK(r < limit);
        const double slope = (r - prev_rate) / (bw - prev_bw);
        CHECK(slope < prev_slope);
        prev_slope = slope;
        prev_rate = r;
        prev_se = r / bw;
        prev_bw = bw;
    }
}

TEST_CASE("bandwidth sweep", "[bandwidth]")
{
    const auto pl = PathLossModel::from_carrier(3.5e9, 3.52);
    const double d[] = {30.0, 60.0, 200.0};
    const double bw[] = {100e6, 200e6, 400e6, 800e6, 1600e6};
    const auto rows = sweep_bw(d, bw, pl, 39.4, 5.0);
    REQUIRE(rows.size() == 15);
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        const double s_r = 39.4 - path_loss_db(pl, rows[i].distance_m);
        CHECK(rows[i].rate_bps == Approx(shannon_rate(s_r, rows[i].bw_hz, -168.6)).epsilon(1e-12));
        CHECK(rows[i].se == Approx(rows[i].rate_bps / rows[i].bw_hz).epsilon(1e-12));
        if (i % 5 != 0)
        {
            CHECK(rows[i].rate_bps > rows[i - 1].rate_bps);
            CHECK(rows[i].se < rows[i - 1].se);
        }
    }
    const double gain_near = rows[4].rate_bps / rows[0].rate_bps;
    const double gain_far = rows[14].rate_bps / rows[10].rate_bps;
    CHECK(gain_near > 2.0 * gain_far);

    const double one_bw[] = {100e6};
    const double one_d[] = {60.0};
    CHECK(sweep_bw(one_d, one_bw, pl, 39.4, 5.0).size() == 1);
}

TEST_CASE("peak cell rate", "[bandwidth]")
{
    const auto num = NumerologyConfig::nr_100mhz();
    const auto p1 = peak_cell_rate(num, 1);
    const double oracle_rate = 8.0 * (948.0 / 1024.0) * 273.0 * 12.0 * 11.0 / 0.5e-3 * (27.0 / 40.0);
    CHECK(p1.rate_bps == Approx(oracle_rate).epsilon(1e-12));
    CHECK(p1.rate_bps == Approx(360.3e6).margin(0.1e6));
    CHECK(p1.se_bps_per_hz == Approx(3.67).margin(0.01));
    CHECK(p1.occupied_bw_hz == Approx(98.28e6).epsilon(1e-12));

    for (int layers : {2, 4, 8, 16})
        CHECK(peak_cell_rate(num, layers).rate_bps == Approx(layers * p1.rate_bps).epsilon(1e-14));

    auto idle = num;
    idle.dl_slots_used = 0;
    CHECK(peak_cell_rate(idle, 4).rate_bps == 0.0);
    CHECK_THROWS_AS(peak_cell_rate(num, 0), std::invalid_argument);

    const auto wide = NumerologyConfig::scaled(400e6);
    CHECK(wide.occupied_bw_hz() <= 400e6);
    CHECK(peak_cell_rate(wide, 1).se_bps_per_hz == Approx(p1.se_bps_per_hz).epsilon(1e-12));
}

TEST_CASE("carrier aggregation", "[bandwidth]")
{
    const auto num = NumerologyConfig::nr_100mhz();
    const int counts[] = {1, 2, 4, 8};
    const auto ca = ca_curve(num, 2, counts);
    REQUIRE(ca.size() == 4);
    const auto single = peak_cell_rate(num, 2);
    CHECK(ca[0].rate_bps == single.rate_bps);
    CHECK(ca[0].se_bps_per_hz == single.se_bps_per_hz);
    CHECK(ca[1].rate_bps == Approx(peak_cell_rate(num, 4).rate_bps).epsilon(1e-14));
    CHECK(ca[1].se_bps_per_hz == Approx(peak_cell_rate(num, 4).se_bps_per_hz / 2.0).epsilon(1e-14));
    for (std::size_t i = 0; i < ca.size(); ++i)
    {
        CHECK(ca[i].se_bps_per_hz == ca[0].se_bps_per_hz);
        CHECK(ca[i].rate_bps == Approx(counts[i] * single.rate_bps).epsilon(1e-14));
        CHECK(ca[i].carriers == counts[i]);
    }
}

TEST_CASE("field-trial spectral efficiency", "[bandwidth]")
{
    CHECK(field_trial_se(911.0, 98.28) == Approx(9.27).margin(0.01));
    CHECK(field_trial_se(2909.0, 98.28) == Approx(29.6).margin(0.01));
    CHECK(field_trial_se(98.28, 98.28) == 1.0);
    CHECK_THROWS_AS(field_trial_se(911.0, 0.0), std::invalid_argument);
}
