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

#include "sekit/propagation.hpp"
#include "sekit/units.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <numbers>

using namespace sekit;
using Catch::Approx;

TEST_CASE("free-space loss at one meter", "[propagation]")
{
    CHECK(fspl_1m_db(kSpeedOfLight / (4.0 * std::numbers::pi)) == Approx(0.0).margin(1e-12));
    CHECK(fspl_1m_db(3.5e9) == Approx(43.3).margin(0.1));
    CHECK(fspl_1m_db(28e9) == Approx(61.4).margin(0.1));
    CHECK(fspl_1m_db(3.5e9) == Approx(oracle::fspl_db(3.5e9)).epsilon(1e-14));
    CHECK_THROWS_AS(fspl_1m_db(0.0), std::invalid_argument);
    CHECK_THROWS_AS(fspl_1m_db(-1.0), std::invalid_argument);
}

TEST_CASE("close-in path loss", "[propagation]")
{
    const auto m = PathLossModel::from_carrier(3.5e9, 3.52);
    CHECK(path_loss_db(m, 1.0) == m.fspl_1m_db());
    CHECK(path_loss_db(m, 10.0) == Approx(m.fspl_1m_db() + 35.2).epsilon(1e-14));
    CHECK(path_loss_db(m, 200.0) - m.fspl_1m_db() == Approx(80.99).margin(0.01));
    CHECK_THROWS_AS(path_loss_db(m, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(PathLossModel::from_fspl(40.0, 0.0), std::invalid_argument);
}

TEST_CASE("path loss is monotone in distance", "[propagation]")
{
    const double n = GENERATE(2.0, 3.52, 4.5);
    const auto m = PathLossModel::from_fspl(40.0, n);
    double prev = path_loss_db(m, 1.0);
    for (double d = 1.5; d < 2000.0; d *= 1.37)
    {
        const double pl = path_loss_db(m, d);
        CHECK(pl > prev);
        prev = pl;
    }
}

TEST_CASE("noise power", "[propagation]")
{
    CHECK(noise_power_dbm({100e6, 5.0}) == Approx(-88.6).margin(0.01));
    CHECK(noise_power_dbm({1.0, 0.0}) == Approx(-173.6).margin(1e-12));
    CHECK(noise_power_dbm({1.6e9, 5.0}) == Approx(-76.56).margin(0.01));
    CHECK(noise_power_dbm({1.6e9, 5.0}) == Approx(oracle::noise_dbm(1.6e9, 5.0)).epsilon(1e-14));
    CHECK_THROWS_AS(noise_power_dbm({0.0, 5.0}), std::invalid_argument);
}

TEST_CASE("channel gain", "[propagation]")
{
    CHECK(channel_gain_linear(PathLossModel::from_fspl(0.0, 3.52), 1.0) == 1.0);
    CHECK(channel_gain_linear(PathLossModel::from_fspl(30.0, 3.52), 1.0) == Approx(1e-3).epsilon(1e-14));

    const auto m = PathLossModel::from_carrier(3.5e9, 3.52);
    const double d = GENERATE(1.0, 7.5, 50.0, 333.0);
    CHECK(channel_gain_linear(m, 2.0 * d) / channel_gain_linear(m, d) == Approx(std::pow(2.0, -3.52)).epsilon(1e-12));
    CHECK(std::pow(2.0, -3.52) == Approx(0.0872).margin(1e-4));
    CHECK(path_loss_from_gain_db(channel_gain_linear(m, d)) == Approx(path_loss_db(m, d)).epsilon(1e-12));
}
