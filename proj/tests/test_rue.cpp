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

#include "sekit/linklevel.hpp"
#include "sekit/rue.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace sekit;
using Catch::Approx;

namespace
{
    RadioResourceConfig make(double spectrum, double slots, double symbols, double code, double cp)
    {
        return {spectrum, 1.0, slots, 1.0, symbols, 1.0, code, cp, 1.0};
    }
}

TEST_CASE("RUE of the reference configurations", "[rue]")
{
    const RadioResourceConfig baseline{98.28e6, 100e6, 28, 40, 11, 14, 948.0 / 1024.0, 14, 15};
    CHECK(compute_rue(baseline) == Approx(0.467).margin(0.003));
    CHECK(compute_rue({98.28e6, 100e6, 24, 40, 9, 14, 948.0 / 1024.0, 14, 15}) == Approx(0.328).margin(0.003));
    CHECK(compute_rue({98.28e6, 100e6, 40, 40, 12, 14, 948.0 / 1024.0, 15, 15}) == Approx(0.780).margin(0.003));
    CHECK(compute_rue(RadioResourceConfig{}) == 1.0);

    CHECK(compute_rue(find_rue_preset("5g-baseline")->config) == compute_rue(baseline));
    CHECK(find_rue_preset("5G-Baseline").has_value());
    CHECK_FALSE(find_rue_preset("nope").has_value());
}

TEST_CASE("RUE breakdown", "[rue]")
{
    const auto b = rue_breakdown(find_rue_preset("5g-baseline")->config);
    const char *names[] = {"spectrum", "slots", "symbols", "code_rate", "cp"};
    const double ratios[] = {0.9828, 0.70, 0.7857, 0.92578, 0.9333};
    for (std::size_t i = 0; i < b.size(); ++i)
    {
        CHECK(b[i].name == names[i]);
        CHECK(b[i].ratio == Approx(ratios[i]).margin(1e-4));
    }
    for (const auto &f : rue_breakdown(RadioResourceConfig{}))
        CHECK(f.ratio == 1.0);
}

TEST_CASE("RUE breakdown product equals the total", "[rue]")
{
    std::mt19937_64 rng(GENERATE(1u, 2u, 3u));
    std::uniform_real_distribution<double> u(0.01, 1.0);
    for (int i = 0; i < 500; ++i)
    {
        const auto cfg = make(u(rng), u(rng), u(rng), u(rng), u(rng));
        double product = 1.0;
        for (const auto &f : rue_breakdown(cfg))
        {
            CHECK(f.ratio > 0.0);
            CHECK(f.ratio <= 1.0);
            product *= f.ratio;
        }
        CHECK(product == Approx(compute_rue(cfg)).epsilon(1e-12));
    }
}

TEST_CASE("RUE rejects invalid resources", "[rue]")
{
    CHECK_THROWS_AS(compute_rue({2.0, 1.0, 1, 1, 1, 1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(compute_rue({0.0, 1.0, 1, 1, 1, 1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(compute_rue({1.0, 1.0, 1, 1, 1, 1, 1.5, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(compute_rue({1.0, 1.0, 1, 0, 1, 1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("rank factor", "[rue]")
{
    CHECK(rank_factor(RankDistribution({{2, 0.6}, {4, 0.4}}), 4) == Approx(0.70).epsilon(1e-15));
    CHECK(rank_factor(RankDistribution({{2, 0.2}, {4, 0.8}}), 4) == Approx(0.90).epsilon(1e-15));
    CHECK(rank_factor(RankDistribution({{4, 1.0}}), 4) == 1.0);
    CHECK_THROWS_AS(rank_factor(RankDistribution({{4, 1.0}}), 2), std::invalid_argument);
}

TEST_CASE("aggregate SE loss", "[rue]")
{
    CHECK(aggregate_se_loss(0.50, 0.70) == Approx(0.65).margin(1e-12));
    CHECK(aggregate_se_loss(0.78, 0.70) == Approx(0.454).margin(1e-12));
    CHECK(aggregate_se_loss(0.78, 1.00) == Approx(0.22).margin(1e-12));
    CHECK(aggregate_se_loss(1.0, 1.0) == 0.0);
    CHECK_THROWS_AS(aggregate_se_loss(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(aggregate_se_loss(0.5, 1.5), std::invalid_argument);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(1e-6, 1.0);
    for (int i = 0; i < 1000; ++i)
    {
        const double r = u(rng), f = u(rng);
        // Exact up to the rounding of 1 - x: one ulp of 1.0.
        CHECK(std::abs((1.0 - aggregate_se_loss(r, f)) - r * f) <= 0x1p-52);
    }
}

TEST_CASE("RUE goal", "[rue]")
{
    CHECK(rue_goal(0.50, 1.5) == 0.75);
    const double x = GENERATE(0.1, 0.467, 0.9);
    CHECK(rue_goal(x, 1.0) == x);
    CHECK(rue_goal(0.467, 1.5) == Approx(0.7005).epsilon(1e-14));
    CHECK(rue_goal(0.8, 2.0) == 1.0);
    CHECK_THROWS_AS(rue_goal(0.5, -1.0), std::invalid_argument);
}
