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

// Independent reference computations. Written straight from the closed-form
// definitions, without calling into the library.

#ifndef SEKIT_TESTS_ORACLES_HPP
#define SEKIT_TESTS_ORACLES_HPP

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle
{
    inline constexpr double c0 = 2.998e8;

    inline double fspl_db(double f_hz)
    {
        return 20.0 * std::log10(4.0 * std::numbers::pi * f_hz / c0);
    }

    inline double lin(double db)
    {
        return std::pow(10.0, db / 10.0);
    }

    inline double log2p1(double x)
    {
        return std::log(1.0 + x) / std::numbers::ln2;
    }

    // 3 x 3 grid with spacing isd, listed explicitly.
    inline std::vector<std::pair<double, double>> grid3x3(double isd)
    {
        std::vector<std::pair<double, double>> p;
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j)
                p.emplace_back(i * isd, j * isd);
        return p;
    }

    // Received power from every O-RU at (x, y), in linear units of (tx * 10^(-FSPL/10)).
    inline std::vector<double> distance_terms(double x, double y, double n, double isd = 200.0)
    {
        std::vector<double> t;
        for (auto [px, py] : grid3x3(isd))
            t.push_back(std::pow(std::hypot(x - px, y - py), -n));
        return t;
    }

    // SIR of a user served by the O-RU at the origin, noise ignored.
    inline double sir_center_db(double x, double y, double n)
    {
        double serving = 0.0, interference = 0.0;
        for (auto [px, py] : grid3x3(200.0))
        {
            const double g = std::pow(std::hypot(x - px, y - py), -n);
            if (px == 0.0 && py == 0.0)
                serving = g;
            else
                interference += g;
        }
        return 10.0 * std::log10(serving / interference);
    }

    inline double noise_dbm(double bw_hz, double nf_db)
    {
        return -173.6 + 10.0 * std::log10(bw_hz) + nf_db;
    }

    // Quantile with linear interpolation between order statistics (sorted input).
    inline double quantile(const std::vector<double> &sorted, double p)
    {
        const double h = p * static_cast<double>(sorted.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const auto hi = static_cast<std::size_t>(std::ceil(h));
        return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
    }
}

#endif
