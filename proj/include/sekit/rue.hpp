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

#ifndef SEKIT_RUE_HPP
#define SEKIT_RUE_HPP

#include "sekit/linklevel.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace sekit
{
    // Radio resource accounting for the downlink. Radio Resource Utilization
    // Efficiency (RUE) is the product of the five used/total ratios.
    struct RadioResourceConfig
    {
        double spectrum_used_hz = 1.0;
        double spectrum_total_hz = 1.0;
        double dl_slots = 1.0;
        double total_slots = 1.0;
        double data_symbols = 1.0;
        double total_symbols = 1.0;
        double code_rate = 1.0;
        double useful_samples = 1.0;
        double total_samples = 1.0;

        // Throws std::invalid_argument when a total is <= 0, a used quantity is
        // negative or exceeds its total, or code_rate is outside (0, 1].
        void validate() const;
    };

    struct RueFactor
    {
        std::string_view name;
        double ratio;
    };

    inline constexpr std::size_t kRueFactorCount = 5;
    using RueBreakdown = std::array<RueFactor, kRueFactorCount>;

    double compute_rue(const RadioResourceConfig &cfg);

    // Ordered as spectrum, slots, symbols, code_rate, cp.
    RueBreakdown rue_breakdown(const RadioResourceConfig &cfg);

    struct RuePreset
    {
        std::string_view name;
        std::string_view description;
        RadioResourceConfig config;
    };

    // 5g-baseline, dddsu-3pilot, ps-less, ps-cp-less-fd.
    std::span<const RuePreset> rue_presets();

    // Case-insensitive lookup.
    std::optional<RuePreset> find_rue_preset(std::string_view name);

    // Expected layers normalized by the maximum layer count.
    double rank_factor(const RankDistribution &dist, int max_layers);

    // 1 - rue * rank_factor
    double aggregate_se_loss(double rue, double rank_factor);

    // baseline * multiplier, clamped to 1 (with a warning on std::clog).
    double rue_goal(double baseline, double multiplier);
}

#endif
