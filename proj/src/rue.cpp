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

#include "sekit/rue.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

namespace sekit
{
    namespace
    {
        void check_ratio(double used, double total, const char *name)
        {
            if (!(total > 0.0) || !std::isfinite(total))
                throw std::invalid_argument(std::string("RadioResourceConfig: ") + name + " total must be positive");
            if (!(used > 0.0) || used > total)
                throw std::invalid_argument(std::string("RadioResourceConfig: ") + name +
                                            " used quantity must lie in (0, total]");
        }

        // 273 PRB x 12 subcarriers x 30 kHz
        constexpr double kOccupied100MHz = 98.28e6;
        constexpr double kNominal100MHz = 100e6;
        constexpr double kMaxCodeRate256Qam = 948.0 / 1024.0;

        constexpr RuePreset kPresets[] = {
            {"5g-baseline", "DDDSUDDDD (28/40 DL slots), 11 data symbols, 256QAM r=948/1024, CP overhead",
             {kOccupied100MHz, kNominal100MHz, 28, 40, 11, 14, kMaxCodeRate256Qam, 14, 15}},
            {"dddsu-3pilot", "DDDSU (24/40 DL slots), 3 pilot symbols (9 data symbols)",
             {kOccupied100MHz, kNominal100MHz, 24, 40, 9, 14, kMaxCodeRate256Qam, 14, 15}},
            {"ps-less", "baseline with a pilot-symbol-less link (12 data symbols)",
             {kOccupied100MHz, kNominal100MHz, 28, 40, 12, 14, kMaxCodeRate256Qam, 14, 15}},
            {"ps-cp-less-fd", "pilot-less, CP-less and full duplex (all slots DL)",
             {kOccupied100MHz, kNominal100MHz, 40, 40, 12, 14, kMaxCodeRate256Qam, 15, 15}},
        };

        bool iequals(std::string_view a, std::string_view b)
        {
            return std::ranges::equal(a, b, [](char x, char y)
                                      { return std::tolower(static_cast<unsigned char>(x)) ==
                                               std::tolower(static_cast<unsigned char>(y)); });
        }
    }

    void RadioResourceConfig::validate() const
    {
        check_ratio(spectrum_used_hz, spectrum_total_hz, "spectrum");
        check_ratio(dl_slots, total_slots, "slots");
        check_ratio(data_symbols, total_symbols, "symbols");
        check_ratio(useful_samples, total_samples, "samples");
        if (!(code_rate > 0.0 && code_rate <= 1.0))
            throw std::invalid_argument("RadioResourceConfig: code_rate must lie in (0, 1]");
    }

    RueBreakdown rue_breakdown(const RadioResourceConfig &cfg)
    {
        cfg.validate();
        return {{{"spectrum", cfg.spectrum_used_hz / cfg.spectrum_total_hz},
                 {"slots", cfg.dl_slots / cfg.total_slots},
                 {"symbols", cfg.data_symbols / cfg.total_symbols},
                 {"code_rate", cfg.code_rate},
                 {"cp", cfg.useful_samples / cfg.total_samples}}};
    }

    double compute_rue(const RadioResourceConfig &cfg)
    {
        double rue = 1.0;
        for (const auto &factor : rue_breakdown(cfg))
            rue *= factor.ratio;
        return rue;
    }

    std::span<const RuePreset> rue_presets()
    {
        return kPresets;
    }

    std::optional<RuePreset> find_rue_preset(std::string_view name)
    {
        for (const auto &preset : kPresets)
            if (iequals(preset.name, name))
                return preset;
        return std::nullopt;
    }

    double rank_factor(const RankDistribution &dist, int max_layers)
    {
        if (max_layers < 1)
            throw std::invalid_argument("rank_factor: max_layers must be >= 1");
        if (dist.max_rank() > max_layers)
            throw std::invalid_argument("rank_factor: distribution has ranks above max_layers");
        return dist.expected_layers() / max_layers;
    }

    double aggregate_se_loss(double rue, double rank_factor)
    {
        if (!(rue > 0.0 && rue <= 1.0))
            throw std::invalid_argument("aggregate_se_loss: rue must lie in (0, 1]");
        if (!(rank_factor > 0.0 && rank_factor <= 1.0))
            throw std::invalid_argument("aggregate_se_loss: rank factor must lie in (0, 1]");
        return 1.0 - rue * rank_factor;
    }

    double rue_goal(double baseline, double multiplier)
    {
        if (!(baseline >= 0.0) || !(multiplier >= 0.0))
            throw std::invalid_argument("rue_goal: baseline and multiplier must be >= 0");
        const double goal = baseline * multiplier;
        if (goal > 1.0)
        {
            std::clog << "warning: RUE goal " << goal << " exceeds 1, clamped\n";
            return 1.0;
        }
        return goal;
    }
}
