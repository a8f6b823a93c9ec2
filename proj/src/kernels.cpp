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

#include "sekit/kernels.hpp"
#include "sekit/units.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace sekit::kernels
{
    namespace
    {
        std::size_t chunk_count(std::size_t n) { return (n + kChunkSize - 1) / kChunkSize; }

        // Side of the stratification grid: floor(sqrt(n)), or 0 for independent draws.
        std::size_t strata_per_side(const SimulationConfig &cfg)
        {
            if (cfg.sampling != Sampling::Stratified)
                return 0;
            auto m = static_cast<std::size_t>(std::sqrt(static_cast<double>(cfg.n_samples)));
            while (m * m > cfg.n_samples)
                --m;
            while ((m + 1) * (m + 1) <= cfg.n_samples)
                ++m;
            return m;
        }

        void fill_chunk(const SimulationConfig &cfg, const UserRegion &region, std::size_t chunk,
                        std::span<Point2D> out)
        {
            const std::size_t begin = chunk * kChunkSize;
            const std::size_t end = std::min(begin + kChunkSize, out.size());
            if (cfg.pinned_user)
            {
                std::fill(out.begin() + begin, out.begin() + end, *cfg.pinned_user);
                return;
            }
            const std::size_t m = strata_per_side(cfg);
            auto rng = chunk_rng(cfg.seed, chunk);
            for (std::size_t i = begin; i < end; ++i)
                out[i] = i < m * m ? sample_user_position_stratified(region, cfg.layout, m, i, rng)
                                   : sample_user_position(region, cfg.layout, rng);
        }

        // |h|^2 = 10^(-FSPL/10) * d^-n, with d^-n evaluated as (d^2)^(-n/2).
        struct GainFn
        {
            double reference_gain;
            double half_exponent;

            double operator()(Point2D user, Point2D oru) const
            {
                const double dx = user.x - oru.x;
                const double dy = user.y - oru.y;
                return reference_gain * std::pow(dx * dx + dy * dy, -half_exponent);
            }
        };

        GainFn gain_fn(const SimulationConfig &cfg)
        {
            return {db_to_linear(-cfg.pathloss.fspl_1m_db()), 0.5 * cfg.pathloss.exponent()};
        }

        void fill_gain_row(const GainFn &fn, Point2D user, std::span<const Point2D> orus, double *row)
        {
            for (std::size_t l = 0; l < orus.size(); ++l)
                row[l] = fn(user, orus[l]);
        }

        double cellular_metric(std::span<const double> row, double tx, double noise, std::size_t center)
        {
            double interference = 0.0;
            for (std::size_t l = 0; l < row.size(); ++l)
                if (l != center)
                    interference += row[l];
            return tx * row[center] / (tx * interference + noise);
        }

        double cellfree_metric(std::span<const double> row, double tx, double noise)
        {
            double sum = 0.0;
            for (double g : row)
                sum += g;
            return sum * (tx / static_cast<double>(row.size())) / noise;
        }

        double metric(std::span<const double> row, Deployment deployment, double tx, double noise,
                      std::size_t center)
        {
            return deployment == Deployment::TypicalCellular ? cellular_metric(row, tx, noise, center)
                                                             : cellfree_metric(row, tx, noise);
        }
    }

    std::mt19937_64 chunk_rng(std::uint64_t seed, std::size_t chunk)
    {
        const auto c = static_cast<std::uint64_t>(chunk);
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
        return std::mt19937_64(seq);
    }

    std::vector<Point2D> sample_positions_serial(const SimulationConfig &cfg)
    {
        const auto region = cfg.user_region();
        std::vector<Point2D> positions(cfg.n_samples);
        for (std::size_t c = 0; c < chunk_count(cfg.n_samples); ++c)
            fill_chunk(cfg, region, c, positions);
        return positions;
    }

    std::vector<Point2D> sample_positions_omp(const SimulationConfig &cfg)
    {
        const auto region = cfg.user_region();
        std::vector<Point2D> positions(cfg.n_samples);
        const auto chunks = static_cast<std::int64_t>(chunk_count(cfg.n_samples));

#pragma omp parallel for schedule(static)
        for (std::int64_t c = 0; c < chunks; ++c)
            fill_chunk(cfg, region, static_cast<std::size_t>(c), positions);

        return positions;
    }

    GainMatrix compute_gains_serial(const SimulationConfig &cfg)
    {
        const auto positions = sample_positions_serial(cfg);
        const auto orus = cfg.layout.positions();
        const auto fn = gain_fn(cfg);

        GainMatrix gains{positions.size(), orus.size(), std::vector<double>(positions.size() * orus.size())};
        for (std::size_t u = 0; u < positions.size(); ++u)
            fill_gain_row(fn, positions[u], orus, gains.values.data() + u * gains.cells);
        return gains;
    }

    GainMatrix compute_gains_omp(const SimulationConfig &cfg)
    {
        const auto positions = sample_positions_omp(cfg);
        const auto orus = cfg.layout.positions();
        const auto fn = gain_fn(cfg);

        GainMatrix gains{positions.size(), orus.size(), std::vector<double>(positions.size() * orus.size())};
        const auto users = static_cast<std::int64_t>(positions.size());

#pragma omp parallel for schedule(static)
        for (std::int64_t u = 0; u < users; ++u)
            fill_gain_row(fn, positions[u], orus, gains.values.data() + u * gains.cells);

        return gains;
    }

    std::vector<double> evaluate_serial(const GainMatrix &gains, Deployment deployment, double tx_power_mw,
                                        double noise_mw, std::size_t center_index)
    {
        std::vector<double> out(gains.users);
        for (std::size_t u = 0; u < gains.users; ++u)
            out[u] = metric(gains.row(u), deployment, tx_power_mw, noise_mw, center_index);
        return out;
    }

    std::vector<double> evaluate_omp(const GainMatrix &gains, Deployment deployment, double tx_power_mw,
                                     double noise_mw, std::size_t center_index)
    {
        std::vector<double> out(gains.users);
        const auto users = static_cast<std::int64_t>(gains.users);

#pragma omp parallel for schedule(static)
        for (std::int64_t u = 0; u < users; ++u)
            out[u] = metric(gains.row(static_cast<std::size_t>(u)), deployment, tx_power_mw, noise_mw,
                            center_index);

        return out;
    }
}
