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

#ifndef SEKIT_KERNELS_HPP
#define SEKIT_KERNELS_HPP

// Data-parallel inner loops of the Monte-Carlo engine. Every kernel has a
// serial reference and an OpenMP version; both produce bit-identical output.
//
// Determinism: the user index space is cut into fixed chunks of kChunkSize.
// Chunk c draws its users from an mt19937_64 seeded by (seed, c), so results
// never depend on the number of worker threads.

#include "sekit/montecarlo.hpp"

#include <cstddef>
#include <random>
#include <span>
#include <vector>

namespace sekit::kernels
{
    inline constexpr std::size_t kChunkSize = 4096;

    std::mt19937_64 chunk_rng(std::uint64_t seed, std::size_t chunk);

    // Row-major users x cells matrix of linear channel power gains.
    struct GainMatrix
    {
        std::size_t users = 0;
        std::size_t cells = 0;
        std::vector<double> values;

        std::span<const double> row(std::size_t user) const { return {values.data() + user * cells, cells}; }
    };

    std::vector<Point2D> sample_positions_serial(const SimulationConfig &cfg);
    std::vector<Point2D> sample_positions_omp(const SimulationConfig &cfg);

    GainMatrix compute_gains_serial(const SimulationConfig &cfg);
    GainMatrix compute_gains_omp(const SimulationConfig &cfg);

    // Linear SINR (cellular) or SNR (cell-free) per user row.
    std::vector<double> evaluate_serial(const GainMatrix &gains, Deployment deployment, double tx_power_mw,
                                        double noise_mw, std::size_t center_index);
    std::vector<double> evaluate_omp(const GainMatrix &gains, Deployment deployment, double tx_power_mw,
                                     double noise_mw, std::size_t center_index);

    inline GainMatrix compute_gains(const SimulationConfig &cfg, Execution exec)
    {
        return exec == Execution::Serial ? compute_gains_serial(cfg) : compute_gains_omp(cfg);
    }

    inline std::vector<double> evaluate(const GainMatrix &gains, Deployment deployment, double tx_power_mw,
                                        double noise_mw, std::size_t center_index, Execution exec)
    {
        return exec == Execution::Serial ? evaluate_serial(gains, deployment, tx_power_mw, noise_mw, center_index)
                                         : evaluate_omp(gains, deployment, tx_power_mw, noise_mw, center_index);
    }
}

#endif
