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

// Serial reference kernels against their OpenMP counterparts.

#include "sekit/kernels.hpp"
#include "sekit/montecarlo.hpp"

#include <benchmark/benchmark.h>

using namespace sekit;

namespace
{
    SimulationConfig config(std::size_t n)
    {
        return SimulationConfig{.layout = build_grid_layout(3, 3, 200.0),
                                .pathloss = PathLossModel::from_carrier(3.5e9, 3.52),
                                .tx_power_dbm = 39.4,
                                .noise = {},
                                .deployment = Deployment::TypicalCellular,
                                .n_samples = n,
                                .seed = 1,
                                .pinned_user = std::nullopt,
                                .se_pipeline = std::nullopt};
    }

    template <Execution E>
    void BM_ComputeGains(benchmark::State &state)
    {
        const auto cfg = config(static_cast<std::size_t>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(kernels::compute_gains(cfg, E));
        state.SetItemsProcessed(state.iterations() * state.range(0));
    }

    template <Execution E>
    void BM_Evaluate(benchmark::State &state)
    {
        const auto cfg = config(static_cast<std::size_t>(state.range(0)));
        const auto gains = kernels::compute_gains(cfg, Execution::Parallel);
        for (auto _ : state)
            benchmark::DoNotOptimize(kernels::evaluate(gains, Deployment::TypicalCellular, 1e4, 1e-12, 4, E));
        state.SetItemsProcessed(state.iterations() * state.range(0));
    }

    template <Execution E>
    void BM_RunDeployment(benchmark::State &state)
    {
        auto cfg = config(static_cast<std::size_t>(state.range(0)));
        cfg.deployment = Deployment::CellFree;
        for (auto _ : state)
            benchmark::DoNotOptimize(run_deployment(cfg, E));
        state.SetItemsProcessed(state.iterations() * state.range(0));
    }
}

BENCHMARK(BM_ComputeGains<Execution::Serial>)->Name("compute_gains/serial")->Arg(10000)->Arg(100000)->UseRealTime();
BENCHMARK(BM_ComputeGains<Execution::Parallel>)->Name("compute_gains/omp")->Arg(10000)->Arg(100000)->UseRealTime();
BENCHMARK(BM_Evaluate<Execution::Serial>)->Name("evaluate/serial")->Arg(10000)->Arg(100000)->UseRealTime();
BENCHMARK(BM_Evaluate<Execution::Parallel>)->Name("evaluate/omp")->Arg(10000)->Arg(100000)->UseRealTime();
BENCHMARK(BM_RunDeployment<Execution::Serial>)->Name("run_deployment/serial")->Arg(100000)->UseRealTime();
BENCHMARK(BM_RunDeployment<Execution::Parallel>)->Name("run_deployment/omp")->Arg(100000)->UseRealTime();

BENCHMARK_MAIN();
