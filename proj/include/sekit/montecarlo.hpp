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

#ifndef SEKIT_MONTECARLO_HPP
#define SEKIT_MONTECARLO_HPP

#include "sekit/geometry.hpp"
#include "sekit/linklevel.hpp"
#include "sekit/propagation.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace sekit
{
    enum class Deployment
    {
        TypicalCellular, // center cell serves, all other cells interfere
        CellFree         // every cell serves coherently at Pt / L
    };

    std::string_view to_string(Deployment d);
    std::optional<Deployment> parse_deployment(std::string_view name);

    // Stratified: the first m^2 users (m = floor(sqrt(n))) are jittered over an
    // m x m grid of the center cell, the remainder drawn independently. Every user
    // is still uniform over the allowed area; quantile estimates settle much faster.
    enum class Sampling
    {
        Stratified,
        Independent
    };

    std::string_view to_string(Sampling s);
    std::optional<Sampling> parse_sampling(std::string_view name);

    enum class Execution
    {
        Serial,
        Parallel
    };

    // Optional per-sample SE transform: rue * E[layers] * log2(1 + lin(sinr_db - il_db)).
    struct SePipeline
    {
        RankDistribution ranks = RankDistribution::full_rank(1);
        double il_db = 0.0;
        double rue = 1.0;

        double apply(double sinr_db) const;
    };

    struct SimulationConfig
    {
        CellLayout layout;
        PathLossModel pathloss;
        double tx_power_dbm = 0.0; // per cell (cellular) or total (cell-free)
        NoiseConfig noise;
        Deployment deployment = Deployment::TypicalCellular;
        std::size_t n_samples = 1;
        std::uint64_t seed = 0;
        Sampling sampling = Sampling::Stratified;
        double exclusion_radius_m = 5.0;
        std::optional<Point2D> pinned_user;
        std::optional<SePipeline> se_pipeline;

        // Throws std::invalid_argument. The exclusion radius must be at least the
        // 1 m path-loss reference distance; a pinned user must respect it too.
        void validate() const;

        UserRegion user_region() const;
        double noise_mw() const;
    };

    enum class Units
    {
        Decibel,
        BitsPerSecondPerHertz
    };

    std::string_view to_string(Units u);

    // Immutable sorted sample set.
    class EmpiricalDistribution
    {
    public:
        EmpiricalDistribution(std::vector<double> samples, Units units);

        std::span<const double> sorted_samples() const { return samples_; }
        std::size_t size() const { return samples_.size(); }
        bool empty() const { return samples_.empty(); }
        Units units() const { return units_; }

    private:
        std::vector<double> samples_;
        Units units_;
    };

    // Linear interpolation between order statistics at h = p (n - 1).
    // Throws std::invalid_argument for an empty distribution or p outside [0, 1].
    double percentile(const EmpiricalDistribution &dist, double p);

    struct DeploymentResult
    {
        EmpiricalDistribution sinr_db; // SINR (cellular) or SNR (cell-free)
        EmpiricalDistribution se;
    };

    // Drops cfg.n_samples users over the center cell and evaluates each. The output
    // depends only on cfg (not on the execution policy or the thread count).
    DeploymentResult run_deployment(const SimulationConfig &cfg, Execution exec = Execution::Parallel);

    struct ComparisonRow
    {
        double percentile = 0.0; // CDF level
        double cellular_se = 0.0;
        double cellfree_se = 0.0;
        double cellular_db = 0.0;
        double cellfree_db = 0.0;
        double se_ratio = 0.0;     // cell-free / cellular
        double snr_delta_db = 0.0; // cell-free SNR - cellular SINR
    };

    struct ComparisonReport
    {
        std::vector<ComparisonRow> rows;
    };

    // Percentiles are CDF levels; a CCDF level q is the CDF level 1 - q.
    ComparisonReport compare_deployments(const DeploymentResult &cellular, const DeploymentResult &cellfree,
                                         std::span<const double> percentiles);

    struct CalibrationTarget
    {
        double percentile = 0.1;
        double target_db = 6.6;
    };

    struct CalibrationOptions
    {
        double lo_dbm = -50.0;
        double hi_dbm = 100.0;
        double tolerance_db = 0.02;
        int max_iterations = 200;
    };

    struct CalibrationResult
    {
        double tx_power_dbm = 0.0;
        double achieved_db = 0.0;
        int iterations = 0;
    };

    class CalibrationError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Bisection on the transmit power until the requested percentile of the
    // SINR/SNR distribution hits target_db. User positions are drawn once with
    // the template's seed and held fixed during the search.
    CalibrationResult calibrate_tx_power(const CalibrationTarget &target, const SimulationConfig &tmpl,
                                         const CalibrationOptions &options = {},
                                         Execution exec = Execution::Parallel);
}

#endif
