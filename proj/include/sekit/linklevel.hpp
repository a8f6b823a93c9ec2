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

#ifndef SEKIT_LINKLEVEL_HPP
#define SEKIT_LINKLEVEL_HPP

#include <map>
#include <span>
#include <vector>

namespace sekit
{
    // Typical cellular downlink: one serving cell, every other cell interferes at
    // the same transmit power (full load). The matched receive weight has unit
    // gain on magnitude-only channels, so SINR is evaluated in closed form.
    struct CellularLink
    {
        double serving_gain = 0.0;          // |h_1k|^2
        std::vector<double> interferer_gains; // |h_lk|^2, l = 2..L
        double tx_power_mw = 1.0;           // per cell
        double noise_mw = 1.0;

        void validate() const;
    };

    // Cell-free downlink: all L radio units serve the user coherently, each at
    // total_power / L.
    struct CellFreeLink
    {
        std::vector<double> gains; // |h_lk|^2, l = 1..L
        double total_power_mw = 1.0;
        double noise_mw = 1.0;

        void validate() const;
    };

    // Probability mass over the number of spatial layers the channel supports.
    class RankDistribution
    {
    public:
        static constexpr double kSumTolerance = 1e-9;

        // Throws std::invalid_argument for rank < 1, negative mass, masses not
        // summing to one or (when max_layers > 0) a rank above max_layers.
        explicit RankDistribution(std::map<int, double> probabilities, int max_layers = 0);

        static RankDistribution full_rank(int layers) { return RankDistribution({{layers, 1.0}}); }

        const std::map<int, double> &probabilities() const { return probabilities_; }
        int max_rank() const { return probabilities_.rbegin()->first; }

        // Sum of P(r) * r.
        double expected_layers() const;

    private:
        std::map<int, double> probabilities_;
    };

    double cellular_sinr(const CellularLink &link);
    double cellfree_snr(const CellFreeLink &link);

    // log2(1 + sinr)
    double se_siso(double sinr);

    // m * log2(1 + sinr), the full-rank bound.
    double se_mimo_upper(double sinr, int m_layers);

    // Sum over eigenmodes of log2(1 + (sinr / m) * lambda_i^2).
    double se_mimo_eigen(std::span<const double> eigenvalue_squares, double sinr, int m_layers);

    // Sum over r of P(r) * r * log2(1 + sinr).
    double rank_weighted_se(const RankDistribution &dist, double sinr);

    double apply_il(double sinr_db, double il_db);

    // Relative SE gain from reducing the implementation loss from il_ref_db to il_new_db.
    double il_se_gain(double sinr_db, double il_ref_db, double il_new_db);

    // rue * layers * log2(1 + lin(sinr_db - il_db)); layers is the expected layer count.
    double real_world_se(double rue, double rank_factor_layers, double sinr_db, double il_db);
}

#endif
