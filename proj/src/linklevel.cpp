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
#include "sekit/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sekit
{
    namespace
    {
        void require_gain(double g, const char *what)
        {
            if (!(g >= 0.0) || !std::isfinite(g))
                throw std::invalid_argument(std::string(what) + ": channel gains must be finite and >= 0");
        }

        void require_positive(double v, const char *what)
        {
            if (!(v > 0.0) || !std::isfinite(v))
                throw std::invalid_argument(std::string(what) + ": powers must be positive");
        }
    }

    void CellularLink::validate() const
    {
        require_gain(serving_gain, "CellularLink");
        for (double g : interferer_gains)
            require_gain(g, "CellularLink");
        require_positive(tx_power_mw, "CellularLink");
        require_positive(noise_mw, "CellularLink");
    }

    void CellFreeLink::validate() const
    {
        if (gains.empty())
            throw std::invalid_argument("CellFreeLink: at least one gain is required");
        for (double g : gains)
            require_gain(g, "CellFreeLink");
        require_positive(total_power_mw, "CellFreeLink");
        require_positive(noise_mw, "CellFreeLink");
    }

    RankDistribution::RankDistribution(std::map<int, double> probabilities, int max_layers)
        : probabilities_(std::move(probabilities))
    {
        if (probabilities_.empty())
            throw std::invalid_argument("RankDistribution: empty distribution");
        double sum = 0.0;
        for (const auto &[rank, p] : probabilities_)
        {
            if (rank < 1)
                throw std::invalid_argument("RankDistribution: rank must be >= 1");
            if (max_layers > 0 && rank > max_layers)
                throw std::invalid_argument("RankDistribution: rank " + std::to_string(rank) +
                                            " exceeds max_layers " + std::to_string(max_layers));
            if (!(p >= 0.0) || !std::isfinite(p))
                throw std::invalid_argument("RankDistribution: probabilities must be >= 0");
            sum += p;
        }
        if (std::abs(sum - 1.0) > kSumTolerance)
            throw std::invalid_argument("RankDistribution: probabilities must sum to 1");
    }

    double RankDistribution::expected_layers() const
    {
        double layers = 0.0;
        for (const auto &[rank, p] : probabilities_)
            layers += p * rank;
        return layers;
    }

    double cellular_sinr(const CellularLink &link)
    {
        link.validate();
        double interference = 0.0;
        for (double g : link.interferer_gains)
            interference += g;
        return link.tx_power_mw * link.serving_gain /
               (link.tx_power_mw * interference + link.noise_mw);
    }

    double cellfree_snr(const CellFreeLink &link)
    {
        link.validate();
        const double per_oru = link.total_power_mw / static_cast<double>(link.gains.size());
        double received = 0.0;
        for (double g : link.gains)
            received += g * per_oru;
        return received / link.noise_mw;
    }

    double se_siso(double sinr)
    {
        if (!(sinr >= 0.0))
            throw std::invalid_argument("se_siso: sinr must be >= 0");
        return std::log2(1.0 + sinr);
    }

    double se_mimo_upper(double sinr, int m_layers)
    {
        if (m_layers < 1)
            throw std::invalid_argument("se_mimo_upper: m_layers must be >= 1");
        return m_layers * se_siso(sinr);
    }

    double se_mimo_eigen(std::span<const double> eigenvalue_squares, double sinr, int m_layers)
    {
        if (m_layers < 1)
            throw std::invalid_argument("se_mimo_eigen: m_layers must be >= 1");
        if (eigenvalue_squares.size() > static_cast<std::size_t>(m_layers))
            throw std::invalid_argument("se_mimo_eigen: more eigenvalues than layers");
        if (!(sinr >= 0.0))
            throw std::invalid_argument("se_mimo_eigen: sinr must be >= 0");

        const double per_layer = sinr / m_layers;
        double se = 0.0;
        for (double lambda2 : eigenvalue_squares)
        {
            if (!(lambda2 >= 0.0))
                throw std::invalid_argument("se_mimo_eigen: negative eigenvalue square");
            se += std::log2(1.0 + per_layer * lambda2);
        }
        return se;
    }

    double rank_weighted_se(const RankDistribution &dist, double sinr)
    {
        return dist.expected_layers() * se_siso(sinr);
    }

    double apply_il(double sinr_db, double il_db)
    {
        if (!(il_db >= 0.0))
            throw std::invalid_argument("apply_il: implementation loss must be >= 0 dB");
        return sinr_db - il_db;
    }

    double il_se_gain(double sinr_db, double il_ref_db, double il_new_db)
    {
        if (!(il_new_db <= il_ref_db))
            throw std::invalid_argument("il_se_gain: new loss must not exceed the reference loss");
        const double se_new = se_siso(db_to_linear(apply_il(sinr_db, il_new_db)));
        const double se_ref = se_siso(db_to_linear(apply_il(sinr_db, il_ref_db)));
        return se_new / se_ref - 1.0;
    }

    double real_world_se(double rue, double rank_factor_layers, double sinr_db, double il_db)
    {
        if (!(rue >= 0.0 && rue <= 1.0))
            throw std::invalid_argument("real_world_se: rue must lie in [0, 1]");
        if (!(rank_factor_layers >= 0.0))
            throw std::invalid_argument("real_world_se: layer count must be >= 0");
        return rue * rank_factor_layers * se_siso(db_to_linear(apply_il(sinr_db, il_db)));
    }
}
