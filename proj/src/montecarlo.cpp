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

#include "sekit/montecarlo.hpp"
#include "sekit/kernels.hpp"
#include "sekit/units.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sekit
{
    std::string_view to_string(Deployment d)
    {
        switch (d)
        {
        case Deployment::TypicalCellular:
            return "cellular";
        case Deployment::CellFree:
            return "cell_free";
        }
        return "unknown";
    }

    std::optional<Deployment> parse_deployment(std::string_view name)
    {
        if (name == "cellular" || name == "typical_cellular")
            return Deployment::TypicalCellular;
        if (name == "cell_free" || name == "cellfree")
            return Deployment::CellFree;
        return std::nullopt;
    }

    std::string_view to_string(Sampling s)
    {
        return s == Sampling::Stratified ? "stratified" : "independent";
    }

    std::optional<Sampling> parse_sampling(std::string_view name)
    {
        if (name == "stratified")
            return Sampling::Stratified;
        if (name == "independent")
            return Sampling::Independent;
        return std::nullopt;
    }

    std::string_view to_string(Units u)
    {
        return u == Units::Decibel ? "dB" : "bps/Hz";
    }

    double SePipeline::apply(double sinr_db) const
    {
        return real_world_se(rue, ranks.expected_layers(), sinr_db, il_db);
    }

    void SimulationConfig::validate() const
    {
        noise.validate();
        if (n_samples < 1)
            throw std::invalid_argument("SimulationConfig: n_samples must be >= 1");
        if (!std::isfinite(tx_power_dbm))
            throw std::invalid_argument("SimulationConfig: tx_power_dbm must be finite");
        if (!(exclusion_radius_m >= PathLossModel::kReferenceDistanceM))
            throw std::invalid_argument("SimulationConfig: exclusion radius must be >= 1 m (path-loss reference)");
        user_region().validate();
        if (pinned_user)
            for (const auto &oru : layout.positions())
                if (distance(*pinned_user, oru) < exclusion_radius_m)
                    throw std::invalid_argument("SimulationConfig: pinned user lies inside an exclusion radius");
        if (se_pipeline)
        {
            if (!(se_pipeline->il_db >= 0.0))
                throw std::invalid_argument("SimulationConfig: pipeline il_db must be >= 0");
            if (!(se_pipeline->rue > 0.0 && se_pipeline->rue <= 1.0))
                throw std::invalid_argument("SimulationConfig: pipeline rue must lie in (0, 1]");
        }
    }

    UserRegion SimulationConfig::user_region() const
    {
        return UserRegion{layout.center(), layout.isd_m(), exclusion_radius_m};
    }

    double SimulationConfig::noise_mw() const
    {
        return dbm_to_mw(noise_power_dbm(noise));
    }

    EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples, Units units)
        : samples_(std::move(samples)), units_(units)
    {
        std::sort(samples_.begin(), samples_.end());
    }

    double percentile(const EmpiricalDistribution &dist, double p)
    {
        if (dist.empty())
            throw std::invalid_argument("percentile: empty distribution");
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("percentile: p must lie in [0, 1]");

        const auto x = dist.sorted_samples();
        const double h = p * static_cast<double>(x.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(h));
        if (lo + 1 >= x.size())
            return x.back();
        const double frac = h - static_cast<double>(lo);
        return x[lo] + frac * (x[lo + 1] - x[lo]);
    }

    namespace
    {
        DeploymentResult summarize(const SimulationConfig &cfg, const std::vector<double> &linear)
        {
            std::vector<double> db(linear.size());
            std::vector<double> se(linear.size());
            for (std::size_t i = 0; i < linear.size(); ++i)
            {
                db[i] = linear_to_db(linear[i]);
                se[i] = cfg.se_pipeline ? cfg.se_pipeline->apply(db[i]) : se_siso(linear[i]);
            }
            return {EmpiricalDistribution(std::move(db), Units::Decibel),
                    EmpiricalDistribution(std::move(se), Units::BitsPerSecondPerHertz)};
        }
    }

    DeploymentResult run_deployment(const SimulationConfig &cfg, Execution exec)
    {
        cfg.validate();
        const auto gains = kernels::compute_gains(cfg, exec);
        const auto linear = kernels::evaluate(gains, cfg.deployment, dbm_to_mw(cfg.tx_power_dbm), cfg.noise_mw(),
                                              cfg.layout.center_index(), exec);
        return summarize(cfg, linear);
    }

    ComparisonReport compare_deployments(const DeploymentResult &cellular, const DeploymentResult &cellfree,
                                         std::span<const double> percentiles)
    {
        if (cellular.sinr_db.units() != cellfree.sinr_db.units() || cellular.se.units() != cellfree.se.units())
            throw std::invalid_argument("compare_deployments: unit mismatch between distributions");
        if (cellular.sinr_db.units() != Units::Decibel || cellular.se.units() != Units::BitsPerSecondPerHertz)
            throw std::invalid_argument("compare_deployments: expected dB and bps/Hz distributions");

        ComparisonReport report;
        for (double p : percentiles)
        {
            ComparisonRow row;
            row.percentile = p;
            row.cellular_se = percentile(cellular.se, p);
            row.cellfree_se = percentile(cellfree.se, p);
            row.cellular_db = percentile(cellular.sinr_db, p);
            row.cellfree_db = percentile(cellfree.sinr_db, p);
            row.se_ratio = row.cellfree_se / row.cellular_se;
            row.snr_delta_db = row.cellfree_db - row.cellular_db;
            report.rows.push_back(row);
        }
        return report;
    }

    CalibrationResult calibrate_tx_power(const CalibrationTarget &target, const SimulationConfig &tmpl,
                                         const CalibrationOptions &options, Execution exec)
    {
        tmpl.validate();
        if (!(target.percentile >= 0.0 && target.percentile <= 1.0))
            throw std::invalid_argument("calibrate_tx_power: percentile must lie in [0, 1]");
        if (!(options.lo_dbm < options.hi_dbm))
            throw std::invalid_argument("calibrate_tx_power: empty power bracket");

        const auto gains = kernels::compute_gains(tmpl, exec);
        const double noise = tmpl.noise_mw();
        const auto level_at = [&](double tx_dbm)
        {
            auto linear = kernels::evaluate(gains, tmpl.deployment, dbm_to_mw(tx_dbm), noise,
                                            tmpl.layout.center_index(), exec);
            for (auto &v : linear)
                v = linear_to_db(v);
            return percentile(EmpiricalDistribution(std::move(linear), Units::Decibel), target.percentile);
        };

        double lo = options.lo_dbm;
        double hi = options.hi_dbm;
        const double f_lo = level_at(lo);
        const double f_hi = level_at(hi);
        if (!(f_lo <= target.target_db && target.target_db <= f_hi))
        {
            std::ostringstream msg;
            msg << "calibration target " << target.target_db << " dB at p=" << target.percentile
                << " is not bracketed: [" << lo << ", " << hi << "] dBm yields [" << f_lo << ", " << f_hi
                << "] dB";
            throw CalibrationError(msg.str());
        }

        CalibrationResult result;
        double mid = 0.5 * (lo + hi);
        double f_mid = level_at(mid);
        for (result.iterations = 1; result.iterations < options.max_iterations && hi - lo > 1e-9;
             ++result.iterations)
        {
            if (f_mid < target.target_db)
                lo = mid;
            else
                hi = mid;
            mid = 0.5 * (lo + hi);
            f_mid = level_at(mid);
        }

        if (std::abs(f_mid - target.target_db) > options.tolerance_db)
        {
            std::ostringstream msg;
            msg << "calibration stalled at " << mid << " dBm: achieved " << f_mid << " dB, target "
                << target.target_db << " dB";
            throw CalibrationError(msg.str());
        }
        result.tx_power_dbm = mid;
        result.achieved_db = f_mid;
        return result;
    }
}
