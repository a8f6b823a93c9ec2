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

#include "sekit/cli/reference_values.hpp"
#include "sekit/bandwidth.hpp"
#include "sekit/units.hpp"

#include <cmath>
#include <stdexcept>

namespace sekit::cli
{
    namespace
    {
        constexpr double kExact = 1e-12;

        double rue_of(std::string_view preset)
        {
            return compute_rue(find_rue_preset(preset)->config);
        }
    }

    double TableCell::abs_delta() const
    {
        return std::abs(computed - reference);
    }

    bool TableCell::pass() const
    {
        return !gated || abs_delta() <= tolerance + kExact;
    }

    std::vector<TableCell> reproduce_tables(const Scenario &golden, Execution exec)
    {
        using namespace published;
        if (!golden.power.tx_dbm)
            throw std::runtime_error("golden scenario has no calibrated power.tx_dbm");

        std::vector<TableCell> cells;
        const auto add = [&cells](std::string table, std::string cell, double computed, double reference,
                                  double tolerance, bool gated = true)
        { cells.push_back({std::move(table), std::move(cell), computed, reference, tolerance, gated}); };

        // Radio resource utilization of the named configurations.
        add("rue", "5g-baseline", rue_of("5g-baseline"), 0.467, 0.003);
        add("rue", "dddsu-3pilot", rue_of("dddsu-3pilot"), 0.328, 0.003);
        add("rue", "ps-cp-less-fd", rue_of("ps-cp-less-fd"), 0.780, 0.003);

        // Table I: deployment comparison from the calibrated Monte-Carlo run.
        const double tx = *golden.power.tx_dbm;
        const auto cellular = run_deployment(golden.simulation(Deployment::TypicalCellular, tx), exec);
        const auto cellfree = run_deployment(golden.simulation(Deployment::CellFree, tx), exec);
        const double levels[] = {0.9, 0.1};
        const auto report = compare_deployments(cellular, cellfree, levels);
        const auto &hi = report.rows[0];
        const auto &lo = report.rows[1];
        add("table1", "se_ratio_cdf90", hi.se_ratio, 1.1, 0.15);
        add("table1", "se_ratio_cdf10", lo.se_ratio, 3.1, 0.4);
        add("table1", "snr_delta_db_cdf90", hi.snr_delta_db, 2.05, 0.5);
        add("table1", "snr_delta_db_cdf10", lo.snr_delta_db, 7.97, 0.75);
        add("table1", "cellular_sinr_db_cdf90", hi.cellular_db, kCellularSinrCdf90Db, 0.0, false);
        add("table1", "cellfree_snr_db_cdf90", hi.cellfree_db, kCellFreeSnrCdf90Db, 0.0, false);
        add("table1", "cellular_sinr_db_cdf10", lo.cellular_db, kCellularSinrCdf10Db, 0.0, false);
        add("table1", "cellfree_snr_db_cdf10", lo.cellfree_db, kCellFreeSnrCdf10Db, 0.0, false);
        add("table1", "cellular_se_cdf90", hi.cellular_se, 6.16, 0.0, false);
        add("table1", "cellfree_se_cdf90", hi.cellfree_se, 6.83, 0.0, false);
        add("table1", "cellular_se_cdf10", lo.cellular_se, 0.79, 0.0, false);
        add("table1", "cellfree_se_cdf10", lo.cellfree_se, 2.47, 0.0, false);

        // SE/SINR pairings printed with the comparison.
        add("table1", "se_at_18.48dB", se_siso(db_to_linear(kCellularSinrCdf90Db)), 6.16, 0.01);
        add("table1", "se_at_20.53dB", se_siso(db_to_linear(kCellFreeSnrCdf90Db)), 6.83, 0.01);
        add("table1", "se_at_-1.37dB", se_siso(db_to_linear(kCellularSinrCdf10Db)), 0.79, 0.01);
        add("table1", "se_at_6.6dB", se_siso(db_to_linear(kCellFreeSnrCdf10Db)), 2.47, 0.01);

        // Table II: SE gain from reducing the implementation loss, at the CDF 0.1 anchors.
        add("table2", "cellular_3to2dB", il_se_gain(kCellularSinrCdf10Db, 3.0, 2.0), 0.22, 0.01);
        add("table2", "cellular_3to1dB", il_se_gain(kCellularSinrCdf10Db, 3.0, 1.0), 0.47, 0.01);
        add("table2", "cellular_3to0.5dB", il_se_gain(kCellularSinrCdf10Db, 3.0, 0.5), 0.61, 0.01);
        add("table2", "cellfree_3to2dB", il_se_gain(kCellFreeSnrCdf10Db, 3.0, 2.0), 0.14, 0.01);
        add("table2", "cellfree_3to1dB", il_se_gain(kCellFreeSnrCdf10Db, 3.0, 1.0), 0.29, 0.01);
        add("table2", "cellfree_3to0.5dB", il_se_gain(kCellFreeSnrCdf10Db, 3.0, 0.5), 0.36, 0.01);

        add("table3", "rue_goal", rue_goal(kRueBaseline, 1.5), 0.75, 0.0);

        // Tables IV and V: aggregate SE loss over RUE and rank scenarios.
        const RankDistribution r6040({{2, 0.6}, {4, 0.4}}, 4);
        const RankDistribution r2080({{2, 0.2}, {4, 0.8}}, 4);
        const double f6040 = rank_factor(r6040, 4);
        const double f2080 = rank_factor(r2080, 4);
        add("table4", "baseline_60/40", aggregate_se_loss(kRueBaseline, f6040), 0.65, 0.01);
        add("table4", "ps-less_60/40", aggregate_se_loss(kRuePilotless, f6040), 0.62, 0.01);
        add("table4", "ps-cp-less-fd_60/40", aggregate_se_loss(kRuePilotCpLessFullDuplex, f6040), 0.45, 0.01);
        add("table4", "baseline_20/80", aggregate_se_loss(kRueBaseline, f2080), 0.55, 0.01);
        add("table4", "ps-less_20/80", aggregate_se_loss(kRuePilotless, f2080), 0.51, 0.01);
        add("table4", "ps-cp-less-fd_20/80", aggregate_se_loss(kRuePilotCpLessFullDuplex, f2080), 0.30, 0.01);

        // MU-MIMO: 2 users x 2 layers always available, i.e. full rank.
        const double f_mu = rank_factor(RankDistribution::full_rank(4), 4);
        add("table5", "baseline", aggregate_se_loss(kRueBaseline, f_mu), 0.50, 0.01);
        add("table5", "ps-less", aggregate_se_loss(kRuePilotless, f_mu), 0.45, 0.01);
        add("table5", "ps-cp-less-fd", aggregate_se_loss(kRuePilotCpLessFullDuplex, f_mu), 0.22, 0.01);

        // Scalar anchors quoted alongside the tables.
        add("anchors", "noise_power_dbm_100MHz_nf5", noise_power_dbm({100e6, 5.0}), -88.6, 0.01);
        add("anchors", "rank_factor_60/40", f6040, 0.70, 0.0);
        add("anchors", "rank_factor_20/80", f2080, 0.90, 0.0);
        add("anchors", "mimo_multiplier_60/40", r6040.expected_layers(), 2.8, 0.0);
        add("anchors", "field_trial_su_se", field_trial_se(911.0, 98.28), 9.27, 0.01);
        add("anchors", "field_trial_mu_se", field_trial_se(2909.0, 98.28), 29.6, 0.01);
        return cells;
    }
}
