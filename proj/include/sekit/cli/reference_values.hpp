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

#ifndef SEKIT_CLI_REFERENCE_VALUES_HPP
#define SEKIT_CLI_REFERENCE_VALUES_HPP

#include "sekit/cli/scenario.hpp"

#include <string>
#include <vector>

namespace sekit::cli
{
    // Published table values used as regression gates.
    namespace published
    {
        // Link-quality anchors of the deployment comparison (dB, CDF level 0.1 / 0.9).
        inline constexpr double kCellularSinrCdf10Db = -1.37;
        inline constexpr double kCellularSinrCdf90Db = 18.48;
        inline constexpr double kCellFreeSnrCdf10Db = 6.6;
        inline constexpr double kCellFreeSnrCdf90Db = 20.53;

        // Rounded RUE inputs of the improvement-scenario tables.
        inline constexpr double kRueBaseline = 0.50;
        inline constexpr double kRuePilotless = 0.55;
        inline constexpr double kRuePilotCpLessFullDuplex = 0.78;
    }

    struct TableCell
    {
        std::string table;
        std::string cell;
        double computed = 0.0;
        double reference = 0.0;
        double tolerance = 0.0;
        bool gated = true; // informational cells never fail the run

        double abs_delta() const;
        bool pass() const;
    };

    // Recomputes every table cell. Throws std::runtime_error when the golden
    // scenario has no calibrated transmit power.
    std::vector<TableCell> reproduce_tables(const Scenario &golden, Execution exec = Execution::Parallel);
}

#endif
