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

#ifndef SEKIT_CLI_COMMANDS_HPP
#define SEKIT_CLI_COMMANDS_HPP

#include "sekit/montecarlo.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace sekit::cli
{
    enum ExitCode : int
    {
        kExitOk = 0,
        kExitConfigError = 2,
        kExitRuntimeError = 3, // also: a gated table cell out of tolerance
    };

    struct CommandOptions
    {
        std::optional<std::filesystem::path> scenario;
        std::optional<std::string> preset;
        std::optional<std::filesystem::path> out;
        std::optional<std::uint64_t> seed;
        std::optional<std::string> format; // csv | json
        Execution execution = Execution::Parallel;
    };

    // Each command throws on failure; run_command maps exceptions to exit codes.
    int cmd_simulate(const CommandOptions &opts, std::ostream &out);
    int cmd_rue(const CommandOptions &opts, std::ostream &out);
    int cmd_tables(const CommandOptions &opts, std::ostream &out);
    int cmd_bandwidth(const CommandOptions &opts, std::ostream &out);
    int cmd_calibrate(const CommandOptions &opts, std::ostream &out);

    // Dispatches by name ("simulate", "rue", "tables", "bandwidth", "calibrate").
    // Diagnostics go to err.
    int run_command(std::string_view command, const CommandOptions &opts, std::ostream &out, std::ostream &err);
}

#endif
