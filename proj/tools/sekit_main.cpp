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

#include "sekit/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    using namespace sekit::cli;

    CLI::App app{"sekit: spectral efficiency, RUE and bandwidth studies"};
    app.set_version_flag("--version", std::string(SEKIT_VERSION));
    app.require_subcommand(1);

    CommandOptions opts;
    std::string scenario, out, preset, format;
    std::uint64_t seed = 0;
    bool serial = false;

    const auto add_common = [&](CLI::App *sub, bool with_preset)
    {
        sub->add_option("--scenario", scenario, "Scenario JSON (or a run manifest)");
        sub->add_option("--out", out, "Output directory");
        sub->add_option("--seed", seed, "Override the scenario seed");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--serial", serial, "Use the serial reference kernels");
        if (with_preset)
            sub->add_option("--preset", preset, "RUE preset name");
    };

    auto *simulate = app.add_subcommand("simulate", "Monte-Carlo SINR/SNR and SE distributions");
    auto *rue = app.add_subcommand("rue", "Radio resource utilization breakdown");
    auto *tables = app.add_subcommand("tables", "Recompute the reference tables against a golden config");
    auto *bandwidth = app.add_subcommand("bandwidth", "Throughput vs bandwidth and SE vs peak rate");
    auto *calibrate = app.add_subcommand("calibrate", "Calibrate the transmit power and write a golden config");
    for (auto *sub : {simulate, tables, bandwidth, calibrate})
        add_common(sub, false);
    add_common(rue, true);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfigError;
    }

    CLI::App *sub = app.get_subcommands().front();
    if (sub->count("--scenario"))
        opts.scenario = scenario;
    if (sub->count("--out"))
        opts.out = out;
    if (sub->count("--seed"))
        opts.seed = seed;
    if (sub->count("--format"))
        opts.format = format;
    if (sub->get_option_no_throw("--preset") && sub->count("--preset"))
        opts.preset = preset;
    if (serial)
        opts.execution = sekit::Execution::Serial;

    return run_command(sub->get_name(), opts, std::cout, std::cerr);
}
