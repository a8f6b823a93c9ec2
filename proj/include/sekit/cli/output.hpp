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

#ifndef SEKIT_CLI_OUTPUT_HPP
#define SEKIT_CLI_OUTPUT_HPP

#include "sekit/montecarlo.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace sekit::cli
{
    // Shortest decimal form that round-trips to the same double ('.' separator).
    std::string format_number(double v);

    // Indices of the order statistics written for a CDF with at most max_points rows
    // (0 = every sample). Row k uses sample ceil(k n / m) - 1, so the last row is the maximum.
    std::vector<std::size_t> cdf_indices(std::size_t n, std::size_t max_points);

    // "cdf,value" header followed by one row per selected order statistic, cdf = (i + 1) / n.
    std::string cdf_csv(const EmpiricalDistribution &dist, std::size_t max_points);
    nlohmann::json cdf_json(const EmpiricalDistribution &dist, std::size_t max_points);

    // Writes the files of one run into a directory. Each file is written to a
    // temporary name and renamed into place; the manifest goes last.
    class RunWriter
    {
    public:
        explicit RunWriter(std::filesystem::path directory);

        const std::filesystem::path &directory() const { return directory_; }

        void write(const std::string &name, const std::string &content);
        void write_json(const std::string &name, const nlohmann::json &doc);

        // manifest.json: tool version, command, resolved scenario, extra fields and
        // the list of every file written so far.
        void write_manifest(const std::string &command, const nlohmann::json &scenario, const nlohmann::json &extra);

    private:
        struct FileRecord
        {
            std::string name;
            std::uintmax_t bytes;
        };

        std::filesystem::path directory_;
        std::vector<FileRecord> files_;
    };
}

#endif
