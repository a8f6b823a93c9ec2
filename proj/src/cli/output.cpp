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

#include "sekit/cli/output.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace sekit::cli
{
    std::string format_number(double v)
    {
        char buf[64];
        const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        if (ec != std::errc())
            throw std::runtime_error("format_number: conversion failed");
        return std::string(buf, end);
    }

    std::vector<std::size_t> cdf_indices(std::size_t n, std::size_t max_points)
    {
        std::vector<std::size_t> idx;
        if (n == 0)
            return idx;
        if (max_points == 0 || max_points >= n)
        {
            idx.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                idx[i] = i;
            return idx;
        }
        idx.reserve(max_points);
        for (std::size_t k = 1; k <= max_points; ++k)
            idx.push_back((k * n + max_points - 1) / max_points - 1);
        return idx;
    }

    std::string cdf_csv(const EmpiricalDistribution &dist, std::size_t max_points)
    {
        const auto x = dist.sorted_samples();
        const double n = static_cast<double>(x.size());
        std::string out = "cdf,value\n";
        for (std::size_t i : cdf_indices(x.size(), max_points))
        {
            out += format_number(static_cast<double>(i + 1) / n);
            out += ',';
            out += format_number(x[i]);
            out += '\n';
        }
        return out;
    }

    nlohmann::json cdf_json(const EmpiricalDistribution &dist, std::size_t max_points)
    {
        const auto x = dist.sorted_samples();
        const double n = static_cast<double>(x.size());
        nlohmann::json cdf = nlohmann::json::array();
        nlohmann::json value = nlohmann::json::array();
        for (std::size_t i : cdf_indices(x.size(), max_points))
        {
            cdf.push_back(static_cast<double>(i + 1) / n);
            value.push_back(x[i]);
        }
        return {{"units", std::string(to_string(dist.units()))}, {"cdf", cdf}, {"value", value}};
    }

    RunWriter::RunWriter(std::filesystem::path directory) : directory_(std::move(directory))
    {
        std::error_code ec;
        std::filesystem::create_directories(directory_, ec);
        if (ec)
            throw std::runtime_error("cannot create output directory '" + directory_.string() + "': " + ec.message());
    }

    void RunWriter::write(const std::string &name, const std::string &content)
    {
        const auto target = directory_ / name;
        auto tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot write '" + tmp.string() + "'");
            out << content;
            if (!out.flush())
                throw std::runtime_error("write to '" + tmp.string() + "' failed");
        }
        std::filesystem::rename(tmp, target);
        files_.push_back({name, static_cast<std::uintmax_t>(content.size())});
    }

    void RunWriter::write_json(const std::string &name, const nlohmann::json &doc)
    {
        write(name, doc.dump(2) + "\n");
    }

    void RunWriter::write_manifest(const std::string &command, const nlohmann::json &scenario,
                                   const nlohmann::json &extra)
    {
        nlohmann::json manifest;
        manifest["manifest_version"] = 1;
        manifest["tool"] = "sekit";
        manifest["version"] = SEKIT_VERSION;
        manifest["command"] = command;
        if (!scenario.is_null())
            manifest["scenario"] = scenario;
        for (const auto &[key, value] : extra.items())
            manifest[key] = value;
        auto &files = manifest["files"] = nlohmann::json::array();
        for (const auto &f : files_)
            files.push_back({{"name", f.name}, {"bytes", f.bytes}});

        const auto target = directory_ / "manifest.json";
        auto tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot write '" + tmp.string() + "'");
            out << manifest.dump(2) << "\n";
            if (!out.flush())
                throw std::runtime_error("write to '" + tmp.string() + "' failed");
        }
        std::filesystem::rename(tmp, target);
    }
}
