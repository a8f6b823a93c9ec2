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

#ifndef SEKIT_CLI_SCENARIO_HPP
#define SEKIT_CLI_SCENARIO_HPP

#include "sekit/bandwidth.hpp"
#include "sekit/montecarlo.hpp"
#include "sekit/rue.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sekit::cli
{
    // Invalid scenario content. The message names the offending key path.
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct PowerSpec
    {
        std::optional<double> tx_dbm;
        CalibrationTarget calibrate;
        Deployment calibrate_deployment = Deployment::CellFree;
    };

    struct PipelineSpec
    {
        RankDistribution ranks{{{2, 0.6}, {4, 0.4}}};
        int max_layers = 4;
        std::vector<double> il_db{3.0, 2.0, 1.0, 0.5};
        std::string rue_preset = "5g-baseline";
        std::optional<double> rue_value; // overrides the preset when set

        double rue() const;
    };

    // Numerology in scenario-file units (MHz, kHz).
    struct NumerologySpec
    {
        std::string label = "100MHz";
        double nominal_bw_mhz = 100.0;
        int prb_count = 273;
        double scs_khz = 30.0;
        int data_symbols_per_slot = 11;
        int slots_per_frame = 40;
        int dl_slots_used = 27;
        int modulation_bits = 8;
        double code_rate = 948.0 / 1024.0;

        NumerologyConfig config() const;
    };

    // Values are kept in scenario-file units so the resolved echo round-trips exactly.
    struct BandwidthSpec
    {
        std::vector<double> bw_mhz{100.0, 200.0, 400.0, 800.0, 1600.0};
        std::vector<double> distances_m{30.0, 60.0, 200.0};
        std::vector<NumerologySpec> numerologies; // empty: scaled NR numerology per bandwidth
        std::vector<int> layers{1, 2, 4, 8, 16};
        int ca_layers = 2;
        std::vector<int> carriers{1, 2, 4, 8};
        std::vector<std::pair<double, double>> field_trials{{911.0, 98.28}, {2909.0, 98.28}}; // (Mbps, MHz)

        std::vector<double> bw_hz() const;
        std::vector<NumerologyConfig> numerology_configs() const;
    };

    struct OutputSpec
    {
        std::string directory = "out";
        std::vector<std::string> formats{"csv"};
        std::size_t cdf_points = 0; // 0 writes every sample
    };

    // Fully defaulted scenario; every section of the JSON document is optional.
    struct Scenario
    {
        // geometry
        std::size_t rows = 3;
        std::size_t cols = 3;
        double isd_m = 200.0;
        double exclusion_m = 5.0;
        std::optional<Point2D> user_position;

        // propagation
        std::optional<double> carrier_ghz;
        std::optional<double> fspl_1m_db;
        double exponent_n = kDefaultPathLossExponent;
        double nf_db = 5.0;
        double bw_mhz = 100.0;

        PowerSpec power;

        // simulation
        std::size_t n_samples = 100000;
        std::uint64_t seed = 1;
        Sampling sampling = Sampling::Stratified;
        std::vector<Deployment> deployments{Deployment::TypicalCellular, Deployment::CellFree};
        std::vector<double> percentiles{0.1, 0.9};

        std::optional<PipelineSpec> pipeline;
        std::optional<RadioResourceConfig> radio_resources;
        BandwidthSpec bandwidth;
        OutputSpec outputs;

        CellLayout layout() const;
        PathLossModel pathloss() const;
        NoiseConfig noise() const;
        double carrier_hz() const;
        SimulationConfig simulation(Deployment deployment, double tx_power_dbm) const;
    };

    // Throws ConfigError.
    Scenario parse_scenario(const nlohmann::json &doc);

    // Reads a scenario file; a run manifest is accepted and its embedded scenario used.
    // Throws ConfigError (including for unreadable files).
    Scenario load_scenario(const std::filesystem::path &path);

    // Resolved configuration; parse_scenario(to_json(s)) reproduces s.
    nlohmann::json to_json(const Scenario &s);
}

#endif
