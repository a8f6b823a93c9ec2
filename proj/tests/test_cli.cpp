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
#include "sekit/cli/output.hpp"
#include "sekit/cli/reference_values.hpp"
#include "sekit/cli/scenario.hpp"

#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

using namespace sekit;
using namespace sekit::cli;
using nlohmann::json;
using Catch::Approx;
namespace fs = std::filesystem;

namespace
{
    struct TempDir
    {
        fs::path path;
        TempDir()
        {
            static int counter = 0;
            path = fs::temp_directory_path() /
                   ("sekit_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
            fs::remove_all(path);
            fs::create_directories(path);
        }
        ~TempDir() { fs::remove_all(path); }
        fs::path operator/(const std::string &name) const { return path / name; }
    };

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path write_scenario(const TempDir &dir, const json &doc, const std::string &name = "scenario.json")
    {
        const auto p = dir / name;
        std::ofstream(p) << doc.dump(2);
        return p;
    }

    struct Run
    {
        int code;
        std::string out;
        std::string err;
    };

    Run run(std::string_view command, const CommandOptions &opts)
    {
        std::ostringstream out, err;
        const int code = run_command(command, opts, out, err);
        return {code, out.str(), err.str()};
    }

    json small_scenario(std::size_t n = 3000)
    {
        return {{"power", {{"tx_dbm", 39.4}}}, {"simulation", {{"n_samples", n}, {"seed", 3}}}};
    }

    std::vector<std::string> csv_lines(const std::string &text)
    {
        std::vector<std::string> lines;
        std::istringstream in(text);
        for (std::string line; std::getline(in, line);)
            lines.push_back(line);
        return lines;
    }
}

TEST_CASE("scenario defaults and round trip", "[cli]")
{
    const Scenario d = parse_scenario(json::object());
    CHECK(d.rows == 3);
    CHECK(d.isd_m == 200.0);
    CHECK(d.carrier_hz() == 3.5e9);
    CHECK(d.n_samples == 100000);

    const auto doc = json::parse(slurp(fs::path(SEKIT_SOURCE_DIR) / "scenarios/study_default.json"));
    const Scenario s = parse_scenario(doc);
    const json echo = to_json(s);
    CHECK(to_json(parse_scenario(echo)) == echo);
    CHECK(s.pipeline.has_value());
    CHECK(s.outputs.cdf_points == 1000);
}

TEST_CASE("scenario errors name the offending key", "[cli]")
{
    const auto message = [](const json &doc)
    {
        try
        {
            parse_scenario(doc);
        }
        catch (const ConfigError &e)
        {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK_THAT(message({{"geometry", {{"rowz", 3}}}}), Catch::Matchers::ContainsSubstring("geometry.rowz"));
    CHECK_THAT(message({{"extra", 1}}), Catch::Matchers::ContainsSubstring("extra"));
    CHECK_THAT(message({{"geometry", {{"rows", -1}}}}), Catch::Matchers::ContainsSubstring("geometry.rows"));
    CHECK_THAT(message({{"pipeline", {{"rue_preset", "nope"}}}}),
               Catch::Matchers::ContainsSubstring("pipeline.rue_preset"));
    CHECK_THAT(message({{"power", {{"tx_dbm", 30}, {"calibrate", {{"target_db", 6.6}}}}}}),
               Catch::Matchers::ContainsSubstring("power"));
    CHECK_THAT(message({{"propagation", {{"carrier_ghz", 3.5}, {"fspl_1m_db", 43.0}}}}),
               Catch::Matchers::ContainsSubstring("propagation"));
    CHECK_THAT(message({{"simulation", {{"deployments", {"mesh"}}}}}),
               Catch::Matchers::ContainsSubstring("simulation.deployments"));
    CHECK_THAT(message({{"outputs", {{"formats", {"xml"}}}}}), Catch::Matchers::ContainsSubstring("outputs.formats"));
    CHECK_THAT(message({{"simulation", {{"sampling", "sobol"}}}}), Catch::Matchers::ContainsSubstring("simulation.sampling"));
    CHECK(parse_scenario({{"simulation", {{"sampling", "independent"}}}}).sampling == Sampling::Independent);
}

TEST_CASE("simulate exits 2 on a config error", "[cli]")
{
    TempDir dir;
    CommandOptions opts;
    opts.scenario = write_scenario(dir, {{"geometry", {{"rowz", 3}}}});
    opts.out = dir / "out";
    const auto r = run("simulate", opts);
    CHECK(r.code == kExitConfigError);
    CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("geometry.rowz"));

    opts.scenario = dir / "missing.json";
    CHECK(run("simulate", opts).code == kExitConfigError);
}

TEST_CASE("simulate writes one CDF file per deployment and metric", "[cli]")
{
    TempDir dir;
    auto doc = small_scenario();
    doc["pipeline"] = {{"il_db", {3, 1}}};
    doc["outputs"] = {{"formats", {"csv", "json"}}, {"cdf_points", 100}};
    CommandOptions opts;
    opts.scenario = write_scenario(dir, doc);
    opts.out = dir / "out";
    REQUIRE(run("simulate", opts).code == kExitOk);

    for (std::string dep : {"cellular", "cell_free"})
        for (std::string metric : {"sinr_db", "se", "se_mimo_full", "se_mimo_rank", "se_mimo_rank_rue",
                                   "se_mimo_rank_rue_il3", "se_mimo_rank_rue_il1"})
        {
            const auto lines = csv_lines(slurp(dir / ("out/" + dep + "_" + metric + ".csv")));
            REQUIRE(lines.size() == 101);
            CHECK(lines.front() == "cdf,value");
            CHECK(lines.back().rfind("1,", 0) == 0);
        }

    const auto summary = json::parse(slurp(dir / "out/summary.json"));
    CHECK(summary["se_ratio_cdf10"].get<double>() > 1.0);
    CHECK(summary.contains("snr_delta_db_cdf90"));
    CHECK(summary["deployments"]["cellular"]["sinr_db"].contains("p10"));
    CHECK(fs::exists(dir / "out/cdfs.json"));

    const auto manifest = json::parse(slurp(dir / "out/manifest.json"));
    CHECK(manifest["command"] == "simulate");
    CHECK(manifest["seed"] == 3);
    std::set<std::string> listed;
    for (const auto &f : manifest["files"])
    {
        listed.insert(f["name"].get<std::string>());
        CHECK(fs::file_size(dir / ("out/" + f["name"].get<std::string>())) == f["bytes"].get<std::uintmax_t>());
    }
    for (const auto &entry : fs::directory_iterator(dir / "out"))
        if (entry.path().filename() != "manifest.json")
            CHECK(listed.count(entry.path().filename().string()) == 1);
}

TEST_CASE("simulate is byte-identical across runs and reruns from its manifest", "[cli]")
{
    TempDir dir;
    CommandOptions opts;
    opts.scenario = write_scenario(dir, small_scenario());
    opts.out = dir / "a";
    REQUIRE(run("simulate", opts).code == kExitOk);
    opts.out = dir / "b";
    REQUIRE(run("simulate", opts).code == kExitOk);
    opts.scenario = dir / "a/manifest.json";
    opts.out = dir / "c";
    REQUIRE(run("simulate", opts).code == kExitOk);
    opts.execution = Execution::Serial;
    opts.out = dir / "d";
    REQUIRE(run("simulate", opts).code == kExitOk);

    for (const auto &entry : fs::directory_iterator(dir / "a"))
    {
        const auto name = entry.path().filename().string();
        const auto a = slurp(entry.path());
        CHECK(a == slurp(dir / "b" / name));
        CHECK(a == slurp(dir / "c" / name));
        CHECK(a == slurp(dir / "d" / name));
    }

    // --seed overrides the file.
    opts.scenario = dir / "scenario.json";
    opts.seed = 99;
    opts.out = dir / "e";
    REQUIRE(run("simulate", opts).code == kExitOk);
    CHECK(slurp(dir / "a/cellular_sinr_db.csv") != slurp(dir / "e/cellular_sinr_db.csv"));
}

TEST_CASE("simulate with one pinned sample", "[cli]")
{
    TempDir dir;
    CommandOptions opts;
    opts.scenario = write_scenario(
        dir, {{"geometry", {{"user_position", {50, 0}}}}, {"power", {{"tx_dbm", 40}}}, {"simulation", {{"n_samples", 1}}}});
    opts.out = dir / "out";
    REQUIRE(run("simulate", opts).code == kExitOk);
    const auto lines = csv_lines(slurp(dir / "out/cellular_sinr_db.csv"));
    REQUIRE(lines.size() == 2);
    CHECK(lines[1].rfind("1,", 0) == 0);
}

TEST_CASE("simulate calibrates when no power is given", "[cli]")
{
    TempDir dir;
    CommandOptions opts;
    opts.scenario = write_scenario(dir, {{"simulation", {{"n_samples", 4000}}}});
    opts.out = dir / "out";
    REQUIRE(run("simulate", opts).code == kExitOk);
    const auto manifest = json::parse(slurp(dir / "out/manifest.json"));
    CHECK(manifest["calibration"]["achieved_db"].get<double>() == Approx(6.6).margin(0.02));
    CHECK(manifest["scenario"]["power"]["tx_dbm"] == manifest["tx_power_dbm"]);

    const auto summary = json::parse(slurp(dir / "out/summary.json"));
    CHECK(summary["deployments"]["cell_free"]["sinr_db"]["p10"].get<double>() == Approx(6.6).margin(0.02));
}

TEST_CASE("rue command", "[cli]")
{
    CommandOptions opts;
    opts.preset = "5g-baseline";
    opts.format = "json";
    auto r = run("rue", opts);
    REQUIRE(r.code == kExitOk);
    auto doc = json::parse(r.out);
    CHECK(doc[0]["rue"].get<double>() == Approx(0.467).margin(0.003));
    CHECK(doc[0]["factors"].size() == 5);

    opts.preset = "ps-cp-less-fd";
    doc = json::parse(run("rue", opts).out);
    CHECK(doc[0]["rue"].get<double>() == Approx(0.780).margin(0.003));

    TempDir dir;
    CommandOptions inline_opts;
    inline_opts.format = "json";
    inline_opts.scenario = write_scenario(
        dir, {{"radio_resources",
               {{"spectrum_used_hz", 1}, {"spectrum_total_hz", 1}, {"dl_slots", 1}, {"total_slots", 1},
                {"data_symbols", 1}, {"total_symbols", 1}, {"code_rate", 1}, {"useful_samples", 1},
                {"total_samples", 1}}}});
    inline_opts.out = dir / "out";
    r = run("rue", inline_opts);
    REQUIRE(r.code == kExitOk);
    CHECK(json::parse(r.out)[0]["rue"] == 1.0);
    CHECK(fs::exists(dir / "out/rue.csv"));
    CHECK(fs::exists(dir / "out/manifest.json"));

    opts.preset = "nope";
    CHECK(run("rue", opts).code == kExitConfigError);
}

TEST_CASE("tables command against the golden config", "[cli]")
{
    TempDir dir;
    CommandOptions opts;
    opts.out = dir / "out";
    const auto r = run("tables", opts);
    CHECK(r.code == kExitOk);
    const auto csv = slurp(dir / "out/tables.csv");
    CHECK(csv.rfind("table,cell,computed,reference,abs_delta,tolerance,gated,pass\n", 0) == 0);
    CHECK_THAT(csv, Catch::Matchers::ContainsSubstring("table4,baseline_60/40,0.65,0.65,0,"));
    CHECK_THAT(csv, Catch::Matchers::ContainsSubstring("table3,rue_goal,0.75,0.75,0,0,true,true"));

    const auto golden = load_scenario(SEKIT_DEFAULT_GOLDEN);
    for (const auto &c : reproduce_tables(golden))
    {
        INFO(c.table << " " << c.cell);
        CHECK(c.pass());
        if (c.table == "table2" && c.cell == "cellfree_3to1dB")
            CHECK(c.computed == Approx(0.29).margin(0.01));
    }
}

TEST_CASE("tables command fails without a golden config", "[cli]")
{
    TempDir dir;
    CommandOptions opts;
    opts.scenario = dir / "absent.json";
    CHECK(run("tables", opts).code == kExitRuntimeError);

    opts.scenario = write_scenario(dir, small_scenario());
    auto doc = small_scenario();
    doc.erase("power");
    opts.scenario = write_scenario(dir, doc, "uncalibrated.json");
    CHECK(run("tables", opts).code == kExitRuntimeError);

    // A golden config that misses the reference bands fails the gate.
    doc["power"] = {{"tx_dbm", 0.0}};
    opts.scenario = write_scenario(dir, doc, "off.json");
    CHECK(run("tables", opts).code == kExitRuntimeError);
}

TEST_CASE("bandwidth command", "[cli]")
{
    TempDir dir;
    CommandOptions opts;
    opts.scenario = write_scenario(dir, {{"power", {{"tx_dbm", 39.4}}}});
    opts.out = dir / "out";
    REQUIRE(run("bandwidth", opts).code == kExitOk);

    const auto sweep = csv_lines(slurp(dir / "out/throughput_vs_bw.csv"));
    CHECK(sweep.size() == 1 + 15);
    const auto curves = csv_lines(slurp(dir / "out/se_vs_rate.csv"));
    std::vector<double> trial_se, ca_se;
    for (std::size_t i = 1; i < curves.size(); ++i)
    {
        std::vector<std::string> f;
        std::istringstream in(curves[i]);
        for (std::string cell; std::getline(in, cell, ',');)
            f.push_back(cell);
        REQUIRE(f.size() == 7);
        if (f[0] == "field_trial")
            trial_se.push_back(std::stod(f[5]));
        if (f[0] == "ca")
            ca_se.push_back(std::stod(f[5]));
    }
    REQUIRE(trial_se.size() == 2);
    CHECK(trial_se[0] == Approx(9.27).margin(0.01));
    CHECK(trial_se[1] == Approx(29.6).margin(0.01));
    REQUIRE(ca_se.size() == 4);
    for (double se : ca_se)
        CHECK(se == ca_se[0]);

    const auto manifest = json::parse(slurp(dir / "out/manifest.json"));
    CHECK(manifest["columns"].contains("se_vs_rate.csv"));

    opts.scenario = write_scenario(
        dir, {{"power", {{"tx_dbm", 39.4}}}, {"bandwidth", {{"bw_mhz", {400}}, {"distances_m", {60}}}}}, "one.json");
    opts.out = dir / "one";
    REQUIRE(run("bandwidth", opts).code == kExitOk);
    CHECK(csv_lines(slurp(dir / "one/throughput_vs_bw.csv")).size() == 2);
}

TEST_CASE("calibrate command", "[cli]")
{
    TempDir dir;
    CommandOptions opts;
    opts.scenario = write_scenario(dir, {{"simulation", {{"n_samples", 20000}, {"seed", 1}}}});
    opts.out = dir / "out";
    REQUIRE(run("calibrate", opts).code == kExitOk);

    const auto manifest = json::parse(slurp(dir / "out/manifest.json"));
    CHECK(manifest["calibration"]["achieved_db"].get<double>() == Approx(6.6).margin(0.02));
    const auto golden = load_scenario(dir / "out/golden_config.json");
    REQUIRE(golden.power.tx_dbm.has_value());
    CHECK(*golden.power.tx_dbm == manifest["calibration"]["tx_power_dbm"].get<double>());

    // The written power holds the anchor on fresh seeds.
    for (std::uint64_t seed : {2u, 3u, 4u})
    {
        auto cfg = golden.simulation(Deployment::CellFree, *golden.power.tx_dbm);
        cfg.seed = seed;
        CHECK(percentile(run_deployment(cfg).sinr_db, 0.1) == Approx(6.6).margin(0.1));
    }

    opts.scenario = write_scenario(dir, {{"power", {{"calibrate", {{"target_db", 500}}}}}}, "impossible.json");
    opts.out = dir / "bad";
    const auto r = run("calibrate", opts);
    CHECK(r.code == kExitRuntimeError);
    CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("not bracketed"));
}

TEST_CASE("cdf index thinning", "[cli]")
{
    CHECK(cdf_indices(0, 10).empty());
    CHECK(cdf_indices(5, 0) == std::vector<std::size_t>{0, 1, 2, 3, 4});
    const auto idx = cdf_indices(1000, 7);
    REQUIRE(idx.size() == 7);
    CHECK(idx.back() == 999);
    for (std::size_t i = 1; i < idx.size(); ++i)
        CHECK(idx[i] > idx[i - 1]);
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(-88.6) == "-88.6");
}
