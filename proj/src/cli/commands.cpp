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
#include "sekit/bandwidth.hpp"
#include "sekit/cli/output.hpp"
#include "sekit/cli/reference_values.hpp"
#include "sekit/cli/scenario.hpp"
#include "sekit/rue.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <utility>

namespace sekit::cli
{
    using nlohmann::json;

    namespace
    {
        Scenario resolve_scenario(const CommandOptions &opts)
        {
            Scenario s = opts.scenario ? load_scenario(*opts.scenario) : Scenario{};
            if (opts.seed)
                s.seed = *opts.seed;
            if (opts.format)
            {
                if (*opts.format != "csv" && *opts.format != "json")
                    throw ConfigError("flag '--format': expected csv or json, got '" + *opts.format + "'");
                s.outputs.formats = {*opts.format};
            }
            return s;
        }

        std::filesystem::path output_dir(const CommandOptions &opts, const Scenario &s)
        {
            return opts.out ? *opts.out : std::filesystem::path(s.outputs.directory);
        }

        bool wants(const Scenario &s, std::string_view format)
        {
            for (const auto &f : s.outputs.formats)
                if (f == format)
                    return true;
            return false;
        }

        json calibration_json(const CalibrationTarget &target, Deployment deployment, const CalibrationResult &r)
        {
            return {{"deployment", std::string(to_string(deployment))},
                    {"percentile", target.percentile},
                    {"target_db", target.target_db},
                    {"achieved_db", r.achieved_db},
                    {"tx_power_dbm", r.tx_power_dbm},
                    {"iterations", r.iterations}};
        }

        struct ResolvedPower
        {
            double tx_dbm = 0.0;
            json calibration; // null unless calibrated in this run
        };

        ResolvedPower resolve_power(const Scenario &s, Execution exec, std::ostream &out)
        {
            if (s.power.tx_dbm)
                return {*s.power.tx_dbm, nullptr};
            const auto tmpl = s.simulation(s.power.calibrate_deployment, 0.0);
            const auto r = calibrate_tx_power(s.power.calibrate, tmpl, {}, exec);
            out << "calibrated tx power: " << std::setprecision(10) << r.tx_power_dbm << " dBm ("
                << to_string(s.power.calibrate_deployment) << " p" << s.power.calibrate.percentile * 100 << " = "
                << r.achieved_db << " dB)\n";
            return {r.tx_power_dbm, calibration_json(s.power.calibrate, s.power.calibrate_deployment, r)};
        }

        std::string percent_label(double p)
        {
            return format_number(std::round(p * 1e4) / 1e2);
        }

        json percentile_row(const EmpiricalDistribution &dist, const std::vector<double> &levels)
        {
            json row = json::object();
            for (double p : levels)
                row["p" + percent_label(p)] = percentile(dist, p);
            return row;
        }

        using NamedDistribution = std::pair<std::string, EmpiricalDistribution>;

        // SINR, SISO SE and (optionally) the MIMO / RUE / implementation-loss stages.
        std::vector<NamedDistribution> metric_series(const DeploymentResult &r, const Scenario &s)
        {
            std::vector<NamedDistribution> series;
            series.emplace_back("sinr_db", r.sinr_db);
            series.emplace_back("se", r.se);
            if (!s.pipeline)
                return series;

            const auto &p = *s.pipeline;
            const double rue = p.rue();
            const auto stage = [&](std::string name, SePipeline pipe)
            {
                std::vector<double> se;
                se.reserve(r.sinr_db.size());
                for (double db : r.sinr_db.sorted_samples())
                    se.push_back(pipe.apply(db));
                series.emplace_back(std::move(name), EmpiricalDistribution(std::move(se), Units::BitsPerSecondPerHertz));
            };
            stage("se_mimo_full", {RankDistribution::full_rank(p.max_layers), 0.0, 1.0});
            stage("se_mimo_rank", {p.ranks, 0.0, 1.0});
            stage("se_mimo_rank_rue", {p.ranks, 0.0, rue});
            for (double il : p.il_db)
                stage("se_mimo_rank_rue_il" + format_number(il), {p.ranks, il, rue});
            return series;
        }

        json comparison_json(const ComparisonReport &report)
        {
            json rows = json::array();
            for (const auto &r : report.rows)
                rows.push_back({{"cdf", r.percentile},
                                {"cellular_se", r.cellular_se},
                                {"cellfree_se", r.cellfree_se},
                                {"cellular_sinr_db", r.cellular_db},
                                {"cellfree_snr_db", r.cellfree_db},
                                {"se_ratio", r.se_ratio},
                                {"snr_delta_db", r.snr_delta_db}});
            return rows;
        }

        void print_rue(std::ostream &out, std::string_view name, const RadioResourceConfig &cfg)
        {
            out << name << "\n";
            for (const auto &f : rue_breakdown(cfg))
                out << "  " << std::left << std::setw(10) << f.name << std::right << std::fixed
                    << std::setprecision(5) << f.ratio << "\n";
            out << "  " << std::left << std::setw(10) << "rue" << std::right << compute_rue(cfg) << "\n";
            out << std::defaultfloat;
        }

        json rue_json(std::string_view name, const RadioResourceConfig &cfg)
        {
            json factors = json::array();
            for (const auto &f : rue_breakdown(cfg))
                factors.push_back({{"name", std::string(f.name)}, {"ratio", f.ratio}});
            return {{"name", std::string(name)}, {"factors", factors}, {"rue", compute_rue(cfg)}};
        }
    }

    int cmd_simulate(const CommandOptions &opts, std::ostream &out)
    {
        Scenario s = resolve_scenario(opts);
        const auto power = resolve_power(s, opts.execution, out);

        std::map<Deployment, DeploymentResult> results;
        for (auto d : s.deployments)
            if (!results.count(d))
                results.emplace(d, run_deployment(s.simulation(d, power.tx_dbm), opts.execution));

        RunWriter writer(output_dir(opts, s));
        json summary;
        summary["n_samples"] = s.n_samples;
        summary["seed"] = s.seed;
        summary["tx_power_dbm"] = power.tx_dbm;
        summary["percentiles"] = s.percentiles;

        json cdfs = json::object();
        std::map<Deployment, std::vector<NamedDistribution>> series;
        for (const auto &[d, r] : results)
        {
            const std::string dep(to_string(d));
            auto &named = series[d] = metric_series(r, s);
            for (const auto &[metric, dist] : named)
            {
                if (wants(s, "csv"))
                    writer.write(dep + "_" + metric + ".csv", cdf_csv(dist, s.outputs.cdf_points));
                if (wants(s, "json"))
                    cdfs[dep][metric] = cdf_json(dist, s.outputs.cdf_points);
                summary["deployments"][dep][metric] = percentile_row(dist, s.percentiles);
            }
        }
        if (wants(s, "json"))
            writer.write_json("cdfs.json", cdfs);

        if (results.count(Deployment::TypicalCellular) && results.count(Deployment::CellFree))
        {
            const auto report = compare_deployments(results.at(Deployment::TypicalCellular),
                                                    results.at(Deployment::CellFree), s.percentiles);
            summary["comparison"] = comparison_json(report);
            for (const auto &row : report.rows)
            {
                const auto label = percent_label(row.percentile);
                summary["se_ratio_cdf" + label] = row.se_ratio;
                summary["snr_delta_db_cdf" + label] = row.snr_delta_db;
            }

            // Cell-free / cellular SE ratio for every SE stage.
            const auto &a = series.at(Deployment::TypicalCellular);
            const auto &b = series.at(Deployment::CellFree);
            for (std::size_t i = 1; i < a.size(); ++i)
                for (double p : s.percentiles)
                    summary["stage_se_ratio"][a[i].first]["cdf" + percent_label(p)] =
                        percentile(b[i].second, p) / percentile(a[i].second, p);

            out << "cdf   cellular_se  cellfree_se  ratio   delta_db\n";
            for (const auto &row : report.rows)
                out << std::fixed << std::setprecision(2) << std::setw(4) << row.percentile << "  "
                    << std::setw(11) << row.cellular_se << "  " << std::setw(11) << row.cellfree_se << "  "
                    << std::setw(6) << row.se_ratio << "  " << std::setw(8) << row.snr_delta_db << "\n"
                    << std::defaultfloat;
        }
        writer.write_json("summary.json", summary);

        Scenario resolved = s;
        resolved.power.tx_dbm = power.tx_dbm;
        json extra = {{"seed", s.seed}, {"tx_power_dbm", power.tx_dbm}};
        if (!power.calibration.is_null())
            extra["calibration"] = power.calibration;
        writer.write_manifest("simulate", to_json(resolved), extra);
        out << "wrote " << writer.directory().string() << "\n";
        return kExitOk;
    }

    int cmd_rue(const CommandOptions &opts, std::ostream &out)
    {
        std::vector<std::pair<std::string, RadioResourceConfig>> configs;
        std::optional<Scenario> s;
        if (opts.scenario)
            s = load_scenario(*opts.scenario);
        if (opts.format && *opts.format != "csv" && *opts.format != "json")
            throw ConfigError("flag '--format': expected csv or json, got '" + *opts.format + "'");

        if (opts.preset)
        {
            const auto preset = find_rue_preset(*opts.preset);
            if (!preset)
                throw ConfigError("flag '--preset': unknown preset '" + *opts.preset + "'");
            configs.emplace_back(std::string(preset->name), preset->config);
        }
        else if (s && s->radio_resources)
            configs.emplace_back("inline", *s->radio_resources);
        else if (s && s->pipeline)
            configs.emplace_back(s->pipeline->rue_preset, find_rue_preset(s->pipeline->rue_preset)->config);
        else
            for (const auto &preset : rue_presets())
                configs.emplace_back(std::string(preset.name), preset.config);

        json doc = json::array();
        std::string csv = "name,factor,ratio\n";
        for (const auto &[name, cfg] : configs)
        {
            doc.push_back(rue_json(name, cfg));
            for (const auto &f : rue_breakdown(cfg))
                csv += name + "," + std::string(f.name) + "," + format_number(f.ratio) + "\n";
            csv += name + ",rue," + format_number(compute_rue(cfg)) + "\n";
        }

        if (opts.format == "json")
            out << doc.dump(2) << "\n";
        else if (opts.format == "csv")
            out << csv;
        else
            for (const auto &[name, cfg] : configs)
                print_rue(out, name, cfg);

        if (opts.out)
        {
            RunWriter writer(*opts.out);
            writer.write_json("rue.json", doc);
            writer.write("rue.csv", csv);
            writer.write_manifest("rue", s ? to_json(*s) : json(), {{"preset", opts.preset ? json(*opts.preset) : json()}});
        }
        return kExitOk;
    }

    int cmd_tables(const CommandOptions &opts, std::ostream &out)
    {
        const std::filesystem::path golden_path = opts.scenario ? *opts.scenario
                                                                : std::filesystem::path(SEKIT_DEFAULT_GOLDEN);
        if (!std::filesystem::exists(golden_path))
            throw std::runtime_error("golden config '" + golden_path.string() +
                                     "' not found (run `sekit calibrate` first)");
        Scenario golden = load_scenario(golden_path);
        if (opts.seed)
            golden.seed = *opts.seed;

        const auto cells = reproduce_tables(golden, opts.execution);

        std::string csv = "table,cell,computed,reference,abs_delta,tolerance,gated,pass\n";
        bool all_pass = true;
        for (const auto &c : cells)
        {
            all_pass = all_pass && c.pass();
            csv += c.table + "," + c.cell + "," + format_number(c.computed) + "," + format_number(c.reference) +
                   "," + format_number(c.abs_delta()) + "," + format_number(c.tolerance) + "," +
                   (c.gated ? "true" : "false") + "," + (c.pass() ? "true" : "false") + "\n";
        }

        if (opts.format == "csv")
            out << csv;
        else if (opts.format == "json")
        {
            json doc = json::array();
            for (const auto &c : cells)
                doc.push_back({{"table", c.table},
                               {"cell", c.cell},
                               {"computed", c.computed},
                               {"reference", c.reference},
                               {"abs_delta", c.abs_delta()},
                               {"tolerance", c.tolerance},
                               {"gated", c.gated},
                               {"pass", c.pass()}});
            out << doc.dump(2) << "\n";
        }
        else
        {
            for (const auto &c : cells)
                out << std::left << std::setw(8) << c.table << std::setw(28) << c.cell << std::right << std::fixed
                    << std::setprecision(4) << std::setw(10) << c.computed << std::setw(10) << c.reference
                    << std::setw(10) << c.abs_delta() << "  " << (c.gated ? (c.pass() ? "PASS" : "FAIL") : "info")
                    << "\n"
                    << std::defaultfloat;
            out << (all_pass ? "all gated cells within tolerance\n" : "some gated cells out of tolerance\n");
        }

        if (opts.out)
        {
            RunWriter writer(*opts.out);
            writer.write("tables.csv", csv);
            writer.write_manifest("tables", to_json(golden), {{"seed", golden.seed}, {"all_pass", all_pass}});
        }
        return all_pass ? kExitOk : kExitRuntimeError;
    }

    int cmd_bandwidth(const CommandOptions &opts, std::ostream &out)
    {
        Scenario s = resolve_scenario(opts);
        const auto power = resolve_power(s, opts.execution, out);
        const auto &b = s.bandwidth;

        const auto bw_hz = b.bw_hz();
        const auto rows = sweep_bw(b.distances_m, bw_hz, s.pathloss(), power.tx_dbm, s.nf_db);

        std::string sweep_csv = "distance_m,bw_hz,snr_db,rate_bps,se_bps_per_hz\n";
        json sweep = json::array();
        for (const auto &r : rows)
        {
            sweep_csv += format_number(r.distance_m) + "," + format_number(r.bw_hz) + "," + format_number(r.snr_db) +
                         "," + format_number(r.rate_bps) + "," + format_number(r.se) + "\n";
            sweep.push_back({{"distance_m", r.distance_m},
                             {"bw_hz", r.bw_hz},
                             {"snr_db", r.snr_db},
                             {"rate_bps", r.rate_bps},
                             {"se_bps_per_hz", r.se}});
        }

        std::string curve_csv = "series,label,layers,carriers,occupied_bw_hz,se_bps_per_hz,rate_bps\n";
        json curves = json::array();
        const auto emit = [&](const std::string &series, const CurvePoint &p)
        {
            curve_csv += series + "," + p.label + "," + std::to_string(p.layers) + "," + std::to_string(p.carriers) +
                         "," + format_number(p.occupied_bw_hz) + "," + format_number(p.se_bps_per_hz) + "," +
                         format_number(p.rate_bps) + "\n";
            curves.push_back({{"series", series},
                              {"label", p.label},
                              {"layers", p.layers},
                              {"carriers", p.carriers},
                              {"occupied_bw_hz", p.occupied_bw_hz},
                              {"se_bps_per_hz", p.se_bps_per_hz},
                              {"rate_bps", p.rate_bps}});
        };

        const auto numerologies = b.numerology_configs();
        for (const auto &num : numerologies)
            for (int layers : b.layers)
                emit("layers", peak_cell_rate(num, layers));
        if (!numerologies.empty() && !b.carriers.empty())
            for (const auto &p : ca_curve(numerologies.front(), b.ca_layers, b.carriers))
                emit("ca", p);
        for (const auto &[rate_mbps, bw_mhz] : b.field_trials)
        {
            CurvePoint p;
            p.label = "field_trial";
            p.layers = 0;
            p.carriers = 1;
            p.occupied_bw_hz = bw_mhz * 1e6;
            p.se_bps_per_hz = field_trial_se(rate_mbps, bw_mhz);
            p.rate_bps = rate_mbps * 1e6;
            emit("field_trial", p);
        }

        RunWriter writer(output_dir(opts, s));
        if (wants(s, "csv"))
        {
            writer.write("throughput_vs_bw.csv", sweep_csv);
            writer.write("se_vs_rate.csv", curve_csv);
        }
        if (wants(s, "json"))
            writer.write_json("bandwidth.json", {{"throughput_vs_bw", sweep}, {"se_vs_rate", curves}});

        Scenario resolved = s;
        resolved.power.tx_dbm = power.tx_dbm;
        json extra = {{"tx_power_dbm", power.tx_dbm},
                      {"columns",
                       {{"throughput_vs_bw.csv", "distance_m,bw_hz,snr_db,rate_bps,se_bps_per_hz"},
                        {"se_vs_rate.csv", "series,label,layers,carriers,occupied_bw_hz,se_bps_per_hz,rate_bps"}}}};
        if (!power.calibration.is_null())
            extra["calibration"] = power.calibration;
        writer.write_manifest("bandwidth", to_json(resolved), extra);
        out << "wrote " << rows.size() << " sweep rows and " << curves.size() << " curve points to "
            << writer.directory().string() << "\n";
        return kExitOk;
    }

    int cmd_calibrate(const CommandOptions &opts, std::ostream &out)
    {
        Scenario s = resolve_scenario(opts);
        const auto tmpl = s.simulation(s.power.calibrate_deployment, 0.0);
        const auto r = calibrate_tx_power(s.power.calibrate, tmpl, {}, opts.execution);

        Scenario golden = s;
        golden.power.tx_dbm = r.tx_power_dbm;

        RunWriter writer(output_dir(opts, s));
        writer.write_json("golden_config.json", to_json(golden));
        writer.write_manifest(
            "calibrate", to_json(golden),
            {{"seed", s.seed}, {"calibration", calibration_json(s.power.calibrate, s.power.calibrate_deployment, r)}});

        out << std::setprecision(12) << "tx_power_dbm " << r.tx_power_dbm << "\n"
            << "achieved_db " << r.achieved_db << " (target " << s.power.calibrate.target_db << " at p"
            << percent_label(s.power.calibrate.percentile) << ", " << to_string(s.power.calibrate_deployment)
            << ", " << r.iterations << " iterations)\n"
            << "wrote " << (writer.directory() / "golden_config.json").string() << "\n"
            << std::defaultfloat;
        return kExitOk;
    }

    int run_command(std::string_view command, const CommandOptions &opts, std::ostream &out, std::ostream &err)
    {
        try
        {
            if (command == "simulate")
                return cmd_simulate(opts, out);
            if (command == "rue")
                return cmd_rue(opts, out);
            if (command == "tables")
                return cmd_tables(opts, out);
            if (command == "bandwidth")
                return cmd_bandwidth(opts, out);
            if (command == "calibrate")
                return cmd_calibrate(opts, out);
            err << "error: unknown command '" << command << "'\n";
            return kExitConfigError;
        }
        catch (const ConfigError &e)
        {
            err << "config error: " << e.what() << "\n";
            return kExitConfigError;
        }
        catch (const std::invalid_argument &e)
        {
            err << "config error: " << e.what() << "\n";
            return kExitConfigError;
        }
        catch (const CalibrationError &e)
        {
            err << "calibration failed: " << e.what() << "\n";
            return kExitRuntimeError;
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << "\n";
            return kExitRuntimeError;
        }
    }
}
