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

#include "sekit/cli/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace sekit::cli
{
    using nlohmann::json;

    namespace
    {
        // Tracks which keys of one JSON object were consumed so that leftovers
        // can be reported as unknown.
        class Section
        {
        public:
            Section(const json *obj, std::string path) : obj_(obj), path_(std::move(path))
            {
                if (obj_ && !obj_->is_object())
                    throw ConfigError("key '" + path_ + "': expected an object");
            }

            bool present() const { return obj_ != nullptr; }

            std::string key_path(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }

            const json *find(const std::string &key)
            {
                if (!obj_)
                    return nullptr;
                auto it = obj_->find(key);
                if (it == obj_->end())
                    return nullptr;
                seen_.insert(key);
                return &*it;
            }

            Section child(const std::string &key) { return Section(find(key), key_path(key)); }

            std::optional<double> number(const std::string &key)
            {
                const json *v = find(key);
                if (!v)
                    return std::nullopt;
                if (!v->is_number())
                    fail(key, "expected a number");
                return v->get<double>();
            }

            std::optional<std::uint64_t> unsigned_int(const std::string &key)
            {
                const json *v = find(key);
                if (!v)
                    return std::nullopt;
                if (!v->is_number_unsigned())
                    fail(key, "expected a non-negative integer");
                return v->get<std::uint64_t>();
            }

            std::optional<int> integer(const std::string &key)
            {
                const json *v = find(key);
                if (!v)
                    return std::nullopt;
                if (!v->is_number_integer())
                    fail(key, "expected an integer");
                return v->get<int>();
            }

            std::optional<std::string> string(const std::string &key)
            {
                const json *v = find(key);
                if (!v)
                    return std::nullopt;
                if (!v->is_string())
                    fail(key, "expected a string");
                return v->get<std::string>();
            }

            const json *array(const std::string &key)
            {
                const json *v = find(key);
                if (v && !v->is_array())
                    fail(key, "expected an array");
                return v;
            }

            std::optional<std::vector<double>> numbers(const std::string &key)
            {
                const json *v = array(key);
                if (!v)
                    return std::nullopt;
                std::vector<double> out;
                for (const auto &e : *v)
                {
                    if (!e.is_number())
                        fail(key, "expected an array of numbers");
                    out.push_back(e.get<double>());
                }
                return out;
            }

            std::optional<std::vector<int>> integers(const std::string &key)
            {
                const json *v = array(key);
                if (!v)
                    return std::nullopt;
                std::vector<int> out;
                for (const auto &e : *v)
                {
                    if (!e.is_number_integer())
                        fail(key, "expected an array of integers");
                    out.push_back(e.get<int>());
                }
                return out;
            }

            std::optional<std::vector<std::string>> strings(const std::string &key)
            {
                const json *v = array(key);
                if (!v)
                    return std::nullopt;
                std::vector<std::string> out;
                for (const auto &e : *v)
                {
                    if (!e.is_string())
                        fail(key, "expected an array of strings");
                    out.push_back(e.get<std::string>());
                }
                return out;
            }

            template <class T>
            T required(std::optional<T> v, const std::string &key) const
            {
                if (!v)
                    fail(key, "missing required key");
                return *v;
            }

            [[noreturn]] void fail(const std::string &key, const std::string &what) const
            {
                throw ConfigError("key '" + key_path(key) + "': " + what);
            }

            void finish() const
            {
                if (!obj_)
                    return;
                for (const auto &[key, value] : obj_->items())
                    if (!seen_.count(key))
                        throw ConfigError("key '" + key_path(key) + "': unknown key");
            }

        private:
            const json *obj_;
            std::string path_;
            std::set<std::string> seen_;
        };

        void parse_geometry(Section sec, Scenario &s)
        {
            if (auto v = sec.unsigned_int("rows"))
                s.rows = *v;
            if (auto v = sec.unsigned_int("cols"))
                s.cols = *v;
            if (auto v = sec.number("isd_m"))
                s.isd_m = *v;
            if (auto v = sec.number("exclusion_m"))
                s.exclusion_m = *v;
            if (auto v = sec.numbers("user_position"))
            {
                if (v->size() != 2)
                    sec.fail("user_position", "expected [x, y]");
                s.user_position = Point2D{(*v)[0], (*v)[1]};
            }
            sec.finish();

            if (s.rows < 1 || s.cols < 1)
                sec.fail(s.rows < 1 ? "rows" : "cols", "must be >= 1");
            if (!(s.isd_m > 0.0))
                sec.fail("isd_m", "must be positive");
            if (!(s.exclusion_m >= 1.0))
                sec.fail("exclusion_m", "must be >= 1 m (path-loss reference distance)");
            if (!(s.isd_m > 2.0 * s.exclusion_m))
                sec.fail("exclusion_m", "must be below half the inter-site distance");
        }

        void parse_propagation(Section sec, Scenario &s)
        {
            s.carrier_ghz = sec.number("carrier_ghz");
            s.fspl_1m_db = sec.number("fspl_1m_db");
            if (auto v = sec.number("exponent_n"))
                s.exponent_n = *v;
            if (auto v = sec.number("nf_db"))
                s.nf_db = *v;
            if (auto v = sec.number("bw_mhz"))
                s.bw_mhz = *v;
            sec.finish();

            if (s.carrier_ghz && s.fspl_1m_db)
                sec.fail("fspl_1m_db", "give either carrier_ghz or fspl_1m_db, not both");
            if (s.carrier_ghz && !(*s.carrier_ghz > 0.0))
                sec.fail("carrier_ghz", "must be positive");
            if (!(s.exponent_n > 0.0))
                sec.fail("exponent_n", "must be positive");
            if (!(s.nf_db >= 0.0))
                sec.fail("nf_db", "must be >= 0");
            if (!(s.bw_mhz > 0.0))
                sec.fail("bw_mhz", "must be positive");
        }

        Deployment deployment_from(const Section &sec, const std::string &key, const std::string &name)
        {
            auto d = parse_deployment(name);
            if (!d)
                sec.fail(key, "unknown deployment '" + name + "' (expected cellular or cell_free)");
            return *d;
        }

        void parse_power(Section sec, Scenario &s)
        {
            s.power.tx_dbm = sec.number("tx_dbm");
            Section cal = sec.child("calibrate");
            if (cal.present())
            {
                if (s.power.tx_dbm)
                    sec.fail("calibrate", "give either tx_dbm or calibrate, not both");
                if (auto v = cal.number("percentile"))
                    s.power.calibrate.percentile = *v;
                if (auto v = cal.number("target_db"))
                    s.power.calibrate.target_db = *v;
                if (auto v = cal.string("deployment"))
                    s.power.calibrate_deployment = deployment_from(cal, "deployment", *v);
                cal.finish();
                if (!(s.power.calibrate.percentile >= 0.0 && s.power.calibrate.percentile <= 1.0))
                    cal.fail("percentile", "must lie in [0, 1]");
            }
            sec.finish();
        }

        void parse_simulation(Section sec, Scenario &s)
        {
            if (auto v = sec.unsigned_int("n_samples"))
                s.n_samples = *v;
            if (auto v = sec.unsigned_int("seed"))
                s.seed = *v;
            if (auto v = sec.string("sampling"))
            {
                const auto parsed = parse_sampling(*v);
                if (!parsed)
                    sec.fail("sampling", "expected stratified or independent, got '" + *v + "'");
                s.sampling = *parsed;
            }
            if (auto v = sec.strings("deployments"))
            {
                s.deployments.clear();
                for (const auto &name : *v)
                    s.deployments.push_back(deployment_from(sec, "deployments", name));
                if (s.deployments.empty())
                    sec.fail("deployments", "must not be empty");
            }
            if (auto v = sec.numbers("percentiles"))
            {
                for (double p : *v)
                    if (!(p >= 0.0 && p <= 1.0))
                        sec.fail("percentiles", "values must lie in [0, 1]");
                s.percentiles = *v;
            }
            sec.finish();
            if (s.n_samples < 1)
                sec.fail("n_samples", "must be >= 1");
        }

        void parse_pipeline(Section sec, Scenario &s)
        {
            PipelineSpec p;
            if (auto v = sec.integer("max_layers"))
                p.max_layers = *v;
            if (p.max_layers < 1)
                sec.fail("max_layers", "must be >= 1");
            if (const json *dist = sec.find("rank_distribution"))
            {
                if (!dist->is_object())
                    sec.fail("rank_distribution", "expected an object mapping rank to probability");
                std::map<int, double> mass;
                for (const auto &[rank, prob] : dist->items())
                {
                    int r = 0;
                    try
                    {
                        std::size_t used = 0;
                        r = std::stoi(rank, &used);
                        if (used != rank.size())
                            throw std::invalid_argument(rank);
                    }
                    catch (const std::exception &)
                    {
                        sec.fail("rank_distribution", "rank '" + rank + "' is not an integer");
                    }
                    if (!prob.is_number())
                        sec.fail("rank_distribution", "probabilities must be numbers");
                    mass[r] = prob.get<double>();
                }
                try
                {
                    p.ranks = RankDistribution(std::move(mass), p.max_layers);
                }
                catch (const std::invalid_argument &e)
                {
                    sec.fail("rank_distribution", e.what());
                }
            }
            else if (p.ranks.max_rank() > p.max_layers)
                sec.fail("max_layers", "default rank distribution needs max_layers >= 4");
            if (auto v = sec.numbers("il_db"))
                p.il_db = *v;
            for (double il : p.il_db)
                if (!(il >= 0.0))
                    sec.fail("il_db", "implementation losses must be >= 0");
            if (auto v = sec.string("rue_preset"))
            {
                if (!find_rue_preset(*v))
                    sec.fail("rue_preset", "unknown preset '" + *v + "'");
                p.rue_preset = *v;
            }
            p.rue_value = sec.number("rue");
            if (p.rue_value && !(*p.rue_value > 0.0 && *p.rue_value <= 1.0))
                sec.fail("rue", "must lie in (0, 1]");
            sec.finish();
            s.pipeline = std::move(p);
        }

        void parse_radio_resources(Section sec, Scenario &s)
        {
            RadioResourceConfig cfg;
            cfg.spectrum_used_hz = sec.required(sec.number("spectrum_used_hz"), "spectrum_used_hz");
            cfg.spectrum_total_hz = sec.required(sec.number("spectrum_total_hz"), "spectrum_total_hz");
            cfg.dl_slots = sec.required(sec.number("dl_slots"), "dl_slots");
            cfg.total_slots = sec.required(sec.number("total_slots"), "total_slots");
            cfg.data_symbols = sec.required(sec.number("data_symbols"), "data_symbols");
            cfg.total_symbols = sec.required(sec.number("total_symbols"), "total_symbols");
            cfg.code_rate = sec.required(sec.number("code_rate"), "code_rate");
            cfg.useful_samples = sec.required(sec.number("useful_samples"), "useful_samples");
            cfg.total_samples = sec.required(sec.number("total_samples"), "total_samples");
            sec.finish();
            try
            {
                cfg.validate();
            }
            catch (const std::invalid_argument &e)
            {
                throw ConfigError(std::string("key 'radio_resources': ") + e.what());
            }
            s.radio_resources = cfg;
        }

        NumerologySpec parse_numerology(Section sec)
        {
            NumerologySpec n;
            if (auto v = sec.string("label"))
                n.label = *v;
            if (auto v = sec.number("nominal_bw_mhz"))
                n.nominal_bw_mhz = *v;
            if (auto v = sec.integer("prb_count"))
                n.prb_count = *v;
            if (auto v = sec.number("scs_khz"))
                n.scs_khz = *v;
            if (auto v = sec.integer("data_symbols_per_slot"))
                n.data_symbols_per_slot = *v;
            if (auto v = sec.integer("slots_per_frame"))
                n.slots_per_frame = *v;
            if (auto v = sec.integer("dl_slots_used"))
                n.dl_slots_used = *v;
            if (auto v = sec.integer("modulation_bits"))
                n.modulation_bits = *v;
            if (auto v = sec.number("code_rate"))
                n.code_rate = *v;
            sec.finish();
            try
            {
                n.config().validate();
            }
            catch (const std::invalid_argument &e)
            {
                throw ConfigError("key '" + sec.key_path("") + "': " + e.what());
            }
            return n;
        }

        void parse_bandwidth(Section sec, Scenario &s)
        {
            auto &b = s.bandwidth;
            if (auto v = sec.numbers("bw_mhz"))
            {
                for (double mhz : *v)
                    if (!(mhz > 0.0))
                        sec.fail("bw_mhz", "bandwidths must be positive");
                b.bw_mhz = *v;
            }
            if (auto v = sec.numbers("distances_m"))
            {
                for (double d : *v)
                    if (!(d >= 1.0))
                        sec.fail("distances_m", "distances must be >= 1 m");
                b.distances_m = *v;
            }
            if (const json *nums = sec.array("numerologies"))
            {
                for (std::size_t i = 0; i < nums->size(); ++i)
                    b.numerologies.push_back(
                        parse_numerology(Section(&(*nums)[i], sec.key_path("numerologies[" + std::to_string(i) + "]"))));
            }
            if (auto v = sec.integers("layers"))
                b.layers = *v;
            for (int l : b.layers)
                if (l < 1)
                    sec.fail("layers", "layer counts must be >= 1");
            if (auto v = sec.integer("ca_layers"))
                b.ca_layers = *v;
            if (b.ca_layers < 1)
                sec.fail("ca_layers", "must be >= 1");
            if (auto v = sec.integers("carriers"))
                b.carriers = *v;
            for (int c : b.carriers)
                if (c < 1)
                    sec.fail("carriers", "carrier counts must be >= 1");
            if (const json *trials = sec.array("field_trials"))
            {
                b.field_trials.clear();
                for (std::size_t i = 0; i < trials->size(); ++i)
                {
                    Section t(&(*trials)[i], sec.key_path("field_trials[" + std::to_string(i) + "]"));
                    const double rate = t.required(t.number("rate_mbps"), "rate_mbps");
                    const double bw = t.required(t.number("occupied_bw_mhz"), "occupied_bw_mhz");
                    t.finish();
                    if (!(rate > 0.0 && bw > 0.0))
                        t.fail("rate_mbps", "rate and bandwidth must be positive");
                    b.field_trials.emplace_back(rate, bw);
                }
            }
            sec.finish();
        }

        void parse_outputs(Section sec, Scenario &s)
        {
            if (auto v = sec.string("directory"))
                s.outputs.directory = *v;
            if (auto v = sec.strings("formats"))
            {
                for (const auto &f : *v)
                    if (f != "csv" && f != "json")
                        sec.fail("formats", "unknown format '" + f + "' (expected csv or json)");
                s.outputs.formats = *v;
            }
            if (auto v = sec.unsigned_int("cdf_points"))
                s.outputs.cdf_points = *v;
            sec.finish();
        }
    }

    NumerologyConfig NumerologySpec::config() const
    {
        NumerologyConfig n;
        n.label = label;
        n.nominal_bw_hz = nominal_bw_mhz * 1e6;
        n.prb_count = prb_count;
        n.scs_hz = scs_khz * 1e3;
        n.data_symbols_per_slot = data_symbols_per_slot;
        n.slots_per_frame = slots_per_frame;
        n.dl_slots_used = dl_slots_used;
        n.modulation_bits = modulation_bits;
        n.code_rate = code_rate;
        return n;
    }

    std::vector<double> BandwidthSpec::bw_hz() const
    {
        std::vector<double> hz;
        for (double mhz : bw_mhz)
            hz.push_back(mhz * 1e6);
        return hz;
    }

    std::vector<NumerologyConfig> BandwidthSpec::numerology_configs() const
    {
        std::vector<NumerologyConfig> configs;
        if (numerologies.empty())
            for (double mhz : bw_mhz)
                configs.push_back(NumerologyConfig::scaled(mhz * 1e6));
        else
            for (const auto &n : numerologies)
                configs.push_back(n.config());
        return configs;
    }

    double PipelineSpec::rue() const
    {
        if (rue_value)
            return *rue_value;
        return compute_rue(find_rue_preset(rue_preset)->config);
    }

    CellLayout Scenario::layout() const
    {
        return build_grid_layout(rows, cols, isd_m);
    }

    double Scenario::carrier_hz() const
    {
        return carrier_ghz ? *carrier_ghz * 1e9 : kDefaultCarrierHz;
    }

    PathLossModel Scenario::pathloss() const
    {
        if (fspl_1m_db)
            return PathLossModel::from_fspl(*fspl_1m_db, exponent_n);
        return PathLossModel::from_carrier(carrier_hz(), exponent_n);
    }

    NoiseConfig Scenario::noise() const
    {
        return NoiseConfig{bw_mhz * 1e6, nf_db};
    }

    SimulationConfig Scenario::simulation(Deployment deployment, double tx_power_dbm) const
    {
        return SimulationConfig{.layout = layout(),
                                .pathloss = pathloss(),
                                .tx_power_dbm = tx_power_dbm,
                                .noise = noise(),
                                .deployment = deployment,
                                .n_samples = n_samples,
                                .seed = seed,
                                .sampling = sampling,
                                .exclusion_radius_m = exclusion_m,
                                .pinned_user = user_position,
                                .se_pipeline = std::nullopt};
    }

    Scenario parse_scenario(const json &doc)
    {
        if (!doc.is_object())
            throw ConfigError("scenario: top level must be a JSON object");

        Scenario s;
        Section root(&doc, "");
        parse_geometry(root.child("geometry"), s);
        parse_propagation(root.child("propagation"), s);
        parse_power(root.child("power"), s);
        parse_simulation(root.child("simulation"), s);
        if (Section p = root.child("pipeline"); p.present())
            parse_pipeline(std::move(p), s);
        if (Section r = root.child("radio_resources"); r.present())
            parse_radio_resources(std::move(r), s);
        parse_bandwidth(root.child("bandwidth"), s);
        parse_outputs(root.child("outputs"), s);
        root.finish();

        if (s.user_position)
        {
            const auto layout = s.layout();
            for (const auto &oru : layout.positions())
                if (distance(*s.user_position, oru) < s.exclusion_m)
                    throw ConfigError("key 'geometry.user_position': inside the exclusion radius of an O-RU");
        }
        return s;
    }

    Scenario load_scenario(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("scenario file '" + path.string() + "' cannot be opened");
        json doc;
        try
        {
            doc = json::parse(in);
        }
        catch (const json::parse_error &e)
        {
            throw ConfigError("scenario file '" + path.string() + "': " + e.what());
        }
        if (doc.is_object() && doc.contains("manifest_version"))
        {
            if (!doc.contains("scenario"))
                throw ConfigError("manifest '" + path.string() + "' has no embedded scenario");
            return parse_scenario(doc.at("scenario"));
        }
        return parse_scenario(doc);
    }

    json to_json(const Scenario &s)
    {
        json doc;
        auto &geo = doc["geometry"];
        geo["rows"] = s.rows;
        geo["cols"] = s.cols;
        geo["isd_m"] = s.isd_m;
        geo["exclusion_m"] = s.exclusion_m;
        if (s.user_position)
            geo["user_position"] = {s.user_position->x, s.user_position->y};

        auto &prop = doc["propagation"];
        if (s.fspl_1m_db)
            prop["fspl_1m_db"] = *s.fspl_1m_db;
        else
            prop["carrier_ghz"] = s.carrier_ghz ? *s.carrier_ghz : kDefaultCarrierHz / 1e9;
        prop["exponent_n"] = s.exponent_n;
        prop["nf_db"] = s.nf_db;
        prop["bw_mhz"] = s.bw_mhz;

        auto &power = doc["power"];
        if (s.power.tx_dbm)
            power["tx_dbm"] = *s.power.tx_dbm;
        else
            power["calibrate"] = {{"percentile", s.power.calibrate.percentile},
                                  {"target_db", s.power.calibrate.target_db},
                                  {"deployment", std::string(to_string(s.power.calibrate_deployment))}};

        auto &sim = doc["simulation"];
        sim["n_samples"] = s.n_samples;
        sim["seed"] = s.seed;
        sim["sampling"] = std::string(to_string(s.sampling));
        sim["deployments"] = json::array();
        for (auto d : s.deployments)
            sim["deployments"].push_back(std::string(to_string(d)));
        sim["percentiles"] = s.percentiles;

        if (s.pipeline)
        {
            auto &p = doc["pipeline"];
            p["max_layers"] = s.pipeline->max_layers;
            p["rank_distribution"] = json::object();
            for (const auto &[rank, prob] : s.pipeline->ranks.probabilities())
                p["rank_distribution"][std::to_string(rank)] = prob;
            p["il_db"] = s.pipeline->il_db;
            p["rue_preset"] = s.pipeline->rue_preset;
            if (s.pipeline->rue_value)
                p["rue"] = *s.pipeline->rue_value;
        }

        if (s.radio_resources)
        {
            const auto &r = *s.radio_resources;
            doc["radio_resources"] = {{"spectrum_used_hz", r.spectrum_used_hz}, {"spectrum_total_hz", r.spectrum_total_hz},
                                      {"dl_slots", r.dl_slots},                 {"total_slots", r.total_slots},
                                      {"data_symbols", r.data_symbols},         {"total_symbols", r.total_symbols},
                                      {"code_rate", r.code_rate},               {"useful_samples", r.useful_samples},
                                      {"total_samples", r.total_samples}};
        }

        auto &bw = doc["bandwidth"];
        bw["bw_mhz"] = s.bandwidth.bw_mhz;
        bw["distances_m"] = s.bandwidth.distances_m;
        if (!s.bandwidth.numerologies.empty())
        {
            bw["numerologies"] = json::array();
            for (const auto &n : s.bandwidth.numerologies)
                bw["numerologies"].push_back({{"label", n.label},
                                              {"nominal_bw_mhz", n.nominal_bw_mhz},
                                              {"prb_count", n.prb_count},
                                              {"scs_khz", n.scs_khz},
                                              {"data_symbols_per_slot", n.data_symbols_per_slot},
                                              {"slots_per_frame", n.slots_per_frame},
                                              {"dl_slots_used", n.dl_slots_used},
                                              {"modulation_bits", n.modulation_bits},
                                              {"code_rate", n.code_rate}});
        }
        bw["layers"] = s.bandwidth.layers;
        bw["ca_layers"] = s.bandwidth.ca_layers;
        bw["carriers"] = s.bandwidth.carriers;
        bw["field_trials"] = json::array();
        for (const auto &[rate, occ] : s.bandwidth.field_trials)
            bw["field_trials"].push_back({{"rate_mbps", rate}, {"occupied_bw_mhz", occ}});

        doc["outputs"] = {{"directory", s.outputs.directory},
                          {"formats", s.outputs.formats},
                          {"cdf_points", s.outputs.cdf_points}};
        return doc;
    }
}
