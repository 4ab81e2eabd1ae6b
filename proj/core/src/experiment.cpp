// Copyright 2026 The QSG Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsg/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qsg/errors.hpp"
#include "qsg/transpile.hpp"

namespace qsg {
namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string &field, const std::string &what) {
    throw ConfigurationError("config field '" + field + "': " + what);
}

void reject_unknown(const json &obj, const std::set<std::string> &known, const std::string &prefix) {
    for (const auto &item : obj.items()) {
        if (!known.contains(item.key())) {
            field_error(prefix + item.key(), "unknown field");
        }
    }
}

template <typename T>
T get_number(const json &obj, const std::string &key, const std::string &field) {
    const json &v = obj.at(key);
    if constexpr (std::is_floating_point_v<T>) {
        if (!v.is_number()) {
            field_error(field, "expected a number");
        }
    } else {
        if (!v.is_number_integer()) {
            field_error(field, "expected an integer");
        }
        if constexpr (std::is_unsigned_v<T>) {
            if (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0) {
                field_error(field, "must be non-negative");
            }
        }
    }
    return v.get<T>();
}

std::uint64_t get_mask(const json &obj, const std::string &key) {
    const json &v = obj.at(key);
    if (v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        return v.get<std::uint64_t>();
    }
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.empty() || s.size() > 63 || s.find_first_not_of("01") != std::string::npos) {
            field_error(key, "expected a binary string, got \"" + s + "\"");
        }
        return std::stoull(s, nullptr, 2);
    }
    field_error(key, "expected a non-negative integer or binary string");
}

Variant get_variant(const json &v, const std::string &field) {
    if (!v.is_string()) {
        field_error(field, "expected a variant name");
    }
    const auto parsed = variant_from_string(v.get<std::string>());
    if (!parsed) {
        field_error(field, "unknown variant \"" + v.get<std::string>() + "\"");
    }
    return *parsed;
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

json probes_json(const std::vector<ProbeReading> &probes) {
    json out = json::array();
    for (const auto &p : probes) {
        out.push_back({{"label", p.label}, {"position", p.position}, {"value", p.value}});
    }
    return out;
}

} // namespace

void SweepConfig::validate() const {
    if (R.empty()) {
        field_error("R", "must list at least one value");
    }
    if (variants.empty()) {
        field_error("variants", "must list at least one variant");
    }
    if (format != "csv" && format != "json") {
        field_error("format", "must be \"csv\" or \"json\"");
    }
    try {
        noise.validate();
    } catch (const ConfigurationError &e) {
        field_error("noise", e.what());
    }
    for (Variant v : variants) {
        for (int r : R) {
            try {
                point(v, r).validate();
            } catch (const ConfigurationError &e) {
                field_error(std::string(to_string(v)) + " R=" + std::to_string(r), e.what());
            }
        }
    }
}

ExperimentConfig SweepConfig::point(Variant variant, int r) const {
    ExperimentConfig c;
    c.n = n;
    c.k = k;
    c.R = r;
    c.OA_mask = OA_mask;
    c.OB_mask = OB_mask;
    c.variant = variant;
    c.success_rule = success_rule;
    return c;
}

SweepConfig parse_sweep_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ConfigurationError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigurationError("config must be a JSON object");
    }
    reject_unknown(doc,
                   {"n", "k", "R", "OA_mask", "OB_mask", "variants", "success_rule", "noise", "output", "format",
                    "threads"},
                   "");

    SweepConfig c;
    if (doc.contains("n")) {
        c.n = get_number<int>(doc, "n", "n");
    }
    if (doc.contains("k")) {
        c.k = get_number<int>(doc, "k", "k");
    }
    if (doc.contains("R")) {
        const json &r = doc.at("R");
        c.R.clear();
        if (r.is_array()) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (!r[i].is_number_integer()) {
                    field_error("R[" + std::to_string(i) + "]", "expected an integer");
                }
                c.R.push_back(r[i].get<int>());
            }
        } else {
            c.R.push_back(get_number<int>(doc, "R", "R"));
        }
    }
    if (doc.contains("OA_mask")) {
        c.OA_mask = get_mask(doc, "OA_mask");
    }
    if (doc.contains("OB_mask")) {
        c.OB_mask = get_mask(doc, "OB_mask");
    }
    if (doc.contains("variants")) {
        const json &v = doc.at("variants");
        c.variants.clear();
        if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                c.variants.push_back(get_variant(v[i], "variants[" + std::to_string(i) + "]"));
            }
        } else {
            c.variants.push_back(get_variant(v, "variants"));
        }
    }
    if (doc.contains("success_rule")) {
        const json &v = doc.at("success_rule");
        const auto rule = v.is_string() ? success_rule_from_string(v.get<std::string>()) : std::nullopt;
        if (!rule) {
            field_error("success_rule", "expected \"FB_ONLY\" or \"BOTH_FLAGS\"");
        }
        c.success_rule = *rule;
    }
    if (!doc.contains("noise") || !doc.at("noise").is_object()) {
        field_error("noise", "required object with at least \"seed\"");
    }
    const json &noise = doc.at("noise");
    reject_unknown(noise, {"p1", "p2", "p_ro", "shots", "seed"}, "noise.");
    if (!noise.contains("seed")) {
        field_error("noise.seed", "required; there is no implicit seed");
    }
    c.noise.seed = get_number<std::uint64_t>(noise, "seed", "noise.seed");
    if (noise.contains("p1")) {
        c.noise.p1 = get_number<double>(noise, "p1", "noise.p1");
    }
    if (noise.contains("p2")) {
        c.noise.p2 = get_number<double>(noise, "p2", "noise.p2");
    }
    if (noise.contains("p_ro")) {
        c.noise.p_ro = get_number<double>(noise, "p_ro", "noise.p_ro");
    }
    if (noise.contains("shots")) {
        c.noise.shots = get_number<std::uint64_t>(noise, "shots", "noise.shots");
    }
    if (doc.contains("output")) {
        if (!doc.at("output").is_string()) {
            field_error("output", "expected a path string");
        }
        c.output = doc.at("output").get<std::string>();
    }
    if (doc.contains("format")) {
        if (!doc.at("format").is_string()) {
            field_error("format", "expected \"csv\" or \"json\"");
        }
        c.format = doc.at("format").get<std::string>();
    }
    if (doc.contains("threads")) {
        c.threads = get_number<unsigned>(doc, "threads", "threads");
    }
    c.validate();
    return c;
}

SweepConfig load_sweep_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigurationError("cannot read config file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_sweep_config(text.str());
}

std::uint64_t point_seed(std::uint64_t master_seed, Variant variant, int R) noexcept {
    const std::uint64_t tag = (static_cast<std::uint64_t>(variant) << 32) | static_cast<std::uint32_t>(R);
    return trajectory_seed(master_seed ^ 0x5153475F53454544ULL, tag);
}

ResultRow run_point(const ExperimentConfig &config, const NoiseConfig &noise, const SamplerOptions &options) {
    const Circuit circuit = build(config);
    const LoweredProgram program = lower_program(circuit);
    const CostReport report = cost(lower(circuit));

    ResultRow row;
    row.metrics.config = config;
    row.metrics.depth = report.depth;
    row.metrics.twoq_count = report.twoq_count;
    row.metrics.oneq_count = report.oneq_count;
    row.shots = noise.shots;
    row.seed = noise.seed;

    const RunResult exact = run(circuit);
    row.noiseless_probes = exact.probes;
    row.noiseless_p_succ = p_succ_exact(circuit, exact.state, config.success_rule);
    row.noiseless_expected_ub = expected_ub(exact.probes, config.k, config.variant);

    const ShotResult shots = sample_shots(circuit, program, noise, options);
    row.probes = shots.probe_means;
    row.metrics.p_succ = p_succ(shots.histogram, config.success_rule);
    row.metrics.expected_ub = expected_ub(shots.probe_means, config.k, config.variant);
    row.metrics.efficiency = efficiency(row.metrics.p_succ.value, row.metrics.expected_ub);
    return row;
}

std::vector<ResultRow> run_sweep(const SweepConfig &config, const ProgressFn &progress) {
    config.validate();
    std::vector<ResultRow> rows;
    for (Variant v : config.variants) {
        for (int r : config.R) {
            NoiseConfig noise = config.noise;
            noise.seed = point_seed(config.noise.seed, v, r);
            ResultRow row = run_point(config.point(v, r), noise, SamplerOptions{config.threads});
            row.master_seed = config.noise.seed;
            if (progress) {
                progress(row);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string to_csv(const std::vector<ResultRow> &rows) {
    std::ostringstream os;
    os << "variant,n,k,R,rule,shots,master_seed,seed,depth,twoq,oneq,p_succ,stderr,expected_ub,efficiency,"
          "noiseless_p_succ,noiseless_expected_ub\n";
    for (const ResultRow &r : rows) {
        const auto &m = r.metrics;
        const auto &c = m.config;
        os << to_string(c.variant) << ',' << c.n << ',' << c.k << ',' << c.R << ',' << to_string(c.success_rule) << ','
           << r.shots << ',' << r.master_seed << ',' << r.seed << ',' << m.depth << ',' << m.twoq_count << ','
           << m.oneq_count << ',' << fixed(m.p_succ.value, 6) << ',' << fixed(m.p_succ.stderr_, 6) << ','
           << fixed(m.expected_ub, 6) << ',' << (m.efficiency ? fixed(*m.efficiency, 6) : "") << ','
           << fixed(r.noiseless_p_succ, 6) << ',' << fixed(r.noiseless_expected_ub, 6) << '\n';
    }
    return os.str();
}

std::string to_json(const std::vector<ResultRow> &rows, const SweepConfig &config) {
    json doc;
    doc["master_seed"] = config.noise.seed;
    doc["noise"] = {{"p1", config.noise.p1},
                    {"p2", config.noise.p2},
                    {"p_ro", config.noise.p_ro},
                    {"shots", config.noise.shots}};
    doc["success_rule"] = std::string(to_string(config.success_rule));
    json out = json::array();
    for (const ResultRow &r : rows) {
        const auto &m = r.metrics;
        const auto &c = m.config;
        json row = {{"variant", std::string(to_string(c.variant))},
                    {"n", c.n},
                    {"k", c.k},
                    {"R", c.R},
                    {"OA_mask", c.OA_mask},
                    {"OB_mask", c.OB_mask},
                    {"rule", std::string(to_string(c.success_rule))},
                    {"shots", r.shots},
                    {"seed", r.seed},
                    {"depth", m.depth},
                    {"twoq", m.twoq_count},
                    {"oneq", m.oneq_count},
                    {"p_succ", m.p_succ.value},
                    {"stderr", m.p_succ.stderr_},
                    {"expected_ub", m.expected_ub},
                    {"efficiency", m.efficiency ? json(*m.efficiency) : json(nullptr)},
                    {"noiseless_p_succ", r.noiseless_p_succ},
                    {"noiseless_expected_ub", r.noiseless_expected_ub},
                    {"probes", probes_json(r.probes)},
                    {"noiseless_probes", probes_json(r.noiseless_probes)}};
        out.push_back(std::move(row));
    }
    doc["rows"] = std::move(out);
    return doc.dump(2) + "\n";
}

} // namespace qsg
