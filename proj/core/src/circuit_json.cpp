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

#include <json.hpp>

#include "qsg/circuit.hpp"
#include "qsg/errors.hpp"

namespace qsg {
namespace {

using nlohmann::json;

json gate_to_json(const Gate &g) {
    json j{{"kind", gate_name(g.kind)}, {"qubits", g.qubits}};
    if (g.kind == GateKind::RZ || g.kind == GateKind::CPHASE) {
        j["angle"] = g.angle;
    }
    if (g.kind == GateKind::PHASE_FLIP_ON) {
        j["mask"] = g.mask;
    }
    return j;
}

Gate gate_from_json(const json &j) {
    const auto name = j.at("kind").get<std::string>();
    const auto kind = gate_kind_from_name(name);
    if (!kind) {
        throw CircuitError("unknown gate kind '" + name + "'");
    }
    Gate g{*kind, j.at("qubits").get<std::vector<Qubit>>()};
    g.angle = j.value("angle", 0.0);
    g.mask = j.value("mask", std::uint64_t{0});
    return g;
}

json query_to_json(const ProjectorQuery &q) {
    json arr = json::array();
    for (const auto &[qubit, value] : q.constraints) {
        arr.push_back({qubit, value});
    }
    return arr;
}

ProjectorQuery query_from_json(const json &j) {
    ProjectorQuery q;
    for (const auto &c : j) {
        q.constraints.emplace_back(c.at(0).get<Qubit>(), c.at(1).get<int>());
    }
    return q;
}

json layout_to_json(const RegisterLayout &l) {
    json j{{"n", l.n}, {"xA", l.xA}, {"xB", l.xB}, {"fA", l.fA}, {"fB", l.fB}};
    if (l.control) {
        j["C"] = *l.control;
    }
    if (l.anc) {
        j["anc"] = *l.anc;
    }
    if (!l.dB.empty()) {
        j["dB"] = l.dB;
    }
    return j;
}

RegisterLayout layout_from_json(const json &j) {
    RegisterLayout l;
    l.n = j.at("n").get<int>();
    l.xA = j.at("xA").get<std::vector<Qubit>>();
    l.xB = j.at("xB").get<std::vector<Qubit>>();
    l.fA = j.at("fA").get<Qubit>();
    l.fB = j.at("fB").get<Qubit>();
    if (j.contains("C")) {
        l.control = j.at("C").get<Qubit>();
    }
    if (j.contains("anc")) {
        l.anc = j.at("anc").get<Qubit>();
    }
    if (j.contains("dB")) {
        l.dB = j.at("dB").get<std::vector<Qubit>>();
    }
    return l;
}

} // namespace

std::string to_json(const Circuit &circuit, int indent) {
    json gates = json::array();
    for (const Gate &g : circuit.gates()) {
        gates.push_back(gate_to_json(g));
    }
    json probes = json::array();
    for (const Probe &p : circuit.probes()) {
        probes.push_back({{"position", p.position}, {"label", p.label}, {"constraints", query_to_json(p.query)}});
    }
    json measurements = json::array();
    for (const Measurement &m : circuit.measurements()) {
        measurements.push_back({{"qubit", m.qubit}, {"clbit", m.clbit}});
    }
    json sections = json::array();
    for (const Section &s : circuit.sections()) {
        sections.push_back({{"begin", s.begin}, {"label", s.label}});
    }
    json doc{{"num_qubits", circuit.num_qubits()},
             {"gates", std::move(gates)},
             {"probes", std::move(probes)},
             {"measurements", std::move(measurements)},
             {"sections", std::move(sections)}};
    if (circuit.layout()) {
        doc["layout"] = layout_to_json(*circuit.layout());
    }
    return doc.dump(indent);
}

Circuit circuit_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw CircuitError(std::string("circuit JSON: ") + e.what());
    }
    try {
        Circuit c(doc.at("num_qubits").get<int>());
        const auto &sections = doc.value("sections", json::array());
        std::size_t next_section = 0;
        const auto &gates = doc.at("gates");
        for (std::size_t i = 0; i <= gates.size(); ++i) {
            while (next_section < sections.size() && sections[next_section].at("begin").get<std::size_t>() == i) {
                c.begin_section(sections[next_section].at("label").get<std::string>());
                ++next_section;
            }
            if (i < gates.size()) {
                c.append(gate_from_json(gates[i]));
            }
        }
        if (next_section != sections.size()) {
            throw CircuitError("section positions must be ordered and within the gate stream");
        }
        for (const auto &p : doc.value("probes", json::array())) {
            c.add_probe_at(p.at("position").get<std::size_t>(), p.at("label").get<std::string>(),
                           query_from_json(p.at("constraints")));
        }
        for (const auto &m : doc.value("measurements", json::array())) {
            c.measure(m.at("qubit").get<Qubit>(), m.at("clbit").get<std::string>());
        }
        if (doc.contains("layout")) {
            c.set_layout(layout_from_json(doc.at("layout")));
        }
        return c;
    } catch (const json::exception &e) {
        throw CircuitError(std::string("circuit JSON: ") + e.what());
    }
}

} // namespace qsg
