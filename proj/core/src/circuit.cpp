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

#include "qsg/circuit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qsg/errors.hpp"

namespace qsg {

std::vector<Qubit> RegisterLayout::all_qubits() const {
    std::vector<Qubit> out;
    if (control) {
        out.push_back(*control);
    }
    out.insert(out.end(), xA.begin(), xA.end());
    out.insert(out.end(), xB.begin(), xB.end());
    out.push_back(fA);
    out.push_back(fB);
    if (anc) {
        out.push_back(*anc);
    }
    out.insert(out.end(), dB.begin(), dB.end());
    return out;
}

void RegisterLayout::validate(int num_qubits) const {
    if (static_cast<int>(xA.size()) != n || static_cast<int>(xB.size()) != n ||
        (!dB.empty() && static_cast<int>(dB.size()) != n)) {
        throw CircuitError("register widths do not match n = " + std::to_string(n));
    }
    const auto qs = all_qubits();
    std::set<Qubit> seen(qs.begin(), qs.end());
    if (seen.size() != qs.size()) {
        throw CircuitError("register layout repeats a qubit");
    }
    if (static_cast<int>(qs.size()) != num_qubits || *seen.begin() != 0 || *seen.rbegin() != num_qubits - 1) {
        throw CircuitError("register layout must cover exactly " + std::to_string(num_qubits) + " qubits");
    }
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ConfigurationError("circuit width must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
}

Circuit &Circuit::append(Gate gate) {
    check_gate_fits(gate, num_qubits_);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(const GateSequence &gates) {
    for (const Gate &g : gates) {
        append(g);
    }
    return *this;
}

Circuit &Circuit::add_probe(std::string label, ProjectorQuery query) {
    return add_probe_at(gates_.size(), std::move(label), std::move(query));
}

Circuit &Circuit::add_probe_at(std::size_t position, std::string label, ProjectorQuery query) {
    if (position > gates_.size()) {
        throw CircuitError("probe position " + std::to_string(position) + " beyond gate stream");
    }
    query.validate(num_qubits_);
    Probe p{position, std::move(label), std::move(query)};
    auto it = std::upper_bound(probes_.begin(), probes_.end(), position,
                               [](std::size_t pos, const Probe &other) { return pos < other.position; });
    probes_.insert(it, std::move(p));
    return *this;
}

Circuit &Circuit::measure(Qubit qubit, std::string clbit) {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw CircuitError("measured qubit out of range");
    }
    for (const auto &m : measurements_) {
        if (m.qubit == qubit) {
            throw CircuitError("qubit " + std::to_string(qubit) + " measured twice");
        }
        if (m.clbit == clbit) {
            throw CircuitError("classical bit '" + clbit + "' assigned twice");
        }
    }
    measurements_.push_back({qubit, std::move(clbit)});
    return *this;
}

Circuit &Circuit::begin_section(std::string label) {
    sections_.push_back({gates_.size(), std::move(label)});
    return *this;
}

Circuit &Circuit::set_layout(RegisterLayout layout) {
    layout.validate(num_qubits_);
    layout_ = std::move(layout);
    return *this;
}

std::vector<Qubit> Circuit::measured_qubits() const {
    std::vector<Qubit> out;
    out.reserve(measurements_.size());
    for (const auto &m : measurements_) {
        out.push_back(m.qubit);
    }
    return out;
}

double RunResult::probe(std::string_view label) const {
    for (const auto &r : probes) {
        if (r.label == label) {
            return r.value;
        }
    }
    throw std::out_of_range("no probe labelled '" + std::string(label) + "'");
}

RunResult run(const Circuit &circuit, Statevector state) {
    if (state.num_qubits() != circuit.num_qubits()) {
        throw ConfigurationError("state has " + std::to_string(state.num_qubits()) + " qubits, circuit has " +
                                 std::to_string(circuit.num_qubits()));
    }
    RunResult result{std::move(state), {}};
    const auto &gates = circuit.gates();
    const auto &probes = circuit.probes();
    std::size_t next_probe = 0;
    auto read_probes = [&](std::size_t position) {
        while (next_probe < probes.size() && probes[next_probe].position == position) {
            const Probe &p = probes[next_probe++];
            result.probes.push_back({p.label, p.position, probability(result.state, p.query)});
        }
    };
    for (std::size_t i = 0; i < gates.size(); ++i) {
        read_probes(i);
        apply_gate(result.state, gates[i]);
    }
    read_probes(gates.size());
    return result;
}

RunResult run(const Circuit &circuit) { return run(circuit, Statevector(circuit.num_qubits())); }

Matrix unitary_columns(const Circuit &circuit, std::span<const std::size_t> inputs) {
    const std::size_t dim = std::size_t{1} << circuit.num_qubits();
    Matrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(inputs.size()));
    std::vector<Matrix> locals;
    locals.reserve(circuit.size());
    for (const Gate &g : circuit.gates()) {
        locals.push_back(gate_matrix(g));
    }
    for (std::size_t c = 0; c < inputs.size(); ++c) {
        if (inputs[c] >= dim) {
            throw CircuitError("input basis index out of range");
        }
        std::vector<Complex> amps(dim, Complex{});
        amps[inputs[c]] = 1.0;
        Statevector col = Statevector::from_amplitudes(std::move(amps));
        // Generic local-matrix path, independent of the specialised kernels in apply_gate.
        for (std::size_t g = 0; g < circuit.size(); ++g) {
            apply_matrix(col, circuit.gates()[g].qubits, locals[g]);
        }
        for (std::size_t r = 0; r < dim; ++r) {
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = col[r];
        }
    }
    return out;
}

Matrix to_unitary(const Circuit &circuit) {
    if (circuit.num_qubits() > kMaxUnitaryQubits) {
        throw CapabilityError("to_unitary supports at most " + std::to_string(kMaxUnitaryQubits) + " qubits, got " +
                              std::to_string(circuit.num_qubits()));
    }
    const std::size_t dim = std::size_t{1} << circuit.num_qubits();
    std::vector<std::size_t> inputs(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        inputs[i] = i;
    }
    return unitary_columns(circuit, inputs);
}

} // namespace qsg
