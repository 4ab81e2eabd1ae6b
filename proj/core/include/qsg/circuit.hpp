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

/**
 * @file
 * Ordered gate circuits with register layouts, probe points and
 * measurement declarations.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsg/gate.hpp"
#include "qsg/statevector.hpp"

namespace qsg {

/// Named registers of the benchmark circuits. `control` and `dB` are absent
/// for fixed-order circuits; there `anc` names the reserved idle qubit.
struct RegisterLayout {
    int n{0};
    std::optional<Qubit> control;
    std::vector<Qubit> xA;
    std::vector<Qubit> xB;
    Qubit fA{-1};
    Qubit fB{-1};
    std::optional<Qubit> anc;
    std::vector<Qubit> dB;

    /// Every qubit named by the layout.
    [[nodiscard]] std::vector<Qubit> all_qubits() const;
    /// Throws CircuitError unless indices are distinct and exactly cover [0, num_qubits).
    void validate(int num_qubits) const;

    friend bool operator==(const RegisterLayout &, const RegisterLayout &) = default;
};

/// A non-collapsing probability reading taken after `position` gates have run.
struct Probe {
    std::size_t position{0};
    std::string label;
    ProjectorQuery query;
};

struct Measurement {
    Qubit qubit{0};
    std::string clbit;
};

/// Labelled gate range start, used for per-iteration cost breakdowns.
struct Section {
    std::size_t begin{0};
    std::string label;
};

class Circuit {
  public:
    explicit Circuit(int num_qubits);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const GateSequence &gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] const std::vector<Probe> &probes() const noexcept { return probes_; }
    [[nodiscard]] const std::vector<Measurement> &measurements() const noexcept { return measurements_; }
    [[nodiscard]] const std::vector<Section> &sections() const noexcept { return sections_; }
    [[nodiscard]] const std::optional<RegisterLayout> &layout() const noexcept { return layout_; }

    Circuit &append(Gate gate);
    Circuit &append(const GateSequence &gates);

    /// Probe after the gates appended so far.
    Circuit &add_probe(std::string label, ProjectorQuery query);
    Circuit &add_probe_at(std::size_t position, std::string label, ProjectorQuery query);
    Circuit &measure(Qubit qubit, std::string clbit);
    Circuit &begin_section(std::string label);
    Circuit &set_layout(RegisterLayout layout);

    /// Measured qubits in declaration order.
    [[nodiscard]] std::vector<Qubit> measured_qubits() const;

  private:
    int num_qubits_;
    GateSequence gates_;
    std::vector<Probe> probes_;
    std::vector<Measurement> measurements_;
    std::vector<Section> sections_;
    std::optional<RegisterLayout> layout_;
};

struct ProbeReading {
    std::string label;
    std::size_t position{0};
    double value{0.0};
};

struct RunResult {
    Statevector state;
    std::vector<ProbeReading> probes;

    /// Value of the probe with `label`; throws std::out_of_range when absent.
    [[nodiscard]] double probe(std::string_view label) const;
};

/// Applies every gate in order, recording probes without disturbing the state.
/// Measurements are not collapsed.
RunResult run(const Circuit &circuit, Statevector state);

/// Runs from |0...0>.
RunResult run(const Circuit &circuit);

/// Dense unitary of the whole circuit; at most kMaxUnitaryQubits qubits.
inline constexpr int kMaxUnitaryQubits = 12;
Matrix to_unitary(const Circuit &circuit);

/// Columns of the circuit unitary for the given input basis states (any width
/// the state vector supports).
Matrix unitary_columns(const Circuit &circuit, std::span<const std::size_t> inputs);

/// JSON document: {"num_qubits", "gates":[{"kind","qubits","angle"?,"mask"?}], "probes",
/// "measurements", "sections", "layout"?}.
std::string to_json(const Circuit &circuit, int indent = 2);
Circuit circuit_from_json(std::string_view text);

} // namespace qsg
