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
 * Dense state vector and exact gate application.
 *
 * Basis ordering is little-endian throughout the project: qubit 0 is the
 * least significant bit of an amplitude index, so X on qubit k maps index i
 * to i ^ (1 << k).
 */

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qsg/gate.hpp"

namespace qsg {

inline constexpr int kMaxQubits = 24;

class Statevector {
  public:
    /// |0...0> on `num_qubits` qubits; throws ConfigurationError outside [1, kMaxQubits].
    explicit Statevector(int num_qubits);

    /// Takes ownership of raw amplitudes; size must be a power of two >= 2.
    static Statevector from_amplitudes(std::vector<Complex> amplitudes);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amplitudes_; }

    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }
    [[nodiscard]] Complex &operator[](std::size_t i) { return amplitudes_[i]; }

    [[nodiscard]] double norm_squared() const noexcept;

  private:
    Statevector() = default;

    int num_qubits_{0};
    std::vector<Complex> amplitudes_;
};

/// Conjunction of (qubit, required bit value) constraints.
struct ProjectorQuery {
    std::vector<std::pair<Qubit, int>> constraints;

    /// Throws CircuitError for repeated or out-of-range qubits and bit values other than 0/1.
    void validate(int num_qubits) const;
};

Statevector init_state(int num_qubits);

/// Multiplies the state by the gate's unitary in place.
void apply_gate(Statevector &state, const Gate &gate);

/// Applies an arbitrary 2^k x 2^k matrix to the listed qubits (qubits[j] is local bit j).
void apply_matrix(Statevector &state, std::span<const Qubit> qubits, const Matrix &local);

/// Applies the 2x2 matrix {m00, m01, m10, m11} to one qubit.
void apply_1q_matrix(Statevector &state, Qubit q, const std::array<Complex, 4> &m);

/// Sum of |amplitude|^2 over basis states satisfying every constraint.
double probability(const Statevector &state, const ProjectorQuery &query);

/// Joint distribution of the listed qubits; outcome bit j is the value of qubits[j].
std::vector<double> marginal_distribution(const Statevector &state, std::span<const Qubit> qubits);

/// Rejects gates whose indices fall outside [0, num_qubits).
void check_gate_fits(const Gate &gate, int num_qubits);

} // namespace qsg
