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
 * Typed circuit instructions.
 *
 * A Gate is a named unitary plus an ordered qubit list, controls first and
 * targets last. Local matrices returned by gate_matrix() use the same
 * little-endian convention as the state vector: qubits[j] is bit j of the
 * local index.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qsg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Qubit = int;

enum class GateKind {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    RZ,
    SX,
    CX,
    CCX,
    RCCX,
    CSWAP,
    MCX,
    MCZ,
    CPHASE,
    PHASE_FLIP_ON,
};

struct Gate {
    GateKind kind{GateKind::H};
    std::vector<Qubit> qubits;
    /// Rotation angle in radians (RZ, CPHASE).
    double angle{0.0};
    /// Marked bit pattern over `qubits` (PHASE_FLIP_ON); bit j belongs to qubits[j].
    std::uint64_t mask{0};

    [[nodiscard]] std::size_t arity() const noexcept { return qubits.size(); }
    friend bool operator==(const Gate &, const Gate &) = default;
};

using GateSequence = std::vector<Gate>;

std::string_view gate_name(GateKind kind) noexcept;
std::optional<GateKind> gate_kind_from_name(std::string_view name) noexcept;

/// Throws CircuitError when the arity is wrong for the kind or indices repeat.
void validate(const Gate &gate);

/// True for gates whose matrix is diagonal in the computational basis.
bool is_diagonal(const Gate &gate) noexcept;

/// Number of leading qubits that act purely as controls (0 for non-controlled gates).
std::size_t num_controls(const Gate &gate) noexcept;

/// Dense 2^k x 2^k unitary of the gate on its own k qubits.
Matrix gate_matrix(const Gate &gate);

/// Single-qubit gate list making up the relative-phase Toffoli on (c1, c2, target).
GateSequence rccx_sequence(Qubit c1, Qubit c2, Qubit target);

/// Gate with an extra control qubit prepended. Throws CircuitError for kinds
/// that have no controlled counterpart in this gate set.
Gate add_control(const Gate &gate, Qubit control);

/// Adjoint gate. Throws CircuitError where the inverse is not itself a Gate.
Gate adjoint(const Gate &gate);

namespace gates {
Gate h(Qubit q);
Gate x(Qubit q);
Gate y(Qubit q);
Gate z(Qubit q);
Gate s(Qubit q);
Gate sdg(Qubit q);
Gate t(Qubit q);
Gate tdg(Qubit q);
Gate rz(Qubit q, double angle);
Gate sx(Qubit q);
Gate cx(Qubit control, Qubit target);
Gate ccx(Qubit c1, Qubit c2, Qubit target);
Gate rccx(Qubit c1, Qubit c2, Qubit target);
Gate cswap(Qubit control, Qubit t1, Qubit t2);
Gate mcx(std::vector<Qubit> controls, Qubit target);
Gate mcz(std::vector<Qubit> controls, Qubit target);
Gate cphase(Qubit control, Qubit target, double angle);
Gate phase_flip_on(std::vector<Qubit> qubits, std::uint64_t mask);
} // namespace gates

} // namespace qsg
