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
 * Sub-circuits shared by the benchmark builders.
 *
 * Every function returns a plain gate list on the qubits it is given. Bit j
 * of a mask always refers to the j-th qubit of the register argument.
 */

#pragma once

#include <cstdint>
#include <span>

#include "qsg/gate.hpp"

namespace qsg {

/// Bitmask oracle description. `reps` only matters for the expensive oracle.
struct OracleSpec {
    int num_qubits{1};
    std::uint64_t mask{0};
    int reps{1};

    /// Throws ConfigurationError for widths < 1, masks >= 2^n or reps < 1.
    void validate() const;
};

/// |x> -> -|x> iff x == mask: X on the zero bits of the mask around an MCZ.
GateSequence phase_oracle(const OracleSpec &spec, std::span<const Qubit> qubits);

/// phase_oracle followed by (reps - 1) padding blocks, each a (T, Tdg) pair on
/// every data qubit. The logical action does not depend on reps.
GateSequence expensive_oracle(const OracleSpec &spec, std::span<const Qubit> qubits);

/// Number of gates expensive_oracle emits, computed from its construction.
std::size_t expensive_oracle_size(const OracleSpec &spec);

/// Relative-phase Toffoli: 3 CX plus H/T/Tdg on the target.
GateSequence rccx(Qubit c1, Qubit c2, Qubit target);

/// One CSWAP per register pair: |0><0|_c (x) I + |1><1|_c (x) SWAP(reg1, reg2).
GateSequence cswap_block(Qubit control, std::span<const Qubit> reg1, std::span<const Qubit> reg2);

/// Fredkin as CX(t2->t1) CCX(c, t1 -> t2) CX(t2->t1).
GateSequence cswap_decomposition(Qubit control, Qubit t1, Qubit t2);

/// Toggles `flag` iff `data` holds `mask`.
GateSequence set_flag(std::span<const Qubit> data, Qubit flag, std::uint64_t mask);

/// Reflection about the uniform superposition (up to a global phase):
/// H^m X^m MCZ X^m H^m.
GateSequence diffusion(std::span<const Qubit> qubits);

/// Every gate of `body` with `control` added as an extra control.
GateSequence controlled(const GateSequence &body, Qubit control);

} // namespace qsg
