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
 * Lowering to the native basis {RZ, SX, X, CX} and cost accounting.
 *
 * Rewrite rules:
 *   H            -> RZ(pi/2) SX RZ(pi/2)
 *   Z, S, T, ... -> RZ
 *   Y            -> RZ(pi) X
 *   CCX          -> 6-CX Clifford+T network
 *   RCCX         -> its 3-CX sequence
 *   CSWAP        -> CX CCX CX
 *   CPHASE(t)    -> RZ(t/2) RZ(t/2) CX RZ(-t/2) CX
 *   MCX(k >= 3)  -> V-chain of 2(k-1) CCX through k-1 clean work qubits, plus one CX
 *   MCZ          -> H MCX H on the last qubit
 *
 * Work qubits are appended after the logical register. Equalities hold up
 * to a global phase.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qsg/circuit.hpp"

namespace qsg {

struct LowerOptions {
    /// Size of the clean work-qubit pool. Unset: allocate exactly what the circuit needs.
    std::optional<int> work_qubits;
};

/// An intermediate gate (1q, CX, CCX, RCCX, CPHASE) with its native expansion.
struct LoweredMacro {
    Gate gate;
    GateSequence natives;
};

/// Lowering of one logical gate.
struct LoweredBlock {
    std::size_t source_index{0};
    std::vector<LoweredMacro> macros;
    /// Bitmask over work-qubit offsets (qubit = logical_qubits + offset) used by this block.
    std::uint32_t work_mask{0};

    [[nodiscard]] std::size_t native_count() const noexcept;
};

struct LoweredProgram {
    int logical_qubits{0};
    int work_qubits{0};
    std::vector<LoweredBlock> blocks;

    [[nodiscard]] int total_qubits() const noexcept { return logical_qubits + work_qubits; }
};

bool is_native(const Gate &gate) noexcept;

/// Clean work qubits needed to lower `circuit`.
int required_work_qubits(const Circuit &circuit);

LoweredProgram lower_program(const Circuit &circuit, const LowerOptions &options = {});

/// Flattened native circuit. Probes, measurements and sections are carried
/// over with positions remapped into the native stream.
Circuit lower(const Circuit &circuit, const LowerOptions &options = {});

struct SectionCost {
    std::string label;
    int depth{0};
    int twoq_count{0};
    int oneq_count{0};
};

struct CostReport {
    int depth{0};
    int twoq_count{0};
    int oneq_count{0};
    std::vector<SectionCost> per_iteration;
};

/// ASAP layering of an already-lowered circuit: each gate lands in the first
/// layer after the last use of any of its qubits. Throws CircuitError for
/// non-native gates.
CostReport cost(const Circuit &lowered);

} // namespace qsg
