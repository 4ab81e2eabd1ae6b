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

// Executor for one noisy trajectory over a LoweredProgram.
//
// The state is a sum of branches. A branch holds a logical-register state
// vector psi, a work key k and one XOR-of-AND polynomial f_w per work qubit:
//   sum_x psi(x) |x> |k ^ f(x)>.
// Classical gates on work qubits only edit the polynomials; a work qubit is
// split into definite-key branches when a non-classical gate touches it or a
// logical gate changes a bit its polynomial reads. Single-qubit gates and
// CPHASE angles are buffered and only applied to the amplitudes when a
// later gate does not commute with them.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qsg/circuit.hpp"
#include "qsg/statevector.hpp"
#include "qsg/transpile.hpp"

namespace qsg::detail {

/// Pauli inserted after native `native` of macro `macro`. For a 1q native
/// `pauli` is 1..3 (X, Y, Z); for CX it is 1..15 with pauli % 4 acting on the
/// control and pauli / 4 on the target.
struct NativeFault {
    std::uint32_t macro{0};
    std::uint32_t native{0};
    std::uint8_t pauli{0};
};

class TrajectoryState {
  public:
    TrajectoryState(const Circuit &circuit, const LoweredProgram &program);

    /// Applies any library gate on logical or work qubits.
    void apply(const Gate &gate);

    /// Runs block `b`; `faults` must be sorted by (macro, native).
    void run_block(std::size_t b, std::span<const NativeFault> faults);

    [[nodiscard]] double probability(const ProjectorQuery &query);
    [[nodiscard]] std::vector<double> marginal(std::span<const Qubit> qubits);

    /// Full state over logical + work qubits with everything buffered applied.
    [[nodiscard]] Statevector to_statevector();

    [[nodiscard]] std::uint32_t dirty_work() const noexcept;
    [[nodiscard]] std::size_t branch_count() const noexcept { return branches_.size(); }

  private:
    using Mat2 = std::array<Complex, 4>;

    void fold_1q(Qubit q, const Mat2 &m);
    void accumulate_phase(Qubit a, Qubit b, double angle);
    void apply_logical(const Gate &gate);
    void apply_work(const Gate &gate);
    void apply_branched(const std::vector<Qubit> &qs, const Matrix &full);
    void apply_error(const std::vector<Qubit> &qs, const Matrix &error);
    void emit(const std::vector<Qubit> &controls, Qubit target);
    void phase_work(Qubit w, Complex d0, Complex d1);
    void materialize(const std::function<bool(const std::vector<std::uint64_t> &)> &pred);
    void materialize_mentions(Qubit q);
    void materialize_all();
    void merge();
    void flush_matrix(Qubit q);
    void flush_pairs(Qubit q);
    void flush_nondiagonal(Qubit q);
    void flush_all();
    void apply_pauli(Qubit q, int pauli);

    const LoweredProgram *program_;
    const GateSequence *logical_gates_;
    int logical_;
    /// Monomials are logical-qubit bitmasks; 0 is the constant 1.
    using Poly = std::vector<std::uint64_t>;
    struct Branch {
        std::uint32_t key{0};
        std::vector<Poly> f;
        Statevector psi;
    };
    [[nodiscard]] Poly value_of(const Branch &b, Qubit q) const;
    void split_into(Branch b, const std::function<bool(const Poly &)> &pred, std::vector<Branch> &out) const;

    std::vector<Branch> branches_;
    std::vector<Mat2> pending_;
    std::vector<bool> pending_set_;
    std::vector<std::vector<double>> pair_angle_;
};

} // namespace qsg::detail
