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

#include "qsg/statevector.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "qsg/errors.hpp"

namespace qsg {
namespace {

using Index = std::size_t;

// Calls fn(i) for every index i = base | s where s ranges over subsets of `free_bits`.
template <typename Fn>
inline void for_each_subset(Index base, Index free_bits, Fn &&fn) {
    Index s = 0;
    do {
        fn(base | s);
        s = (s - free_bits) & free_bits;
    } while (s != 0);
}

inline Index bit(Qubit q) { return Index{1} << q; }

void apply_single(std::span<Complex> amps, Index all, Qubit q, Complex m00, Complex m01, Complex m10,
                  Complex m11) {
    const Index b = bit(q);
    for (Index hi = 0; hi <= all; hi += 2 * b) {
        Complex *lo = amps.data() + hi;
        Complex *up = lo + b;
        for (Index j = 0; j < b; ++j) {
            const Complex a0 = lo[j];
            const Complex a1 = up[j];
            lo[j] = m00 * a0 + m01 * a1;
            up[j] = m10 * a0 + m11 * a1;
        }
    }
}

void apply_hadamard(std::span<Complex> amps, Index all, Qubit q) {
    const Index b = bit(q);
    const double r = 1.0 / std::sqrt(2.0);
    for (Index hi = 0; hi <= all; hi += 2 * b) {
        Complex *lo = amps.data() + hi;
        Complex *up = lo + b;
        for (Index j = 0; j < b; ++j) {
            const Complex a0 = lo[j];
            const Complex a1 = up[j];
            lo[j] = (a0 + a1) * r;
            up[j] = (a0 - a1) * r;
        }
    }
}

void apply_phase_on_ones(std::span<Complex> amps, Index all, Index ones, Complex phase) {
    for_each_subset(ones, all & ~ones, [&](Index i) { amps[i] *= phase; });
}

void apply_controlled_x(std::span<Complex> amps, Index all, Index controls, Index target) {
    for_each_subset(controls, all & ~(controls | target),
                    [&](Index i) { std::swap(amps[i], amps[i | target]); });
}

} // namespace

Statevector::Statevector(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ConfigurationError("num_qubits must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                                 std::to_string(num_qubits));
    }
    num_qubits_ = num_qubits;
    amplitudes_.assign(Index{1} << num_qubits, Complex{});
    amplitudes_[0] = 1.0;
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes) {
    const Index n = amplitudes.size();
    if (n < 2 || !std::has_single_bit(n) || std::countr_zero(n) > kMaxQubits) {
        throw ConfigurationError("amplitude count must be a power of two between 2 and 2^" +
                                 std::to_string(kMaxQubits));
    }
    Statevector s;
    s.num_qubits_ = std::countr_zero(n);
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

double Statevector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const Complex &a : amplitudes_) {
        acc += std::norm(a);
    }
    return acc;
}

void ProjectorQuery::validate(int num_qubits) const {
    std::set<Qubit> seen;
    for (const auto &[q, v] : constraints) {
        if (q < 0 || q >= num_qubits) {
            throw CircuitError("projector qubit " + std::to_string(q) + " out of range");
        }
        if (v != 0 && v != 1) {
            throw CircuitError("projector bit value must be 0 or 1");
        }
        if (!seen.insert(q).second) {
            throw CircuitError("projector constrains qubit " + std::to_string(q) + " twice");
        }
    }
}

Statevector init_state(int num_qubits) { return Statevector(num_qubits); }

void check_gate_fits(const Gate &gate, int num_qubits) {
    validate(gate);
    for (Qubit q : gate.qubits) {
        if (q >= num_qubits) {
            throw CircuitError(std::string(gate_name(gate.kind)) + " touches qubit " + std::to_string(q) +
                               " on a " + std::to_string(num_qubits) + "-qubit register");
        }
    }
}

void apply_gate(Statevector &state, const Gate &gate) {
    check_gate_fits(gate, state.num_qubits());
    auto amps = state.amplitudes();
    const Index all = state.size() - 1;
    const auto &qs = gate.qubits;
    using std::numbers::pi;

    switch (gate.kind) {
    case GateKind::X:
        apply_controlled_x(amps, all, 0, bit(qs[0]));
        return;
    case GateKind::Z:
        apply_phase_on_ones(amps, all, bit(qs[0]), -1.0);
        return;
    case GateKind::S:
        apply_phase_on_ones(amps, all, bit(qs[0]), Complex{0.0, 1.0});
        return;
    case GateKind::Sdg:
        apply_phase_on_ones(amps, all, bit(qs[0]), Complex{0.0, -1.0});
        return;
    case GateKind::T:
        apply_phase_on_ones(amps, all, bit(qs[0]), std::polar(1.0, pi / 4));
        return;
    case GateKind::Tdg:
        apply_phase_on_ones(amps, all, bit(qs[0]), std::polar(1.0, -pi / 4));
        return;
    case GateKind::H:
        apply_hadamard(amps, all, qs[0]);
        return;
    case GateKind::Y:
    case GateKind::SX:
    case GateKind::RZ: {
        const Matrix m = gate_matrix(gate);
        apply_single(amps, all, qs[0], m(0, 0), m(0, 1), m(1, 0), m(1, 1));
        return;
    }
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX: {
        Index controls = 0;
        for (std::size_t j = 0; j + 1 < qs.size(); ++j) {
            controls |= bit(qs[j]);
        }
        apply_controlled_x(amps, all, controls, bit(qs.back()));
        return;
    }
    case GateKind::MCZ: {
        Index ones = 0;
        for (Qubit q : qs) {
            ones |= bit(q);
        }
        apply_phase_on_ones(amps, all, ones, -1.0);
        return;
    }
    case GateKind::CPHASE:
        apply_phase_on_ones(amps, all, bit(qs[0]) | bit(qs[1]), std::polar(1.0, gate.angle));
        return;
    case GateKind::PHASE_FLIP_ON: {
        Index span_mask = 0;
        Index pattern = 0;
        for (std::size_t j = 0; j < qs.size(); ++j) {
            span_mask |= bit(qs[j]);
            if ((gate.mask >> j) & 1U) {
                pattern |= bit(qs[j]);
            }
        }
        for_each_subset(pattern, all & ~span_mask, [&](Index i) { amps[i] = -amps[i]; });
        return;
    }
    case GateKind::CSWAP: {
        const Index c = bit(qs[0]);
        const Index t1 = bit(qs[1]);
        const Index t2 = bit(qs[2]);
        for_each_subset(c | t1, all & ~(c | t1 | t2), [&](Index i) { std::swap(amps[i], amps[i ^ t1 ^ t2]); });
        return;
    }
    case GateKind::RCCX:
        apply_matrix(state, qs, gate_matrix(gate));
        return;
    }
}

void apply_1q_matrix(Statevector &state, Qubit q, const std::array<Complex, 4> &m) {
    if (q < 0 || q >= state.num_qubits()) {
        throw CircuitError("qubit " + std::to_string(q) + " out of range");
    }
    const Index all = state.size() - 1;
    if (m[1] == Complex{} && m[2] == Complex{}) {
        if (m[0] != Complex{1.0, 0.0}) {
            for_each_subset(0, all & ~bit(q), [&](Index i) { state[i] *= m[0]; });
        }
        if (m[3] != Complex{1.0, 0.0}) {
            apply_phase_on_ones(state.amplitudes(), all, bit(q), m[3]);
        }
        return;
    }
    apply_single(state.amplitudes(), all, q, m[0], m[1], m[2], m[3]);
}

void apply_matrix(Statevector &state, std::span<const Qubit> qubits, const Matrix &local) {
    const std::size_t k = qubits.size();
    const Index dim = Index{1} << k;
    if (static_cast<Index>(local.rows()) != dim || static_cast<Index>(local.cols()) != dim) {
        throw CircuitError("local matrix size does not match qubit count");
    }
    Index span_mask = 0;
    for (Qubit q : qubits) {
        if (q < 0 || q >= state.num_qubits()) {
            throw CircuitError("apply_matrix qubit " + std::to_string(q) + " out of range");
        }
        if (span_mask & bit(q)) {
            throw CircuitError("apply_matrix qubit " + std::to_string(q) + " repeated");
        }
        span_mask |= bit(q);
    }
    std::vector<Index> offsets(dim);
    for (Index l = 0; l < dim; ++l) {
        Index off = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if ((l >> j) & 1U) {
                off |= bit(qubits[j]);
            }
        }
        offsets[l] = off;
    }
    struct Entry {
        Index row;
        Index col;
        Complex value;
    };
    std::vector<Entry> entries;
    for (Index r = 0; r < dim; ++r) {
        for (Index c = 0; c < dim; ++c) {
            const Complex v = local(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            if (v != Complex{}) {
                entries.push_back({r, c, v});
            }
        }
    }
    auto amps = state.amplitudes();
    const Index all = state.size() - 1;
    std::vector<Complex> in(dim);
    for_each_subset(0, all & ~span_mask, [&](Index base) {
        for (Index l = 0; l < dim; ++l) {
            in[l] = amps[base | offsets[l]];
            amps[base | offsets[l]] = 0.0;
        }
        for (const Entry &e : entries) {
            amps[base | offsets[e.row]] += e.value * in[e.col];
        }
    });
}

double probability(const Statevector &state, const ProjectorQuery &query) {
    query.validate(state.num_qubits());
    Index fixed = 0;
    Index pattern = 0;
    for (const auto &[q, v] : query.constraints) {
        fixed |= bit(q);
        if (v == 1) {
            pattern |= bit(q);
        }
    }
    const auto amps = state.amplitudes();
    double acc = 0.0;
    for_each_subset(pattern, (state.size() - 1) & ~fixed, [&](Index i) { acc += std::norm(amps[i]); });
    return acc;
}

std::vector<double> marginal_distribution(const Statevector &state, std::span<const Qubit> qubits) {
    for (Qubit q : qubits) {
        if (q < 0 || q >= state.num_qubits()) {
            throw CircuitError("marginal qubit " + std::to_string(q) + " out of range");
        }
    }
    std::vector<double> dist(Index{1} << qubits.size(), 0.0);
    const auto amps = state.amplitudes();
    for (Index i = 0; i < amps.size(); ++i) {
        Index outcome = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            outcome |= ((i >> qubits[j]) & 1U) << j;
        }
        dist[outcome] += std::norm(amps[i]);
    }
    return dist;
}

} // namespace qsg
