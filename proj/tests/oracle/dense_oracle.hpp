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

// Brute-force unitaries built from Kronecker products and projector sums.
// Shares only the Gate/Circuit data types with the engine.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qsg/circuit.hpp"

namespace qsg_oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

inline M mat2(C a, C b, C c, C d) {
    M m(2, 2);
    m << a, b, c, d;
    return m;
}

inline M kron(const M &a, const M &b) {
    M out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline M eye(int n) { return M::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n); }

inline const M &P0() {
    static const M m = mat2(1, 0, 0, 0);
    return m;
}
inline const M &P1() {
    static const M m = mat2(0, 0, 0, 1);
    return m;
}

// Little-endian: qubit 0 is the rightmost Kronecker factor.
inline M embed(const std::vector<std::pair<int, M>> &factors, int nq) {
    M out = M::Identity(1, 1);
    for (int q = nq - 1; q >= 0; --q) {
        const M *f = nullptr;
        for (const auto &[qq, m] : factors) {
            if (qq == q) {
                f = &m;
            }
        }
        out = kron(out, f != nullptr ? *f : eye(1));
    }
    return out;
}

inline M single(qsg::GateKind kind, double angle) {
    using K = qsg::GateKind;
    const double r = 1.0 / std::sqrt(2.0);
    const double pi = std::numbers::pi;
    switch (kind) {
    case K::H:
        return mat2(r, r, r, -r);
    case K::X:
        return mat2(0, 1, 1, 0);
    case K::Y:
        return mat2(0, C(0, -1), C(0, 1), 0);
    case K::Z:
        return mat2(1, 0, 0, -1);
    case K::S:
        return mat2(1, 0, 0, C(0, 1));
    case K::Sdg:
        return mat2(1, 0, 0, C(0, -1));
    case K::T:
        return mat2(1, 0, 0, std::exp(C(0, pi / 4)));
    case K::Tdg:
        return mat2(1, 0, 0, std::exp(C(0, -pi / 4)));
    case K::RZ:
        return mat2(std::exp(C(0, -angle / 2)), 0, 0, std::exp(C(0, angle / 2)));
    case K::SX:
        return mat2(C(0.5, 0.5), C(0.5, -0.5), C(0.5, -0.5), C(0.5, 0.5));
    default:
        throw std::invalid_argument("not a single-qubit kind");
    }
}

// I - P + P (x) U, with P the all-ones projector on the controls.
inline M controlled(const std::vector<int> &controls, int target, const M &u, int nq) {
    std::vector<std::pair<int, M>> proj;
    for (int c : controls) {
        proj.emplace_back(c, P1());
    }
    const M p = embed(proj, nq);
    auto with_u = proj;
    with_u.emplace_back(target, u);
    return eye(nq) - p + embed(with_u, nq);
}

// Phase e^{i phi} on the basis states where every listed qubit matches `bits`.
inline M pattern_phase(const std::vector<int> &qubits, std::uint64_t bits, C phase, int nq) {
    std::vector<std::pair<int, M>> proj;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        proj.emplace_back(qubits[j], ((bits >> j) & 1U) ? P1() : P0());
    }
    return eye(nq) + (phase - 1.0) * embed(proj, nq);
}

inline M gate_unitary(const qsg::Gate &g, int nq);

inline M margolus(int c1, int c2, int t, int nq) {
    using qsg::GateKind;
    auto one = [&](GateKind k) { return embed({{t, single(k, 0)}}, nq); };
    auto cx = [&](int c) { return controlled({c}, t, single(GateKind::X, 0), nq); };
    const std::vector<M> seq = {one(GateKind::H), one(GateKind::T), cx(c2),  one(GateKind::Tdg), cx(c1),
                                one(GateKind::T), cx(c2),         one(GateKind::Tdg), one(GateKind::H)};
    M acc = eye(nq);
    for (const M &m : seq) {
        acc = m * acc;
    }
    return acc;
}

inline M gate_unitary(const qsg::Gate &g, int nq) {
    using K = qsg::GateKind;
    const auto &q = g.qubits;
    switch (g.kind) {
    case K::CX:
    case K::CCX:
    case K::MCX:
        return controlled(std::vector<int>(q.begin(), q.end() - 1), q.back(), single(K::X, 0), nq);
    case K::MCZ:
        return pattern_phase(std::vector<int>(q.begin(), q.end()), ~std::uint64_t{0}, -1.0, nq);
    case K::CPHASE:
        return pattern_phase({q[0], q[1]}, 3, std::exp(C(0, g.angle)), nq);
    case K::PHASE_FLIP_ON:
        return pattern_phase(std::vector<int>(q.begin(), q.end()), g.mask, -1.0, nq);
    case K::CSWAP: {
        const M cx12 = controlled({q[2]}, q[1], single(K::X, 0), nq);
        return cx12 * controlled({q[0], q[1]}, q[2], single(K::X, 0), nq) * cx12;
    }
    case K::RCCX:
        return margolus(q[0], q[1], q[2], nq);
    default:
        return embed({{q[0], single(g.kind, g.angle)}}, nq);
    }
}

inline M circuit_unitary(const qsg::Circuit &c) {
    M acc = eye(c.num_qubits());
    for (const qsg::Gate &g : c.gates()) {
        acc = gate_unitary(g, c.num_qubits()) * acc;
    }
    return acc;
}

/// max |a - e^{i phi} b| with phi fixed by the largest entry of b.
inline double distance_up_to_phase(const M &a, const M &b) {
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    const C phase = a(r, c) / b(r, c);
    return (a - (phase / std::abs(phase)) * b).cwiseAbs().maxCoeff();
}

} // namespace qsg_oracle
