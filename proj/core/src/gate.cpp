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

#include "qsg/gate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "qsg/errors.hpp"

namespace qsg {
namespace {

using std::numbers::pi;
constexpr Complex I{0.0, 1.0};

struct NameEntry {
    GateKind kind;
    std::string_view name;
};

constexpr std::array<NameEntry, 18> kNames{{
    {GateKind::H, "H"},
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::S, "S"},
    {GateKind::Sdg, "Sdg"},
    {GateKind::T, "T"},
    {GateKind::Tdg, "Tdg"},
    {GateKind::RZ, "RZ"},
    {GateKind::SX, "SX"},
    {GateKind::CX, "CX"},
    {GateKind::CCX, "CCX"},
    {GateKind::RCCX, "RCCX"},
    {GateKind::CSWAP, "CSWAP"},
    {GateKind::MCX, "MCX"},
    {GateKind::MCZ, "MCZ"},
    {GateKind::CPHASE, "CPHASE"},
    {GateKind::PHASE_FLIP_ON, "PHASE_FLIP_ON"},
}};

Matrix one_qubit(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

Matrix diag_phase(std::size_t dim, std::size_t index, Complex phase) {
    Matrix m = Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = phase;
    return m;
}

// Permutation matrix for an X on the last local qubit, active when all
// other local bits are set.
Matrix controlled_not(std::size_t arity) {
    const std::size_t dim = std::size_t{1} << arity;
    const std::size_t target = std::size_t{1} << (arity - 1);
    const std::size_t controls = target - 1;
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t row = ((col & controls) == controls) ? (col ^ target) : col;
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1.0;
    }
    return m;
}

// Embeds a gate acting on local indices 0..width-1 into a 2^width matrix.
Matrix embed_local(const Gate &gate, std::size_t width) {
    const Matrix local = gate_matrix(gate);
    const std::size_t dim = std::size_t{1} << width;
    const std::size_t k = gate.qubits.size();
    std::size_t gate_mask = 0;
    for (Qubit q : gate.qubits) {
        gate_mask |= std::size_t{1} << q;
    }
    Matrix full = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t local_col = 0;
        for (std::size_t j = 0; j < k; ++j) {
            local_col |= ((col >> gate.qubits[j]) & 1U) << j;
        }
        for (std::size_t local_row = 0; local_row < (std::size_t{1} << k); ++local_row) {
            const Complex v = local(static_cast<Eigen::Index>(local_row), static_cast<Eigen::Index>(local_col));
            if (v == Complex{}) {
                continue;
            }
            std::size_t row = col & ~gate_mask;
            for (std::size_t j = 0; j < k; ++j) {
                row |= ((local_row >> j) & 1U) << gate.qubits[j];
            }
            full(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += v;
        }
    }
    return full;
}

const Matrix &rccx_matrix() {
    static const Matrix m = [] {
        Matrix acc = Matrix::Identity(8, 8);
        for (const Gate &g : rccx_sequence(0, 1, 2)) {
            acc = embed_local(g, 3) * acc;
        }
        return acc;
    }();
    return m;
}

std::size_t expected_arity(GateKind kind) {
    switch (kind) {
    case GateKind::CX:
    case GateKind::CPHASE:
        return 2;
    case GateKind::CCX:
    case GateKind::RCCX:
    case GateKind::CSWAP:
        return 3;
    case GateKind::MCX:
    case GateKind::MCZ:
    case GateKind::PHASE_FLIP_ON:
        return 0; // variable
    default:
        return 1;
    }
}

} // namespace

std::string_view gate_name(GateKind kind) noexcept {
    for (const auto &e : kNames) {
        if (e.kind == kind) {
            return e.name;
        }
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) noexcept {
    for (const auto &e : kNames) {
        if (e.name == name) {
            return e.kind;
        }
    }
    return std::nullopt;
}

void validate(const Gate &gate) {
    const std::size_t want = expected_arity(gate.kind);
    if (want != 0 && gate.qubits.size() != want) {
        throw CircuitError(std::string(gate_name(gate.kind)) + " expects " + std::to_string(want) +
                           " qubits, got " + std::to_string(gate.qubits.size()));
    }
    if (gate.qubits.empty()) {
        throw CircuitError(std::string(gate_name(gate.kind)) + " needs at least one qubit");
    }
    if (gate.qubits.size() > 20) {
        throw CircuitError(std::string(gate_name(gate.kind)) + " has too many qubits");
    }
    std::set<Qubit> seen;
    for (Qubit q : gate.qubits) {
        if (q < 0) {
            throw CircuitError("negative qubit index in " + std::string(gate_name(gate.kind)));
        }
        if (!seen.insert(q).second) {
            throw CircuitError("qubit " + std::to_string(q) + " used twice in " +
                               std::string(gate_name(gate.kind)));
        }
    }
    if (gate.kind == GateKind::PHASE_FLIP_ON && gate.qubits.size() < 64 &&
        (gate.mask >> gate.qubits.size()) != 0) {
        throw CircuitError("PHASE_FLIP_ON mask wider than its qubit list");
    }
}

bool is_diagonal(const Gate &gate) noexcept {
    switch (gate.kind) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::RZ:
    case GateKind::MCZ:
    case GateKind::CPHASE:
    case GateKind::PHASE_FLIP_ON:
        return true;
    default:
        return false;
    }
}

std::size_t num_controls(const Gate &gate) noexcept {
    switch (gate.kind) {
    case GateKind::CX:
    case GateKind::CSWAP:
        return 1;
    case GateKind::CCX:
    case GateKind::RCCX:
        return 2;
    case GateKind::MCX:
        return gate.qubits.empty() ? 0 : gate.qubits.size() - 1;
    default:
        return is_diagonal(gate) ? gate.qubits.size() : 0;
    }
}

Matrix gate_matrix(const Gate &gate) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (gate.kind) {
    case GateKind::H:
        return one_qubit(r, r, r, -r);
    case GateKind::X:
        return one_qubit(0, 1, 1, 0);
    case GateKind::Y:
        return one_qubit(0, -I, I, 0);
    case GateKind::Z:
        return one_qubit(1, 0, 0, -1);
    case GateKind::S:
        return one_qubit(1, 0, 0, I);
    case GateKind::Sdg:
        return one_qubit(1, 0, 0, -I);
    case GateKind::T:
        return one_qubit(1, 0, 0, std::polar(1.0, pi / 4));
    case GateKind::Tdg:
        return one_qubit(1, 0, 0, std::polar(1.0, -pi / 4));
    case GateKind::RZ:
        return one_qubit(std::polar(1.0, -gate.angle / 2), 0, 0, std::polar(1.0, gate.angle / 2));
    case GateKind::SX:
        return one_qubit(Complex{0.5, 0.5}, Complex{0.5, -0.5}, Complex{0.5, -0.5}, Complex{0.5, 0.5});
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX:
        return controlled_not(gate.qubits.size());
    case GateKind::RCCX:
        return rccx_matrix();
    case GateKind::CSWAP: {
        // control bit0, t1 bit1, t2 bit2: exchange |011> and |101>.
        Matrix m = Matrix::Identity(8, 8);
        m(3, 3) = 0;
        m(5, 5) = 0;
        m(3, 5) = 1;
        m(5, 3) = 1;
        return m;
    }
    case GateKind::MCZ: {
        const std::size_t dim = std::size_t{1} << gate.qubits.size();
        return diag_phase(dim, dim - 1, -1.0);
    }
    case GateKind::CPHASE:
        return diag_phase(4, 3, std::polar(1.0, gate.angle));
    case GateKind::PHASE_FLIP_ON: {
        const std::size_t dim = std::size_t{1} << gate.qubits.size();
        return diag_phase(dim, static_cast<std::size_t>(gate.mask), -1.0);
    }
    }
    throw CircuitError("unknown gate kind");
}

GateSequence rccx_sequence(Qubit c1, Qubit c2, Qubit target) {
    using namespace gates;
    return {h(target),     t(target),   cx(c2, target), tdg(target), cx(c1, target),
            t(target),     cx(c2, target), tdg(target), h(target)};
}

Gate add_control(const Gate &gate, Qubit control) {
    std::vector<Qubit> qs;
    qs.reserve(gate.qubits.size() + 1);
    qs.push_back(control);
    qs.insert(qs.end(), gate.qubits.begin(), gate.qubits.end());
    switch (gate.kind) {
    case GateKind::X:
        return Gate{GateKind::CX, std::move(qs)};
    case GateKind::CX:
        return Gate{GateKind::CCX, std::move(qs)};
    case GateKind::CCX:
    case GateKind::MCX:
        return Gate{GateKind::MCX, std::move(qs)};
    case GateKind::Z:
    case GateKind::MCZ:
        return Gate{GateKind::MCZ, std::move(qs)};
    case GateKind::S:
        return Gate{GateKind::CPHASE, std::move(qs), pi / 2};
    case GateKind::Sdg:
        return Gate{GateKind::CPHASE, std::move(qs), -pi / 2};
    case GateKind::T:
        return Gate{GateKind::CPHASE, std::move(qs), pi / 4};
    case GateKind::Tdg:
        return Gate{GateKind::CPHASE, std::move(qs), -pi / 4};
    case GateKind::PHASE_FLIP_ON:
        return Gate{GateKind::PHASE_FLIP_ON, std::move(qs), 0.0, (gate.mask << 1) | 1U};
    default:
        throw CircuitError("no controlled form for " + std::string(gate_name(gate.kind)));
    }
}

Gate adjoint(const Gate &gate) {
    Gate out = gate;
    switch (gate.kind) {
    case GateKind::S:
        out.kind = GateKind::Sdg;
        break;
    case GateKind::Sdg:
        out.kind = GateKind::S;
        break;
    case GateKind::T:
        out.kind = GateKind::Tdg;
        break;
    case GateKind::Tdg:
        out.kind = GateKind::T;
        break;
    case GateKind::RZ:
    case GateKind::CPHASE:
        out.angle = -gate.angle;
        break;
    case GateKind::SX:
        throw CircuitError("SX adjoint is not in the gate set");
    default:
        // Remaining kinds are self-inverse (RCCX included: its square is the identity).
        break;
    }
    return out;
}

namespace gates {
Gate h(Qubit q) { return {GateKind::H, {q}}; }
Gate x(Qubit q) { return {GateKind::X, {q}}; }
Gate y(Qubit q) { return {GateKind::Y, {q}}; }
Gate z(Qubit q) { return {GateKind::Z, {q}}; }
Gate s(Qubit q) { return {GateKind::S, {q}}; }
Gate sdg(Qubit q) { return {GateKind::Sdg, {q}}; }
Gate t(Qubit q) { return {GateKind::T, {q}}; }
Gate tdg(Qubit q) { return {GateKind::Tdg, {q}}; }
Gate rz(Qubit q, double angle) { return {GateKind::RZ, {q}, angle}; }
Gate sx(Qubit q) { return {GateKind::SX, {q}}; }
Gate cx(Qubit control, Qubit target) { return {GateKind::CX, {control, target}}; }
Gate ccx(Qubit c1, Qubit c2, Qubit target) { return {GateKind::CCX, {c1, c2, target}}; }
Gate rccx(Qubit c1, Qubit c2, Qubit target) { return {GateKind::RCCX, {c1, c2, target}}; }
Gate cswap(Qubit control, Qubit t1, Qubit t2) { return {GateKind::CSWAP, {control, t1, t2}}; }

Gate mcx(std::vector<Qubit> controls, Qubit target) {
    controls.push_back(target);
    return {GateKind::MCX, std::move(controls)};
}

Gate mcz(std::vector<Qubit> controls, Qubit target) {
    controls.push_back(target);
    return {GateKind::MCZ, std::move(controls)};
}

Gate cphase(Qubit control, Qubit target, double angle) {
    return {GateKind::CPHASE, {control, target}, angle};
}

Gate phase_flip_on(std::vector<Qubit> qubits, std::uint64_t mask) {
    return {GateKind::PHASE_FLIP_ON, std::move(qubits), 0.0, mask};
}
} // namespace gates

} // namespace qsg
