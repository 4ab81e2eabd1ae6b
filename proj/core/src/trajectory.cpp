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

#include "trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <numbers>
#include <optional>

#include "qsg/errors.hpp"

namespace qsg::detail {
namespace {

constexpr double kPruneNorm = 1e-24;

bool diagonal(const std::array<Complex, 4> &m) { return m[1] == Complex{} && m[2] == Complex{}; }

std::array<Complex, 4> mul(const std::array<Complex, 4> &a, const std::array<Complex, 4> &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

std::array<Complex, 4> to_mat2(const Matrix &m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

void phase_on_pair(Statevector &s, Qubit a, Qubit b, Complex phase) {
    const std::size_t ma = std::size_t{1} << a;
    const std::size_t mb = std::size_t{1} << b;
    auto amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & ma) && (i & mb)) {
            amps[i] *= phase;
        }
    }
}

// XOR of AND-monomials over logical qubits; a monomial is a qubit bitmask and 0 is the constant 1.
using Poly = std::vector<std::uint64_t>;

Poly canonical(Poly p) {
    std::sort(p.begin(), p.end());
    Poly out;
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) {
            ++j;
        }
        if ((j - i) % 2 == 1) {
            out.push_back(p[i]);
        }
        i = j;
    }
    return out;
}

Poly poly_mul(const Poly &a, const Poly &b) {
    Poly out;
    for (std::uint64_t x : a) {
        for (std::uint64_t y : b) {
            out.push_back(x | y);
        }
    }
    return canonical(std::move(out));
}

Poly poly_xor(const Poly &a, const Poly &b) {
    Poly out(a);
    out.insert(out.end(), b.begin(), b.end());
    return canonical(std::move(out));
}

bool mentions(const Poly &p, Qubit q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    return std::any_of(p.begin(), p.end(), [&](std::uint64_t m) { return (m & bit) != 0; });
}

bool eval(const Poly &p, std::size_t x) {
    bool v = false;
    for (std::uint64_t m : p) {
        v ^= (x & m) == m;
    }
    return v;
}

// Product of the faulty natives times the inverse of the ideal macro, over the macro's qubits.
std::optional<Matrix> macro_error(const LoweredMacro &macro, std::span<const NativeFault> faults) {
    const auto &qs = macro.gate.qubits;
    auto local = [&](Qubit q) {
        const auto it = std::find(qs.begin(), qs.end(), q);
        return it == qs.end() ? -1 : static_cast<Qubit>(it - qs.begin());
    };
    std::vector<Gate> seq;
    auto pauli = [&](Qubit q, int p) {
        if (p == 1) {
            seq.push_back(gates::x(q));
        } else if (p == 2) {
            seq.push_back(gates::y(q));
        } else if (p == 3) {
            seq.push_back(gates::z(q));
        }
    };
    auto next = faults.begin();
    for (std::uint32_t j = 0; j < macro.natives.size(); ++j) {
        Gate g = macro.natives[j];
        for (Qubit &q : g.qubits) {
            q = local(q);
            if (q < 0) {
                return std::nullopt;
            }
        }
        seq.push_back(g);
        for (; next != faults.end() && next->native == j; ++next) {
            if (g.qubits.size() == 1) {
                pauli(g.qubits[0], next->pauli);
            } else {
                pauli(g.qubits[0], next->pauli % 4);
                pauli(g.qubits[1], next->pauli / 4);
            }
        }
    }
    const int n = static_cast<int>(qs.size());
    const Eigen::Index dim = Eigen::Index{1} << n;
    Matrix u(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        std::vector<Complex> col(static_cast<std::size_t>(dim), Complex{});
        col[static_cast<std::size_t>(c)] = 1.0;
        Statevector s = Statevector::from_amplitudes(std::move(col));
        for (const Gate &g : seq) {
            apply_gate(s, g);
        }
        for (Eigen::Index r = 0; r < dim; ++r) {
            u(r, c) = s[static_cast<std::size_t>(r)];
        }
    }
    return Matrix(u * gate_matrix(macro.gate).adjoint());
}

// Pauli string p (2 bits per qubit: 1 X, 2 Y, 3 Z) with error = phase * P, if any.
std::optional<std::vector<int>> as_pauli(const Matrix &error) {
    const auto n = static_cast<int>(std::countr_zero(static_cast<std::uint64_t>(error.rows())));
    const std::array<Matrix, 4> single = {Matrix::Identity(2, 2), gate_matrix(gates::x(0)),
                                          gate_matrix(gates::y(0)), gate_matrix(gates::z(0))};
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * n)); ++code) {
        Matrix p = Matrix::Identity(1, 1);
        for (int j = n - 1; j >= 0; --j) {
            const Matrix &m = single[(code >> (2 * j)) & 3U];
            Matrix next(p.rows() * 2, p.cols() * 2);
            for (Eigen::Index a = 0; a < p.rows(); ++a) {
                for (Eigen::Index b = 0; b < p.cols(); ++b) {
                    next.block(2 * a, 2 * b, 2, 2) = p(a, b) * m;
                }
            }
            p = std::move(next);
        }
        const Complex overlap = (p.adjoint() * error).trace() / static_cast<double>(error.rows());
        if (std::abs(std::abs(overlap) - 1.0) < 1e-9) {
            std::vector<int> out(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                out[static_cast<std::size_t>(j)] = static_cast<int>((code >> (2 * j)) & 3U);
            }
            return out;
        }
    }
    return std::nullopt;
}

Statevector zero_state(int n) {
    Statevector s(n);
    s[0] = 0.0;
    return s;
}

} // namespace

TrajectoryState::TrajectoryState(const Circuit &circuit, const LoweredProgram &program)
    : program_(&program), logical_gates_(&circuit.gates()), logical_(program.logical_qubits),
      pending_(static_cast<std::size_t>(program.logical_qubits), Mat2{1.0, 0.0, 0.0, 1.0}),
      pending_set_(static_cast<std::size_t>(program.logical_qubits), false),
      pair_angle_(static_cast<std::size_t>(program.logical_qubits),
                  std::vector<double>(static_cast<std::size_t>(program.logical_qubits), 0.0)) {
    if (circuit.num_qubits() != program.logical_qubits || circuit.size() != program.blocks.size()) {
        throw ConfigurationError("lowered program does not match circuit");
    }
    branches_.push_back({0U, std::vector<Poly>(static_cast<std::size_t>(program.work_qubits)), Statevector(logical_)});
}

std::uint32_t TrajectoryState::dirty_work() const noexcept {
    std::uint32_t mask = 0;
    for (const auto &b : branches_) {
        mask |= b.key;
        for (std::size_t w = 0; w < b.f.size(); ++w) {
            if (!b.f[w].empty()) {
                mask |= std::uint32_t{1} << w;
            }
        }
    }
    return mask;
}

TrajectoryState::Poly TrajectoryState::value_of(const Branch &b, Qubit q) const {
    if (q < logical_) {
        return Poly{std::uint64_t{1} << q};
    }
    const auto w = static_cast<std::size_t>(q - logical_);
    return ((b.key >> w) & 1U) ? poly_xor(b.f[w], Poly{0}) : b.f[w];
}

void TrajectoryState::split_into(Branch b, const std::function<bool(const Poly &)> &pred,
                                 std::vector<Branch> &out) const {
    for (std::size_t w = 0; w < b.f.size(); ++w) {
        if (b.f[w].empty() || !pred(b.f[w])) {
            continue;
        }
        const Poly p = std::move(b.f[w]);
        b.f[w].clear();
        const std::uint32_t bit = std::uint32_t{1} << w;
        if (p == Poly{0}) {
            b.key ^= bit;
            split_into(std::move(b), pred, out);
            return;
        }
        Branch one{b.key ^ bit, b.f, zero_state(logical_)};
        auto src = b.psi.amplitudes();
        auto dst = one.psi.amplitudes();
        double n0 = 0.0;
        double n1 = 0.0;
        for (std::size_t x = 0; x < src.size(); ++x) {
            if (eval(p, x)) {
                dst[x] = src[x];
                src[x] = 0.0;
                n1 += std::norm(dst[x]);
            } else {
                n0 += std::norm(src[x]);
            }
        }
        if (n0 >= kPruneNorm) {
            split_into(std::move(b), pred, out);
        }
        if (n1 >= kPruneNorm) {
            split_into(std::move(one), pred, out);
        }
        return;
    }
    out.push_back(std::move(b));
}

void TrajectoryState::materialize(const std::function<bool(const Poly &)> &pred) {
    const bool needed = std::any_of(branches_.begin(), branches_.end(), [&](const Branch &b) {
        return std::any_of(b.f.begin(), b.f.end(), [&](const Poly &p) { return !p.empty() && pred(p); });
    });
    if (!needed) {
        return;
    }
    std::vector<Branch> out;
    for (auto &b : branches_) {
        split_into(std::move(b), pred, out);
    }
    branches_ = std::move(out);
    merge();
}

void TrajectoryState::materialize_mentions(Qubit q) {
    materialize([q](const Poly &p) { return mentions(p, q); });
}

void TrajectoryState::materialize_all() {
    materialize([](const Poly &) { return true; });
}

void TrajectoryState::merge() {
    std::sort(branches_.begin(), branches_.end(), [](const Branch &a, const Branch &b) {
        return a.key != b.key ? a.key < b.key : a.f < b.f;
    });
    std::vector<Branch> out;
    for (auto &b : branches_) {
        if (!out.empty() && out.back().key == b.key && out.back().f == b.f) {
            auto dst = out.back().psi.amplitudes();
            const auto src = b.psi.amplitudes();
            for (std::size_t x = 0; x < dst.size(); ++x) {
                dst[x] += src[x];
            }
        } else {
            out.push_back(std::move(b));
        }
    }
    std::erase_if(out, [](const Branch &b) { return b.psi.norm_squared() < kPruneNorm; });
    if (out.empty()) {
        throw std::logic_error("trajectory state lost all amplitude");
    }
    branches_ = std::move(out);
}

void TrajectoryState::flush_matrix(Qubit q) {
    const auto i = static_cast<std::size_t>(q);
    if (!pending_set_[i]) {
        return;
    }
    if (!diagonal(pending_[i])) {
        materialize_mentions(q);
    }
    for (auto &b : branches_) {
        apply_1q_matrix(b.psi, q, pending_[i]);
    }
    pending_[i] = Mat2{1.0, 0.0, 0.0, 1.0};
    pending_set_[i] = false;
}

void TrajectoryState::flush_pairs(Qubit q) {
    const auto i = static_cast<std::size_t>(q);
    for (std::size_t j = 0; j < pair_angle_[i].size(); ++j) {
        const double angle = pair_angle_[i][j];
        if (angle == 0.0) {
            continue;
        }
        const double wrapped = std::remainder(angle, 2 * std::numbers::pi);
        if (std::abs(wrapped) > 1e-15) {
            const Complex phase = std::polar(1.0, wrapped);
            for (auto &b : branches_) {
                phase_on_pair(b.psi, q, static_cast<Qubit>(j), phase);
            }
        }
        pair_angle_[i][j] = 0.0;
        pair_angle_[j][i] = 0.0;
    }
}

void TrajectoryState::flush_nondiagonal(Qubit q) {
    const auto i = static_cast<std::size_t>(q);
    if (pending_set_[i] && !diagonal(pending_[i])) {
        flush_matrix(q);
    }
}

void TrajectoryState::flush_all() {
    for (Qubit q = 0; q < logical_; ++q) {
        flush_pairs(q);
        flush_matrix(q);
    }
}

void TrajectoryState::fold_1q(Qubit q, const Mat2 &m) {
    const auto i = static_cast<std::size_t>(q);
    if (!diagonal(m)) {
        flush_pairs(q);
    }
    pending_[i] = mul(m, pending_[i]);
    pending_set_[i] = true;
}

void TrajectoryState::accumulate_phase(Qubit a, Qubit b, double angle) {
    flush_nondiagonal(a);
    flush_nondiagonal(b);
    const auto ia = static_cast<std::size_t>(a);
    const auto ib = static_cast<std::size_t>(b);
    const double sum = pair_angle_[ia][ib] + angle;
    pair_angle_[ia][ib] = sum;
    pair_angle_[ib][ia] = sum;
}

void TrajectoryState::apply_logical(const Gate &gate) {
    const auto &qs = gate.qubits;
    if (qs.size() == 1) {
        fold_1q(qs[0], to_mat2(gate_matrix(gate)));
        return;
    }
    if (gate.kind == GateKind::CPHASE) {
        accumulate_phase(qs[0], qs[1], gate.angle);
        return;
    }
    const std::size_t preserved = is_diagonal(gate) ? qs.size() : num_controls(gate);
    for (std::size_t j = 0; j < qs.size(); ++j) {
        if (j < preserved) {
            flush_nondiagonal(qs[j]);
        } else {
            flush_pairs(qs[j]);
            flush_matrix(qs[j]);
            materialize_mentions(qs[j]);
        }
    }
    for (auto &b : branches_) {
        apply_gate(b.psi, gate);
    }
}

void TrajectoryState::phase_work(Qubit q, Complex d0, Complex d1) {
    const auto w = static_cast<std::size_t>(q - logical_);
    for (auto &b : branches_) {
        const bool k = (b.key >> w) & 1U;
        auto amps = b.psi.amplitudes();
        if (b.f[w].empty()) {
            const Complex s = k ? d1 : d0;
            if (s != Complex{1.0}) {
                for (auto &a : amps) {
                    a *= s;
                }
            }
            continue;
        }
        const Poly &p = b.f[w];
        for (std::size_t x = 0; x < amps.size(); ++x) {
            amps[x] *= (k != eval(p, x)) ? d1 : d0;
        }
    }
}

// Classical gate onto a logical target with at least one work control.
void TrajectoryState::emit(const std::vector<Qubit> &controls, Qubit target) {
    for (Qubit c : controls) {
        if (c < logical_) {
            flush_nondiagonal(c);
        }
    }
    flush_pairs(target);
    flush_matrix(target);
    materialize_mentions(target);
    for (auto &b : branches_) {
        Poly product{0};
        for (Qubit c : controls) {
            product = poly_mul(product, value_of(b, c));
        }
        for (std::uint64_t mono : product) {
            std::vector<Qubit> cs;
            for (Qubit q = 0; q < logical_; ++q) {
                if ((mono >> q) & 1U) {
                    cs.push_back(q);
                }
            }
            apply_gate(b.psi, cs.empty() ? gates::x(target) : gates::mcx(cs, target));
        }
    }
}

void TrajectoryState::apply_work(const Gate &gate) {
    const auto &qs = gate.qubits;
    switch (gate.kind) {
    case GateKind::X: {
        const std::uint32_t bit = std::uint32_t{1} << (qs[0] - logical_);
        for (auto &b : branches_) {
            b.key ^= bit;
        }
        return;
    }
    case GateKind::Y: {
        phase_work(qs[0], Complex{0.0, 1.0}, Complex{0.0, -1.0});
        const std::uint32_t bit = std::uint32_t{1} << (qs[0] - logical_);
        for (auto &b : branches_) {
            b.key ^= bit;
        }
        return;
    }
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX: {
        const std::vector<Qubit> controls(qs.begin(), qs.end() - 1);
        const Qubit t = qs.back();
        if (t < logical_) {
            emit(controls, t);
            return;
        }
        for (Qubit c : controls) {
            if (c < logical_) {
                flush_nondiagonal(c);
            }
        }
        const auto w = static_cast<std::size_t>(t - logical_);
        for (auto &b : branches_) {
            Poly product{0};
            for (Qubit c : controls) {
                product = poly_mul(product, value_of(b, c));
            }
            b.f[w] = poly_xor(b.f[w], product);
        }
        return;
    }
    default:
        break;
    }
    if (qs.size() == 1 && is_diagonal(gate)) {
        const Matrix m = gate_matrix(gate);
        phase_work(qs[0], m(0, 0), m(1, 1));
        return;
    }
    apply_branched(qs, gate_matrix(gate));
}

// Generic gate on work qubits: every branch is made definite first.
void TrajectoryState::apply_branched(const std::vector<Qubit> &qs, const Matrix &full) {
    for (Qubit q : qs) {
        if (q < logical_) {
            flush_pairs(q);
            flush_matrix(q);
        }
    }
    materialize_all();
    merge();

    std::vector<std::size_t> local_pos;
    std::vector<std::size_t> work_pos;
    std::uint32_t work_mask = 0;
    std::size_t local_mask = 0;
    for (std::size_t j = 0; j < qs.size(); ++j) {
        if (qs[j] < logical_) {
            local_pos.push_back(j);
            local_mask |= std::size_t{1} << qs[j];
        } else {
            work_pos.push_back(j);
            work_mask |= std::uint32_t{1} << (qs[j] - logical_);
        }
    }
    const std::size_t ldim = std::size_t{1} << local_pos.size();
    const std::size_t wdim = std::size_t{1} << work_pos.size();

    auto key_of = [&](std::uint32_t base, std::size_t w) {
        std::uint32_t key = base;
        for (std::size_t j = 0; j < work_pos.size(); ++j) {
            if ((w >> j) & 1U) {
                key |= std::uint32_t{1} << (qs[work_pos[j]] - logical_);
            }
        }
        return key;
    };
    auto row_of = [&](std::size_t l, std::size_t w) {
        std::size_t r = 0;
        for (std::size_t j = 0; j < local_pos.size(); ++j) {
            r |= ((l >> j) & 1U) << local_pos[j];
        }
        for (std::size_t j = 0; j < work_pos.size(); ++j) {
            r |= ((w >> j) & 1U) << work_pos[j];
        }
        return static_cast<Eigen::Index>(r);
    };

    std::vector<std::size_t> offset(ldim, 0);
    for (std::size_t l = 0; l < ldim; ++l) {
        for (std::size_t j = 0; j < local_pos.size(); ++j) {
            if ((l >> j) & 1U) {
                offset[l] |= std::size_t{1} << qs[local_pos[j]];
            }
        }
    }
    struct Entry {
        std::size_t row;
        std::size_t col;
        Complex value;
    };
    // blocks[w_out * wdim + w_in]: nonzero entries of the logical sub-matrix
    std::vector<std::vector<Entry>> blocks(wdim * wdim);
    for (std::size_t w_out = 0; w_out < wdim; ++w_out) {
        for (std::size_t w_in = 0; w_in < wdim; ++w_in) {
            for (std::size_t r = 0; r < ldim; ++r) {
                for (std::size_t c = 0; c < ldim; ++c) {
                    const Complex v = full(row_of(r, w_out), row_of(c, w_in));
                    if (v != Complex{}) {
                        blocks[w_out * wdim + w_in].push_back({offset[r], offset[c], v});
                    }
                }
            }
        }
    }

    auto find = [&](std::uint32_t key) -> const Branch * {
        const auto it = std::lower_bound(branches_.begin(), branches_.end(), key,
                                         [](const Branch &b, std::uint32_t k) { return b.key < k; });
        return it != branches_.end() && it->key == key ? &*it : nullptr;
    };
    std::vector<std::uint32_t> bases;
    for (const auto &b : branches_) {
        const std::uint32_t base = b.key & ~work_mask;
        if (std::find(bases.begin(), bases.end(), base) == bases.end()) {
            bases.push_back(base);
        }
    }

    const std::size_t free = ((std::size_t{1} << logical_) - 1) & ~local_mask;
    const std::vector<Poly> no_f(static_cast<std::size_t>(program_->work_qubits));
    std::vector<Branch> out;
    for (std::uint32_t base : bases) {
        for (std::size_t w_out = 0; w_out < wdim; ++w_out) {
            Branch *dst = nullptr;
            for (std::size_t w_in = 0; w_in < wdim; ++w_in) {
                const auto &entries = blocks[w_out * wdim + w_in];
                const Branch *src_branch = find(key_of(base, w_in));
                if (entries.empty() || src_branch == nullptr) {
                    continue;
                }
                if (dst == nullptr) {
                    dst = &out.emplace_back(Branch{key_of(base, w_out), no_f, zero_state(logical_)});
                }
                const auto src = src_branch->psi.amplitudes();
                auto d = dst->psi.amplitudes();
                std::size_t s = 0;
                do {
                    for (const Entry &e : entries) {
                        d[s | e.row] += e.value * src[s | e.col];
                    }
                    s = (s - free) & free;
                } while (s != 0);
            }
        }
    }
    branches_ = std::move(out);
    merge();
}

void TrajectoryState::apply(const Gate &gate) {
    check_gate_fits(gate, program_->total_qubits());
    const bool touches_work =
        std::any_of(gate.qubits.begin(), gate.qubits.end(), [&](Qubit q) { return q >= logical_; });
    if (touches_work) {
        apply_work(gate);
    } else {
        apply_logical(gate);
    }
}

void TrajectoryState::apply_pauli(Qubit q, int pauli) {
    switch (pauli) {
    case 1:
        apply(gates::x(q));
        return;
    case 2:
        apply(gates::y(q));
        return;
    case 3:
        apply(gates::z(q));
        return;
    default:
        return;
    }
}

void TrajectoryState::run_block(std::size_t b, std::span<const NativeFault> faults) {
    const LoweredBlock &block = program_->blocks[b];
    if (faults.empty() && (block.work_mask & dirty_work()) == 0) {
        apply(logical_gates_->at(block.source_index));
        return;
    }
    auto next = faults.begin();
    for (std::uint32_t m = 0; m < block.macros.size(); ++m) {
        const LoweredMacro &macro = block.macros[m];
        if (next == faults.end() || next->macro != m) {
            apply(macro.gate);
            continue;
        }
        auto last = next;
        while (last != faults.end() && last->macro == m) {
            ++last;
        }
        const std::span<const NativeFault> here(next, last);
        next = last;
        if (const auto error = macro_error(macro, here)) {
            apply(macro.gate);
            apply_error(macro.gate.qubits, *error);
            continue;
        }
        auto f = here.begin();
        for (std::uint32_t j = 0; j < macro.natives.size(); ++j) {
            const Gate &native = macro.natives[j];
            apply(native);
            for (; f != here.end() && f->native == j; ++f) {
                if (native.qubits.size() == 1) {
                    apply_pauli(native.qubits[0], f->pauli);
                } else {
                    apply_pauli(native.qubits[0], f->pauli % 4);
                    apply_pauli(native.qubits[1], f->pauli / 4);
                }
            }
        }
    }
}

void TrajectoryState::apply_error(const std::vector<Qubit> &qs, const Matrix &error) {
    if (const auto paulis = as_pauli(error)) {
        for (std::size_t j = 0; j < qs.size(); ++j) {
            apply_pauli(qs[j], (*paulis)[j]);
        }
        return;
    }
    if (std::any_of(qs.begin(), qs.end(), [&](Qubit q) { return q >= logical_; })) {
        apply_branched(qs, error);
        return;
    }
    for (Qubit q : qs) {
        flush_pairs(q);
        flush_matrix(q);
        materialize_mentions(q);
    }
    for (auto &b : branches_) {
        apply_matrix(b.psi, qs, error);
    }
}

double TrajectoryState::probability(const ProjectorQuery &query) {
    for (const auto &[q, v] : query.constraints) {
        if (q < logical_) {
            flush_nondiagonal(q);
        }
    }
    materialize_all();
    double acc = 0.0;
    for (const auto &b : branches_) {
        acc += qsg::probability(b.psi, query);
    }
    return acc;
}

std::vector<double> TrajectoryState::marginal(std::span<const Qubit> qubits) {
    for (Qubit q : qubits) {
        flush_nondiagonal(q);
    }
    materialize_all();
    std::vector<double> acc(std::size_t{1} << qubits.size(), 0.0);
    for (const auto &b : branches_) {
        const auto part = marginal_distribution(b.psi, qubits);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            acc[i] += part[i];
        }
    }
    return acc;
}

Statevector TrajectoryState::to_statevector() {
    flush_all();
    materialize_all();
    const int total = program_->total_qubits();
    std::vector<Complex> amps(std::size_t{1} << total, Complex{});
    for (const auto &b : branches_) {
        const std::size_t offset = static_cast<std::size_t>(b.key) << logical_;
        const auto src = b.psi.amplitudes();
        std::copy(src.begin(), src.end(), amps.begin() + static_cast<std::ptrdiff_t>(offset));
    }
    return Statevector::from_amplitudes(std::move(amps));
}

} // namespace qsg::detail
