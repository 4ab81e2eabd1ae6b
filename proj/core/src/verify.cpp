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

#include "qsg/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "qsg/builders.hpp"
#include "qsg/errors.hpp"
#include "qsg/library.hpp"
#include "qsg/metrics.hpp"
#include "qsg/transpile.hpp"

namespace qsg {
namespace {

constexpr std::array<std::string_view, 5> kSuites{"unitarity", "swap-equivalence", "ancilla", "block-structure",
                                                  "metrics"};

CheckResult bound(std::string name, double value, double tolerance, std::string detail = {}) {
    return {std::move(name), value <= tolerance, value, tolerance, std::move(detail)};
}

std::vector<Qubit> pick(std::mt19937_64 &rng, int num_qubits, int count) {
    std::vector<Qubit> all(static_cast<std::size_t>(num_qubits));
    for (int i = 0; i < num_qubits; ++i) {
        all[static_cast<std::size_t>(i)] = i;
    }
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(count));
    return all;
}

Gate random_gate(std::mt19937_64 &rng, int num_qubits) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (;;) {
        const int kind = static_cast<int>(rng() % 18);
        const int arity = kind < 10 ? 1 : kind < 12 ? 2 : kind < 15 ? 3 : 0;
        if (arity > num_qubits) {
            continue;
        }
        auto q = pick(rng, num_qubits, arity == 0 ? 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(num_qubits)) : arity);
        switch (kind) {
        case 0: return gates::h(q[0]);
        case 1: return gates::x(q[0]);
        case 2: return gates::y(q[0]);
        case 3: return gates::z(q[0]);
        case 4: return gates::s(q[0]);
        case 5: return gates::sdg(q[0]);
        case 6: return gates::t(q[0]);
        case 7: return gates::tdg(q[0]);
        case 8: return gates::rz(q[0], angle(rng));
        case 9: return gates::sx(q[0]);
        case 10: return gates::cx(q[0], q[1]);
        case 11: return gates::cphase(q[0], q[1], angle(rng));
        case 12: return gates::ccx(q[0], q[1], q[2]);
        case 13: return gates::rccx(q[0], q[1], q[2]);
        case 14: return gates::cswap(q[0], q[1], q[2]);
        case 15: {
            const Qubit target = q.back();
            q.pop_back();
            return gates::mcx(q, target);
        }
        case 16: {
            const Qubit target = q.back();
            q.pop_back();
            return gates::mcz(q, target);
        }
        default: {
            const auto mask = rng() & ((std::uint64_t{1} << q.size()) - 1);
            return gates::phase_flip_on(q, mask);
        }
        }
    }
}

Circuit random_circuit(std::mt19937_64 &rng, int num_qubits, int num_gates) {
    Circuit c(num_qubits);
    for (int i = 0; i < num_gates; ++i) {
        c.append(random_gate(rng, num_qubits));
    }
    return c;
}

Statevector basis(int num_qubits, std::size_t index) {
    std::vector<Complex> amps(std::size_t{1} << num_qubits, Complex{});
    amps[index] = 1.0;
    return Statevector::from_amplitudes(std::move(amps));
}

// Max deviation between lower(c) and c on the given inputs (work qubits |0>), up to one global phase.
double lowering_deviation(const Circuit &c, std::span<const std::size_t> inputs) {
    const Circuit low = lower(c);
    std::optional<Complex> phase;
    double worst = 0.0;
    for (std::size_t in : inputs) {
        const Statevector a = run(c, basis(c.num_qubits(), in)).state;
        const Statevector b = run(low, basis(low.num_qubits(), in)).state;
        if (!phase) {
            std::size_t best = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (std::abs(a[i]) > std::abs(a[best])) {
                    best = i;
                }
            }
            phase = b[best] / a[best];
            phase = *phase / std::abs(*phase);
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            const Complex expect = i < a.size() ? *phase * a[i] : Complex{};
            worst = std::max(worst, std::abs(b[i] - expect));
        }
    }
    return worst;
}

std::vector<std::size_t> sample_inputs(std::mt19937_64 &rng, int num_qubits, std::size_t count) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<std::size_t> out;
    if (dim <= count) {
        for (std::size_t i = 0; i < dim; ++i) {
            out.push_back(i);
        }
        return out;
    }
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(rng() % dim);
    }
    return out;
}

std::string describe(const ExperimentConfig &c) {
    std::ostringstream os;
    os << to_string(c.variant) << " n=" << c.n << " k=" << c.k << " R=" << c.R;
    return os.str();
}

void unitarity_suite(SuiteReport &report) {
    std::mt19937_64 rng(20260417);
    for (int trial = 0; trial < 12; ++trial) {
        const int nq = 2 + trial % 7;
        const Circuit c = random_circuit(rng, nq, 40);
        const Matrix u = to_unitary(c);
        const Matrix id = Matrix::Identity(u.rows(), u.cols());
        const double dev = (u.adjoint() * u - id).cwiseAbs().maxCoeff();
        report.checks.push_back(bound("random U^dag U = I, " + std::to_string(nq) + " qubits, trial " +
                                          std::to_string(trial),
                                      dev, 1e-10));
    }
    for (int trial = 0; trial < 6; ++trial) {
        const int nq = 3 + trial % 4;
        const Circuit c = random_circuit(rng, nq, 30);
        const auto inputs = sample_inputs(rng, nq, 16);
        report.checks.push_back(bound("random lowering preserves unitary, " + std::to_string(nq) + " qubits, trial " +
                                          std::to_string(trial),
                                      lowering_deviation(c, inputs), 1e-9));
    }
    for (Variant v : {Variant::FIXED, Variant::QSG_CONTROLLED, Variant::QSG_SWAPOUT}) {
        for (int n : {1, 2}) {
            ExperimentConfig cfg;
            cfg.n = n;
            cfg.k = 1;
            cfg.R = 2;
            cfg.OA_mask = n == 1 ? 1 : 0b10;
            cfg.OB_mask = n == 1 ? 1 : 0b01;
            cfg.variant = v;
            const Circuit c = build(cfg);
            const auto inputs = sample_inputs(rng, c.num_qubits(), 12);
            report.checks.push_back(
                bound("lowering preserves " + describe(cfg), lowering_deviation(c, inputs), 1e-9));
        }
    }
}

void swap_equivalence_suite(SuiteReport &report) {
    for (int n : {1, 2, 3}) {
        for (int r : {1, 3}) {
            ExperimentConfig cfg;
            cfg.n = n;
            cfg.R = r;
            cfg.OA_mask = (std::uint64_t{1} << n) - 1;
            cfg.OB_mask = 1;
            const EquivalenceReport eq = variant_equivalence_check(cfg);
            report.checks.push_back({"swap-out layer == controlled layer on dB=0, n=" + std::to_string(n) +
                                         " R=" + std::to_string(r),
                                     eq.outcome == CheckOutcome::pass, eq.max_deviation, 1e-9, eq.detail});
        }
    }
    ExperimentConfig zero;
    zero.n = 2;
    zero.OA_mask = 0b01;
    zero.OB_mask = 0;
    const EquivalenceReport eq = variant_equivalence_check(zero);
    report.checks.push_back({"OB_mask=0 reported unsupported", eq.outcome == CheckOutcome::unsupported, 0.0, 0.0,
                             eq.detail});
}

void ancilla_suite(SuiteReport &report) {
    for (Variant v : {Variant::QSG_SWAPOUT, Variant::QSG_CONTROLLED}) {
        ExperimentConfig cfg;
        cfg.n = 4;
        cfg.k = 3;
        cfg.R = 35;
        cfg.variant = v;
        const RunResult result = run(with_boundary_probes(build(cfg)));
        for (int t = 0; t < cfg.k; ++t) {
            const std::string it = std::to_string(t);
            report.checks.push_back(
                bound(describe(cfg) + ": P(anc=1) after iter " + it, result.probe("anc=1@end " + it), 1e-10));
            report.checks.push_back(bound(describe(cfg) + ": P(dB!=0) after iter " + it,
                                          std::abs(1.0 - result.probe("dB=0@end " + it)), 1e-10));
        }
        report.checks.push_back(
            bound(describe(cfg) + ": |1 - norm|", std::abs(1.0 - result.state.norm_squared()), 1e-8));
    }
}

void block_structure_suite(SuiteReport &report) {
    for (Variant v : {Variant::QSG_SWAPOUT, Variant::QSG_CONTROLLED}) {
        for (int r : {1, 3}) {
            ExperimentConfig cfg;
            cfg.n = 1;
            cfg.k = 1;
            cfg.R = r;
            cfg.OA_mask = 1;
            cfg.OB_mask = 1;
            cfg.variant = v;
            const RegisterLayout l = qsg_layout(1);
            const Matrix m = to_unitary(build_skip_block(cfg));
            const Matrix vfl = to_unitary(build_flag_stage(cfg));
            const Matrix k = m * vfl.adjoint();

            Circuit ub_circuit(1);
            ub_circuit.append(expensive_oracle({1, cfg.OB_mask, r}, std::vector<Qubit>{0}));
            const Matrix ub = to_unitary(ub_circuit);

            double dev_c1 = 0.0;
            double dev_c0 = 0.0;
            for (Eigen::Index col = 0; col < k.cols(); ++col) {
                const auto i = static_cast<std::size_t>(col);
                auto bitv = [&](Qubit q) { return static_cast<int>((i >> q) & 1U); };
                if (bitv(*l.anc) != 0 || bitv(l.dB[0]) != 0) {
                    continue;
                }
                const int xb = bitv(l.xB[0]);
                const bool skip = bitv(*l.control) == 1 && bitv(l.fA) == 1;
                Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(k.rows());
                if (skip) {
                    expect(col) = 1.0;
                } else {
                    for (int xo = 0; xo < 2; ++xo) {
                        const std::size_t row = (i & ~(std::size_t{1} << l.xB[0])) |
                                                (static_cast<std::size_t>(xo) << l.xB[0]);
                        expect(static_cast<Eigen::Index>(row)) = ub(xo, xb);
                    }
                }
                const double dev = (k.col(col) - expect).cwiseAbs().maxCoeff();
                (bitv(*l.control) == 1 ? dev_c1 : dev_c0) = std::max(bitv(*l.control) == 1 ? dev_c1 : dev_c0, dev);
            }
            report.checks.push_back(bound(describe(cfg) + ": C=1 block = diag(U_B U_A, I U_A)", dev_c1, 1e-10));
            report.checks.push_back(bound(describe(cfg) + ": C=0 block = U_B U_A", dev_c0, 1e-10));
        }
    }
}

void metrics_suite(SuiteReport &report) {
    report.checks.push_back(
        bound("stderr(p=0.7565, shots=4000) = 0.0068", std::abs(binomial_stderr(0.7565, 4000) - 0.0068), 5e-5));
    Histogram h{{"fA", "fB"}, {0, 0, 0, 0}};
    h.counts[0b11] = 3026;
    h.counts[0b00] = 974;
    const Estimate e = p_succ(h, SuccessRule::BOTH_FLAGS);
    report.checks.push_back(bound("p_succ(3026/4000) = 0.7565", std::abs(e.value - 0.7565), 1e-12));
    report.checks.push_back(
        bound("efficiency(0.751, 4.53) = 0.166", std::abs(*efficiency(0.751, 4.53) - 0.166), 5e-4));
    report.checks.push_back(
        bound("efficiency(0.763, 4.49) = 0.170", std::abs(*efficiency(0.763, 4.49) - 0.170), 5e-4));
    report.checks.push_back({"efficiency with expected_ub = 0 is absent", !efficiency(0.5, 0.0).has_value(), 0.0,
                             0.0, {}});

    ExperimentConfig cfg;
    cfg.variant = Variant::FIXED;
    report.checks.push_back(bound("FIXED expected_ub at k=3 = 6", std::abs(expected_ub({}, 3, Variant::FIXED) - 6.0), 0.0));
    report.checks.push_back(bound("expected_ub at k=0 = 0", std::abs(expected_ub({}, 0, Variant::QSG_SWAPOUT)), 0.0));

    for (Variant v : {Variant::QSG_SWAPOUT, Variant::QSG_CONTROLLED}) {
        cfg.variant = v;
        const RunResult r = run(build(cfg));
        const double e_ub = expected_ub(r.probes, cfg.k, v);
        std::ostringstream detail;
        detail.precision(12);
        detail << "expected_ub=" << e_ub;
        report.checks.push_back({describe(cfg) + ": noiseless expected_ub in (4, 5)", e_ub > 4.0 && e_ub < 5.0, e_ub,
                                 5.0, detail.str()});
        report.checks.push_back(bound(describe(cfg) + ": noiseless expected_ub <= 2k", e_ub - 2.0 * cfg.k, 0.0));
    }
}

} // namespace

bool SuiteReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

std::span<const std::string_view> verify_suites() noexcept { return kSuites; }

SuiteReport run_verify(std::string_view suite) {
    SuiteReport report{std::string(suite), {}};
    if (suite == "unitarity") {
        unitarity_suite(report);
    } else if (suite == "swap-equivalence") {
        swap_equivalence_suite(report);
    } else if (suite == "ancilla") {
        ancilla_suite(report);
    } else if (suite == "block-structure") {
        block_structure_suite(report);
    } else if (suite == "metrics") {
        metrics_suite(report);
    } else {
        std::string known;
        for (std::string_view s : kSuites) {
            known += (known.empty() ? "" : ", ") + std::string(s);
        }
        throw ConfigurationError("unknown verify suite '" + std::string(suite) + "' (known: " + known + ")");
    }
    return report;
}

std::string format_report(const SuiteReport &report) {
    std::ostringstream os;
    for (const CheckResult &c : report.checks) {
        char nums[96];
        std::snprintf(nums, sizeof nums, "value=%.3e tol=%.1e", c.value, c.tolerance);
        os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  " << nums;
        if (!c.detail.empty()) {
            os << "  (" << c.detail << ")";
        }
        os << '\n';
    }
    const auto failed = std::count_if(report.checks.begin(), report.checks.end(), [](const CheckResult &c) { return !c.passed; });
    os << report.suite << ": " << (report.checks.size() - static_cast<std::size_t>(failed)) << "/" << report.checks.size()
       << " checks passed\n";
    return os.str();
}

} // namespace qsg
