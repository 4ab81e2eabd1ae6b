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

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "qsg/circuit.hpp"
#include "qsg/errors.hpp"
#include "qsg/statevector.hpp"

namespace {

using qsg::Complex;
using qsg::Gate;
namespace gates = qsg::gates;

Gate random_gate(std::mt19937_64 &rng, int nq) {
    std::vector<int> perm(static_cast<std::size_t>(nq));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    const int max_kind = nq >= 3 ? 17 : (nq == 2 ? 11 : 9);
    switch (std::uniform_int_distribution<int>(0, max_kind)(rng)) {
    case 0:
        return gates::h(perm[0]);
    case 1:
        return gates::x(perm[0]);
    case 2:
        return gates::y(perm[0]);
    case 3:
        return gates::z(perm[0]);
    case 4:
        return gates::s(perm[0]);
    case 5:
        return gates::sdg(perm[0]);
    case 6:
        return gates::t(perm[0]);
    case 7:
        return gates::tdg(perm[0]);
    case 8:
        return gates::rz(perm[0], angle(rng));
    case 9:
        return gates::sx(perm[0]);
    case 10:
        return gates::cx(perm[0], perm[1]);
    case 11:
        return gates::cphase(perm[0], perm[1], angle(rng));
    case 12:
        return gates::ccx(perm[0], perm[1], perm[2]);
    case 13:
        return gates::rccx(perm[0], perm[1], perm[2]);
    case 14:
        return gates::cswap(perm[0], perm[1], perm[2]);
    case 15:
        return gates::mcx({perm[0], perm[1]}, perm[2]);
    case 16:
        return gates::mcz({perm[0], perm[1]}, perm[2]);
    default:
        return gates::phase_flip_on({perm[0], perm[1], perm[2]}, rng() % 8);
    }
}

TEST(Statevector, InitState) {
    const auto one = qsg::init_state(1);
    EXPECT_EQ(one.size(), 2U);
    EXPECT_EQ(one[0], Complex(1.0));
    EXPECT_EQ(one[1], Complex(0.0));
    const auto two = qsg::init_state(2);
    ASSERT_EQ(two.size(), 4U);
    EXPECT_EQ(two[0], Complex(1.0));
    const auto big = qsg::init_state(16);
    EXPECT_EQ(big.size(), 65536U);
    EXPECT_DOUBLE_EQ(big.norm_squared(), 1.0);
}

TEST(Statevector, RejectsBadWidth) {
    EXPECT_THROW(qsg::init_state(0), qsg::ConfigurationError);
    EXPECT_THROW(qsg::Statevector::from_amplitudes({1.0, 0.0, 0.0}), qsg::ConfigurationError);
}

TEST(Statevector, HadamardOnZero) {
    auto s = qsg::init_state(1);
    qsg::apply_gate(s, gates::h(0));
    EXPECT_NEAR(s[0].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s[1].real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(Statevector, LittleEndianX) {
    auto s = qsg::init_state(2);
    qsg::apply_gate(s, gates::x(0));
    EXPECT_EQ(s[1], Complex(1.0));
    EXPECT_EQ(s[0], Complex(0.0));
}

TEST(Statevector, CxOnOne) {
    auto s = qsg::init_state(2);
    qsg::apply_gate(s, gates::x(0));
    qsg::apply_gate(s, gates::cx(0, 1));
    EXPECT_EQ(s[3], Complex(1.0));
}

TEST(Statevector, ProbabilityExamples) {
    auto s = qsg::init_state(2);
    qsg::apply_gate(s, gates::h(0));
    qsg::apply_gate(s, gates::h(1));
    EXPECT_NEAR(qsg::probability(s, {{{0, 1}}}), 0.5, 1e-15);
    auto t = qsg::init_state(2);
    qsg::apply_gate(t, gates::x(0));
    qsg::apply_gate(t, gates::x(1));
    EXPECT_DOUBLE_EQ(qsg::probability(t, {{{0, 1}, {1, 1}}}), 1.0);
}

TEST(Statevector, ProjectorValidation) {
    const auto s = qsg::init_state(2);
    EXPECT_THROW((void)qsg::probability(s, {{{2, 1}}}), qsg::CircuitError);
    EXPECT_THROW((void)qsg::probability(s, {{{0, 2}}}), qsg::CircuitError);
    EXPECT_THROW((void)qsg::probability(s, {{{0, 1}, {0, 0}}}), qsg::CircuitError);
}

TEST(Statevector, GateOutOfRange) {
    auto s = qsg::init_state(2);
    EXPECT_THROW(qsg::apply_gate(s, gates::x(2)), qsg::CircuitError);
    EXPECT_THROW(qsg::apply_gate(s, gates::cx(1, 1)), qsg::CircuitError);
}

TEST(Statevector, NormPreservedOverManyGates) {
    std::mt19937_64 rng(11);
    auto s = qsg::init_state(10);
    for (int i = 0; i < 100000; ++i) {
        qsg::apply_gate(s, random_gate(rng, 10));
    }
    EXPECT_LT(std::abs(1.0 - s.norm_squared()), 1e-8);
}

TEST(Statevector, RandomCircuitsAreUnitary) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int nq = 1 + trial % 8;
        qsg::Circuit c(nq);
        for (int g = 0; g < 40; ++g) {
            c.append(random_gate(rng, nq));
        }
        const qsg::Matrix u = qsg::to_unitary(c);
        const qsg::Matrix id = qsg::Matrix::Identity(u.rows(), u.cols());
        EXPECT_LT((u.adjoint() * u - id).cwiseAbs().maxCoeff(), 1e-10) << "qubits " << nq;
    }
}

TEST(Statevector, KernelsMatchKroneckerOracle) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int nq = 1 + trial % 5;
        qsg::Circuit c(nq);
        for (int g = 0; g < 25; ++g) {
            c.append(random_gate(rng, nq));
        }
        const double d = (qsg::to_unitary(c) - qsg_oracle::circuit_unitary(c)).cwiseAbs().maxCoeff();
        EXPECT_LT(d, 1e-10) << "trial " << trial;
    }
}

TEST(Statevector, TwoQubitGateOnProductState) {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        const int nq = 2 + trial % 5;
        std::vector<std::array<Complex, 2>> phi(static_cast<std::size_t>(nq));
        for (auto &f : phi) {
            f = {Complex(g(rng), g(rng)), Complex(g(rng), g(rng))};
            const double norm = std::sqrt(std::norm(f[0]) + std::norm(f[1]));
            f[0] /= norm;
            f[1] /= norm;
        }
        std::vector<Complex> amps(std::size_t{1} << nq);
        for (std::size_t x = 0; x < amps.size(); ++x) {
            Complex a = 1.0;
            for (int q = 0; q < nq; ++q) {
                a *= phi[static_cast<std::size_t>(q)][(x >> q) & 1U];
            }
            amps[x] = a;
        }
        auto s = qsg::Statevector::from_amplitudes(amps);
        const int i = static_cast<int>(rng() % static_cast<unsigned>(nq));
        int j = static_cast<int>(rng() % static_cast<unsigned>(nq - 1));
        j += j >= i ? 1 : 0;
        const qsg::Matrix random = qsg::Matrix::Random(4, 4);
        const qsg::Matrix u = Eigen::HouseholderQR<qsg::Matrix>(random).householderQ();
        const std::vector<qsg::Qubit> qs = {i, j};
        qsg::apply_matrix(s, qs, u);

        Eigen::VectorXcd local(4);
        for (int l = 0; l < 4; ++l) {
            local(l) = phi[static_cast<std::size_t>(i)][l & 1] * phi[static_cast<std::size_t>(j)][(l >> 1) & 1];
        }
        const Eigen::VectorXcd out = u * local;
        double worst = 0.0;
        for (std::size_t x = 0; x < amps.size(); ++x) {
            Complex rest = 1.0;
            for (int q = 0; q < nq; ++q) {
                if (q != i && q != j) {
                    rest *= phi[static_cast<std::size_t>(q)][(x >> q) & 1U];
                }
            }
            const auto l = static_cast<Eigen::Index>(((x >> i) & 1U) | (((x >> j) & 1U) << 1));
            worst = std::max(worst, std::abs(s[x] - rest * out(l)));
        }
        EXPECT_LT(worst, 1e-12);
    }
}

TEST(Statevector, XMovesMassBetweenSectors) {
    std::mt19937_64 rng(2);
    auto s = qsg::init_state(5);
    for (int g = 0; g < 30; ++g) {
        qsg::apply_gate(s, random_gate(rng, 5));
    }
    for (int k = 0; k < 5; ++k) {
        const double p1 = qsg::probability(s, {{{k, 1}}});
        const double p0 = qsg::probability(s, {{{k, 0}}});
        auto t = s;
        qsg::apply_gate(t, gates::x(k));
        EXPECT_DOUBLE_EQ(qsg::probability(t, {{{k, 0}}}), p1);
        EXPECT_DOUBLE_EQ(qsg::probability(t, {{{k, 1}}}), p0);
    }
}

TEST(Statevector, MarginalSumsToOne) {
    auto s = qsg::init_state(3);
    qsg::apply_gate(s, gates::h(0));
    qsg::apply_gate(s, gates::cx(0, 2));
    const std::vector<qsg::Qubit> qs = {2, 0};
    const auto m = qsg::marginal_distribution(s, qs);
    ASSERT_EQ(m.size(), 4U);
    EXPECT_NEAR(m[0], 0.5, 1e-15);
    EXPECT_NEAR(m[3], 0.5, 1e-15);
    EXPECT_NEAR(m[1] + m[2], 0.0, 1e-15);
}

TEST(Statevector, ApplyMatrixValidation) {
    auto s = qsg::init_state(2);
    const std::vector<qsg::Qubit> qs = {0};
    EXPECT_THROW(qsg::apply_matrix(s, qs, qsg::Matrix::Identity(4, 4)), qsg::CircuitError);
    const std::vector<qsg::Qubit> rep = {0, 0};
    EXPECT_THROW(qsg::apply_matrix(s, rep, qsg::Matrix::Identity(4, 4)), qsg::CircuitError);
}

} // namespace
