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
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "qsg/builders.hpp"
#include "qsg/errors.hpp"
#include "qsg/transpile.hpp"

namespace {

using qsg::Circuit;
using qsg::Variant;
namespace gates = qsg::gates;

// Columns of the lowered unitary with every work qubit |0>, restricted to work-|0> rows.
qsg::Matrix logical_block(const Circuit &lowered, int logical) {
    const std::size_t dim = std::size_t{1} << logical;
    std::vector<std::size_t> cols(dim);
    std::iota(cols.begin(), cols.end(), 0);
    const qsg::Matrix full = qsg::unitary_columns(lowered, cols);
    return full.topRows(static_cast<Eigen::Index>(dim));
}

qsg::Matrix random_unitary_circuit_matrix(const Circuit &c) { return qsg_oracle::circuit_unitary(c); }

Circuit random_circuit(std::mt19937_64 &rng, int nq, int count) {
    Circuit c(nq);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (int i = 0; i < count; ++i) {
        std::vector<int> p(static_cast<std::size_t>(nq));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        switch (rng() % 12) {
        case 0:
            c.append(gates::h(p[0]));
            break;
        case 1:
            c.append(gates::t(p[0]));
            break;
        case 2:
            c.append(gates::y(p[0]));
            break;
        case 3:
            c.append(gates::rz(p[0], angle(rng)));
            break;
        case 4:
            c.append(gates::cx(p[0], p[1]));
            break;
        case 5:
            c.append(gates::cphase(p[0], p[1], angle(rng)));
            break;
        case 6:
            c.append(gates::ccx(p[0], p[1], p[2]));
            break;
        case 7:
            c.append(gates::rccx(p[0], p[1], p[2]));
            break;
        case 8:
            c.append(gates::cswap(p[0], p[1], p[2]));
            break;
        case 9:
            c.append(gates::mcx({p[0], p[1], p[2]}, p[3]));
            break;
        case 10:
            c.append(gates::mcz({p[0], p[1], p[2]}, p[3]));
            break;
        default:
            c.append(gates::phase_flip_on({p[0], p[1], p[2], p[3]}, rng() % 16));
            break;
        }
    }
    return c;
}

TEST(Transpile, HadamardIsThreeNatives) {
    Circuit c(1);
    c.append(gates::h(0));
    const Circuit l = qsg::lower(c);
    EXPECT_EQ(l.size(), 3U);
    EXPECT_EQ(qsg::cost(l).depth, 3);
    EXPECT_EQ(qsg::cost(l).oneq_count, 3);
}

TEST(Transpile, CxIsNative) {
    Circuit c(2);
    c.append(gates::cx(0, 1));
    const Circuit l = qsg::lower(c);
    EXPECT_EQ(l.size(), 1U);
    EXPECT_EQ(qsg::cost(l).depth, 1);
    EXPECT_EQ(qsg::cost(l).twoq_count, 1);
}

TEST(Transpile, OutputIsNative) {
    std::mt19937_64 rng(1);
    const Circuit l = qsg::lower(random_circuit(rng, 6, 60));
    for (const auto &g : l.gates()) {
        EXPECT_TRUE(qsg::is_native(g)) << qsg::gate_name(g.kind);
    }
}

TEST(Transpile, LoweringPreservesUnitary) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        const int nq = 4 + trial % 3;
        const Circuit c = random_circuit(rng, nq, 12);
        const Circuit l = qsg::lower(c);
        ASSERT_LE(l.num_qubits(), 8);
        const qsg::Matrix lowered = logical_block(l, nq);
        EXPECT_LT(qsg_oracle::distance_up_to_phase(lowered, random_unitary_circuit_matrix(c)), 1e-9)
            << "trial " << trial;
    }
}

TEST(Transpile, LoweringPreservesBuilderUnitaries) {
    for (auto v : {Variant::FIXED, Variant::QSG_CONTROLLED, Variant::QSG_SWAPOUT}) {
        qsg::ExperimentConfig cfg;
        cfg.n = 1;
        cfg.k = 1;
        cfg.R = 2;
        cfg.OA_mask = 1;
        cfg.OB_mask = 1;
        cfg.variant = v;
        const Circuit layer = qsg::build_layer(cfg);
        const Circuit l = qsg::lower(layer);
        EXPECT_LT(qsg_oracle::distance_up_to_phase(logical_block(l, layer.num_qubits()), qsg::to_unitary(layer)), 1e-9)
            << qsg::to_string(v);
    }
}

TEST(Transpile, WorkPoolIsCheckedAndCarriedOver) {
    Circuit c(5);
    c.append(gates::mcx({0, 1, 2, 3}, 4));
    c.add_probe("p", {{{4, 1}}});
    c.measure(4, "out");
    EXPECT_GT(qsg::required_work_qubits(c), 0);
    const Circuit l = qsg::lower(c);
    EXPECT_EQ(l.num_qubits(), 5 + qsg::required_work_qubits(c));
    ASSERT_EQ(l.probes().size(), 1U);
    EXPECT_EQ(l.probes()[0].position, l.size());
    ASSERT_EQ(l.measurements().size(), 1U);
    EXPECT_THROW((void)qsg::lower(c, {0}), qsg::LoweringError);
    EXPECT_THROW((void)qsg::lower(c, {-1}), qsg::ConfigurationError);
}

TEST(Transpile, ProgramBlocksMirrorCircuit) {
    std::mt19937_64 rng(3);
    const Circuit c = random_circuit(rng, 6, 30);
    const auto program = qsg::lower_program(c);
    ASSERT_EQ(program.blocks.size(), c.size());
    std::size_t natives = 0;
    for (std::size_t b = 0; b < program.blocks.size(); ++b) {
        EXPECT_EQ(program.blocks[b].source_index, b);
        natives += program.blocks[b].native_count();
    }
    EXPECT_EQ(natives, qsg::lower(c).size());
}

TEST(Transpile, DepthLayering) {
    Circuit disjoint(4);
    disjoint.append(gates::cx(0, 1)).append(gates::cx(2, 3));
    EXPECT_EQ(qsg::cost(disjoint).depth, 1);
    Circuit shared(3);
    shared.append(gates::cx(0, 1)).append(gates::cx(1, 2));
    EXPECT_EQ(qsg::cost(shared).depth, 2);
    Circuit logical(2);
    logical.append(gates::h(0));
    EXPECT_THROW((void)qsg::cost(logical), qsg::CircuitError);
}

TEST(Transpile, CostCountsAreConsistent) {
    qsg::ExperimentConfig cfg;
    const auto report = qsg::cost(qsg::lower(qsg::build(cfg)));
    EXPECT_LE(report.depth, report.twoq_count + report.oneq_count);
    EXPECT_EQ(report.per_iteration.size(), static_cast<std::size_t>(cfg.k + 1));
    int twoq = 0;
    for (const auto &s : report.per_iteration) {
        twoq += s.twoq_count;
    }
    EXPECT_EQ(twoq, report.twoq_count);
}

int depth(Variant v, int R) {
    qsg::ExperimentConfig cfg;
    cfg.variant = v;
    cfg.R = R;
    return qsg::cost(qsg::lower(qsg::build(cfg))).depth;
}

TEST(Transpile, SwapOutDepthIsAffineInR) {
    const int d25 = depth(Variant::QSG_SWAPOUT, 25);
    EXPECT_EQ(depth(Variant::QSG_SWAPOUT, 35) - d25, (depth(Variant::QSG_SWAPOUT, 30) - d25) * 2);
}

TEST(Transpile, CostOrdering) {
    const std::vector<int> Rs = {10, 25, 30, 35};
    for (int R : Rs) {
        EXPECT_GT(depth(Variant::QSG_CONTROLLED, R), depth(Variant::FIXED, R)) << R;
    }
    const double ctrl_slope = (depth(Variant::QSG_CONTROLLED, 35) - depth(Variant::QSG_CONTROLLED, 10)) / 25.0;
    const double swap_slope = (depth(Variant::QSG_SWAPOUT, 35) - depth(Variant::QSG_SWAPOUT, 10)) / 25.0;
    const double fixed_slope = (depth(Variant::FIXED, 35) - depth(Variant::FIXED, 10)) / 25.0;
    EXPECT_GT(ctrl_slope, swap_slope);
    EXPECT_EQ(swap_slope, fixed_slope);
}

} // namespace
