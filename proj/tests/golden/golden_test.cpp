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

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dense_oracle.hpp"
#include "qsg/builders.hpp"
#include "qsg/transpile.hpp"

namespace {

using qsg::Variant;

const std::filesystem::path kDir = QSG_GOLDEN_DIR;

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    EXPECT_TRUE(in.good()) << p;
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct CircuitCase {
    const char *file;
    Variant variant;
    int n;
    int R;
    std::uint64_t oa;
    std::uint64_t ob;
    bool lowered;
};

void PrintTo(const CircuitCase &c, std::ostream *os) { *os << c.file; }

qsg::ExperimentConfig config_of(const CircuitCase &c) {
    qsg::ExperimentConfig cfg;
    cfg.variant = c.variant;
    cfg.n = c.n;
    cfg.k = 1;
    cfg.R = c.R;
    cfg.OA_mask = c.oa;
    cfg.OB_mask = c.ob;
    return cfg;
}

class GoldenCircuit : public ::testing::TestWithParam<CircuitCase> {};

TEST_P(GoldenCircuit, SerializationIsStable) {
    const auto &c = GetParam();
    qsg::Circuit built = qsg::build(config_of(c));
    if (c.lowered) {
        built = qsg::lower(built);
    }
    EXPECT_EQ(qsg::to_json(built) + "\n", slurp(kDir / "circuits" / c.file));
}

TEST_P(GoldenCircuit, GoldenMatchesDenseOracle) {
    const auto &c = GetParam();
    const qsg::Circuit golden = qsg::circuit_from_json(slurp(kDir / "circuits" / c.file));
    const qsg::Circuit built = qsg::build(config_of(c));
    const int logical = built.num_qubits();
    const auto reference = qsg_oracle::circuit_unitary(built);
    std::vector<std::size_t> cols(std::size_t{1} << logical);
    std::iota(cols.begin(), cols.end(), 0);
    const qsg::Matrix got = qsg::unitary_columns(golden, cols).topRows(Eigen::Index{1} << logical);
    EXPECT_LT(qsg_oracle::distance_up_to_phase(got, reference), 1e-9);
}

INSTANTIATE_TEST_SUITE_P(
    Files, GoldenCircuit,
    ::testing::Values(CircuitCase{"fixed_n1_k1_R1.json", Variant::FIXED, 1, 1, 1, 1, false},
                      CircuitCase{"swapout_n1_k1_R1.json", Variant::QSG_SWAPOUT, 1, 1, 1, 1, false},
                      CircuitCase{"controlled_n1_k1_R2.json", Variant::QSG_CONTROLLED, 1, 2, 1, 1, false},
                      CircuitCase{"swapout_n1_k1_R1_lowered.json", Variant::QSG_SWAPOUT, 1, 1, 1, 1, true}),
    [](const auto &info) {
        std::string name = info.param.file;
        name = name.substr(0, name.find('.'));
        return name;
    });

TEST(GoldenCost, LoweredCountsAreFrozen) {
    const auto doc = nlohmann::json::parse(slurp(kDir / "costs.json"));
    ASSERT_FALSE(doc.at("costs").empty());
    for (const auto &row : doc.at("costs")) {
        qsg::ExperimentConfig cfg;
        cfg.variant = *qsg::variant_from_string(row.at("variant").get<std::string>());
        cfg.n = row.at("n").get<int>();
        cfg.k = row.at("k").get<int>();
        cfg.R = row.at("R").get<int>();
        cfg.OA_mask = std::stoull(row.at("OA_mask").get<std::string>(), nullptr, 2);
        cfg.OB_mask = std::stoull(row.at("OB_mask").get<std::string>(), nullptr, 2);
        const auto report = qsg::cost(qsg::lower(qsg::build(cfg)));
        const std::string tag = row.dump();
        EXPECT_EQ(report.depth, row.at("depth").get<int>()) << tag;
        EXPECT_EQ(report.twoq_count, row.at("twoq").get<int>()) << tag;
        EXPECT_EQ(report.oneq_count, row.at("oneq").get<int>()) << tag;
    }
}

} // namespace
