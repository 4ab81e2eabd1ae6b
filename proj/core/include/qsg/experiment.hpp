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
 * Configuration sweeps: build, lower, cost, simulate and tabulate.
 *
 * Config file (JSON):
 *
 *   {
 *     "n": 4, "k": 3, "R": [25, 30, 35],
 *     "OA_mask": "1010", "OB_mask": "0110",
 *     "variants": ["FIXED", "QSG_SWAPOUT"],
 *     "success_rule": "BOTH_FLAGS",
 *     "noise": {"p1": 2e-4, "p2": 2e-3, "p_ro": 1e-2, "shots": 4000, "seed": 7},
 *     "output": "results.csv", "format": "csv", "threads": 0
 *   }
 *
 * Masks are integers or binary strings written most significant bit first;
 * bit j marks data qubit j. noise.seed is mandatory.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qsg/builders.hpp"
#include "qsg/metrics.hpp"
#include "qsg/noise.hpp"

namespace qsg {

struct SweepConfig {
    int n{4};
    int k{3};
    std::vector<int> R{1};
    std::uint64_t OA_mask{0b1010};
    std::uint64_t OB_mask{0b0110};
    std::vector<Variant> variants{Variant::FIXED, Variant::QSG_SWAPOUT};
    SuccessRule success_rule{SuccessRule::BOTH_FLAGS};
    NoiseConfig noise;
    std::string output;
    std::string format{"csv"};
    unsigned threads{0};

    /// Throws ConfigurationError naming the offending field.
    void validate() const;

    [[nodiscard]] ExperimentConfig point(Variant variant, int R) const;
};

/// Throws ConfigurationError naming the field for malformed documents.
SweepConfig parse_sweep_config(std::string_view json_text);
SweepConfig load_sweep_config(const std::filesystem::path &path);

/// Seed of the (variant, R) point, derived from the master seed.
std::uint64_t point_seed(std::uint64_t master_seed, Variant variant, int R) noexcept;

struct ResultRow {
    RunMetrics metrics;
    std::uint64_t shots{0};
    std::uint64_t master_seed{0};
    std::uint64_t seed{0};
    double noiseless_p_succ{0.0};
    double noiseless_expected_ub{0.0};
    std::vector<ProbeReading> probes;
    std::vector<ProbeReading> noiseless_probes;
};

/// One configuration point: noiseless probes plus noisy shots with `noise.seed` as given.
ResultRow run_point(const ExperimentConfig &config, const NoiseConfig &noise, const SamplerOptions &options = {});

using ProgressFn = std::function<void(const ResultRow &)>;

/// Rows in config order: variants outer, R inner.
std::vector<ResultRow> run_sweep(const SweepConfig &config, const ProgressFn &progress = {});

std::string to_csv(const std::vector<ResultRow> &rows);
std::string to_json(const std::vector<ResultRow> &rows, const SweepConfig &config);

} // namespace qsg
