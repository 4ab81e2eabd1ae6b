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
 * Success probability, expected expensive-oracle calls and efficiency.
 *
 * Oracle-call convention: each Grover iteration has two coherent branches
 * (C = 0, C = 1), each nominally running U_B once, so the fixed-order
 * circuit costs 2k calls. A skip-gate circuit saves P(a_t = 1) / P(C = 1)
 * calls in iteration t, with P(C = 1) = 1/2.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "qsg/builders.hpp"
#include "qsg/circuit.hpp"
#include "qsg/noise.hpp"

namespace qsg {

struct Estimate {
    double value{0.0};
    double stderr_{0.0};
};

/// sqrt(p (1 - p) / shots).
double binomial_stderr(double p, std::uint64_t shots);

/// Fraction of shots meeting `rule`, reading classical bits "fA" and "fB".
/// Throws ConfigurationError for an empty histogram.
Estimate p_succ(const Histogram &histogram, SuccessRule rule);

/// Exact success probability of a noiseless final state.
double p_succ_exact(const Circuit &circuit, const Statevector &state, SuccessRule rule);

inline constexpr double kControlProbability = 0.5;

/// FIXED: 2k. Skip-gate variants: 2k - sum_t P(a_t = 1) / P(C = 1), reading
/// probes labelled skip_probe_label(t) for t = 0..k-1; throws ConfigurationError
/// if one is missing.
double expected_ub(std::span<const ProbeReading> probes, int k, Variant variant);

/// p_succ / expected_ub; absent when expected_ub == 0.
std::optional<double> efficiency(double p_succ, double expected_ub);

struct RunMetrics {
    ExperimentConfig config;
    Estimate p_succ;
    double expected_ub{0.0};
    std::optional<double> efficiency;
    int depth{0};
    int twoq_count{0};
    int oneq_count{0};
};

} // namespace qsg
