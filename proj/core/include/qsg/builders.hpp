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
 * Benchmark circuits: fixed-order Grover and the two skip-gate variants.
 *
 * Register layouts (little-endian qubit indices):
 *
 *   skip-gate  (3n+4): C = 0, xA = 1..n, xB = n+1..2n, fA = 2n+1, fB = 2n+2,
 *                      anc = 2n+3, dB = 2n+4..3n+3
 *   fixed      (2n+3): xA = 0..n-1, xB = n..2n-1, fA = 2n, fB = 2n+1,
 *                      2n+2 reserved and idle
 *
 * Each Grover iteration starts a section labelled "iter t"; the skip-gate
 * circuits carry a probe "a=1@iter t" right after the compute RCCX.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qsg/circuit.hpp"

namespace qsg {

enum class Variant { FIXED, QSG_CONTROLLED, QSG_SWAPOUT };
enum class SuccessRule { FB_ONLY, BOTH_FLAGS };

std::string_view to_string(Variant v) noexcept;
std::string_view to_string(SuccessRule r) noexcept;
std::optional<Variant> variant_from_string(std::string_view s) noexcept;
std::optional<SuccessRule> success_rule_from_string(std::string_view s) noexcept;

struct ExperimentConfig {
    int n{4};
    int k{3};
    int R{1};
    std::uint64_t OA_mask{0b1010};
    std::uint64_t OB_mask{0b0110};
    Variant variant{Variant::QSG_SWAPOUT};
    SuccessRule success_rule{SuccessRule::BOTH_FLAGS};

    /// Throws ConfigurationError naming the offending field.
    void validate() const;
};

RegisterLayout fixed_layout(int n);
RegisterLayout qsg_layout(int n);

/// Label of the per-iteration skip probe, "a=1@iter t".
std::string skip_probe_label(int iteration);

Circuit build_fixed(const ExperimentConfig &config);
Circuit build_qsg(const ExperimentConfig &config);
/// Dispatches on config.variant.
Circuit build(const ExperimentConfig &config);

/// One Grover iteration of the configured variant on its layout, without
/// state preparation, probes or measurements.
Circuit build_layer(const ExperimentConfig &config);

/// Oracle A plus its flag setter on the skip-gate layout.
Circuit build_flag_stage(const ExperimentConfig &config);

/// Flag stage, compute RCCX, skip realization, uncompute RCCX: the part of a
/// layer that differs between the C = 0 and C = 1 branches.
Circuit build_skip_block(const ExperimentConfig &config);

/// Copy of `circuit` with "anc=1@end t" and "dB=0@end t" probes at the end of
/// every iteration section. Requires a skip-gate layout.
Circuit with_boundary_probes(const Circuit &circuit);

enum class CheckOutcome { pass, fail, unsupported };

struct EquivalenceReport {
    CheckOutcome outcome{CheckOutcome::unsupported};
    double max_deviation{0.0};
    std::string detail;
};

/// Compares the swap-out and controlled layers column by column on every
/// input with dB = |0...0>. n must be <= 3; OB_mask == 0 is reported as unsupported.
EquivalenceReport variant_equivalence_check(const ExperimentConfig &config, double tolerance = 1e-9);

} // namespace qsg
