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
 * Stochastic Pauli trajectories over the native gate stream.
 *
 * Every shot is one trajectory: after each native 1q gate a uniformly random
 * X/Y/Z is inserted with probability p1, after each CX one of the 15
 * non-identity two-qubit Paulis with probability p2. The measured qubits are
 * then sampled from the trajectory's final state and each classical bit is
 * flipped with probability p_ro.
 *
 * Trajectory i draws from its own generator seeded by trajectory_seed(seed, i),
 * so results do not depend on the thread count.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsg/circuit.hpp"
#include "qsg/transpile.hpp"

namespace qsg {

struct NoiseConfig {
    double p1{0.0};
    double p2{0.0};
    double p_ro{0.0};
    std::uint64_t shots{1000};
    std::uint64_t seed{0};

    /// Throws ConfigurationError for probabilities outside [0, 1] or zero shots.
    void validate() const;

    /// p1 = 2e-4, p2 = 2e-3, p_ro = 1e-2.
    static NoiseConfig device_like(std::uint64_t shots, std::uint64_t seed);
};

struct SamplerOptions {
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads{0};
};

/// Shot counts indexed by outcome; bit j of an outcome is classical bit j
/// (measurement declaration order).
struct Histogram {
    std::vector<std::string> clbits;
    std::vector<std::uint64_t> counts;

    [[nodiscard]] std::uint64_t shots() const noexcept;
    /// Index of the classical bit called `name`; throws std::out_of_range.
    [[nodiscard]] std::size_t clbit_index(std::string_view name) const;
    /// Outcome written as one character per classical bit, in declaration order.
    [[nodiscard]] std::string label(std::size_t outcome) const;
    Histogram &operator+=(const Histogram &other);
};

struct ShotResult {
    Histogram histogram;
    /// Probe readings averaged over trajectories, in circuit probe order.
    std::vector<ProbeReading> probe_means;
};

std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t trajectory) noexcept;

ShotResult sample_shots(const Circuit &circuit, const NoiseConfig &noise, const SamplerOptions &options = {});

/// Same as above with a pre-lowered program (must come from lower_program(circuit)).
ShotResult sample_shots(const Circuit &circuit, const LoweredProgram &program, const NoiseConfig &noise,
                        const SamplerOptions &options = {});

} // namespace qsg
