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

#include "qsg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsg/errors.hpp"

namespace qsg {
namespace {

bool succeeds(bool fa, bool fb, SuccessRule rule) { return rule == SuccessRule::FB_ONLY ? fb : (fa && fb); }

Qubit measured_qubit(const Circuit &circuit, std::string_view clbit) {
    for (const Measurement &m : circuit.measurements()) {
        if (m.clbit == clbit) {
            return m.qubit;
        }
    }
    throw CircuitError("circuit does not measure " + std::string(clbit));
}

} // namespace

double binomial_stderr(double p, std::uint64_t shots) {
    if (shots == 0) {
        throw ConfigurationError("shots must be positive");
    }
    return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(shots));
}

Estimate p_succ(const Histogram &histogram, SuccessRule rule) {
    const std::uint64_t shots = histogram.shots();
    if (shots == 0) {
        throw ConfigurationError("histogram has no shots");
    }
    const std::size_t a = histogram.clbit_index("fA");
    const std::size_t b = histogram.clbit_index("fB");
    std::uint64_t hits = 0;
    for (std::size_t outcome = 0; outcome < histogram.counts.size(); ++outcome) {
        if (succeeds((outcome >> a) & 1U, (outcome >> b) & 1U, rule)) {
            hits += histogram.counts[outcome];
        }
    }
    const double p = static_cast<double>(hits) / static_cast<double>(shots);
    return {p, binomial_stderr(p, shots)};
}

double p_succ_exact(const Circuit &circuit, const Statevector &state, SuccessRule rule) {
    ProjectorQuery query;
    query.constraints.emplace_back(measured_qubit(circuit, "fB"), 1);
    if (rule == SuccessRule::BOTH_FLAGS) {
        query.constraints.emplace_back(measured_qubit(circuit, "fA"), 1);
    }
    return probability(state, query);
}

double expected_ub(std::span<const ProbeReading> probes, int k, Variant variant) {
    if (k < 0) {
        throw ConfigurationError("k must be >= 0");
    }
    const double baseline = 2.0 * k;
    if (variant == Variant::FIXED) {
        return baseline;
    }
    double skipped = 0.0;
    for (int t = 0; t < k; ++t) {
        const std::string label = skip_probe_label(t);
        const auto it =
            std::find_if(probes.begin(), probes.end(), [&](const ProbeReading &r) { return r.label == label; });
        if (it == probes.end()) {
            throw ConfigurationError("missing probe reading '" + label + "'");
        }
        skipped += it->value / kControlProbability;
    }
    return baseline - skipped;
}

std::optional<double> efficiency(double p_succ, double expected_ub) {
    if (expected_ub == 0.0) {
        return std::nullopt;
    }
    return p_succ / expected_ub;
}

} // namespace qsg
