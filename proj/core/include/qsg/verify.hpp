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
 * Invariant batteries behind `qsg_bench verify <suite>`.
 *
 * Suites: unitarity, swap-equivalence, ancilla, block-structure, metrics.
 */

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsg {

struct CheckResult {
    std::string name;
    bool passed{false};
    /// Measured quantity (deviation, probability, ...) and the bound it was held to.
    double value{0.0};
    double tolerance{0.0};
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const noexcept;
};

std::span<const std::string_view> verify_suites() noexcept;

/// Throws ConfigurationError for an unknown suite name.
SuiteReport run_verify(std::string_view suite);

/// One line per check: "[PASS] name value=... tol=... detail".
std::string format_report(const SuiteReport &report);

} // namespace qsg
