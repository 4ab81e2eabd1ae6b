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

#pragma once

#include <stdexcept>
#include <string>

namespace qsg {

/// Invalid user-facing configuration (widths, probabilities, shot counts, ...).
class ConfigurationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed circuit: overlapping qubits, wrong arity, out-of-range indices.
class CircuitError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds what an operation supports (e.g. dense matrices that are too large).
class CapabilityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A gate could not be rewritten into the native basis.
class LoweringError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qsg
