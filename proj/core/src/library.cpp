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

#include "qsg/library.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "qsg/errors.hpp"

namespace qsg {
namespace {

void append_zero_bit_x(GateSequence &out, std::span<const Qubit> qubits, std::uint64_t mask) {
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        if (((mask >> j) & 1U) == 0) {
            out.push_back(gates::x(qubits[j]));
        }
    }
}

void check_width(const OracleSpec &spec, std::span<const Qubit> qubits) {
    spec.validate();
    if (static_cast<int>(qubits.size()) != spec.num_qubits) {
        throw CircuitError("oracle expects " + std::to_string(spec.num_qubits) + " qubits, got " +
                           std::to_string(qubits.size()));
    }
}

} // namespace

void OracleSpec::validate() const {
    if (num_qubits < 1 || num_qubits > 20) {
        throw ConfigurationError("oracle width must be in [1, 20]");
    }
    if (mask >> num_qubits != 0) {
        throw ConfigurationError("mask " + std::to_string(mask) + " does not fit in " + std::to_string(num_qubits) +
                                 " bits");
    }
    if (reps < 1) {
        throw ConfigurationError("reps must be >= 1");
    }
}

GateSequence phase_oracle(const OracleSpec &spec, std::span<const Qubit> qubits) {
    check_width(spec, qubits);
    GateSequence out;
    append_zero_bit_x(out, qubits, spec.mask);
    std::vector<Qubit> controls(qubits.begin(), qubits.end() - 1);
    out.push_back(gates::mcz(std::move(controls), qubits.back()));
    append_zero_bit_x(out, qubits, spec.mask);
    return out;
}

GateSequence expensive_oracle(const OracleSpec &spec, std::span<const Qubit> qubits) {
    GateSequence out = phase_oracle(spec, qubits);
    out.reserve(expensive_oracle_size(spec));
    for (int rep = 1; rep < spec.reps; ++rep) {
        for (Qubit q : qubits) {
            out.push_back(gates::t(q));
            out.push_back(gates::tdg(q));
        }
    }
    return out;
}

std::size_t expensive_oracle_size(const OracleSpec &spec) {
    spec.validate();
    const auto n = static_cast<std::size_t>(spec.num_qubits);
    const auto zeros = n - static_cast<std::size_t>(std::popcount(spec.mask));
    return 2 * zeros + 1 + static_cast<std::size_t>(spec.reps - 1) * 2 * n;
}

GateSequence rccx(Qubit c1, Qubit c2, Qubit target) { return rccx_sequence(c1, c2, target); }

GateSequence cswap_block(Qubit control, std::span<const Qubit> reg1, std::span<const Qubit> reg2) {
    if (reg1.size() != reg2.size()) {
        throw CircuitError("cswap_block registers differ in length (" + std::to_string(reg1.size()) + " vs " +
                           std::to_string(reg2.size()) + ")");
    }
    GateSequence out;
    out.reserve(reg1.size());
    for (std::size_t i = 0; i < reg1.size(); ++i) {
        Gate g = gates::cswap(control, reg1[i], reg2[i]);
        validate(g);
        out.push_back(std::move(g));
    }
    std::vector<Qubit> all(reg1.begin(), reg1.end());
    all.insert(all.end(), reg2.begin(), reg2.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw CircuitError("cswap_block registers overlap");
    }
    return out;
}

GateSequence cswap_decomposition(Qubit control, Qubit t1, Qubit t2) {
    return {gates::cx(t2, t1), gates::ccx(control, t1, t2), gates::cx(t2, t1)};
}

GateSequence set_flag(std::span<const Qubit> data, Qubit flag, std::uint64_t mask) {
    if (std::find(data.begin(), data.end(), flag) != data.end()) {
        throw CircuitError("flag qubit " + std::to_string(flag) + " is part of the data register");
    }
    if (data.empty()) {
        throw CircuitError("set_flag needs a data register");
    }
    if (data.size() < 64 && (mask >> data.size()) != 0) {
        throw ConfigurationError("flag mask wider than the data register");
    }
    GateSequence out;
    append_zero_bit_x(out, data, mask);
    out.push_back(gates::mcx(std::vector<Qubit>(data.begin(), data.end()), flag));
    append_zero_bit_x(out, data, mask);
    return out;
}

GateSequence diffusion(std::span<const Qubit> qubits) {
    if (qubits.empty()) {
        throw CircuitError("diffusion needs at least one qubit");
    }
    GateSequence out;
    for (Qubit q : qubits) {
        out.push_back(gates::h(q));
    }
    for (Qubit q : qubits) {
        out.push_back(gates::x(q));
    }
    out.push_back(gates::mcz(std::vector<Qubit>(qubits.begin(), qubits.end() - 1), qubits.back()));
    for (Qubit q : qubits) {
        out.push_back(gates::x(q));
    }
    for (Qubit q : qubits) {
        out.push_back(gates::h(q));
    }
    return out;
}

GateSequence controlled(const GateSequence &body, Qubit control) {
    GateSequence out;
    out.reserve(body.size());
    for (const Gate &g : body) {
        out.push_back(add_control(g, control));
    }
    return out;
}

} // namespace qsg
