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

#include "qsg/transpile.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "qsg/errors.hpp"
#include "qsg/library.hpp"

namespace qsg {
namespace {

using std::numbers::pi;

void lower_1q(const Gate &g, GateSequence &out) {
    const Qubit q = g.qubits[0];
    switch (g.kind) {
    case GateKind::H:
        out.push_back(gates::rz(q, pi / 2));
        out.push_back(gates::sx(q));
        out.push_back(gates::rz(q, pi / 2));
        return;
    case GateKind::X:
    case GateKind::SX:
    case GateKind::RZ:
        out.push_back(g);
        return;
    case GateKind::Y:
        out.push_back(gates::rz(q, pi));
        out.push_back(gates::x(q));
        return;
    case GateKind::Z:
        out.push_back(gates::rz(q, pi));
        return;
    case GateKind::S:
        out.push_back(gates::rz(q, pi / 2));
        return;
    case GateKind::Sdg:
        out.push_back(gates::rz(q, -pi / 2));
        return;
    case GateKind::T:
        out.push_back(gates::rz(q, pi / 4));
        return;
    case GateKind::Tdg:
        out.push_back(gates::rz(q, -pi / 4));
        return;
    default:
        throw LoweringError("not a single-qubit gate: " + std::string(gate_name(g.kind)));
    }
}

GateSequence ccx_network(Qubit a, Qubit b, Qubit c) {
    using namespace gates;
    return {h(c),     cx(b, c), tdg(c), cx(a, c), t(c),     cx(b, c),  tdg(c), cx(a, c),
            t(b),     t(c),     h(c),   cx(a, b), t(a),     tdg(b),    cx(a, b)};
}

GateSequence to_natives(const GateSequence &seq) {
    GateSequence out;
    for (const Gate &g : seq) {
        if (g.kind == GateKind::CX) {
            out.push_back(g);
        } else {
            lower_1q(g, out);
        }
    }
    return out;
}

LoweredMacro make_macro(const Gate &g) {
    LoweredMacro m{g, {}};
    const auto &q = g.qubits;
    switch (g.kind) {
    case GateKind::CX:
        m.natives.push_back(g);
        break;
    case GateKind::CCX:
        m.natives = to_natives(ccx_network(q[0], q[1], q[2]));
        break;
    case GateKind::RCCX:
        m.natives = to_natives(rccx_sequence(q[0], q[1], q[2]));
        break;
    case GateKind::CPHASE:
        m.natives = {gates::rz(q[0], g.angle / 2), gates::rz(q[1], g.angle / 2), gates::cx(q[0], q[1]),
                     gates::rz(q[1], -g.angle / 2), gates::cx(q[0], q[1])};
        break;
    default:
        lower_1q(g, m.natives);
        break;
    }
    return m;
}

int work_needed(const Gate &g) {
    switch (g.kind) {
    case GateKind::MCX:
    case GateKind::MCZ:
    case GateKind::PHASE_FLIP_ON: {
        const int controls = static_cast<int>(g.qubits.size()) - 1;
        return controls >= 3 ? controls - 1 : 0;
    }
    default:
        return 0;
    }
}

std::string describe(const Gate &g) {
    std::ostringstream os;
    os << gate_name(g.kind) << "(";
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        os << (i ? "," : "") << g.qubits[i];
    }
    os << ")";
    return os.str();
}

class Lowerer {
  public:
    Lowerer(int logical, int pool) : logical_(logical), pool_(pool) {}

    LoweredBlock lower_gate(const Gate &g, std::size_t index) {
        LoweredBlock block{index, {}, 0};
        const int need = work_needed(g);
        if (need > pool_) {
            throw LoweringError(describe(g) + " at position " + std::to_string(index) + " needs " +
                                std::to_string(need) + " clean work qubits, pool has " + std::to_string(pool_));
        }
        emit(g, block);
        return block;
    }

  private:
    void emit(const Gate &g, LoweredBlock &block) {
        const auto &q = g.qubits;
        switch (g.kind) {
        case GateKind::CSWAP:
            for (const Gate &part : cswap_decomposition(q[0], q[1], q[2])) {
                block.macros.push_back(make_macro(part));
            }
            return;
        case GateKind::MCX:
            emit_mcx(std::vector<Qubit>(q.begin(), q.end() - 1), q.back(), block);
            return;
        case GateKind::MCZ:
            if (q.size() == 1) {
                block.macros.push_back(make_macro(gates::z(q[0])));
                return;
            }
            block.macros.push_back(make_macro(gates::h(q.back())));
            emit_mcx(std::vector<Qubit>(q.begin(), q.end() - 1), q.back(), block);
            block.macros.push_back(make_macro(gates::h(q.back())));
            return;
        case GateKind::PHASE_FLIP_ON: {
            for (std::size_t j = 0; j < q.size(); ++j) {
                if (((g.mask >> j) & 1U) == 0) {
                    block.macros.push_back(make_macro(gates::x(q[j])));
                }
            }
            emit(Gate{GateKind::MCZ, q}, block);
            for (std::size_t j = 0; j < q.size(); ++j) {
                if (((g.mask >> j) & 1U) == 0) {
                    block.macros.push_back(make_macro(gates::x(q[j])));
                }
            }
            return;
        }
        default:
            block.macros.push_back(make_macro(g));
            return;
        }
    }

    void emit_mcx(const std::vector<Qubit> &controls, Qubit target, LoweredBlock &block) {
        const std::size_t k = controls.size();
        if (k == 0) {
            block.macros.push_back(make_macro(gates::x(target)));
            return;
        }
        if (k == 1) {
            block.macros.push_back(make_macro(gates::cx(controls[0], target)));
            return;
        }
        if (k == 2) {
            block.macros.push_back(make_macro(gates::ccx(controls[0], controls[1], target)));
            return;
        }
        std::vector<Gate> chain;
        chain.push_back(gates::ccx(controls[0], controls[1], work(0, block)));
        for (std::size_t j = 2; j < k; ++j) {
            chain.push_back(gates::ccx(controls[j], work(j - 2, block), work(j - 1, block)));
        }
        for (const Gate &c : chain) {
            block.macros.push_back(make_macro(c));
        }
        block.macros.push_back(make_macro(gates::cx(work(k - 2, block), target)));
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            block.macros.push_back(make_macro(*it));
        }
    }

    Qubit work(std::size_t offset, LoweredBlock &block) const {
        block.work_mask |= std::uint32_t{1} << offset;
        return logical_ + static_cast<Qubit>(offset);
    }

    int logical_;
    int pool_;
};

} // namespace

std::size_t LoweredBlock::native_count() const noexcept {
    std::size_t n = 0;
    for (const auto &m : macros) {
        n += m.natives.size();
    }
    return n;
}

bool is_native(const Gate &gate) noexcept {
    switch (gate.kind) {
    case GateKind::RZ:
    case GateKind::SX:
    case GateKind::X:
    case GateKind::CX:
        return true;
    default:
        return false;
    }
}

int required_work_qubits(const Circuit &circuit) {
    int need = 0;
    for (const Gate &g : circuit.gates()) {
        need = std::max(need, work_needed(g));
    }
    return need;
}

LoweredProgram lower_program(const Circuit &circuit, const LowerOptions &options) {
    const int pool = options.work_qubits.value_or(required_work_qubits(circuit));
    if (pool < 0) {
        throw ConfigurationError("work qubit pool must be >= 0");
    }
    if (circuit.num_qubits() + pool > kMaxQubits) {
        throw LoweringError("lowered width " + std::to_string(circuit.num_qubits() + pool) + " exceeds " +
                            std::to_string(kMaxQubits) + " qubits");
    }
    LoweredProgram program{circuit.num_qubits(), pool, {}};
    Lowerer lowerer(circuit.num_qubits(), pool);
    program.blocks.reserve(circuit.size());
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        program.blocks.push_back(lowerer.lower_gate(circuit.gates()[i], i));
    }
    return program;
}

Circuit lower(const Circuit &circuit, const LowerOptions &options) {
    const LoweredProgram program = lower_program(circuit, options);
    std::vector<std::size_t> native_begin(program.blocks.size() + 1, 0);
    for (std::size_t b = 0; b < program.blocks.size(); ++b) {
        native_begin[b + 1] = native_begin[b] + program.blocks[b].native_count();
    }

    Circuit out(program.total_qubits());
    std::size_t next_section = 0;
    const auto &sections = circuit.sections();
    for (std::size_t b = 0; b <= program.blocks.size(); ++b) {
        while (next_section < sections.size() && sections[next_section].begin == b) {
            out.begin_section(sections[next_section++].label);
        }
        if (b == program.blocks.size()) {
            break;
        }
        for (const auto &m : program.blocks[b].macros) {
            out.append(m.natives);
        }
    }
    for (const Probe &p : circuit.probes()) {
        out.add_probe_at(native_begin[p.position], p.label, p.query);
    }
    for (const Measurement &m : circuit.measurements()) {
        out.measure(m.qubit, m.clbit);
    }
    return out;
}

namespace {

struct Tally {
    int depth{0};
    int twoq{0};
    int oneq{0};
};

Tally schedule(const GateSequence &gates, std::size_t begin, std::size_t end, int num_qubits) {
    std::vector<int> last(static_cast<std::size_t>(num_qubits), 0);
    Tally t;
    for (std::size_t i = begin; i < end; ++i) {
        const Gate &g = gates[i];
        int layer = 0;
        for (Qubit q : g.qubits) {
            layer = std::max(layer, last[static_cast<std::size_t>(q)]);
        }
        ++layer;
        for (Qubit q : g.qubits) {
            last[static_cast<std::size_t>(q)] = layer;
        }
        t.depth = std::max(t.depth, layer);
        (g.qubits.size() == 2 ? t.twoq : t.oneq) += 1;
    }
    return t;
}

} // namespace

CostReport cost(const Circuit &lowered) {
    for (const Gate &g : lowered.gates()) {
        if (!is_native(g)) {
            throw CircuitError("cost expects a lowered circuit; found " + std::string(gate_name(g.kind)));
        }
    }
    const auto &gates = lowered.gates();
    const Tally whole = schedule(gates, 0, gates.size(), lowered.num_qubits());
    CostReport report{whole.depth, whole.twoq, whole.oneq, {}};
    const auto &sections = lowered.sections();
    for (std::size_t s = 0; s < sections.size(); ++s) {
        const std::size_t end = s + 1 < sections.size() ? sections[s + 1].begin : gates.size();
        const Tally part = schedule(gates, sections[s].begin, end, lowered.num_qubits());
        report.per_iteration.push_back({sections[s].label, part.depth, part.twoq, part.oneq});
    }
    return report;
}

} // namespace qsg
