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

#include "qsg/builders.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qsg/errors.hpp"
#include "qsg/library.hpp"

namespace qsg {
namespace {

std::vector<Qubit> range(Qubit begin, int count) {
    std::vector<Qubit> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = begin + i;
    }
    return out;
}

std::vector<Qubit> concat(const std::vector<Qubit> &a, const std::vector<Qubit> &b) {
    std::vector<Qubit> out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

OracleSpec oracle_a(const ExperimentConfig &c) { return {c.n, c.OA_mask, 1}; }
OracleSpec oracle_b(const ExperimentConfig &c) { return {c.n, c.OB_mask, c.R}; }

void append_skip_realization(Circuit &qc, const ExperimentConfig &config, const RegisterLayout &l) {
    const Qubit anc = *l.anc;
    if (config.variant == Variant::QSG_SWAPOUT) {
        qc.append(cswap_block(anc, l.xB, l.dB));
        qc.append(expensive_oracle(oracle_b(config), l.xB));
        qc.append(cswap_block(anc, l.xB, l.dB));
    } else {
        // U_B runs on anc = 0: flip, control every gate on anc = 1, flip back.
        qc.append(gates::x(anc));
        qc.append(controlled(expensive_oracle(oracle_b(config), l.xB), anc));
        qc.append(gates::x(anc));
    }
}

void append_flag_stage(Circuit &qc, const ExperimentConfig &config, const RegisterLayout &l) {
    qc.append(phase_oracle(oracle_a(config), l.xA));
    qc.append(set_flag(l.xA, l.fA, config.OA_mask));
}

void append_qsg_iteration(Circuit &qc, const ExperimentConfig &config, const RegisterLayout &l, int iteration,
                          bool with_probe) {
    append_flag_stage(qc, config, l);
    qc.append(gates::rccx(*l.control, l.fA, *l.anc));
    if (with_probe) {
        qc.add_probe(skip_probe_label(iteration), ProjectorQuery{{{*l.anc, 1}}});
    }
    append_skip_realization(qc, config, l);
    qc.append(set_flag(l.xB, l.fB, config.OB_mask));
    qc.append(gates::rccx(*l.control, l.fA, *l.anc));
    qc.append(diffusion(concat(l.xA, l.xB)));
}

void append_fixed_iteration(Circuit &qc, const ExperimentConfig &config, const RegisterLayout &l) {
    append_flag_stage(qc, config, l);
    qc.append(expensive_oracle(oracle_b(config), l.xB));
    qc.append(set_flag(l.xB, l.fB, config.OB_mask));
    qc.append(diffusion(concat(l.xA, l.xB)));
}

RegisterLayout layout_for(const ExperimentConfig &config) {
    return config.variant == Variant::FIXED ? fixed_layout(config.n) : qsg_layout(config.n);
}

int width_for(const ExperimentConfig &config) {
    return config.variant == Variant::FIXED ? 2 * config.n + 3 : 3 * config.n + 4;
}

ExperimentConfig with_variant(ExperimentConfig config, Variant v) {
    config.variant = v;
    return config;
}

} // namespace

std::string_view to_string(Variant v) noexcept {
    switch (v) {
    case Variant::FIXED:
        return "FIXED";
    case Variant::QSG_CONTROLLED:
        return "QSG_CONTROLLED";
    case Variant::QSG_SWAPOUT:
        return "QSG_SWAPOUT";
    }
    return "?";
}

std::string_view to_string(SuccessRule r) noexcept {
    return r == SuccessRule::FB_ONLY ? "FB_ONLY" : "BOTH_FLAGS";
}

std::optional<Variant> variant_from_string(std::string_view s) noexcept {
    for (Variant v : {Variant::FIXED, Variant::QSG_CONTROLLED, Variant::QSG_SWAPOUT}) {
        if (to_string(v) == s) {
            return v;
        }
    }
    return std::nullopt;
}

std::optional<SuccessRule> success_rule_from_string(std::string_view s) noexcept {
    for (SuccessRule r : {SuccessRule::FB_ONLY, SuccessRule::BOTH_FLAGS}) {
        if (to_string(r) == s) {
            return r;
        }
    }
    return std::nullopt;
}

void ExperimentConfig::validate() const {
    const int max_n = variant == Variant::FIXED ? (kMaxQubits - 3) / 2 : (kMaxQubits - 4) / 3;
    if (n < 1 || n > max_n) {
        throw ConfigurationError("n must be in [1, " + std::to_string(max_n) + "] for " +
                                 std::string(to_string(variant)) + ", got " + std::to_string(n));
    }
    if (k < 0) {
        throw ConfigurationError("k must be >= 0");
    }
    if (R < 1) {
        throw ConfigurationError("R must be >= 1");
    }
    if ((OA_mask >> n) != 0) {
        throw ConfigurationError("OA_mask does not fit in n bits");
    }
    if ((OB_mask >> n) != 0) {
        throw ConfigurationError("OB_mask does not fit in n bits");
    }
    if (variant == Variant::QSG_SWAPOUT && OB_mask == 0) {
        throw ConfigurationError("OB_mask must be nonzero for QSG_SWAPOUT: the dummy register |0...0> "
                                 "would be marked");
    }
}

RegisterLayout fixed_layout(int n) {
    RegisterLayout l;
    l.n = n;
    l.xA = range(0, n);
    l.xB = range(n, n);
    l.fA = 2 * n;
    l.fB = 2 * n + 1;
    l.anc = 2 * n + 2;
    return l;
}

RegisterLayout qsg_layout(int n) {
    RegisterLayout l;
    l.n = n;
    l.control = 0;
    l.xA = range(1, n);
    l.xB = range(n + 1, n);
    l.fA = 2 * n + 1;
    l.fB = 2 * n + 2;
    l.anc = 2 * n + 3;
    l.dB = range(2 * n + 4, n);
    return l;
}

std::string skip_probe_label(int iteration) { return "a=1@iter " + std::to_string(iteration); }

Circuit build_fixed(const ExperimentConfig &config) {
    ExperimentConfig c = with_variant(config, Variant::FIXED);
    c.validate();
    const RegisterLayout l = fixed_layout(c.n);
    Circuit qc(2 * c.n + 3);
    qc.set_layout(l);
    qc.begin_section("prep");
    for (Qubit q : concat(l.xA, l.xB)) {
        qc.append(gates::h(q));
    }
    for (int t = 0; t < c.k; ++t) {
        qc.begin_section("iter " + std::to_string(t));
        append_fixed_iteration(qc, c, l);
    }
    qc.measure(l.fA, "fA");
    qc.measure(l.fB, "fB");
    return qc;
}

Circuit build_qsg(const ExperimentConfig &config) {
    config.validate();
    if (config.variant == Variant::FIXED) {
        throw ConfigurationError("build_qsg needs a QSG variant");
    }
    const RegisterLayout l = qsg_layout(config.n);
    Circuit qc(3 * config.n + 4);
    qc.set_layout(l);
    qc.begin_section("prep");
    for (Qubit q : concat(concat(l.xA, l.xB), {*l.control})) {
        qc.append(gates::h(q));
    }
    for (int t = 0; t < config.k; ++t) {
        qc.begin_section("iter " + std::to_string(t));
        append_qsg_iteration(qc, config, l, t, true);
    }
    qc.measure(l.fA, "fA");
    qc.measure(l.fB, "fB");
    return qc;
}

Circuit build(const ExperimentConfig &config) {
    return config.variant == Variant::FIXED ? build_fixed(config) : build_qsg(config);
}

Circuit build_layer(const ExperimentConfig &config) {
    config.validate();
    const RegisterLayout l = layout_for(config);
    Circuit qc(width_for(config));
    qc.set_layout(l);
    if (config.variant == Variant::FIXED) {
        append_fixed_iteration(qc, config, l);
    } else {
        append_qsg_iteration(qc, config, l, 0, false);
    }
    return qc;
}

Circuit build_flag_stage(const ExperimentConfig &config) {
    config.validate();
    const RegisterLayout l = qsg_layout(config.n);
    Circuit qc(3 * config.n + 4);
    qc.set_layout(l);
    append_flag_stage(qc, config, l);
    return qc;
}

Circuit build_skip_block(const ExperimentConfig &config) {
    config.validate();
    if (config.variant == Variant::FIXED) {
        throw ConfigurationError("skip block needs a QSG variant");
    }
    const RegisterLayout l = qsg_layout(config.n);
    Circuit qc(3 * config.n + 4);
    qc.set_layout(l);
    append_flag_stage(qc, config, l);
    qc.append(gates::rccx(*l.control, l.fA, *l.anc));
    append_skip_realization(qc, config, l);
    qc.append(gates::rccx(*l.control, l.fA, *l.anc));
    return qc;
}

Circuit with_boundary_probes(const Circuit &circuit) {
    const auto &layout = circuit.layout();
    if (!layout || !layout->anc || !layout->control) {
        throw ConfigurationError("boundary probes need a skip-gate layout");
    }
    Circuit out = circuit;
    const auto &sections = circuit.sections();
    for (std::size_t s = 0; s < sections.size(); ++s) {
        const std::string &label = sections[s].label;
        if (label.rfind("iter ", 0) != 0) {
            continue;
        }
        const std::size_t end = s + 1 < sections.size() ? sections[s + 1].begin : circuit.size();
        const std::string t = label.substr(5);
        out.add_probe_at(end, "anc=1@end " + t, ProjectorQuery{{{*layout->anc, 1}}});
        ProjectorQuery dummy_clear;
        for (Qubit q : layout->dB) {
            dummy_clear.constraints.emplace_back(q, 0);
        }
        out.add_probe_at(end, "dB=0@end " + t, std::move(dummy_clear));
    }
    return out;
}

EquivalenceReport variant_equivalence_check(const ExperimentConfig &config, double tolerance) {
    if (config.n > 3) {
        throw CapabilityError("variant_equivalence_check supports n <= 3, got " + std::to_string(config.n));
    }
    EquivalenceReport report;
    if (config.OB_mask == 0) {
        report.outcome = CheckOutcome::unsupported;
        report.detail = "OB_mask == 0 marks the dummy register; swap-out is undefined";
        return report;
    }
    const Circuit swap = build_layer(with_variant(config, Variant::QSG_SWAPOUT));
    const Circuit ctrl = build_layer(with_variant(config, Variant::QSG_CONTROLLED));
    const RegisterLayout l = qsg_layout(config.n);

    std::size_t dummy_bits = 0;
    for (Qubit q : l.dB) {
        dummy_bits |= std::size_t{1} << q;
    }
    const std::size_t dim = std::size_t{1} << swap.num_qubits();
    std::size_t columns = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & dummy_bits) != 0) {
            continue;
        }
        std::vector<Complex> amps(dim, Complex{});
        amps[i] = 1.0;
        const Statevector a = run(swap, Statevector::from_amplitudes(amps)).state;
        const Statevector b = run(ctrl, Statevector::from_amplitudes(std::move(amps))).state;
        for (std::size_t j = 0; j < dim; ++j) {
            report.max_deviation = std::max(report.max_deviation, std::abs(a[j] - b[j]));
        }
        ++columns;
    }
    report.outcome = report.max_deviation <= tolerance ? CheckOutcome::pass : CheckOutcome::fail;
    std::ostringstream os;
    os << "n=" << config.n << " R=" << config.R << " columns=" << columns
       << " max|U_swap - U_ctrl|=" << report.max_deviation;
    report.detail = os.str();
    return report;
}

} // namespace qsg
