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

#include "qsg/noise.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "qsg/errors.hpp"
#include "trajectory.hpp"

namespace qsg {
namespace {

using detail::NativeFault;
using detail::TrajectoryState;

double uniform01(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// (0, 1], safe for log().
double uniform_open(std::mt19937_64 &rng) { return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53; }

struct NativeSite {
    std::uint32_t block;
    std::uint32_t macro;
    std::uint32_t native;
};

// Flattened native positions of a program, split by arity.
struct Sites {
    std::vector<NativeSite> oneq;
    std::vector<NativeSite> twoq;

    explicit Sites(const LoweredProgram &program) {
        for (std::uint32_t b = 0; b < program.blocks.size(); ++b) {
            const auto &macros = program.blocks[b].macros;
            for (std::uint32_t m = 0; m < macros.size(); ++m) {
                for (std::uint32_t j = 0; j < macros[m].natives.size(); ++j) {
                    (macros[m].natives[j].qubits.size() == 1 ? oneq : twoq).push_back({b, m, j});
                }
            }
        }
    }
};

struct Fault {
    NativeSite site;
    std::uint8_t pauli;
};

void draw_faults(const std::vector<NativeSite> &sites, double p, int choices, std::mt19937_64 &rng,
                 std::vector<Fault> &out) {
    if (p <= 0.0 || sites.empty()) {
        return;
    }
    const double denom = std::log1p(-p);
    std::size_t i = 0;
    while (true) {
        if (p < 1.0) {
            const double skip = std::floor(std::log(uniform_open(rng)) / denom);
            if (skip >= static_cast<double>(sites.size() - i)) {
                return;
            }
            i += static_cast<std::size_t>(skip);
        }
        if (i >= sites.size()) {
            return;
        }
        const auto pauli = static_cast<std::uint8_t>(1 + std::min(choices - 1, static_cast<int>(uniform01(rng) * choices)));
        out.push_back({sites[i], pauli});
        ++i;
    }
}

struct Trajectory {
    std::uint64_t index{0};
    std::mt19937_64 rng;
    std::vector<Fault> faults;

    [[nodiscard]] std::size_t first_block(std::size_t none) const {
        return faults.empty() ? none : faults.front().site.block;
    }
};

bool site_less(const Fault &a, const Fault &b) {
    return std::tie(a.site.block, a.site.macro, a.site.native) < std::tie(b.site.block, b.site.macro, b.site.native);
}

struct Outcome {
    std::size_t bits{0};
    std::vector<double> probes;
};

class Runner {
  public:
    Runner(const Circuit &circuit, const LoweredProgram &program, const NoiseConfig &noise)
        : circuit_(circuit), program_(program), noise_(noise), sites_(program), measured_(circuit.measured_qubits()) {}

    // Fills outcomes[i - begin] for trajectories [begin, end).
    void run_chunk(std::uint64_t begin, std::uint64_t end, std::vector<Outcome> &outcomes) const {
        const std::size_t num_blocks = program_.blocks.size();
        std::vector<Trajectory> trajectories;
        trajectories.reserve(end - begin);
        for (std::uint64_t i = begin; i < end; ++i) {
            Trajectory t{i, std::mt19937_64(trajectory_seed(noise_.seed, i)), {}};
            draw_faults(sites_.oneq, noise_.p1, 3, t.rng, t.faults);
            draw_faults(sites_.twoq, noise_.p2, 15, t.rng, t.faults);
            std::sort(t.faults.begin(), t.faults.end(), site_less);
            trajectories.push_back(std::move(t));
        }
        std::vector<std::size_t> order(trajectories.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return trajectories[a].first_block(num_blocks) < trajectories[b].first_block(num_blocks);
        });

        const auto &probes = circuit_.probes();
        TrajectoryState prefix(circuit_, program_);
        std::vector<double> prefix_probes(probes.size(), 0.0);
        std::size_t next_probe = 0;
        auto cursor = order.begin();
        for (std::size_t b = 0; b <= num_blocks; ++b) {
            while (next_probe < probes.size() && probes[next_probe].position == b) {
                prefix_probes[next_probe] = prefix.probability(probes[next_probe].query);
                ++next_probe;
            }
            while (cursor != order.end() && trajectories[*cursor].first_block(num_blocks) == b && b < num_blocks) {
                Trajectory &t = trajectories[*cursor];
                TrajectoryState state = prefix;
                Outcome &out = outcomes[t.index - begin];
                out.probes.assign(prefix_probes.begin(), prefix_probes.begin() + static_cast<std::ptrdiff_t>(next_probe));
                finish(state, t, b, next_probe, out);
                ++cursor;
            }
            if (b < num_blocks) {
                prefix.run_block(b, {});
            }
        }
        if (cursor != order.end()) {
            const std::vector<double> dist = prefix.marginal(measured_);
            for (; cursor != order.end(); ++cursor) {
                Trajectory &t = trajectories[*cursor];
                Outcome &out = outcomes[t.index - begin];
                out.probes = prefix_probes;
                out.bits = readout(dist, t.rng);
            }
        }
    }

  private:
    void finish(TrajectoryState &state, Trajectory &t, std::size_t start, std::size_t next_probe, Outcome &out) const {
        const auto &probes = circuit_.probes();
        std::vector<NativeFault> block_faults;
        auto fault = t.faults.begin();
        for (std::size_t b = start; b <= program_.blocks.size(); ++b) {
            while (next_probe < probes.size() && probes[next_probe].position == b) {
                out.probes.push_back(state.probability(probes[next_probe].query));
                ++next_probe;
            }
            if (b == program_.blocks.size()) {
                break;
            }
            block_faults.clear();
            for (; fault != t.faults.end() && fault->site.block == b; ++fault) {
                block_faults.push_back({fault->site.macro, fault->site.native, fault->pauli});
            }
            state.run_block(b, block_faults);
        }
        out.bits = readout(state.marginal(measured_), t.rng);
    }

    std::size_t readout(const std::vector<double> &dist, std::mt19937_64 &rng) const {
        const double total = std::accumulate(dist.begin(), dist.end(), 0.0);
        const double u = uniform01(rng) * total;
        double acc = 0.0;
        std::size_t outcome = dist.size() - 1;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            acc += dist[i];
            if (u < acc) {
                outcome = i;
                break;
            }
        }
        for (std::size_t j = 0; j < measured_.size(); ++j) {
            if (uniform01(rng) < noise_.p_ro) {
                outcome ^= std::size_t{1} << j;
            }
        }
        return outcome;
    }

    const Circuit &circuit_;
    const LoweredProgram &program_;
    const NoiseConfig &noise_;
    Sites sites_;
    std::vector<Qubit> measured_;
};

} // namespace

void NoiseConfig::validate() const {
    auto check = [](double p, const char *name) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ConfigurationError(std::string("noise.") + name + " must be in [0, 1]");
        }
    };
    check(p1, "p1");
    check(p2, "p2");
    check(p_ro, "p_ro");
    if (shots == 0) {
        throw ConfigurationError("noise.shots must be positive");
    }
}

NoiseConfig NoiseConfig::device_like(std::uint64_t shots, std::uint64_t seed) {
    return NoiseConfig{2e-4, 2e-3, 1e-2, shots, seed};
}

std::uint64_t Histogram::shots() const noexcept { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

std::size_t Histogram::clbit_index(std::string_view name) const {
    const auto it = std::find(clbits.begin(), clbits.end(), name);
    if (it == clbits.end()) {
        throw std::out_of_range("no classical bit named " + std::string(name));
    }
    return static_cast<std::size_t>(it - clbits.begin());
}

std::string Histogram::label(std::size_t outcome) const {
    std::string s(clbits.size(), '0');
    for (std::size_t j = 0; j < clbits.size(); ++j) {
        if ((outcome >> j) & 1U) {
            s[j] = '1';
        }
    }
    return s;
}

Histogram &Histogram::operator+=(const Histogram &other) {
    if (clbits != other.clbits || counts.size() != other.counts.size()) {
        throw std::invalid_argument("histograms over different classical bits");
    }
    for (std::size_t i = 0; i < counts.size(); ++i) {
        counts[i] += other.counts[i];
    }
    return *this;
}

std::uint64_t trajectory_seed(std::uint64_t master_seed, std::uint64_t trajectory) noexcept {
    // splitmix64 finalizer over (seed, counter)
    std::uint64_t z = master_seed + 0x9E3779B97F4A7C15ULL * (trajectory + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ShotResult sample_shots(const Circuit &circuit, const NoiseConfig &noise, const SamplerOptions &options) {
    return sample_shots(circuit, lower_program(circuit), noise, options);
}

ShotResult sample_shots(const Circuit &circuit, const LoweredProgram &program, const NoiseConfig &noise,
                        const SamplerOptions &options) {
    noise.validate();
    if (circuit.measurements().empty()) {
        throw CircuitError("circuit has no measurements to sample");
    }
    if (program.logical_qubits != circuit.num_qubits() || program.blocks.size() != circuit.size()) {
        throw ConfigurationError("lowered program does not match circuit");
    }

    unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, noise.shots));

    const Runner runner(circuit, program, noise);
    std::vector<Outcome> outcomes(noise.shots);
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](unsigned c) {
        const std::uint64_t begin = noise.shots * c / threads;
        const std::uint64_t end = noise.shots * (c + 1) / threads;
        std::vector<Outcome> local(end - begin);
        try {
            runner.run_chunk(begin, end, local);
        } catch (...) {
            errors[c] = std::current_exception();
            return;
        }
        std::move(local.begin(), local.end(), outcomes.begin() + static_cast<std::ptrdiff_t>(begin));
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned c = 0; c < threads; ++c) {
            pool.emplace_back(work, c);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    ShotResult result;
    for (const Measurement &m : circuit.measurements()) {
        result.histogram.clbits.push_back(m.clbit);
    }
    result.histogram.counts.assign(std::size_t{1} << circuit.measurements().size(), 0);
    const auto &probes = circuit.probes();
    std::vector<double> sums(probes.size(), 0.0);
    for (const Outcome &o : outcomes) {
        ++result.histogram.counts[o.bits];
        for (std::size_t p = 0; p < sums.size(); ++p) {
            sums[p] += o.probes[p];
        }
    }
    for (std::size_t p = 0; p < probes.size(); ++p) {
        result.probe_means.push_back(
            {probes[p].label, probes[p].position, sums[p] / static_cast<double>(noise.shots)});
    }
    return result;
}

} // namespace qsg
