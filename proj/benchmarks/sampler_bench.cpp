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

#include <benchmark/benchmark.h>

#include "qsg/builders.hpp"
#include "qsg/noise.hpp"

namespace {

void BM_NoisyShots(benchmark::State &state) {
    qsg::ExperimentConfig cfg;
    cfg.variant = static_cast<qsg::Variant>(state.range(0));
    cfg.R = 25;
    const auto circuit = qsg::build(cfg);
    const auto program = qsg::lower_program(circuit);
    std::uint64_t seed = 1;
    const std::uint64_t shots = 20;
    for (auto _ : state) {
        const auto noise = qsg::NoiseConfig::device_like(shots, seed++);
        benchmark::DoNotOptimize(qsg::sample_shots(circuit, program, noise, {1}));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(shots));
}
BENCHMARK(BM_NoisyShots)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
