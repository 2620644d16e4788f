// Copyright 2026 The AQM Toolkit Authors
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

#include "aqm/applications/annealing.h"
#include "aqm/applications/walk.h"

namespace {

// Antiferromagnetic ring with a small bias to break the degeneracy.
aqm::apps::IsingProblem ring_problem(std::size_t n) {
    aqm::apps::IsingProblem p;
    p.num_spins = n;
    p.h.assign(n, 0.0);
    p.h[0] = -0.1;
    for (std::size_t i = 0; i < n; ++i) p.couplings.push_back({i, (i + 1) % n, 1.0});
    if (n == 2) p.couplings.pop_back();
    return p;
}

void BM_AnnealSteps(benchmark::State &state) {
    const auto problem = ring_problem(static_cast<std::size_t>(state.range(0)));
    aqm::apps::AnnealSchedule schedule;
    schedule.t_final = 10.0;
    schedule.num_steps = 200;
    for (auto _ : state) {
        auto r = aqm::apps::anneal(problem, schedule);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(schedule.num_steps));
}
BENCHMARK(BM_AnnealSteps)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_HadamardWalk(benchmark::State &state) {
    const auto steps = static_cast<std::size_t>(state.range(0));
    const auto spec = aqm::apps::hadamard_walk(steps, steps);
    for (auto _ : state) {
        auto r = aqm::apps::walk_run(spec);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_HadamardWalk)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

}  // namespace
