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

#include <vector>

#include "aqm/compensation/approximate.h"
#include "aqm/compensation/routing.h"
#include "aqm/core/circuit.h"
#include "aqm/core/gates.h"
#include "aqm/profiles/graph.h"

namespace {

using aqm::Circuit;
using aqm::GateKind;

void BM_ApproximateRz(benchmark::State &state) {
    const std::vector<GateKind> alphabet = {GateKind::H, GateKind::T, GateKind::TDG};
    const aqm::UnitaryMatrix target(aqm::gate_matrix(GateKind::RZ, 0.2));
    const auto depth = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto r = aqm::compensation::approximate_single_qubit({target, alphabet, 1e-9, depth});
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ApproximateRz)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

// All-pairs CNOTs on a line: worst case for hop count.
void BM_RouteLine(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Circuit c(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b) c.append(GateKind::CNOT, {a, b});
        }
    }
    const auto line = aqm::profiles::ConnectivityGraph::line(n);
    const std::vector<GateKind> native = {GateKind::H, GateKind::CNOT};
    for (auto _ : state) {
        auto routed = aqm::compensation::expand_swaps(aqm::compensation::route_circuit(c, line), native);
        benchmark::DoNotOptimize(routed);
    }
}
BENCHMARK(BM_RouteLine)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

}  // namespace
