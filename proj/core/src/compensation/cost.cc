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

#include "aqm/compensation/cost.h"

#include <cmath>
#include <set>
#include <stdexcept>

namespace aqm::compensation {

CostEstimate estimate_cost(const Circuit &circuit, const profiles::DeviceProfile &profile) {
    CostEstimate cost;
    std::set<std::size_t> touched;
    for (const Instruction &in : circuit.instructions()) {
        ++cost.gate_count_by_name[std::string(gate_name(in.gate))];
        touched.insert(in.qubits.begin(), in.qubits.end());
        if (in.gate == GateKind::MEASURE || in.gate == GateKind::RESET) {
            cost.total_duration_ns += profile.measurement.duration_ns;
            cost.measurement_fidelity_product *= profile.measurement.fidelity;
            continue;
        }
        if (in.gate == GateKind::I && !profile.has_gate(GateKind::I)) {
            continue;
        }
        const profiles::GateSpec *spec = profile.find_gate(in.gate);
        if (spec == nullptr) {
            throw std::invalid_argument("estimate_cost: " + std::string(gate_name(in.gate)) +
                                        " is not native to profile '" + profile.name + "'");
        }
        cost.total_duration_ns += spec->duration_ns;
        cost.gate_fidelity_product *= spec->fidelity;
    }
    const double t_us = cost.total_duration_ns / 1000.0;
    cost.decoherence_factor = std::exp(-t_us / profile.t2_us * static_cast<double>(touched.size()));
    cost.fidelity_estimate = cost.gate_fidelity_product * cost.measurement_fidelity_product * cost.decoherence_factor;
    return cost;
}

BudgetCheck check_coherence_budget(const Circuit &circuit, const profiles::DeviceProfile &profile, double threshold) {
    const double duration_ns = estimate_cost(circuit, profile).total_duration_ns;
    const double ratio = duration_ns / (profile.t2_us * 1000.0);
    return BudgetCheck{ratio <= threshold, duration_ns, ratio, threshold};
}

}  // namespace aqm::compensation
