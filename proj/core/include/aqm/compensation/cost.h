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


#ifndef AQM_COMPENSATION_COST_H
#define AQM_COMPENSATION_COST_H

#include <cstddef>
#include <map>
#include <string>

#include "aqm/core/circuit.h"
#include "aqm/profiles/profile.h"

namespace aqm::compensation {

struct CostEstimate {
    std::map<std::string, std::size_t> gate_count_by_name;
    /// Serial schedule: sum of instruction durations.
    double total_duration_ns = 0.0;
    double gate_fidelity_product = 1.0;
    double measurement_fidelity_product = 1.0;
    /// exp(-T / T2) for every qubit the circuit touches.
    double decoherence_factor = 1.0;
    double fidelity_estimate = 1.0;
    std::size_t added_ancillas = 0;
};

/// Heuristic cost of a device-legal circuit. RESET is costed as a
/// measurement. Throws std::invalid_argument on a gate the device lacks.
CostEstimate estimate_cost(const Circuit &circuit, const profiles::DeviceProfile &profile);

inline constexpr double kDefaultCoherenceThreshold = 0.01;

struct BudgetCheck {
    bool pass;
    double duration_ns;
    /// duration / T2.
    double ratio;
    double threshold;
};

/// Passes iff the serial duration is at most threshold * T2.
BudgetCheck check_coherence_budget(const Circuit &circuit, const profiles::DeviceProfile &profile,
                                   double threshold = kDefaultCoherenceThreshold);

}  // namespace aqm::compensation

#endif
