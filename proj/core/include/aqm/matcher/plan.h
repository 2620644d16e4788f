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


#ifndef AQM_MATCHER_PLAN_H
#define AQM_MATCHER_PLAN_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aqm/compensation/approximate.h"
#include "aqm/compensation/cost.h"
#include "aqm/core/circuit.h"
#include "aqm/core/rules.h"
#include "aqm/profiles/profile.h"

namespace aqm::matcher {

struct PlanOptions {
    std::size_t max_depth = 12;
    double coherence_threshold = compensation::kDefaultCoherenceThreshold;
    // Per-pass toggles. Disabled passes are skipped; the final legality
    // check still applies.
    bool rewrite = true;
    bool approximate = true;
    bool route = true;
    bool expand = true;
    bool budget = true;
};

struct PassRecord {
    std::string pass;
    std::size_t instructions_before;
    std::size_t instructions_after;
    std::string note;
};

struct PlanFailure {
    AqmRule rule;
    std::string message;
};

/// One approximated instruction: the original gate and the word replacing it.
struct ApproximationRecord {
    Instruction original;
    compensation::ApproximationResult result;
};

struct CompilationResult {
    /// Device-legal on success; on failure, the circuit after the last
    /// completed pass.
    Circuit circuit;
    compensation::CostEstimate cost;
    std::optional<compensation::BudgetCheck> budget;
    std::vector<PassRecord> pass_log;
    std::vector<ApproximationRecord> approximations;
    std::optional<PlanFailure> failure;

    bool ok() const {
        return !failure.has_value();
    }
};

/// rewrite -> approximate -> route -> expand -> cost -> budget.
///
/// Never throws for rule problems; they are reported in `failure` with the
/// rule they violate.
CompilationResult plan_compensation(const profiles::DeviceProfile &device, const Circuit &circuit, double epsilon,
                                    const PlanOptions &options = {});

/// H 0; CNOT 0 1.
Circuit bell_circuit();

}  // namespace aqm::matcher

#endif
