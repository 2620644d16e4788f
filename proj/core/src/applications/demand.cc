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

#include "aqm/applications/demand.h"

#include <array>
#include <stdexcept>

namespace aqm::apps {
namespace {

struct Row {
    std::string_view name;
    // states, operations, connectivity, coherence, readout
    std::array<SupportLevel, 5> levels;
    std::array<std::string_view, 5> notes;
};

using L = SupportLevel;

// Levels follow the comparison table of application demands: a check mark is
// full, "Released" is none, and qualified entries are partial.
constexpr std::array<Row, 6> kRows = {{
    {"quantum-annealing",
     {L::full, L::none, L::full, L::full, L::partial},
     {"checkmark", "Released", "Critical to maintain high connectivity", "checkmark", "Computational basis"}},
    {"quantum-walk",
     {L::partial, L::none, L::partial, L::full, L::partial},
     {"Encoding methods can be different", "Released", "Based on the problem, can be released", "checkmark",
      "Computational basis"}},
    {"mbqc",
     {L::partial, L::none, L::partial, L::full, L::full},
     {"Physical qubits are not always alive", "Released (between physical qubits)", "Resource state generation",
      "checkmark", "Arbitrary basis"}},
    {"analogue-simulation",
     {L::full, L::none, L::partial, L::full, L::partial},
     {"checkmark", "Released", "Based on the problem", "checkmark",
      "Computational basis (depending on problems)"}},
    {"quantum-memory",
     {L::full, L::none, L::partial, L::full, L::none},
     {"checkmark", "Released", "Connectivity to computing component is necessary", "Long coherence time",
      "Released"}},
    {"circuit-model-universal",
     {L::full, L::full, L::full, L::full, L::full},
     {"complete qubit model", "complete qubit model", "complete qubit model", "complete qubit model",
      "complete qubit model"}},
}};

}  // namespace

std::vector<std::string> builtin_demand_names() {
    std::vector<std::string> names;
    for (const Row &row : kRows) {
        names.emplace_back(row.name);
    }
    return names;
}

DemandProfile builtin_demand(std::string_view name) {
    for (const Row &row : kRows) {
        if (row.name != name) {
            continue;
        }
        DemandProfile d;
        d.name = std::string(row.name);
        for (std::size_t r = 0; r < kAllRules.size(); ++r) {
            d.rule_demand[kAllRules[r]] = RuleLevel{row.levels[r], std::string(row.notes[r])};
        }
        return d;
    }
    std::string available;
    for (const Row &row : kRows) {
        available += (available.empty() ? "" : ", ") + std::string(row.name);
    }
    throw std::invalid_argument("unknown demand profile '" + std::string(name) + "' (available: " + available + ")");
}

}  // namespace aqm::apps
