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


#ifndef AQM_APPLICATIONS_DEMAND_H
#define AQM_APPLICATIONS_DEMAND_H

#include <string>
#include <string_view>
#include <vector>

#include "aqm/core/rules.h"

namespace aqm::apps {

/// Per-rule requirement an application places on the qubit model.
struct DemandProfile {
    std::string name;
    RuleTable rule_demand;

    SupportLevel demand(AqmRule rule) const {
        return rule_demand[rule].level;
    }
    bool operator==(const DemandProfile &) const = default;
};

std::vector<std::string> builtin_demand_names();

/// Throws std::invalid_argument listing the available names.
DemandProfile builtin_demand(std::string_view name);

}  // namespace aqm::apps

#endif
