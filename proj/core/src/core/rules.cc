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

#include "aqm/core/rules.h"

namespace aqm {

std::string_view rule_name(AqmRule rule) {
    switch (rule) {
        case AqmRule::states:
            return "states";
        case AqmRule::operations:
            return "operations";
        case AqmRule::connectivity:
            return "connectivity";
        case AqmRule::coherence:
            return "coherence";
        case AqmRule::readout:
            return "readout";
    }
    return "unknown";
}

std::optional<AqmRule> parse_rule_name(std::string_view name) {
    for (AqmRule r : kAllRules) {
        if (rule_name(r) == name) {
            return r;
        }
    }
    return std::nullopt;
}

std::string_view support_level_name(SupportLevel level) {
    switch (level) {
        case SupportLevel::none:
            return "none";
        case SupportLevel::partial:
            return "partial";
        case SupportLevel::full:
            return "full";
    }
    return "unknown";
}

std::optional<SupportLevel> parse_support_level(std::string_view name) {
    if (name == "none") {
        return SupportLevel::none;
    }
    if (name == "partial") {
        return SupportLevel::partial;
    }
    if (name == "full") {
        return SupportLevel::full;
    }
    return std::nullopt;
}

}  // namespace aqm
