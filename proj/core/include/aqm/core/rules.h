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

#ifndef AQM_CORE_RULES_H
#define AQM_CORE_RULES_H

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace aqm {

/// The five physical rules a qubit implementation is held to.
enum class AqmRule : int {
    states = 1,
    operations = 2,
    connectivity = 3,
    coherence = 4,
    readout = 5,
};

inline constexpr std::array<AqmRule, 5> kAllRules = {
    AqmRule::states, AqmRule::operations, AqmRule::connectivity, AqmRule::coherence, AqmRule::readout};

std::string_view rule_name(AqmRule rule);
std::optional<AqmRule> parse_rule_name(std::string_view name);

/// Ordered none < partial < full. Used both for what a device supports and
/// for what an application demands.
enum class SupportLevel : int {
    none = 0,
    partial = 1,
    full = 2,
};

std::string_view support_level_name(SupportLevel level);
std::optional<SupportLevel> parse_support_level(std::string_view name);

struct RuleLevel {
    SupportLevel level = SupportLevel::none;
    std::string note;

    bool operator==(const RuleLevel &) const = default;
};

/// One level per rule, indexed by rule.
struct RuleTable {
    std::array<RuleLevel, 5> levels;

    RuleLevel &operator[](AqmRule rule) {
        return levels[static_cast<int>(rule) - 1];
    }
    const RuleLevel &operator[](AqmRule rule) const {
        return levels[static_cast<int>(rule) - 1];
    }

    bool operator==(const RuleTable &) const = default;
};

}  // namespace aqm

#endif
