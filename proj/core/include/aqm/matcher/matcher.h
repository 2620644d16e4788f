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


#ifndef AQM_MATCHER_MATCHER_H
#define AQM_MATCHER_MATCHER_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aqm/applications/demand.h"
#include "aqm/core/rules.h"
#include "aqm/profiles/profile.h"

namespace aqm::matcher {

enum class Verdict {
    ok,
    ok_with_compensation,
    fail,
};

enum class Overall {
    supported,
    supported_with_compensation,
    unsupported,
};

std::string_view verdict_name(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view name);
std::string_view overall_name(Overall o);
std::optional<Overall> parse_overall(std::string_view name);

struct Compensation {
    std::string technique;
    /// Numeric summary of the reference plan (duration, fidelity, ...).
    std::map<std::string, double> cost;

    bool operator==(const Compensation &) const = default;
};

struct RuleVerdict {
    AqmRule rule;
    SupportLevel demand;
    SupportLevel support;
    Verdict verdict;
    std::optional<Compensation> compensation;
    /// Why a compensation was or was not possible; empty for plain ok.
    std::string reason;

    bool operator==(const RuleVerdict &) const = default;
};

struct MatchReport {
    std::string device;
    std::string demand;
    std::vector<RuleVerdict> rules;
    Overall overall;
    /// Dataset notes of both profiles, keyed "device:<field>" and
    /// "demand:<rule>".
    std::map<std::string, std::string> citations;

    /// 0 when supported (with or without compensation), 2 otherwise.
    int exit_code() const {
        return overall == Overall::unsupported ? 2 : 0;
    }
    bool operator==(const MatchReport &) const = default;
};

struct MatchOptions {
    /// Count error correction as compensation for a coherence shortfall on
    /// QEC-capable devices.
    bool allow_qec = false;
    double coherence_threshold = 0.01;
    double epsilon = 1e-3;
};

MatchReport match_profiles(const profiles::DeviceProfile &device, const apps::DemandProfile &demand,
                           const MatchOptions &options = {});

/// cells[i][j] = match(devices[j], demands[i]).
struct MatchMatrix {
    std::vector<std::string> demands;
    std::vector<std::string> devices;
    std::vector<std::vector<MatchReport>> cells;
};

/// Cells are computed on up to `jobs` threads; the result does not depend on
/// the thread count.
MatchMatrix match_matrix(const std::vector<profiles::DeviceProfile> &devices,
                         const std::vector<apps::DemandProfile> &demands, const MatchOptions &options = {},
                         unsigned jobs = 1);

/// Every builtin demand against every builtin device.
MatchMatrix builtin_match_matrix(const MatchOptions &options = {}, unsigned jobs = 1);

}  // namespace aqm::matcher

#endif
