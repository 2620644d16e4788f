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

#ifndef AQM_PROFILES_PROFILE_H
#define AQM_PROFILES_PROFILE_H

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aqm/core/gates.h"
#include "aqm/core/rules.h"
#include "aqm/profiles/graph.h"

namespace aqm::profiles {

struct GateSpec {
    GateKind gate;
    int arity;
    double duration_ns;
    double fidelity;

    bool operator==(const GateSpec &) const = default;
};

struct MeasurementSpec {
    bool computational_only = true;
    double fidelity = 1.0;
    double duration_ns = 1.0;
    bool mid_circuit = true;

    bool operator==(const MeasurementSpec &) const = default;
};

/// What a physical platform offers against the five qubit rules, plus the
/// timing and fidelity constants the compiler costs circuits with.
///
/// `notes` maps a field path ("t2_us", "native_gates.CZ",
/// "rule_support.connectivity", ...) to the citation for that value. The notes
/// for rule_support.* are also copied into rule_support[rule].note on parse.
/// `constants` holds additional cited figures that have no dedicated field.
struct DeviceProfile {
    std::string name;
    std::size_t num_qubits = 0;
    ConnectivityGraph connectivity;
    std::vector<GateSpec> native_gates;
    double t1_us = 0.0;
    double t2_us = 0.0;
    std::optional<double> t2_dd_us;
    MeasurementSpec measurement;
    RuleTable rule_support;
    bool qec_capable = false;
    std::map<std::string, std::string> notes;
    std::map<std::string, double> constants;

    const GateSpec *find_gate(GateKind kind) const;
    bool has_gate(GateKind kind) const {
        return find_gate(kind) != nullptr;
    }
    std::vector<GateKind> native_gate_kinds() const;
    SupportLevel support(AqmRule rule) const {
        return rule_support[rule].level;
    }

    bool operator==(const DeviceProfile &) const = default;
};

/// Raised by parse_device_profile. `path` names the offending field, e.g.
/// "native_gates[1].fidelity".
class ProfileError : public std::runtime_error {
   public:
    ProfileError(std::string path, const std::string &message)
        : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {
    }
    const std::string &path() const noexcept {
        return path_;
    }

   private:
    std::string path_;
};

struct Violation {
    std::string path;
    std::string message;
};

struct ProfileValidation {
    bool ok() const {
        return violations.empty();
    }
    std::vector<Violation> violations;
};

/// Type invariants plus cross-field consistency (multi-qubit gates need an
/// edge and operations support above none).
ProfileValidation validate_profile(const DeviceProfile &profile);

/// Parses the profile JSON document. Rejects syntax errors, unknown or
/// missing fields, wrong types and any validate_profile violation.
DeviceProfile parse_device_profile(std::string_view text);

/// Canonical JSON (2-space indent). parse_device_profile inverts it exactly.
std::string serialize_device_profile(const DeviceProfile &profile);

std::vector<std::string> builtin_profile_names();

/// Throws std::invalid_argument listing the available names when unknown.
DeviceProfile builtin_profile(std::string_view name);

/// Raw JSON of a builtin profile.
std::string_view builtin_profile_json(std::string_view name);

}  // namespace aqm::profiles

#endif
