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


#ifndef AQM_APPLICATIONS_MBQC_H
#define AQM_APPLICATIONS_MBQC_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aqm/core/rng.h"
#include "aqm/core/state.h"
#include "aqm/profiles/graph.h"

namespace aqm::apps {

/// |+>^n followed by CZ on every edge.
StateVector build_cluster_state(const profiles::ConnectivityGraph &graph);

/// XOR of the outcomes of the listed qubits.
struct Parity {
    std::vector<std::size_t> qubits;

    bool evaluate(const std::vector<std::optional<int>> &outcomes) const;
    bool empty() const {
        return qubits.empty();
    }
    bool operator==(const Parity &) const = default;
};

/// Measurement in the X-Y plane at angle (-1)^s * theta + t * pi, where s and
/// t are parities of earlier outcomes.
struct PatternMeasurement {
    std::size_t qubit;
    double theta;
    Parity s_domain;
    Parity t_domain;

    bool operator==(const PatternMeasurement &) const = default;
};

/// Byproduct X^x Z^z on an output qubit.
struct PatternCorrection {
    std::size_t qubit;
    Parity x_domain;
    Parity z_domain;

    bool operator==(const PatternCorrection &) const = default;
};

struct MeasurementPattern {
    profiles::ConnectivityGraph graph;
    /// Input state qubit k is placed on node inputs[k]; other nodes start in |+>.
    std::vector<std::size_t> inputs;
    /// Output state qubit k is node outputs[k].
    std::vector<std::size_t> outputs;
    std::vector<PatternMeasurement> measurements;
    std::vector<PatternCorrection> corrections;

    bool operator==(const MeasurementPattern &) const = default;
};

class PatternError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Every non-output node measured exactly once, outputs never, and every
/// domain refers to a node measured earlier. Throws PatternError.
void validate_pattern(const MeasurementPattern &pattern);

/// Angle expression: "theta", "(-1)^s[k] * theta", "(-1)^(s[a]+s[b]) * theta",
/// optionally followed by "+ pi * s[c]" or "+ pi * (s[c]+s[d])".
struct AngleExpression {
    Parity s_domain;
    Parity t_domain;
};
AngleExpression parse_angle_expression(std::string_view text);
/// "s[a]+s[b]"; empty or "0" is the empty parity.
Parity parse_parity(std::string_view text);
std::string format_angle_expression(const Parity &s_domain, const Parity &t_domain);
std::string format_parity(const Parity &parity);

/// {"nodes": n, "edges": [[a,b],...], "inputs": [...], "outputs": [...],
///  "order": [...], "angles": [...], "adaptivity": ["(-1)^s[0] * theta", ...],
///  "corrections": [{"qubit": q, "x": "s[1]", "z": "s[0]+s[2]"}]}
MeasurementPattern parse_pattern(std::string_view json_text);
std::string format_pattern(const MeasurementPattern &pattern);

/// Five-node line implementing RZ(alpha), then RX(beta), then RZ(gamma) on
/// the input.
MeasurementPattern euler_pattern(double alpha, double beta, double gamma);

/// Four nodes: 0 control, 1 target in, 2 ancilla, 3 target out.
/// Outputs (0, 3).
MeasurementPattern cnot_pattern();

struct MbqcResult {
    /// Corrected state of the output qubits.
    StateVector output;
    /// Output state before byproduct correction.
    StateVector raw_output;
    /// outcomes[node]; nullopt for output nodes.
    std::vector<std::optional<int>> outcomes;
    /// Probability of the realised outcome branch.
    double branch_probability;
    /// Applied byproducts, aligned with pattern.corrections.
    std::vector<std::pair<bool, bool>> byproducts;
};

/// Runs the pattern with outcomes sampled from `seed`. With no input, every
/// input node starts in |+>.
MbqcResult mbqc_execute(const MeasurementPattern &pattern, const std::optional<StateVector> &input,
                        std::uint64_t seed);

/// Runs the pattern along a fixed outcome branch, indexed by measurement
/// order. Throws PatternError if the branch has probability ~0.
MbqcResult mbqc_execute_branch(const MeasurementPattern &pattern, const std::optional<StateVector> &input,
                               const std::vector<int> &forced_outcomes);

}  // namespace aqm::apps

#endif
