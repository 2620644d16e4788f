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

#ifndef AQM_CORE_GATES_H
#define AQM_CORE_GATES_H

#include <optional>
#include <span>
#include <string_view>

#include "aqm/core/linalg.h"

namespace aqm {

/// The fixed instruction alphabet of the circuit format.
enum class GateKind {
    I,
    X,
    Y,
    Z,
    H,
    S,
    SDG,
    T,
    TDG,
    RX,
    RY,
    RZ,
    CNOT,
    CZ,
    SWAP,
    CCX,
    MEASURE,
    RESET,
};

struct GateInfo {
    GateKind kind;
    std::string_view name;
    int arity;
    bool has_angle;
    bool is_unitary;
};

const GateInfo &gate_info(GateKind kind);
std::span<const GateInfo> all_gates();

/// Case-insensitive lookup by the names used in circuit files ("cnot", "Tdg").
std::optional<GateKind> parse_gate_name(std::string_view name);

inline std::string_view gate_name(GateKind kind) {
    return gate_info(kind).name;
}

/// Matrix of a unitary gate in its local little-endian operand basis: operand
/// k of the instruction is bit k of the local index. For CNOT the control is
/// operand 0, so |c t> sits at local index c + 2t.
///
/// RX/RY/RZ use exp(-i angle P / 2). Throws std::invalid_argument for
/// MEASURE/RESET.
Matrix gate_matrix(GateKind kind, double angle = 0.0);

}  // namespace aqm

#endif
