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


#ifndef AQM_COMPENSATION_ROUTING_H
#define AQM_COMPENSATION_ROUTING_H

#include <span>

#include "aqm/core/circuit.h"
#include "aqm/core/gates.h"
#include "aqm/profiles/graph.h"

namespace aqm::compensation {

/// Makes every two-qubit instruction act on an edge of `graph`.
///
/// A gate on non-adjacent qubits (a, b) is wrapped in SWAPs that walk a
/// along shortest_path(a, b) to a neighbour of b and then walk it back, so
/// the qubit layout is the identity again after each gate. The result has
/// graph.num_qubits() qubits. Throws RuleViolation (connectivity) when the
/// operands are disconnected or the circuit is wider than the graph, and
/// std::invalid_argument for three-qubit gates on a non-triangle.
Circuit route_circuit(const Circuit &circuit, const profiles::ConnectivityGraph &graph);

/// Replaces SWAP by CNOT a b; CNOT b a; CNOT a b rewritten into `native`,
/// unless SWAP itself is native.
Circuit expand_swaps(const Circuit &circuit, std::span<const GateKind> native);

}  // namespace aqm::compensation

#endif
