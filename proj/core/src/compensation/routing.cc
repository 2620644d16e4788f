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

#include "aqm/compensation/routing.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "aqm/compensation/rewrite.h"
#include "aqm/core/errors.h"

namespace aqm::compensation {

using profiles::ConnectivityGraph;

Circuit route_circuit(const Circuit &circuit, const ConnectivityGraph &graph) {
    if (circuit.num_qubits() > graph.num_qubits()) {
        throw RuleViolation(AqmRule::connectivity, "circuit uses " + std::to_string(circuit.num_qubits()) +
                                                       " qubits but the device has " +
                                                       std::to_string(graph.num_qubits()));
    }
    Circuit out(graph.num_qubits());
    for (const Instruction &in : circuit.instructions()) {
        const auto &q = in.qubits;
        if (q.size() <= 1) {
            out.append(in);
            continue;
        }
        if (q.size() == 3) {
            if (!graph.has_edge(q[0], q[1]) || !graph.has_edge(q[1], q[2]) || !graph.has_edge(q[0], q[2])) {
                throw std::invalid_argument("route_circuit: decompose " + std::string(gate_name(in.gate)) +
                                            " into two-qubit gates before routing");
            }
            out.append(in);
            continue;
        }
        if (graph.has_edge(q[0], q[1])) {
            out.append(in);
            continue;
        }
        // Walk q[0] next to q[1], apply, walk back.
        const std::vector<std::size_t> path = profiles::shortest_path(graph, q[0], q[1]);
        const std::size_t hops = path.size() - 1;
        for (std::size_t i = 0; i + 1 < hops; ++i) {
            out.append(GateKind::SWAP, {path[i], path[i + 1]});
        }
        out.append(Instruction{in.gate, {path[hops - 1], q[1]}, in.angle});
        for (std::size_t i = hops - 1; i-- > 0;) {
            out.append(GateKind::SWAP, {path[i], path[i + 1]});
        }
    }
    return out;
}

Circuit expand_swaps(const Circuit &circuit, std::span<const GateKind> native) {
    if (std::find(native.begin(), native.end(), GateKind::SWAP) != native.end()) {
        return circuit;
    }
    Circuit out(circuit.num_qubits());
    for (const Instruction &in : circuit.instructions()) {
        if (in.gate != GateKind::SWAP) {
            out.append(in);
            continue;
        }
        Circuit three(circuit.num_qubits());
        three.append(GateKind::CNOT, {in.qubits[0], in.qubits[1]});
        three.append(GateKind::CNOT, {in.qubits[1], in.qubits[0]});
        three.append(GateKind::CNOT, {in.qubits[0], in.qubits[1]});
        out.extend(rewrite_to_basis(three, native));
    }
    return out;
}

}  // namespace aqm::compensation
