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

#include "aqm/matcher/plan.h"

#include <sstream>
#include <stdexcept>

#include "aqm/compensation/rewrite.h"
#include "aqm/compensation/routing.h"
#include "aqm/core/errors.h"

namespace aqm::matcher {

using compensation::RewriteError;
using profiles::DeviceProfile;

Circuit bell_circuit() {
    Circuit c(2);
    c.append(GateKind::H, {0});
    c.append(GateKind::CNOT, {0, 1});
    return c;
}

namespace {

bool has_unitary_gate(const Circuit &c) {
    for (const Instruction &in : c.instructions()) {
        if (gate_info(in.gate).is_unitary) {
            return true;
        }
    }
    return false;
}

// A MEASURE or RESET followed by anything else on the same qubit.
std::optional<std::size_t> mid_circuit_measurement(const Circuit &c) {
    const auto &ins = c.instructions();
    for (std::size_t i = 0; i < ins.size(); ++i) {
        if (ins[i].gate != GateKind::MEASURE && ins[i].gate != GateKind::RESET) {
            continue;
        }
        const std::size_t q = ins[i].qubits[0];
        for (std::size_t j = i + 1; j < ins.size(); ++j) {
            if (ins[j].gate == GateKind::MEASURE) {
                continue;
            }
            for (std::size_t r : ins[j].qubits) {
                if (r == q) {
                    return q;
                }
            }
        }
    }
    return std::nullopt;
}

std::string format_distance(double d) {
    std::ostringstream os;
    os.precision(3);
    os << d;
    return os.str();
}

}  // namespace

CompilationResult plan_compensation(const DeviceProfile &device, const Circuit &circuit, double epsilon,
                                    const PlanOptions &options) {
    CompilationResult result{circuit, {}, std::nullopt, {}, {}, std::nullopt};
    auto fail = [&](AqmRule rule, std::string message) {
        result.failure = PlanFailure{rule, std::move(message)};
        return result;
    };
    auto log = [&](std::string pass, std::size_t before, std::string note = "") {
        result.pass_log.push_back(PassRecord{std::move(pass), before, result.circuit.size(), std::move(note)});
    };

    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("plan_compensation: epsilon must lie in (0, 1)");
    }
    if (circuit.num_qubits() > device.num_qubits) {
        return fail(AqmRule::states, "circuit needs " + std::to_string(circuit.num_qubits()) + " qubits but " +
                                         device.name + " has " + std::to_string(device.num_qubits));
    }
    if (!device.measurement.mid_circuit) {
        if (auto q = mid_circuit_measurement(circuit)) {
            return fail(AqmRule::readout, "qubit " + std::to_string(*q) + " is used after a measurement, and " +
                                              device.name + " has no mid-circuit readout");
        }
    }
    const std::vector<GateKind> native = device.native_gate_kinds();
    std::vector<GateKind> alphabet;
    for (GateKind g : native) {
        if (gate_info(g).arity == 1 && !gate_info(g).has_angle) {
            alphabet.push_back(g);
        }
    }

    if (options.rewrite) {
        const std::size_t before = result.circuit.size();
        compensation::RewriteOptions ro;
        ro.rotations = options.approximate ? compensation::RotationPolicy::defer
                                           : compensation::RotationPolicy::exact_only;
        try {
            result.circuit = compensation::rewrite_to_basis(result.circuit, native, ro);
        } catch (const RewriteError &e) {
            return fail(AqmRule::operations, e.what());
        }
        log("rewrite", before);
    }
    if (device.support(AqmRule::operations) == SupportLevel::none && has_unitary_gate(result.circuit)) {
        return fail(AqmRule::operations, device.name + " offers no gate operations");
    }

    if (options.approximate) {
        const std::size_t before = result.circuit.size();
        Circuit out(result.circuit.num_qubits());
        std::size_t replaced = 0;
        for (const Instruction &in : result.circuit.instructions()) {
            if (!gate_info(in.gate).is_unitary || in.qubits.size() != 1 || device.has_gate(in.gate)) {
                out.append(in);
                continue;
            }
            if (alphabet.empty()) {
                return fail(AqmRule::operations, "no fixed single-qubit gates to approximate " +
                                                     std::string(gate_name(in.gate)));
            }
            compensation::ApproximationRequest req{UnitaryMatrix(gate_matrix(in.gate, in.angle)), alphabet, epsilon,
                                                   options.max_depth};
            auto approx = compensation::approximate_single_qubit(req);
            result.approximations.push_back(ApproximationRecord{in, approx});
            if (!approx.achieved) {
                return fail(AqmRule::operations, "best approximation of " + std::string(gate_name(in.gate)) +
                                                     " reaches distance " + format_distance(approx.distance) +
                                                     " > epsilon " + format_distance(epsilon) + " within depth " +
                                                     std::to_string(options.max_depth));
            }
            for (GateKind g : approx.word) {
                out.append(g, {in.qubits[0]});
            }
            ++replaced;
        }
        result.circuit = std::move(out);
        log("approximate", before, std::to_string(replaced) + " rotation(s) approximated");
    }

    if (options.route) {
        const std::size_t before = result.circuit.size();
        try {
            result.circuit = compensation::route_circuit(result.circuit, device.connectivity);
        } catch (const RuleViolation &e) {
            return fail(e.rule(), e.detail());
        } catch (const std::invalid_argument &e) {
            return fail(AqmRule::connectivity, e.what());
        }
        log("route", before);
    }

    if (options.expand) {
        const std::size_t before = result.circuit.size();
        try {
            result.circuit = compensation::expand_swaps(result.circuit, native);
        } catch (const RewriteError &e) {
            return fail(AqmRule::operations, e.what());
        }
        log("expand", before);
    }

    // Legality: every gate native, every multi-qubit gate on coupled qubits.
    for (const Instruction &in : result.circuit.instructions()) {
        if (!gate_info(in.gate).is_unitary) {
            continue;
        }
        if (!device.has_gate(in.gate)) {
            return fail(AqmRule::operations, std::string(gate_name(in.gate)) + " is not native to " + device.name);
        }
        for (std::size_t a = 0; a < in.qubits.size(); ++a) {
            for (std::size_t b = a + 1; b < in.qubits.size(); ++b) {
                if (!device.connectivity.has_edge(in.qubits[a], in.qubits[b])) {
                    return fail(AqmRule::connectivity, std::string(gate_name(in.gate)) + " on uncoupled qubits " +
                                                           std::to_string(in.qubits[a]) + " and " +
                                                           std::to_string(in.qubits[b]));
                }
            }
        }
    }

    result.cost = compensation::estimate_cost(result.circuit, device);
    log("cost", result.circuit.size());

    if (options.budget) {
        result.budget = compensation::check_coherence_budget(result.circuit, device, options.coherence_threshold);
        log("budget", result.circuit.size(), "duration/T2 = " + format_distance(result.budget->ratio));
        if (!result.budget->pass) {
            return fail(AqmRule::coherence, "duration " + format_distance(result.budget->duration_ns) +
                                                " ns is " + format_distance(result.budget->ratio) +
                                                " of T2, above the " + format_distance(options.coherence_threshold) +
                                                " budget");
        }
    }
    return result;
}

}  // namespace aqm::matcher
