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

#include "aqm/core/simulator.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace aqm {

void apply_gate_inplace(Vector &amplitudes, const Matrix &gate, std::span<const std::size_t> targets) {
    const std::size_t k = targets.size();
    const std::size_t local_dim = std::size_t{1} << k;
    if (static_cast<std::size_t>(gate.rows()) != local_dim || gate.cols() != gate.rows()) {
        throw std::invalid_argument("apply_gate_inplace: gate dimension does not match target count");
    }
    const auto dim = static_cast<std::size_t>(amplitudes.size());
    std::size_t mask = 0;
    for (std::size_t t : targets) {
        if ((std::size_t{1} << t) >= dim) {
            throw std::invalid_argument("apply_gate_inplace: target " + std::to_string(t) + " out of range");
        }
        if (mask & (std::size_t{1} << t)) {
            throw std::invalid_argument("apply_gate_inplace: duplicate target " + std::to_string(t));
        }
        mask |= std::size_t{1} << t;
    }
    std::vector<std::size_t> offsets(local_dim);
    for (std::size_t l = 0; l < local_dim; ++l) {
        std::size_t off = 0;
        for (std::size_t b = 0; b < k; ++b) {
            off |= ((l >> b) & 1) << targets[b];
        }
        offsets[l] = off;
    }
    Vector in(static_cast<Eigen::Index>(local_dim));
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & mask) {
            continue;
        }
        for (std::size_t l = 0; l < local_dim; ++l) {
            in(static_cast<Eigen::Index>(l)) = amplitudes(static_cast<Eigen::Index>(base | offsets[l]));
        }
        Vector out = gate * in;
        for (std::size_t l = 0; l < local_dim; ++l) {
            amplitudes(static_cast<Eigen::Index>(base | offsets[l])) = out(static_cast<Eigen::Index>(l));
        }
    }
}

namespace {

const MeasurementOperatorSet &single_qubit_z_measurement() {
    static const MeasurementOperatorSet m = computational_basis_measurement(1);
    return m;
}

const MeasurementOperatorSet &single_qubit_reset() {
    static const MeasurementOperatorSet m = initialization_measurement(basis_state(1, 0));
    return m;
}

}  // namespace

CircuitRun apply_circuit(const Circuit &circuit, const StateVector &initial, Rng &rng) {
    if (circuit.num_qubits() != initial.num_qubits()) {
        throw std::invalid_argument("apply_circuit: circuit has " + std::to_string(circuit.num_qubits()) +
                                    " qubits but the state has " + std::to_string(initial.num_qubits()));
    }
    Vector amps = initial.amplitudes();
    CircuitRun run{initial, {}, {}};
    for (const auto &ins : circuit.instructions()) {
        switch (ins.gate) {
            case GateKind::I:
                break;
            case GateKind::MEASURE:
            case GateKind::RESET: {
                StateVector current = StateVector::normalized(std::move(amps));
                const auto &m =
                    ins.gate == GateKind::MEASURE ? single_qubit_z_measurement() : single_qubit_reset();
                auto record = apply_measurement(m, current, ins.qubits, rng);
                amps = record.post_state.amplitudes();
                if (ins.gate == GateKind::MEASURE) {
                    run.measured_qubits.push_back(ins.qubits[0]);
                    run.records.push_back(std::move(record));
                }
                break;
            }
            default:
                apply_gate_inplace(amps, gate_matrix(ins.gate, ins.angle), ins.qubits);
                break;
        }
    }
    run.final_state = StateVector(circuit.num_qubits(), std::move(amps));
    return run;
}

CircuitRun apply_circuit(const Circuit &circuit, const StateVector &initial, std::uint64_t seed) {
    Rng rng(seed);
    return apply_circuit(circuit, initial, rng);
}

}  // namespace aqm
