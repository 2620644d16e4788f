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

#ifndef AQM_CORE_SIMULATOR_H
#define AQM_CORE_SIMULATOR_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "aqm/core/circuit.h"
#include "aqm/core/measurement.h"
#include "aqm/core/rng.h"
#include "aqm/core/state.h"

namespace aqm {

/// Applies a 2^k gate to `targets` of the amplitude vector in place without
/// forming the full operator.
void apply_gate_inplace(Vector &amplitudes, const Matrix &gate, std::span<const std::size_t> targets);

struct CircuitRun {
    StateVector final_state;
    /// One record per MEASURE instruction, in program order.
    std::vector<MeasurementRecord> records;
    /// Qubit measured by each record.
    std::vector<std::size_t> measured_qubits;
};

/// Runs `circuit` on `initial`. MEASURE collapses the qubit in the
/// computational basis; RESET prepares |0> on the qubit through the
/// initialization measurement {|0><0|, |0><1|}.
CircuitRun apply_circuit(const Circuit &circuit, const StateVector &initial, Rng &rng);
CircuitRun apply_circuit(const Circuit &circuit, const StateVector &initial, std::uint64_t seed);

}  // namespace aqm

#endif
