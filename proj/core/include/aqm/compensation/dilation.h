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


#ifndef AQM_COMPENSATION_DILATION_H
#define AQM_COMPENSATION_DILATION_H

#include <cstddef>
#include <optional>
#include <vector>

#include "aqm/core/linalg.h"
#include "aqm/core/measurement.h"
#include "aqm/core/rng.h"
#include "aqm/core/state.h"
#include "aqm/core/unitary.h"

namespace aqm::compensation {

/// A general measurement realised as a unitary on system + ancilla followed
/// by a computational-basis measurement of the ancilla.
///
/// Basis index of the joint register is s * 2^a + k for system index s and
/// ancilla index k, i.e. the ancilla occupies the low qubits.
struct SynthesizedMeasurement {
    std::size_t num_system_qubits;
    std::size_t num_ancilla_qubits;
    UnitaryMatrix unitary;
    /// Ancilla basis index -> outcome index; nullopt for padding indices,
    /// which are reached with probability zero.
    std::vector<std::optional<std::size_t>> decode;

    /// Outcome probabilities and system post-states, indexed by outcome.
    std::vector<MeasurementBranch> branches(const StateVector &input) const;
    MeasurementRecord sample(const StateVector &input, Rng &rng) const;
};

/// Naimark dilation. Columns (s, 0) hold sum_k (m_k |s>) (x) |k>; the
/// remaining columns come from Gram-Schmidt over the standard basis in index
/// order. Throws std::invalid_argument for an incomplete set.
SynthesizedMeasurement synthesize_measurement(const MeasurementOperatorSet &m);

}  // namespace aqm::compensation

#endif
