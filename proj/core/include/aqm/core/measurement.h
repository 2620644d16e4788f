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

#ifndef AQM_CORE_MEASUREMENT_H
#define AQM_CORE_MEASUREMENT_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aqm/core/linalg.h"
#include "aqm/core/rng.h"
#include "aqm/core/state.h"

namespace aqm {

/// A general measurement {m_1..m_K} on num_qubits qubits.
///
/// Construction only checks shapes and finiteness; completeness
/// (sum m^dagger m = I) is what validate_measurement_set reports, and
/// apply_measurement refuses sets that fail it.
class MeasurementOperatorSet {
   public:
    MeasurementOperatorSet(std::size_t num_qubits, std::vector<Matrix> operators);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t dimension() const noexcept {
        return std::size_t{1} << num_qubits_;
    }
    std::size_t num_outcomes() const noexcept {
        return operators_.size();
    }
    const std::vector<Matrix> &operators() const noexcept {
        return operators_;
    }
    const Matrix &op(std::size_t k) const {
        return operators_.at(k);
    }

   private:
    std::size_t num_qubits_;
    std::vector<Matrix> operators_;
};

struct CompletenessCheck {
    bool ok;
    double max_deviation;
};

CompletenessCheck validate_measurement_set(const MeasurementOperatorSet &m);

struct MeasurementRecord {
    std::size_t outcome_index;
    double probability;
    StateVector post_state;
};

/// One outcome of the deterministic variant. Outcomes with probability below
/// kZeroProbability carry no post-state.
struct MeasurementBranch {
    double probability;
    std::optional<StateVector> post_state;
};

/// Projective measurement of n qubits in the computational basis (2^n outcomes).
MeasurementOperatorSet computational_basis_measurement(std::size_t num_qubits);

/// All K outcome probabilities and post-states, with `m` acting on `targets`
/// (target k is local bit k of the operators). Throws std::invalid_argument if
/// the set is not complete.
std::vector<MeasurementBranch> measurement_branches(const MeasurementOperatorSet &m,
                                                    const StateVector &state,
                                                    std::span<const std::size_t> targets);
/// Same, acting on all qubits of `state`.
std::vector<MeasurementBranch> measurement_branches(const MeasurementOperatorSet &m,
                                                    const StateVector &state);

MeasurementRecord apply_measurement(const MeasurementOperatorSet &m, const StateVector &state,
                                    std::span<const std::size_t> targets, Rng &rng);
MeasurementRecord apply_measurement(const MeasurementOperatorSet &m, const StateVector &state, Rng &rng);
MeasurementRecord apply_measurement(const MeasurementOperatorSet &m, const StateVector &state,
                                    std::uint64_t seed);

/// Samples an index from `probabilities`, skipping entries below
/// kZeroProbability. The draw is taken relative to the eligible total.
std::size_t sample_outcome(std::span<const double> probabilities, Rng &rng);

/// The operator set {|target><j|} over all basis states j.
MeasurementOperatorSet initialization_measurement(const StateVector &target);

/// Prepares `target` from any `input` by measuring with
/// initialization_measurement(target). Every branch yields `target` (up to a
/// global phase).
StateVector initialize_via_measurement(const StateVector &target, const StateVector &input,
                                       std::uint64_t seed = 0);

/// <psi|H|psi>. Throws std::invalid_argument if H is not Hermitian within
/// kNormTolerance or the dimension mismatches.
double expectation(const StateVector &state, const Matrix &hermitian);

}  // namespace aqm

#endif
