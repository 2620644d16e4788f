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

#ifndef AQM_CORE_STATE_H
#define AQM_CORE_STATE_H

#include <cstddef>
#include <span>

#include "aqm/core/linalg.h"

namespace aqm {

/// Normalized amplitude vector over n >= 1 qubits.
///
/// Qubit q contributes 2^q to the basis index (little-endian). Global phase is
/// kept as-is; compare states with fidelity().
class StateVector {
   public:
    /// Throws std::invalid_argument unless the length is 2^num_qubits, every
    /// amplitude is finite and the norm is 1 within kNormTolerance.
    StateVector(std::size_t num_qubits, Vector amplitudes);

    /// Infers the qubit count from the length.
    explicit StateVector(Vector amplitudes);

    /// Rescales `amplitudes` to unit norm. Throws if the norm is ~0.
    static StateVector normalized(Vector amplitudes);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    const Vector &amplitudes() const noexcept {
        return amplitudes_;
    }
    Complex amplitude(std::size_t index) const {
        return amplitudes_(static_cast<Eigen::Index>(index));
    }
    double probability(std::size_t index) const {
        return std::norm(amplitude(index));
    }
    double norm() const {
        return amplitudes_.norm();
    }

    bool operator==(const StateVector &other) const {
        return num_qubits_ == other.num_qubits_ && amplitudes_ == other.amplitudes_;
    }

   private:
    void check() const;

    std::size_t num_qubits_;
    Vector amplitudes_;
};

/// |index> on num_qubits qubits.
StateVector basis_state(std::size_t num_qubits, std::size_t index);

/// |+>^n.
StateVector plus_state(std::size_t num_qubits);

/// Kronecker product a (x) b; `a` occupies the high-significance qubits.
StateVector tensor_product(const StateVector &a, const StateVector &b);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

/// Single-qubit state from two amplitudes (normalized on construction).
StateVector qubit_state(Complex amp0, Complex amp1);

}  // namespace aqm

#endif
