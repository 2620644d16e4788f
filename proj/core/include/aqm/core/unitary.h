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

#ifndef AQM_CORE_UNITARY_H
#define AQM_CORE_UNITARY_H

#include <cstddef>
#include <span>

#include "aqm/core/linalg.h"

namespace aqm {

/// A validated unitary on num_qubits() qubits.
class UnitaryMatrix {
   public:
    /// Throws std::invalid_argument unless square, power-of-two sized, finite and
    /// unitary within kNormTolerance.
    explicit UnitaryMatrix(Matrix entries);

    static UnitaryMatrix identity(std::size_t num_qubits);

    std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(entries_.rows());
    }
    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    const Matrix &matrix() const noexcept {
        return entries_;
    }

    UnitaryMatrix adjoint() const;

    /// Matrix product this * other (other acts first).
    UnitaryMatrix operator*(const UnitaryMatrix &other) const;

   private:
    std::size_t num_qubits_;
    Matrix entries_;
};

/// Lifts a 2^k gate acting on `targets` (target k is local bit k) to the full
/// 2^num_qubits space, identity elsewhere.
///
/// Throws std::invalid_argument on a dimension mismatch, repeated or out of
/// range targets.
Matrix embed_gate(const Matrix &gate, std::span<const std::size_t> targets, std::size_t num_qubits);
UnitaryMatrix embed_gate(const UnitaryMatrix &gate, std::span<const std::size_t> targets,
                         std::size_t num_qubits);

/// sqrt(1 - |tr(U^dagger V)| / d), clamped to [0, 1]. Zero iff U = e^{i phi} V.
double phase_invariant_distance(const Matrix &u, const Matrix &v);
double phase_invariant_distance(const UnitaryMatrix &u, const UnitaryMatrix &v);

}  // namespace aqm

#endif
