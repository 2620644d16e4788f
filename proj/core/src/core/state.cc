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

#include "aqm/core/state.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aqm {

StateVector::StateVector(std::size_t num_qubits, Vector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check();
}

StateVector::StateVector(Vector amplitudes) : num_qubits_(0), amplitudes_(std::move(amplitudes)) {
    const auto dim = static_cast<std::size_t>(amplitudes_.size());
    num_qubits_ = is_power_of_two(dim) ? log2_exact(dim) : 0;
    check();
}

void StateVector::check() const {
    if (num_qubits_ < 1 || num_qubits_ > 30) {
        throw std::invalid_argument("StateVector: qubit count must be in [1, 30], got " +
                                    std::to_string(num_qubits_));
    }
    if (static_cast<std::size_t>(amplitudes_.size()) != (std::size_t{1} << num_qubits_)) {
        throw std::invalid_argument("StateVector: expected " + std::to_string(std::size_t{1} << num_qubits_) +
                                    " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    if (!all_finite(amplitudes_)) {
        throw std::invalid_argument("StateVector: non-finite amplitude");
    }
    double n2 = amplitudes_.squaredNorm();
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("StateVector: squared norm " + std::to_string(n2) + " differs from 1");
    }
}

StateVector StateVector::normalized(Vector amplitudes) {
    double n = amplitudes.norm();
    if (!(n > 1e-300) || !std::isfinite(n)) {
        throw std::invalid_argument("StateVector::normalized: zero or non-finite norm");
    }
    amplitudes /= n;
    return StateVector(std::move(amplitudes));
}

StateVector basis_state(std::size_t num_qubits, std::size_t index) {
    if (num_qubits < 1 || num_qubits > 30) {
        throw std::invalid_argument("basis_state: qubit count must be in [1, 30]");
    }
    std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw std::out_of_range("basis_state: index " + std::to_string(index) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(num_qubits, std::move(v));
}

StateVector plus_state(std::size_t num_qubits) {
    std::size_t dim = std::size_t{1} << num_qubits;
    Vector v = Vector::Constant(static_cast<Eigen::Index>(dim), 1.0 / std::sqrt(static_cast<double>(dim)));
    return StateVector(num_qubits, std::move(v));
}

StateVector tensor_product(const StateVector &a, const StateVector &b) {
    const auto &va = a.amplitudes();
    const auto &vb = b.amplitudes();
    Vector out(va.size() * vb.size());
    for (Eigen::Index i = 0; i < va.size(); ++i) {
        out.segment(i * vb.size(), vb.size()) = va(i) * vb;
    }
    return StateVector(a.num_qubits() + b.num_qubits(), std::move(out));
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    return std::norm(a.amplitudes().dot(b.amplitudes()));
}

StateVector qubit_state(Complex amp0, Complex amp1) {
    Vector v(2);
    v << amp0, amp1;
    return StateVector::normalized(std::move(v));
}

}  // namespace aqm
