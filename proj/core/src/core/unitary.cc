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

#include "aqm/core/unitary.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aqm {

UnitaryMatrix::UnitaryMatrix(Matrix entries) : num_qubits_(0), entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("UnitaryMatrix: matrix is not square");
    }
    if (!is_power_of_two(static_cast<std::size_t>(entries_.rows()))) {
        throw std::invalid_argument("UnitaryMatrix: dimension " + std::to_string(entries_.rows()) +
                                    " is not a power of two");
    }
    if (!all_finite(entries_)) {
        throw std::invalid_argument("UnitaryMatrix: non-finite entry");
    }
    double dev = unitarity_deviation(entries_);
    if (dev > kNormTolerance) {
        throw std::invalid_argument("UnitaryMatrix: not unitary (deviation " + std::to_string(dev) + ")");
    }
    num_qubits_ = log2_exact(static_cast<std::size_t>(entries_.rows()));
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t num_qubits) {
    auto d = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
    return UnitaryMatrix(Matrix::Identity(d, d));
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    return UnitaryMatrix(entries_.adjoint());
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix &other) const {
    if (dimension() != other.dimension()) {
        throw std::invalid_argument("UnitaryMatrix: dimension mismatch in product");
    }
    return UnitaryMatrix(entries_ * other.entries_);
}

Matrix embed_gate(const Matrix &gate, std::span<const std::size_t> targets, std::size_t num_qubits) {
    const std::size_t k = targets.size();
    if (gate.rows() != gate.cols() || static_cast<std::size_t>(gate.rows()) != (std::size_t{1} << k)) {
        throw std::invalid_argument("embed_gate: gate dimension " + std::to_string(gate.rows()) +
                                    " does not match " + std::to_string(k) + " targets");
    }
    std::size_t target_mask = 0;
    for (std::size_t t : targets) {
        if (t >= num_qubits) {
            throw std::invalid_argument("embed_gate: target " + std::to_string(t) + " out of range");
        }
        if (target_mask & (std::size_t{1} << t)) {
            throw std::invalid_argument("embed_gate: duplicate target " + std::to_string(t));
        }
        target_mask |= std::size_t{1} << t;
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    auto local_index = [&](std::size_t full) {
        std::size_t l = 0;
        for (std::size_t b = 0; b < k; ++b) {
            l |= ((full >> targets[b]) & 1) << b;
        }
        return l;
    };
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t rest = col & ~target_mask;
        std::size_t lc = local_index(col);
        for (std::size_t lr = 0; lr < (std::size_t{1} << k); ++lr) {
            std::size_t row = rest;
            for (std::size_t b = 0; b < k; ++b) {
                row |= ((lr >> b) & 1) << targets[b];
            }
            out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                gate(static_cast<Eigen::Index>(lr), static_cast<Eigen::Index>(lc));
        }
    }
    return out;
}

UnitaryMatrix embed_gate(const UnitaryMatrix &gate, std::span<const std::size_t> targets,
                         std::size_t num_qubits) {
    return UnitaryMatrix(embed_gate(gate.matrix(), targets, num_qubits));
}

double phase_invariant_distance(const Matrix &u, const Matrix &v) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
        throw std::invalid_argument("phase_invariant_distance: dimension mismatch");
    }
    // For unitaries ||U - e^{i phi} V||_F^2 = 2d (1 - |tr(U^dagger V)| / d) when
    // phi = -arg tr(U^dagger V). The Frobenius form avoids the cancellation in
    // 1 - |tr|/d, which would cap the resolution near zero at ~1e-8.
    const double d = static_cast<double>(u.rows());
    Complex tr = (u.adjoint() * v).trace();
    Complex phase = std::abs(tr) > 0.0 ? std::conj(tr) / std::abs(tr) : Complex(1.0, 0.0);
    double dist = (u - phase * v).norm() / std::sqrt(2.0 * d);
    return std::clamp(dist, 0.0, 1.0);
}

double phase_invariant_distance(const UnitaryMatrix &u, const UnitaryMatrix &v) {
    return phase_invariant_distance(u.matrix(), v.matrix());
}

}  // namespace aqm
