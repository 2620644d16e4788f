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

#include "aqm/core/linalg.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace aqm {

double max_abs_deviation(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_deviation: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_deviation(const Matrix &u) {
    if (u.rows() != u.cols()) {
        throw std::invalid_argument("unitarity_deviation: matrix is not square");
    }
    Matrix id = Matrix::Identity(u.rows(), u.cols());
    return std::max(max_abs_deviation(u * u.adjoint(), id), max_abs_deviation(u.adjoint() * u, id));
}

bool is_unitary(const Matrix &u, double tol) {
    return u.rows() == u.cols() && all_finite(u) && unitarity_deviation(u) <= tol;
}

bool is_hermitian(const Matrix &h, double tol) {
    return h.rows() == h.cols() && all_finite(h) && max_abs_deviation(h, h.adjoint()) <= tol;
}

bool all_finite(const Matrix &m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                return false;
            }
        }
    }
    return true;
}

bool all_finite(const Vector &v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) {
            return false;
        }
    }
    return true;
}

std::size_t log2_exact(std::size_t n) {
    if (!is_power_of_two(n)) {
        throw std::invalid_argument("log2_exact: " + std::to_string(n) + " is not a power of two");
    }
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n) {
        ++k;
    }
    return k;
}

Matrix hermitian_evolution(const Matrix &h, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_evolution: eigendecomposition failed");
    }
    const Eigen::VectorXd &energies = solver.eigenvalues();
    Vector phases(energies.size());
    for (Eigen::Index k = 0; k < energies.size(); ++k) {
        phases(k) = std::polar(1.0, -energies(k) * t);
    }
    const Matrix &vecs = solver.eigenvectors();
    return vecs * phases.asDiagonal() * vecs.adjoint();
}

}  // namespace aqm
