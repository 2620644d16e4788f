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

#ifndef AQM_CORE_LINALG_H
#define AQM_CORE_LINALG_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

namespace aqm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

/// Tolerance for unit norm of stored states and U*U^dagger = I.
inline constexpr double kNormTolerance = 1e-10;
/// Tolerance for sum_k m_k^dagger m_k = I.
inline constexpr double kCompletenessTolerance = 1e-9;
/// Outcomes below this probability are never sampled.
inline constexpr double kZeroProbability = 1e-14;

/// Largest entrywise |a_ij - b_ij|.
double max_abs_deviation(const Matrix &a, const Matrix &b);

/// Largest entrywise |(U U^dagger - I)_ij| and |(U^dagger U - I)_ij|.
double unitarity_deviation(const Matrix &u);

bool is_unitary(const Matrix &u, double tol = kNormTolerance);
bool is_hermitian(const Matrix &h, double tol = kNormTolerance);
bool all_finite(const Matrix &m);
bool all_finite(const Vector &v);

/// True iff `n` is a positive power of two (1 counts as 2^0).
constexpr bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

/// log2 of a power of two.
std::size_t log2_exact(std::size_t n);

/// exp(-i * h * t) for Hermitian h, via the eigendecomposition.
Matrix hermitian_evolution(const Matrix &h, double t);

}  // namespace aqm

#endif
