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

#include "aqm/core/measurement.h"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "aqm/core/simulator.h"

namespace aqm {

MeasurementOperatorSet::MeasurementOperatorSet(std::size_t num_qubits, std::vector<Matrix> operators)
    : num_qubits_(num_qubits), operators_(std::move(operators)) {
    if (num_qubits_ < 1 || num_qubits_ > 30) {
        throw std::invalid_argument("MeasurementOperatorSet: qubit count must be in [1, 30]");
    }
    if (operators_.empty()) {
        throw std::invalid_argument("MeasurementOperatorSet: needs at least one operator");
    }
    const auto d = static_cast<Eigen::Index>(dimension());
    for (std::size_t k = 0; k < operators_.size(); ++k) {
        if (operators_[k].rows() != d || operators_[k].cols() != d) {
            throw std::invalid_argument("MeasurementOperatorSet: operator " + std::to_string(k) + " is not " +
                                        std::to_string(d) + "x" + std::to_string(d));
        }
        if (!all_finite(operators_[k])) {
            throw std::invalid_argument("MeasurementOperatorSet: operator " + std::to_string(k) +
                                        " has a non-finite entry");
        }
    }
}

CompletenessCheck validate_measurement_set(const MeasurementOperatorSet &m) {
    const auto d = static_cast<Eigen::Index>(m.dimension());
    Matrix sum = Matrix::Zero(d, d);
    for (const auto &op : m.operators()) {
        sum += op.adjoint() * op;
    }
    double dev = max_abs_deviation(sum, Matrix::Identity(d, d));
    return {dev <= kCompletenessTolerance, dev};
}

MeasurementOperatorSet computational_basis_measurement(std::size_t num_qubits) {
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
    std::vector<Matrix> ops;
    ops.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index j = 0; j < d; ++j) {
        Matrix p = Matrix::Zero(d, d);
        p(j, j) = 1.0;
        ops.push_back(std::move(p));
    }
    return MeasurementOperatorSet(num_qubits, std::move(ops));
}

std::vector<MeasurementBranch> measurement_branches(const MeasurementOperatorSet &m,
                                                    const StateVector &state,
                                                    std::span<const std::size_t> targets) {
    if (targets.size() != m.num_qubits()) {
        throw std::invalid_argument("measurement_branches: operator set acts on " +
                                    std::to_string(m.num_qubits()) + " qubit(s), got " +
                                    std::to_string(targets.size()) + " target(s)");
    }
    auto check = validate_measurement_set(m);
    if (!check.ok) {
        throw std::invalid_argument("measurement set is not complete (max deviation " +
                                    std::to_string(check.max_deviation) + ")");
    }
    std::vector<MeasurementBranch> branches;
    branches.reserve(m.num_outcomes());
    for (const auto &op : m.operators()) {
        Vector v = state.amplitudes();
        apply_gate_inplace(v, op, targets);
        double p = v.squaredNorm();
        if (p < kZeroProbability) {
            branches.push_back({p, std::nullopt});
        } else {
            v /= std::sqrt(p);
            branches.push_back({p, StateVector(state.num_qubits(), std::move(v))});
        }
    }
    return branches;
}

std::vector<MeasurementBranch> measurement_branches(const MeasurementOperatorSet &m,
                                                    const StateVector &state) {
    if (m.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("measurement_branches: qubit count mismatch");
    }
    std::vector<std::size_t> all(state.num_qubits());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return measurement_branches(m, state, all);
}

std::size_t sample_outcome(std::span<const double> probabilities, Rng &rng) {
    double total = 0.0;
    std::size_t last_eligible = probabilities.size();
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
        if (probabilities[k] >= kZeroProbability) {
            total += probabilities[k];
            last_eligible = k;
        }
    }
    if (last_eligible == probabilities.size()) {
        throw std::invalid_argument("sample_outcome: no outcome has non-zero probability");
    }
    double u = rng.uniform() * total;
    double acc = 0.0;
    for (std::size_t k = 0; k < probabilities.size(); ++k) {
        if (probabilities[k] < kZeroProbability) {
            continue;
        }
        acc += probabilities[k];
        if (u < acc) {
            return k;
        }
    }
    return last_eligible;
}

MeasurementRecord apply_measurement(const MeasurementOperatorSet &m, const StateVector &state,
                                    std::span<const std::size_t> targets, Rng &rng) {
    auto branches = measurement_branches(m, state, targets);
    std::vector<double> probs;
    probs.reserve(branches.size());
    for (const auto &b : branches) {
        probs.push_back(b.probability);
    }
    std::size_t k = sample_outcome(probs, rng);
    return {k, branches[k].probability, std::move(*branches[k].post_state)};
}

MeasurementRecord apply_measurement(const MeasurementOperatorSet &m, const StateVector &state, Rng &rng) {
    if (m.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("apply_measurement: qubit count mismatch");
    }
    std::vector<std::size_t> all(state.num_qubits());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return apply_measurement(m, state, all, rng);
}

MeasurementRecord apply_measurement(const MeasurementOperatorSet &m, const StateVector &state,
                                    std::uint64_t seed) {
    Rng rng(seed);
    return apply_measurement(m, state, rng);
}

MeasurementOperatorSet initialization_measurement(const StateVector &target) {
    const auto d = static_cast<Eigen::Index>(target.dimension());
    std::vector<Matrix> ops;
    ops.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index j = 0; j < d; ++j) {
        Matrix op = Matrix::Zero(d, d);
        op.col(j) = target.amplitudes();
        ops.push_back(std::move(op));
    }
    return MeasurementOperatorSet(target.num_qubits(), std::move(ops));
}

StateVector initialize_via_measurement(const StateVector &target, const StateVector &input, std::uint64_t seed) {
    if (target.num_qubits() != input.num_qubits()) {
        throw std::invalid_argument("initialize_via_measurement: qubit count mismatch");
    }
    return apply_measurement(initialization_measurement(target), input, seed).post_state;
}

double expectation(const StateVector &state, const Matrix &hermitian) {
    if (static_cast<std::size_t>(hermitian.rows()) != state.dimension() ||
        static_cast<std::size_t>(hermitian.cols()) != state.dimension()) {
        throw std::invalid_argument("expectation: operator dimension does not match the state");
    }
    if (!is_hermitian(hermitian)) {
        throw std::invalid_argument("expectation: operator is not Hermitian");
    }
    return state.amplitudes().dot(hermitian * state.amplitudes()).real();
}

}  // namespace aqm
