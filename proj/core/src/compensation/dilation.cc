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

#include "aqm/compensation/dilation.h"

#include <stdexcept>
#include <string>

namespace aqm::compensation {
namespace {

std::size_t ceil_log2(std::size_t k) {
    std::size_t a = 0;
    while ((std::size_t{1} << a) < k) {
        ++a;
    }
    return a;
}

Matrix naimark_unitary(const MeasurementOperatorSet &m, std::size_t ancillas) {
    const auto d = static_cast<Eigen::Index>(m.dimension());
    const auto stride = Eigen::Index{1} << ancillas;
    const Eigen::Index dim = d * stride;
    Matrix u = Matrix::Zero(dim, dim);
    for (Eigen::Index s = 0; s < d; ++s) {
        for (std::size_t k = 0; k < m.num_outcomes(); ++k) {
            for (Eigen::Index j = 0; j < d; ++j) {
                u(j * stride + static_cast<Eigen::Index>(k), s * stride) = m.op(k)(j, s);
            }
        }
    }
    std::vector<Eigen::Index> filled;
    for (Eigen::Index s = 0; s < d; ++s) {
        filled.push_back(s * stride);
    }
    Eigen::Index next_free = 0;
    auto advance = [&] {
        while (next_free < dim && next_free % stride == 0) {
            ++next_free;
        }
    };
    advance();
    for (Eigen::Index i = 0; i < dim && next_free < dim; ++i) {
        Vector v = Vector::Zero(dim);
        v(i) = 1.0;
        // Two passes of classical Gram-Schmidt keep the columns orthonormal to
        // working precision.
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index c : filled) {
                v -= u.col(c) * u.col(c).dot(v);
            }
        }
        double norm = v.norm();
        if (norm < 1e-8) {
            continue;
        }
        u.col(next_free) = v / norm;
        filled.push_back(next_free);
        ++next_free;
        advance();
    }
    if (next_free < dim) {
        throw std::logic_error("synthesize_measurement: column completion ran out of basis vectors");
    }
    return u;
}

}  // namespace

SynthesizedMeasurement synthesize_measurement(const MeasurementOperatorSet &m) {
    auto check = validate_measurement_set(m);
    if (!check.ok) {
        throw std::invalid_argument("synthesize_measurement: operators are not complete (deviation " +
                                    std::to_string(check.max_deviation) + ")");
    }
    const std::size_t ancillas = ceil_log2(m.num_outcomes());
    std::vector<std::optional<std::size_t>> decode(std::size_t{1} << ancillas);
    for (std::size_t k = 0; k < m.num_outcomes(); ++k) {
        decode[k] = k;
    }
    return SynthesizedMeasurement{m.num_qubits(), ancillas, UnitaryMatrix(naimark_unitary(m, ancillas)),
                                  std::move(decode)};
}

std::vector<MeasurementBranch> SynthesizedMeasurement::branches(const StateVector &input) const {
    if (input.num_qubits() != num_system_qubits) {
        throw std::invalid_argument("SynthesizedMeasurement: input has " + std::to_string(input.num_qubits()) +
                                    " qubits, expected " + std::to_string(num_system_qubits));
    }
    const auto d = static_cast<Eigen::Index>(input.dimension());
    const auto stride = Eigen::Index{1} << num_ancilla_qubits;
    Vector joint = Vector::Zero(d * stride);
    for (Eigen::Index s = 0; s < d; ++s) {
        joint(s * stride) = input.amplitudes()(s);
    }
    const Vector out = unitary.matrix() * joint;

    std::size_t outcomes = 0;
    for (const auto &entry : decode) {
        outcomes += entry.has_value();
    }
    std::vector<MeasurementBranch> result(outcomes, MeasurementBranch{0.0, std::nullopt});
    for (Eigen::Index k = 0; k < stride; ++k) {
        if (!decode[static_cast<std::size_t>(k)]) {
            continue;
        }
        Vector phi(d);
        for (Eigen::Index s = 0; s < d; ++s) {
            phi(s) = out(s * stride + k);
        }
        double p = phi.squaredNorm();
        auto &branch = result[*decode[static_cast<std::size_t>(k)]];
        branch.probability = p;
        if (p > kZeroProbability) {
            branch.post_state = StateVector::normalized(phi);
        }
    }
    return result;
}

MeasurementRecord SynthesizedMeasurement::sample(const StateVector &input, Rng &rng) const {
    auto all = branches(input);
    std::vector<double> probabilities;
    probabilities.reserve(all.size());
    for (const auto &b : all) {
        probabilities.push_back(b.probability);
    }
    std::size_t k = sample_outcome(probabilities, rng);
    return MeasurementRecord{k, all[k].probability, *all[k].post_state};
}

}  // namespace aqm::compensation
