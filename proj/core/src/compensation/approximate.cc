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

#include "aqm/compensation/approximate.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace aqm::compensation {
namespace {

// Matrix with the phase of its first non-negligible entry removed, rounded to
// a 1e-9 grid, as a set key.
std::array<long long, 8> phase_key(const Matrix &m) {
    Complex phase{1.0, 0.0};
    for (Eigen::Index i = 0; i < 4; ++i) {
        Complex z = m(i % 2, i / 2);
        if (std::abs(z) > 1e-6) {
            phase = std::conj(z) / std::abs(z);
            break;
        }
    }
    std::array<long long, 8> key{};
    for (Eigen::Index i = 0; i < 4; ++i) {
        Complex z = m(i % 2, i / 2) * phase;
        key[2 * i] = std::llround(z.real() * 1e9);
        key[2 * i + 1] = std::llround(z.imag() * 1e9);
    }
    return key;
}

struct Node {
    std::vector<GateKind> word;
    Matrix matrix;
};

}  // namespace

Matrix word_matrix(const std::vector<GateKind> &word) {
    Matrix m = Matrix::Identity(2, 2);
    for (GateKind g : word) {
        m = gate_matrix(g) * m;
    }
    return m;
}

ApproximationResult approximate_single_qubit(const ApproximationRequest &request) {
    if (request.alphabet.empty()) {
        throw std::invalid_argument("approximate_single_qubit: empty gate alphabet");
    }
    if (request.target.num_qubits() != 1) {
        throw std::invalid_argument("approximate_single_qubit: target must be a single-qubit unitary");
    }
    if (!(request.epsilon > 0.0 && request.epsilon < 1.0)) {
        throw std::invalid_argument("approximate_single_qubit: epsilon must lie in (0, 1)");
    }
    std::vector<GateKind> alphabet = request.alphabet;
    for (GateKind g : alphabet) {
        const GateInfo &info = gate_info(g);
        if (info.arity != 1 || info.has_angle || !info.is_unitary) {
            throw std::invalid_argument("approximate_single_qubit: " + std::string(info.name) +
                                        " is not a fixed single-qubit gate");
        }
    }
    std::sort(alphabet.begin(), alphabet.end(),
              [](GateKind a, GateKind b) { return gate_name(a) < gate_name(b); });
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    const Matrix &target = request.target.matrix();
    std::set<std::array<long long, 8>> seen;
    std::vector<Node> frontier = {Node{{}, Matrix::Identity(2, 2)}};
    seen.insert(phase_key(frontier.front().matrix));

    ApproximationResult best{{}, phase_invariant_distance(frontier.front().matrix, target), false};
    if (best.distance <= request.epsilon) {
        best.achieved = true;
        return best;
    }
    for (std::size_t depth = 1; depth <= request.max_depth && !frontier.empty(); ++depth) {
        std::vector<Node> next;
        for (const Node &node : frontier) {
            for (GateKind g : alphabet) {
                Matrix m = gate_matrix(g) * node.matrix;
                if (!seen.insert(phase_key(m)).second) {
                    continue;
                }
                std::vector<GateKind> word = node.word;
                word.push_back(g);
                double d = phase_invariant_distance(m, target);
                if (d <= request.epsilon) {
                    return ApproximationResult{std::move(word), d, true};
                }
                if (d < best.distance) {
                    best = ApproximationResult{word, d, false};
                }
                next.push_back(Node{std::move(word), std::move(m)});
            }
        }
        frontier = std::move(next);
    }
    return best;
}

}  // namespace aqm::compensation
