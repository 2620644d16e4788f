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


#ifndef AQM_COMPENSATION_APPROXIMATE_H
#define AQM_COMPENSATION_APPROXIMATE_H

#include <cstddef>
#include <vector>

#include "aqm/core/gates.h"
#include "aqm/core/unitary.h"

namespace aqm::compensation {

struct ApproximationRequest {
    UnitaryMatrix target;
    /// Fixed single-qubit gates; parametric rotations are rejected.
    std::vector<GateKind> alphabet;
    double epsilon;
    std::size_t max_depth;
};

struct ApproximationResult {
    /// Time order: word[0] is applied first.
    std::vector<GateKind> word;
    double distance;
    bool achieved;
};

/// Breadth-first search over gate words of increasing length.
///
/// Words are enumerated in lexicographic order of gate name within each
/// length, and words whose matrix (up to phase) was already reached are
/// pruned. Returns the first word within epsilon, otherwise the closest
/// word seen with achieved = false.
ApproximationResult approximate_single_qubit(const ApproximationRequest &request);

/// Matrix of a word, applied in time order.
Matrix word_matrix(const std::vector<GateKind> &word);

}  // namespace aqm::compensation

#endif
