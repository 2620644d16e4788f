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


#ifndef AQM_COMPENSATION_REWRITE_H
#define AQM_COMPENSATION_REWRITE_H

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aqm/core/circuit.h"
#include "aqm/core/gates.h"

namespace aqm::compensation {

/// What to do with a single-qubit gate that has no exact rewrite.
enum class RotationPolicy {
    /// Throw RewriteError.
    exact_only,
    /// Leave the instruction in place for approximate_single_qubit.
    defer,
};

struct RewriteOptions {
    RotationPolicy rotations = RotationPolicy::exact_only;
};

class RewriteError : public std::runtime_error {
   public:
    RewriteError(const Instruction &instruction, const std::string &message)
        : std::runtime_error(message), instruction_(instruction) {
    }
    const Instruction &instruction() const noexcept {
        return instruction_;
    }

   private:
    Instruction instruction_;
};

/// Rewrites every instruction into `native` using exact identities only.
///
/// The result equals the input up to global phase. Identity gates are
/// dropped; MEASURE and RESET pass through unchanged.
Circuit rewrite_to_basis(const Circuit &circuit, std::span<const GateKind> native, RewriteOptions options = {});

/// True when `native` can express every fixed gate of the alphabet exactly
/// (H, S, SDG, T, TDG and an entangling CNOT or CZ, possibly via rewrites).
bool is_exact_universal_basis(std::span<const GateKind> native);

}  // namespace aqm::compensation

#endif
