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

#ifndef AQM_CORE_CIRCUIT_H
#define AQM_CORE_CIRCUIT_H

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aqm/core/gates.h"
#include "aqm/core/linalg.h"

namespace aqm {

struct Instruction {
    GateKind gate;
    std::vector<std::size_t> qubits;
    /// Radians; only meaningful for RX/RY/RZ.
    double angle = 0.0;

    bool operator==(const Instruction &) const = default;
};

/// Ordered instruction list over a fixed number of qubits.
class Circuit {
   public:
    explicit Circuit(std::size_t num_qubits);

    /// Validates arity, operand range and operand distinctness.
    Circuit &append(const Instruction &instruction);
    Circuit &append(GateKind gate, std::initializer_list<std::size_t> qubits, double angle = 0.0);

    /// Appends every instruction of `other`; qubit counts must match.
    Circuit &extend(const Circuit &other);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    const std::vector<Instruction> &instructions() const noexcept {
        return instructions_;
    }
    std::size_t size() const noexcept {
        return instructions_.size();
    }
    bool empty() const noexcept {
        return instructions_.empty();
    }
    bool has_non_unitary() const;

    bool operator==(const Circuit &) const = default;

   private:
    std::size_t num_qubits_;
    std::vector<Instruction> instructions_;
};

class CircuitParseError : public std::runtime_error {
   public:
    CircuitParseError(std::size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {
    }
    std::size_t line() const noexcept {
        return line_;
    }

   private:
    std::size_t line_;
};

/// Parses the line-oriented circuit text format:
///
///     # comment
///     qubits 3
///     h 0
///     cnot 0 1
///     rz 2 0.25
///     measure 1
///
/// Names are case-insensitive; the `qubits N` header must come before any
/// instruction.
Circuit parse_circuit(std::string_view text);

/// Inverse of parse_circuit. Angles are written with 17 significant digits so
/// they round-trip exactly.
std::string format_circuit(const Circuit &circuit);

/// Dense 2^n unitary of a circuit without MEASURE/RESET.
Matrix circuit_unitary(const Circuit &circuit);

}  // namespace aqm

#endif
