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

#include "aqm/core/circuit.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "aqm/core/unitary.h"

namespace aqm {

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("Circuit: needs at least one qubit");
    }
}

Circuit &Circuit::append(const Instruction &instruction) {
    const GateInfo &info = gate_info(instruction.gate);
    if (instruction.qubits.size() != static_cast<std::size_t>(info.arity)) {
        throw std::invalid_argument(std::string(info.name) + " takes " + std::to_string(info.arity) +
                                    " operand(s), got " + std::to_string(instruction.qubits.size()));
    }
    for (std::size_t i = 0; i < instruction.qubits.size(); ++i) {
        if (instruction.qubits[i] >= num_qubits_) {
            throw std::invalid_argument(std::string(info.name) + ": operand " +
                                        std::to_string(instruction.qubits[i]) + " out of range for " +
                                        std::to_string(num_qubits_) + " qubits");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (instruction.qubits[i] == instruction.qubits[j]) {
                throw std::invalid_argument(std::string(info.name) + ": repeated operand " +
                                            std::to_string(instruction.qubits[i]));
            }
        }
    }
    if (!std::isfinite(instruction.angle)) {
        throw std::invalid_argument(std::string(info.name) + ": non-finite angle");
    }
    instructions_.push_back(instruction);
    if (!info.has_angle) {
        instructions_.back().angle = 0.0;
    }
    return *this;
}

Circuit &Circuit::append(GateKind gate, std::initializer_list<std::size_t> qubits, double angle) {
    return append(Instruction{gate, std::vector<std::size_t>(qubits), angle});
}

Circuit &Circuit::extend(const Circuit &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("Circuit::extend: qubit count mismatch");
    }
    for (const auto &ins : other.instructions_) {
        instructions_.push_back(ins);
    }
    return *this;
}

bool Circuit::has_non_unitary() const {
    return std::any_of(instructions_.begin(), instructions_.end(),
                       [](const Instruction &i) { return !gate_info(i.gate).is_unitary; });
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            words.push_back(line.substr(start, i - start));
        }
    }
    return words;
}

std::size_t parse_index(std::string_view word, std::size_t line_no) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw CircuitParseError(line_no, "expected a qubit index, got '" + std::string(word) + "'");
    }
    return value;
}

double parse_angle(std::string_view word, std::size_t line_no) {
    // std::from_chars for double is not available in libstdc++ 11.
    std::string buf(word);
    char *end = nullptr;
    double value = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || buf.empty() || !std::isfinite(value)) {
        throw CircuitParseError(line_no, "expected a radian angle, got '" + buf + "'");
    }
    return value;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto words = split_words(line);
        if (words.empty()) {
            continue;
        }
        std::string head(words[0]);
        for (auto &c : head) {
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
        if (head == "qubits") {
            if (circuit) {
                throw CircuitParseError(line_no, "duplicate 'qubits' header");
            }
            if (words.size() != 2) {
                throw CircuitParseError(line_no, "expected 'qubits N'");
            }
            std::size_t n = parse_index(words[1], line_no);
            if (n < 1 || n > 30) {
                throw CircuitParseError(line_no, "qubit count must be in [1, 30]");
            }
            circuit.emplace(n);
            continue;
        }
        if (!circuit) {
            throw CircuitParseError(line_no, "instruction before 'qubits N' header");
        }
        auto kind = parse_gate_name(words[0]);
        if (!kind) {
            throw CircuitParseError(line_no, "unknown gate '" + std::string(words[0]) + "'");
        }
        const GateInfo &info = gate_info(*kind);
        std::size_t expected = static_cast<std::size_t>(info.arity) + (info.has_angle ? 1 : 0);
        if (words.size() - 1 != expected) {
            throw CircuitParseError(line_no, std::string(info.name) + " expects " + std::to_string(expected) +
                                                 " argument(s), got " + std::to_string(words.size() - 1));
        }
        Instruction ins{*kind, {}, 0.0};
        for (int k = 0; k < info.arity; ++k) {
            ins.qubits.push_back(parse_index(words[1 + static_cast<std::size_t>(k)], line_no));
        }
        if (info.has_angle) {
            ins.angle = parse_angle(words.back(), line_no);
        }
        try {
            circuit->append(ins);
        } catch (const std::invalid_argument &e) {
            throw CircuitParseError(line_no, e.what());
        }
    }
    if (!circuit) {
        throw CircuitParseError(line_no, "missing 'qubits N' header");
    }
    return std::move(*circuit);
}

std::string format_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits() << "\n";
    for (const auto &ins : circuit.instructions()) {
        const GateInfo &info = gate_info(ins.gate);
        out << info.name;
        for (auto q : ins.qubits) {
            out << ' ' << q;
        }
        if (info.has_angle) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", ins.angle);
            out << ' ' << buf;
        }
        out << "\n";
    }
    return out.str();
}

Matrix circuit_unitary(const Circuit &circuit) {
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << circuit.num_qubits());
    Matrix u = Matrix::Identity(dim, dim);
    for (const auto &ins : circuit.instructions()) {
        if (!gate_info(ins.gate).is_unitary) {
            throw std::invalid_argument("circuit_unitary: circuit contains " + std::string(gate_name(ins.gate)));
        }
        if (ins.gate == GateKind::I) {
            continue;
        }
        u = embed_gate(gate_matrix(ins.gate, ins.angle), ins.qubits, circuit.num_qubits()) * u;
    }
    return u;
}

}  // namespace aqm
