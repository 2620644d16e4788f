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

#include "aqm/core/gates.h"

#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aqm {

namespace {

constexpr std::array<GateInfo, 18> kGates = {{
    {GateKind::I, "I", 1, false, true},
    {GateKind::X, "X", 1, false, true},
    {GateKind::Y, "Y", 1, false, true},
    {GateKind::Z, "Z", 1, false, true},
    {GateKind::H, "H", 1, false, true},
    {GateKind::S, "S", 1, false, true},
    {GateKind::SDG, "SDG", 1, false, true},
    {GateKind::T, "T", 1, false, true},
    {GateKind::TDG, "TDG", 1, false, true},
    {GateKind::RX, "RX", 1, true, true},
    {GateKind::RY, "RY", 1, true, true},
    {GateKind::RZ, "RZ", 1, true, true},
    {GateKind::CNOT, "CNOT", 2, false, true},
    {GateKind::CZ, "CZ", 2, false, true},
    {GateKind::SWAP, "SWAP", 2, false, true},
    {GateKind::CCX, "CCX", 3, false, true},
    {GateKind::MEASURE, "MEASURE", 1, false, false},
    {GateKind::RESET, "RESET", 1, false, false},
}};

}  // namespace

const GateInfo &gate_info(GateKind kind) {
    return kGates.at(static_cast<std::size_t>(kind));
}

std::span<const GateInfo> all_gates() {
    return kGates;
}

std::optional<GateKind> parse_gate_name(std::string_view name) {
    std::string upper(name);
    for (auto &c : upper) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    for (const auto &g : kGates) {
        if (g.name == upper) {
            return g.kind;
        }
    }
    return std::nullopt;
}

Matrix gate_matrix(GateKind kind, double angle) {
    const Complex i(0.0, 1.0);
    const double r = 1.0 / std::sqrt(2.0);
    Matrix m;
    switch (kind) {
        case GateKind::I:
            return Matrix::Identity(2, 2);
        case GateKind::X:
            m.resize(2, 2);
            m << 0, 1, 1, 0;
            return m;
        case GateKind::Y:
            m.resize(2, 2);
            m << 0, -i, i, 0;
            return m;
        case GateKind::Z:
            m.resize(2, 2);
            m << 1, 0, 0, -1;
            return m;
        case GateKind::H:
            m.resize(2, 2);
            m << r, r, r, -r;
            return m;
        case GateKind::S:
            m.resize(2, 2);
            m << 1, 0, 0, i;
            return m;
        case GateKind::SDG:
            m.resize(2, 2);
            m << 1, 0, 0, -i;
            return m;
        case GateKind::T:
            m.resize(2, 2);
            m << 1, 0, 0, std::polar(1.0, kPi / 4);
            return m;
        case GateKind::TDG:
            m.resize(2, 2);
            m << 1, 0, 0, std::polar(1.0, -kPi / 4);
            return m;
        case GateKind::RX: {
            double c = std::cos(angle / 2), s = std::sin(angle / 2);
            m.resize(2, 2);
            m << c, -i * s, -i * s, c;
            return m;
        }
        case GateKind::RY: {
            double c = std::cos(angle / 2), s = std::sin(angle / 2);
            m.resize(2, 2);
            m << c, -s, s, c;
            return m;
        }
        case GateKind::RZ:
            m = Matrix::Zero(2, 2);
            m(0, 0) = std::polar(1.0, -angle / 2);
            m(1, 1) = std::polar(1.0, angle / 2);
            return m;
        case GateKind::CNOT:
            // Control is local bit 0: swaps |c=1,t=0> (1) with |c=1,t=1> (3).
            m = Matrix::Zero(4, 4);
            m(0, 0) = 1;
            m(2, 2) = 1;
            m(3, 1) = 1;
            m(1, 3) = 1;
            return m;
        case GateKind::CZ:
            m = Matrix::Identity(4, 4);
            m(3, 3) = -1;
            return m;
        case GateKind::SWAP:
            m = Matrix::Zero(4, 4);
            m(0, 0) = 1;
            m(1, 2) = 1;
            m(2, 1) = 1;
            m(3, 3) = 1;
            return m;
        case GateKind::CCX:
            // Controls are local bits 0 and 1, target bit 2: swaps 3 and 7.
            m = Matrix::Identity(8, 8);
            m(3, 3) = 0;
            m(7, 7) = 0;
            m(3, 7) = 1;
            m(7, 3) = 1;
            return m;
        case GateKind::MEASURE:
        case GateKind::RESET:
            break;
    }
    throw std::invalid_argument("gate_matrix: " + std::string(gate_name(kind)) + " is not a unitary gate");
}

}  // namespace aqm
