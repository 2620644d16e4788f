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

#include "aqm/compensation/rewrite.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <sstream>

#include "aqm/core/linalg.h"

namespace aqm::compensation {
namespace {

constexpr double kAngleTolerance = 1e-12;

using Sequence = std::vector<Instruction>;

Instruction one(GateKind g, std::size_t q, double angle = 0.0) {
    return Instruction{g, {q}, angle};
}

Instruction two(GateKind g, std::size_t a, std::size_t b) {
    return Instruction{g, {a, b}, 0.0};
}

// Angle reduced to (-pi, pi].
double wrap_angle(double theta) {
    double t = std::remainder(theta, 2 * kPi);
    if (t <= -kPi) {
        t += 2 * kPi;
    }
    return t;
}

// Multiple of pi/4 (mod 8) when theta is one, else nullopt.
std::optional<int> eighth_turns(double theta) {
    double steps = theta / (kPi / 4);
    double rounded = std::round(steps);
    if (std::abs(steps - rounded) * (kPi / 4) > kAngleTolerance) {
        return std::nullopt;
    }
    int k = static_cast<int>(std::fmod(rounded, 8.0));
    return (k + 8) % 8;
}

// Z-axis gates as powers of T, up to global phase.
std::optional<int> phase_steps(const Instruction &in) {
    switch (in.gate) {
        case GateKind::I:
            return 0;
        case GateKind::T:
            return 1;
        case GateKind::S:
            return 2;
        case GateKind::Z:
            return 4;
        case GateKind::SDG:
            return 6;
        case GateKind::TDG:
            return 7;
        case GateKind::RZ:
            return eighth_turns(in.angle);
        default:
            return std::nullopt;
    }
}

class Lowering {
   public:
    explicit Lowering(std::span<const GateKind> native) : native_(native.begin(), native.end()) {
    }

    bool is_native(GateKind g) const {
        return std::find(native_.begin(), native_.end(), g) != native_.end();
    }

    std::optional<Sequence> lower(const Instruction &in) {
        const GateInfo &info = gate_info(in.gate);
        if (!info.is_unitary || is_native(in.gate)) {
            return Sequence{in};
        }
        if (in.gate == GateKind::I) {
            return Sequence{};
        }
        if (std::find(stack_.begin(), stack_.end(), in.gate) != stack_.end()) {
            return std::nullopt;
        }
        stack_.push_back(in.gate);
        std::optional<Sequence> result;
        for (const Sequence &candidate : candidates(in)) {
            Sequence out;
            bool ok = true;
            for (const Instruction &step : candidate) {
                auto lowered = lower(step);
                if (!lowered) {
                    ok = false;
                    break;
                }
                out.insert(out.end(), lowered->begin(), lowered->end());
            }
            if (ok) {
                result = std::move(out);
                break;
            }
        }
        stack_.pop_back();
        return result;
    }

   private:
    // Fewest native phase gates whose T-powers sum to k (mod 8).
    std::optional<Sequence> phase_word(int k, std::size_t q) const {
        static constexpr std::array<std::pair<GateKind, int>, 5> kPhaseGates = {{
            {GateKind::Z, 4},
            {GateKind::S, 2},
            {GateKind::SDG, 6},
            {GateKind::T, 1},
            {GateKind::TDG, 7},
        }};
        std::array<int, 8> prev{};
        std::array<int, 8> via{};
        prev.fill(-1);
        prev[0] = 0;
        std::vector<int> frontier = {0};
        while (!frontier.empty() && prev[k] < 0) {
            std::vector<int> next;
            for (int r : frontier) {
                for (std::size_t g = 0; g < kPhaseGates.size(); ++g) {
                    if (!is_native(kPhaseGates[g].first)) {
                        continue;
                    }
                    int s = (r + kPhaseGates[g].second) % 8;
                    if (prev[s] < 0) {
                        prev[s] = r;
                        via[s] = static_cast<int>(g);
                        next.push_back(s);
                    }
                }
            }
            frontier = std::move(next);
        }
        if (prev[k] < 0) {
            return std::nullopt;
        }
        Sequence word;
        for (int r = k; r != 0; r = prev[r]) {
            word.push_back(one(kPhaseGates[via[r]].first, q));
        }
        return word;
    }

    std::vector<Sequence> candidates(const Instruction &in) const {
        std::vector<Sequence> out;
        const auto &q = in.qubits;
        if (auto k = phase_steps(in)) {
            if (*k == 0) {
                out.push_back({});
                return out;
            }
            if (auto word = phase_word(*k, q[0])) {
                out.push_back(*word);
            }
            double theta = wrap_angle(*k * kPi / 4);
            out.push_back({one(GateKind::RZ, q[0], theta)});
            out.push_back({one(GateKind::H, q[0]), one(GateKind::RX, q[0], theta), one(GateKind::H, q[0])});
            return out;
        }
        switch (in.gate) {
            case GateKind::RZ:
                out.push_back({one(GateKind::H, q[0]), one(GateKind::RX, q[0], in.angle), one(GateKind::H, q[0])});
                break;
            case GateKind::X:
                out.push_back({one(GateKind::H, q[0]), one(GateKind::Z, q[0]), one(GateKind::H, q[0])});
                out.push_back({one(GateKind::RX, q[0], kPi)});
                break;
            case GateKind::Y:
                out.push_back({one(GateKind::Z, q[0]), one(GateKind::X, q[0])});
                out.push_back({one(GateKind::RY, q[0], kPi)});
                break;
            case GateKind::H:
                out.push_back({one(GateKind::Z, q[0]), one(GateKind::RY, q[0], kPi / 2)});
                out.push_back({one(GateKind::RZ, q[0], kPi / 2), one(GateKind::RX, q[0], kPi / 2),
                               one(GateKind::RZ, q[0], kPi / 2)});
                break;
            case GateKind::RX: {
                auto k = eighth_turns(in.angle);
                if (k && *k == 0) {
                    out.push_back({});
                    break;
                }
                if (k && *k == 4) {
                    out.push_back({one(GateKind::X, q[0])});
                }
                out.push_back({one(GateKind::H, q[0]), one(GateKind::RZ, q[0], in.angle), one(GateKind::H, q[0])});
                break;
            }
            case GateKind::RY: {
                auto k = eighth_turns(in.angle);
                if (k && *k == 0) {
                    out.push_back({});
                    break;
                }
                if (k && *k == 4) {
                    out.push_back({one(GateKind::Y, q[0])});
                }
                out.push_back({one(GateKind::SDG, q[0]), one(GateKind::H, q[0]), one(GateKind::RZ, q[0], in.angle),
                               one(GateKind::H, q[0]), one(GateKind::S, q[0])});
                out.push_back({one(GateKind::RZ, q[0], -kPi / 2), one(GateKind::RX, q[0], in.angle),
                               one(GateKind::RZ, q[0], kPi / 2)});
                break;
            }
            case GateKind::CNOT:
                out.push_back({one(GateKind::H, q[1]), two(GateKind::CZ, q[0], q[1]), one(GateKind::H, q[1])});
                break;
            case GateKind::CZ:
                out.push_back({one(GateKind::H, q[1]), two(GateKind::CNOT, q[0], q[1]), one(GateKind::H, q[1])});
                break;
            case GateKind::SWAP:
                out.push_back({two(GateKind::CNOT, q[0], q[1]), two(GateKind::CNOT, q[1], q[0]),
                               two(GateKind::CNOT, q[0], q[1])});
                break;
            case GateKind::CCX: {
                const std::size_t a = q[0], b = q[1], c = q[2];
                out.push_back({
                    one(GateKind::H, c),     two(GateKind::CNOT, b, c), one(GateKind::TDG, c),
                    two(GateKind::CNOT, a, c), one(GateKind::T, c),     two(GateKind::CNOT, b, c),
                    one(GateKind::TDG, c),   two(GateKind::CNOT, a, c), one(GateKind::T, b),
                    one(GateKind::T, c),     one(GateKind::H, c),       two(GateKind::CNOT, a, b),
                    one(GateKind::T, a),     one(GateKind::TDG, b),     two(GateKind::CNOT, a, b),
                });
                break;
            }
            default:
                break;
        }
        return out;
    }

    std::vector<GateKind> native_;
    std::vector<GateKind> stack_;
};

std::string describe(const Instruction &in) {
    std::ostringstream os;
    os << gate_name(in.gate);
    if (gate_info(in.gate).has_angle) {
        os << "(" << in.angle << ")";
    }
    return os.str();
}

std::string describe(std::span<const GateKind> native) {
    std::string s = "{";
    for (std::size_t i = 0; i < native.size(); ++i) {
        s += (i ? ", " : "") + std::string(gate_name(native[i]));
    }
    return s + "}";
}

}  // namespace

Circuit rewrite_to_basis(const Circuit &circuit, std::span<const GateKind> native, RewriteOptions options) {
    Lowering lowering(native);
    Circuit out(circuit.num_qubits());
    for (const Instruction &in : circuit.instructions()) {
        auto lowered = lowering.lower(in);
        if (!lowered) {
            if (options.rotations == RotationPolicy::defer && in.qubits.size() == 1) {
                out.append(in);
                continue;
            }
            throw RewriteError(in, "no exact rewrite of " + describe(in) + " into " + describe(native));
        }
        for (const Instruction &step : *lowered) {
            out.append(step);
        }
    }
    return out;
}

bool is_exact_universal_basis(std::span<const GateKind> native) {
    Lowering lowering(native);
    for (GateKind g : {GateKind::H, GateKind::S, GateKind::SDG, GateKind::T, GateKind::TDG}) {
        if (!lowering.lower(one(g, 0))) {
            return false;
        }
    }
    return lowering.lower(two(GateKind::CNOT, 0, 1)).has_value();
}

}  // namespace aqm::compensation
