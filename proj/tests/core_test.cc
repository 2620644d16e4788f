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

#include <gtest/gtest.h>

#include <random>

#include "aqm/core/circuit.h"
#include "aqm/core/errors.h"
#include "aqm/core/measurement.h"
#include "aqm/core/simulator.h"
#include "aqm/core/state.h"
#include "aqm/core/unitary.h"
#include "oracles.h"

namespace aqm {
namespace {

using testing::C;
using testing::mat2;

Vector vec(std::initializer_list<C> xs) {
    Vector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (C x : xs) v(i++) = x;
    return v;
}

TEST(StateVector, RejectsBadInput) {
    EXPECT_THROW(StateVector(vec({1, 1})), std::invalid_argument);
    EXPECT_THROW(StateVector(vec({1, 0, 0})), std::invalid_argument);
    EXPECT_THROW(StateVector(vec({C(NAN, 0), 0})), std::invalid_argument);
    EXPECT_THROW(StateVector::normalized(vec({0, 0})), std::invalid_argument);
    EXPECT_EQ(StateVector(vec({0, 1, 0, 0})).num_qubits(), 2u);
}

TEST(StateVector, TensorProduct) {
    const double r = 1 / std::sqrt(2.0);
    auto zz = tensor_product(basis_state(1, 0), basis_state(1, 0));
    EXPECT_EQ(zz.amplitudes(), vec({1, 0, 0, 0}));
    // a (x) b puts b on the low qubit: |+> (x) |1> has amplitude on x = 1 and 3.
    auto pm = tensor_product(plus_state(1), basis_state(1, 1));
    EXPECT_NEAR((pm.amplitudes() - vec({0, r, 0, r})).norm(), 0.0, 1e-15);
    auto big = tensor_product(plus_state(2), qubit_state(0.6, C(0, 0.8)));
    EXPECT_EQ(big.dimension(), 8u);
    EXPECT_NEAR(big.norm(), 1.0, 1e-12);
}

TEST(EmbedGate, LittleEndianExamples) {
    const std::vector<std::size_t> q0 = {0}, q01 = {0, 1};
    Vector x = embed_gate(gate_matrix(GateKind::X), q0, 2) * basis_state(2, 0).amplitudes();
    EXPECT_EQ(x, basis_state(2, 1).amplitudes());
    Vector cx = embed_gate(gate_matrix(GateKind::CNOT), q01, 2) * basis_state(2, 1).amplitudes();
    EXPECT_EQ(cx, basis_state(2, 3).amplitudes());
    const std::vector<std::size_t> dup = {1, 1};
    EXPECT_THROW(embed_gate(gate_matrix(GateKind::CZ), dup, 2), std::invalid_argument);
    EXPECT_THROW(embed_gate(gate_matrix(GateKind::CZ), q01, 1), std::invalid_argument);
}

TEST(EmbedGate, MatchesKroneckerOracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix g = testing::random_unitary(4, rng);
        for (std::vector<std::size_t> t : {std::vector<std::size_t>{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}) {
            EXPECT_LT(max_abs_deviation(embed_gate(g, t, 3), testing::oracle_embed(g, t, 3)), 1e-12);
        }
    }
}

TEST(Gates, MatchHandWrittenMatrices) {
    for (const auto &info : all_gates()) {
        if (!info.is_unitary) continue;
        for (double theta : {0.0, 0.3, -2.1}) {
            EXPECT_LT(max_abs_deviation(gate_matrix(info.kind, theta), testing::oracle_gate(info.kind, theta)), 1e-15)
                << info.name;
            if (!info.has_angle) break;
        }
    }
    EXPECT_EQ(parse_gate_name("cnot"), GateKind::CNOT);
    EXPECT_EQ(parse_gate_name("Measure"), GateKind::MEASURE);
    EXPECT_FALSE(parse_gate_name("FOO").has_value());
}

TEST(Simulator, SmallCircuits) {
    const double r = 1 / std::sqrt(2.0);
    Circuit h(1);
    h.append(GateKind::H, {0});
    EXPECT_NEAR((apply_circuit(h, basis_state(1, 0), 0).final_state.amplitudes() - vec({r, r})).norm(), 0, 1e-15);
    Circuit bell(2);
    bell.append(GateKind::H, {0}).append(GateKind::CNOT, {0, 1});
    auto out = apply_circuit(bell, basis_state(2, 0), 0).final_state;
    EXPECT_NEAR((out.amplitudes() - vec({r, 0, 0, r})).norm(), 0, 1e-15);
}

TEST(Simulator, MatchesDenseChainOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Circuit c = testing::random_circuit(4, 10, rng);
        const StateVector in(testing::random_state_vector(16, rng));
        const Vector expect = testing::oracle_circuit_unitary(c) * in.amplitudes();
        const StateVector got = apply_circuit(c, in, 0).final_state;
        EXPECT_NEAR(testing::oracle_fidelity(got.amplitudes(), expect), 1.0, 1e-10);
        EXPECT_LT(max_abs_deviation(circuit_unitary(c), testing::oracle_circuit_unitary(c)), 1e-10);
    }
}

TEST(Simulator, MeasurementRecordsAndReset) {
    Circuit c(2);
    c.append(GateKind::X, {1}).append(GateKind::MEASURE, {0}).append(GateKind::MEASURE, {1});
    c.append(GateKind::RESET, {1}).append(GateKind::MEASURE, {1});
    auto run = apply_circuit(c, basis_state(2, 0), 5);
    ASSERT_EQ(run.records.size(), 3u);
    EXPECT_EQ(run.records[0].outcome_index, 0u);
    EXPECT_EQ(run.records[1].outcome_index, 1u);
    EXPECT_EQ(run.records[2].outcome_index, 0u);
    EXPECT_EQ(run.measured_qubits, (std::vector<std::size_t>{0, 1, 1}));
}

TEST(Simulator, SameSeedSameOutcomes) {
    Circuit c(3);
    for (std::size_t q = 0; q < 3; ++q) c.append(GateKind::H, {q}).append(GateKind::MEASURE, {q});
    for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
        auto a = apply_circuit(c, basis_state(3, 0), seed), b = apply_circuit(c, basis_state(3, 0), seed);
        for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(a.records[k].outcome_index, b.records[k].outcome_index);
    }
}

TEST(Circuit, ParseAndFormat) {
    const Circuit c = parse_circuit("# bell\nqubits 2\nh 0\nCNOT 0 1  # entangle\nRz 1 0.25\nmeasure 1\n");
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c.instructions()[2].gate, GateKind::RZ);
    EXPECT_DOUBLE_EQ(c.instructions()[2].angle, 0.25);
    EXPECT_EQ(parse_circuit(format_circuit(c)), c);
    Circuit odd(1);
    odd.append(GateKind::RX, {0}, 0.1 + 0.2);
    EXPECT_EQ(parse_circuit(format_circuit(odd)), odd);
}

TEST(Circuit, ParseErrorsCarryLineNumbers) {
    auto line_of = [](const char *text) -> std::size_t {
        try {
            parse_circuit(text);
        } catch (const CircuitParseError &e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("qubits 2\nFOO 0\n"), 2u);
    EXPECT_EQ(line_of("qubits 2\nH 2\n"), 2u);
    EXPECT_EQ(line_of("qubits 2\n\nCNOT 0 0\n"), 3u);
    EXPECT_EQ(line_of("H 0\n"), 1u);
    EXPECT_EQ(line_of("qubits 1\nRZ 0\n"), 2u);
    EXPECT_EQ(line_of("qubits 1\nRZ 0 abc\n"), 2u);
    EXPECT_EQ(line_of("qubits 31\n"), 1u);
    EXPECT_NE(line_of(""), 0u);
}

MeasurementOperatorSet z_basis() {
    return MeasurementOperatorSet(1, {mat2(1, 0, 0, 0), mat2(0, 0, 0, 1)});
}

MeasurementOperatorSet trine() {
    std::vector<Matrix> ops;
    for (int k = 0; k < 3; ++k) {
        const double a = 2 * M_PI * k / 3;  // Bloch polar angle
        Vector psi = vec({std::cos(a / 2), std::sin(a / 2)});
        ops.push_back(std::sqrt(2.0 / 3.0) * psi * psi.adjoint());
    }
    return MeasurementOperatorSet(1, ops);
}

TEST(Measurement, Completeness) {
    EXPECT_TRUE(validate_measurement_set(z_basis()).ok);
    auto missing = validate_measurement_set(MeasurementOperatorSet(1, {mat2(1, 0, 0, 0)}));
    EXPECT_FALSE(missing.ok);
    EXPECT_NEAR(missing.max_deviation, 1.0, 1e-15);
    const double r = 1 / std::sqrt(2.0);
    EXPECT_TRUE(validate_measurement_set(MeasurementOperatorSet(1, {mat2(r, 0, 0, r), mat2(r, 0, 0, r)})).ok);
    EXPECT_TRUE(validate_measurement_set(trine()).ok);
}

TEST(Measurement, BornRule) {
    auto br = measurement_branches(z_basis(), plus_state(1));
    ASSERT_EQ(br.size(), 2u);
    EXPECT_NEAR(br[0].probability, 0.5, 1e-15);
    EXPECT_NEAR(fidelity(*br[0].post_state, basis_state(1, 0)), 1.0, 1e-15);
    EXPECT_NEAR(fidelity(*br[1].post_state, basis_state(1, 1)), 1.0, 1e-15);

    const double r = 1 / std::sqrt(2.0);
    MeasurementOperatorSet half(1, {mat2(r, 0, 0, r), mat2(r, 0, 0, r)});
    const StateVector psi = qubit_state(0.6, C(0, 0.8));
    for (const auto &b : measurement_branches(half, psi)) {
        EXPECT_NEAR(b.probability, 0.5, 1e-15);
        EXPECT_NEAR(fidelity(*b.post_state, psi), 1.0, 1e-15);
    }
}

TEST(Measurement, TrineOnZeroMatchesDenseArithmetic) {
    auto br = measurement_branches(trine(), basis_state(1, 0));
    const double expect[3] = {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0};
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(br[k].probability, expect[k], 1e-12);
}

TEST(Measurement, TargetsSubsetAndProbabilitiesSumToOne) {
    std::mt19937_64 rng(3);
    const StateVector psi(testing::random_state_vector(8, rng));
    const std::vector<std::size_t> t = {2};
    auto br = measurement_branches(z_basis(), psi, t);
    double p1 = 0;
    for (std::size_t x = 0; x < 8; ++x)
        if (x & 4) p1 += psi.probability(x);
    EXPECT_NEAR(br[1].probability, p1, 1e-14);
    EXPECT_NEAR(br[0].probability + br[1].probability, 1.0, 1e-12);
    EXPECT_THROW(measurement_branches(MeasurementOperatorSet(1, {mat2(1, 0, 0, 0)}), psi, t), std::invalid_argument);
}

TEST(Measurement, InitializationReachesTarget) {
    EXPECT_NEAR(fidelity(initialize_via_measurement(basis_state(1, 0), basis_state(1, 1)), basis_state(1, 0)), 1, 1e-12);
    EXPECT_NEAR(fidelity(initialize_via_measurement(plus_state(1), basis_state(1, 0)), plus_state(1)), 1, 1e-12);
    std::mt19937_64 rng(5);
    const StateVector target(testing::random_state_vector(4, rng));
    EXPECT_TRUE(validate_measurement_set(initialization_measurement(target)).ok);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const StateVector in(testing::random_state_vector(4, rng));
        EXPECT_NEAR(fidelity(initialize_via_measurement(target, in, seed), target), 1.0, 1e-10);
    }
}

TEST(PhaseInvariantDistance, Examples) {
    const Matrix t = gate_matrix(GateKind::T), rz = gate_matrix(GateKind::RZ, M_PI / 4);
    EXPECT_NEAR(phase_invariant_distance(t, t), 0.0, 1e-15);
    EXPECT_LT(phase_invariant_distance(t, rz), 1e-12);
    EXPECT_NEAR(phase_invariant_distance(Matrix::Identity(2, 2), gate_matrix(GateKind::X)), 1.0, 1e-15);
    EXPECT_THROW(phase_invariant_distance(Matrix::Identity(2, 2), Matrix::Identity(4, 4)), std::invalid_argument);
    std::mt19937_64 rng(9);
    for (int k = 0; k < 20; ++k) {
        Matrix a = testing::random_unitary(4, rng), b = testing::random_unitary(4, rng);
        const double d = phase_invariant_distance(a, b);
        EXPECT_NEAR(d, testing::oracle_distance(a, b), 1e-8);
        EXPECT_GE(d, 0.0);
        EXPECT_LE(d, 1.0);
    }
}

TEST(Expectation, Examples) {
    EXPECT_NEAR(expectation(basis_state(1, 0), gate_matrix(GateKind::Z)), 1.0, 1e-15);
    EXPECT_NEAR(expectation(plus_state(1), gate_matrix(GateKind::X)), 1.0, 1e-15);
    EXPECT_THROW(expectation(plus_state(1), gate_matrix(GateKind::S)), std::invalid_argument);
    std::mt19937_64 rng(4);
    for (int k = 0; k < 10; ++k) {
        Matrix a = testing::random_unitary(8, rng) * C(1.3, 0.2);
        const Matrix h = a + a.adjoint();
        const Vector psi = testing::random_state_vector(8, rng);
        const double oracle = (psi.adjoint() * h * psi)(0).real();
        EXPECT_NEAR(expectation(StateVector(psi), h), oracle, 1e-10);
    }
}

TEST(Rng, IsSeededMt19937_64) {
    Rng a(42);
    std::mt19937_64 ref(42);
    for (int k = 0; k < 5; ++k) EXPECT_EQ(a.next_u64(), ref());
    EXPECT_EQ(std::mt19937_64(5489)(), 14514284786278117030ull);
}

TEST(RuleViolation, CarriesRule) {
    RuleViolation v(AqmRule::connectivity, "no path");
    EXPECT_EQ(v.rule(), AqmRule::connectivity);
    EXPECT_STREQ(v.what(), "rule 3 (connectivity): no path");
}

}  // namespace
}  // namespace aqm
