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

// Acceptance suite. Each criterion prints exactly one PASS/FAIL line; the
// process exits non-zero if any criterion fails. Tolerances are fixed here and
// must not be loosened.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "aqm/applications/annealing.h"
#include "aqm/applications/demand.h"
#include "aqm/applications/mbqc.h"
#include "aqm/applications/walk.h"
#include "aqm/compensation/approximate.h"
#include "aqm/compensation/dilation.h"
#include "aqm/compensation/rewrite.h"
#include "aqm/compensation/routing.h"
#include "aqm/core/measurement.h"
#include "aqm/core/simulator.h"
#include "aqm/matcher/matcher.h"
#include "aqm/profiles/profile.h"
#include "oracles.h"
#ifdef AQM_HAVE_CLI
#include "aqm/cli/cli.h"
#endif

namespace {

using namespace aqm;
using aqm::testing::C;
using G = GateKind;

/// Collects failures for one criterion; the first few are echoed.
class Check {
   public:
    void expect(bool ok, const std::string &what) {
        if (!ok) {
            if (failures_ < 5) std::cerr << "    " << what << "\n";
            ++failures_;
        }
    }
    int failures() const { return failures_; }

   private:
    int failures_ = 0;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// 1. Semantics core.
void semantics_core(Check &check) {
    std::mt19937_64 rng(20261015);
    for (int k = 0; k < 500; ++k) {
        const std::size_t n = 1 + rng() % 4, gates = rng() % 13;
        const Circuit c = testing::random_circuit(n, gates, rng);
        const Eigen::Index dim = Eigen::Index{1} << n;
        const StateVector in(testing::random_state_vector(dim, rng));
        const Vector expect = testing::oracle_circuit_unitary(c) * in.amplitudes();
        const StateVector out = apply_circuit(c, in, 0).final_state;
        const double f = testing::oracle_fidelity(out.amplitudes(), expect);
        check.expect(f >= 1 - 1e-10, "circuit " + std::to_string(k) + " fidelity " + fmt(1 - f) + " below 1");

        // Sum of outcome probabilities: full computational basis, a single
        // qubit, and a random complete operator set on qubit 0.
        const auto full = measurement_branches(computational_basis_measurement(n), out);
        const std::vector<std::size_t> q0 = {0};
        const auto single = measurement_branches(computational_basis_measurement(1), out, q0);
        const Matrix u = testing::random_unitary(6, rng);
        const MeasurementOperatorSet povm(1, {u.block(0, 0, 2, 2), u.block(2, 0, 2, 2), u.block(4, 0, 2, 2)});
        const auto general = measurement_branches(povm, out, q0);
        for (const auto *set : {&full, &single, &general}) {
            double total = 0;
            for (const auto &b : *set) total += b.probability;
            check.expect(std::abs(total - 1) <= 1e-9, "probabilities sum to " + fmt(total));
        }
    }
}

// 2. Routing correctness.
void routing_correctness(Check &check) {
    std::mt19937_64 rng(2);
    const std::vector<GateKind> basis = {G::I, G::X, G::Y, G::Z, G::H, G::S, G::SDG, G::T, G::TDG,
                                         G::RX, G::RY, G::RZ, G::CNOT};
    const std::vector<GateKind> cnot = {G::CNOT};
    std::size_t graphs = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<profiles::Edge> pairs;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
            profiles::ConnectivityGraph g(n);
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (mask & (1u << k)) g.add_edge(pairs[k].first, pairs[k].second);
            if (!g.is_connected()) continue;
            ++graphs;
            for (int k = 0; k < 100; ++k) {
                const Circuit c = testing::random_circuit(n, 1 + rng() % 12, rng);
                const Circuit out =
                    compensation::expand_swaps(compensation::route_circuit(compensation::rewrite_to_basis(c, basis), g), cnot);
                bool legal = true;
                for (const auto &in : out.instructions())
                    if (in.qubits.size() == 2) legal &= g.has_edge(in.qubits[0], in.qubits[1]);
                check.expect(legal, "routed circuit uses an uncoupled pair");
                const double d = phase_invariant_distance(circuit_unitary(out), testing::oracle_circuit_unitary(c));
                check.expect(d < 1e-9, "graph mask " + std::to_string(mask) + " distance " + fmt(d));
            }
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    if (a == b) continue;
                    Circuit one(n);
                    one.append(G::CNOT, {a, b});
                    const Circuit out = compensation::expand_swaps(compensation::route_circuit(one, g), cnot);
                    const std::size_t h = profiles::hop_distance(g, a, b);
                    check.expect(out.size() == 6 * (h - 1) + 1,
                                 "CNOT over " + std::to_string(h) + " hops used " + std::to_string(out.size()));
                }
            }
        }
    }
    check.expect(graphs == 1 + 1 + 4 + 38, "enumerated " + std::to_string(graphs) + " connected graphs");
}

// 3. Decomposition.
void decomposition(Check &check) {
    const std::vector<GateKind> alphabet = {G::H, G::T, G::TDG};
    const auto t = compensation::approximate_single_qubit(
        {UnitaryMatrix(testing::oracle_gate(G::RZ, M_PI / 4)), alphabet, 1e-6, 1});
    check.expect(t.distance < 1e-12 && t.word == std::vector<GateKind>{G::T}, "T from Rz(pi/4): " + fmt(t.distance));
    std::mt19937_64 rng(3);
    for (int k = 0; k < 20; ++k) {
        const UnitaryMatrix target(testing::random_unitary(2, rng));
        double prev = 2.0;
        for (std::size_t depth = 0; depth <= 12; ++depth) {
            const auto r = compensation::approximate_single_qubit({target, alphabet, 1e-12, depth});
            check.expect(r.distance <= prev, "target " + std::to_string(k) + " depth " + std::to_string(depth) +
                                                 " distance rose to " + fmt(r.distance));
            const double recomputed = testing::oracle_distance(compensation::word_matrix(r.word), target.matrix());
            check.expect(std::abs(recomputed - r.distance) < 1e-7, "reported distance disagrees with its word");
            prev = r.distance;
        }
    }
}

// 4. Naimark dilation.
void dilation(Check &check) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 50; ++k) {
        const std::size_t outcomes = 1 + k % 4;
        const Matrix u = testing::random_unitary(static_cast<Eigen::Index>(2 * outcomes), rng);
        std::vector<Matrix> ops;
        for (std::size_t j = 0; j < outcomes; ++j) ops.push_back(u.block(static_cast<Eigen::Index>(2 * j), 0, 2, 2));
        const MeasurementOperatorSet m(1, ops);
        const auto synth = compensation::synthesize_measurement(m);
        const StateVector psi(testing::random_state_vector(2, rng));
        const auto direct = measurement_branches(m, psi);
        const auto dilated = synth.branches(psi);
        double tv = 0;
        for (std::size_t j = 0; j < outcomes; ++j) {
            tv += 0.5 * std::abs(direct[j].probability - dilated[j].probability);
            if (direct[j].post_state && dilated[j].post_state) {
                const double f = fidelity(*direct[j].post_state, *dilated[j].post_state);
                check.expect(f >= 1 - 1e-9, "post-state fidelity " + fmt(f));
            } else {
                check.expect(direct[j].probability < 1e-12, "missing post-state");
            }
        }
        check.expect(tv <= 1e-9, "total variation " + fmt(tv));
    }
    std::vector<Matrix> trine;
    for (int k = 0; k < 3; ++k) {
        const double a = 2 * M_PI * k / 3;
        Vector v(2);
        v << std::cos(a / 2), std::sin(a / 2);
        trine.push_back(std::sqrt(2.0 / 3.0) * v * v.adjoint());
    }
    const auto br = compensation::synthesize_measurement(MeasurementOperatorSet(1, trine)).branches(basis_state(1, 0));
    const double expect[3] = {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0};
    for (int k = 0; k < 3; ++k) check.expect(std::abs(br[k].probability - expect[k]) <= 1e-10, "trine outcome " + std::to_string(k));
}

// 5. Annealing.
void annealing(Check &check) {
    const auto start = std::chrono::steady_clock::now();
    const apps::IsingProblem one{1, {-1.0}, {}};
    const apps::IsingProblem pair{2, {0.0, 0.0}, {{0, 1, 1.0}}};
    auto success = [](const apps::IsingProblem &p, double t_final) {
        apps::AnnealSchedule s;
        s.t_final = t_final;
        s.num_steps = t_final > 0 ? 5000 : 0;
        return apps::anneal_success(apps::anneal(p, s).final_state, p);
    };
    const double quench = success(one, 0.0);
    check.expect(quench == 0.5 || std::abs(quench - 0.5) < 1e-15, "quench success " + fmt(quench));
    const double slow = success(one, 50.0);
    check.expect(slow >= 0.99, "1-spin success " + fmt(slow));
    const double afm = success(pair, 50.0);
    check.expect(afm >= 0.99, "antiferromagnet success " + fmt(afm));
    double prev = 0;
    for (double t : {1.0, 5.0, 20.0, 50.0}) {
        const double s = success(one, t);
        check.expect(s >= prev, "success fell at t_final " + fmt(t));
        prev = s;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(seconds < 30.0, "annealing took " + fmt(seconds) + " s");
}

// 6. Quantum walk.
void quantum_walk(Check &check) {
    const auto r = apps::walk_run(apps::hadamard_walk(2, 2));
    const double expect[5] = {0.25, 0, 0.5, 0, 0.25};
    for (long x = -2; x <= 2; ++x)
        check.expect(std::abs(r.probability(2, x) - expect[x + 2]) <= 1e-10, "t=2 position " + std::to_string(x));
    const double quantum = apps::walk_variance_exponent(apps::hadamard_walk(100, 100), 10, 100);
    check.expect(quantum >= 1.8 && quantum <= 2.05, "quantum exponent " + fmt(quantum));
    apps::WalkSpec classical = apps::hadamard_walk(100, 100);
    classical.mode = apps::WalkMode::classical;
    const double alpha = apps::walk_variance_exponent(classical, 10, 100);
    check.expect(alpha >= 0.9 && alpha <= 1.1, "classical exponent " + fmt(alpha));
}

// 7. MBQC.
void mbqc(Check &check) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    for (int k = 0; k < 100; ++k) {
        const double a = angle(rng), b = angle(rng), g = angle(rng);
        const Vector in = testing::random_state_vector(2, rng);
        const Vector expect = testing::oracle_gate(G::RZ, g) * testing::oracle_gate(G::RX, b) * testing::oracle_gate(G::RZ, a) * in;
        const auto pattern = apps::euler_pattern(a, b, g);
        for (int branch = 0; branch < 16; ++branch) {
            const auto r = apps::mbqc_execute_branch(pattern, StateVector(in),
                                                     {branch & 1, (branch >> 1) & 1, (branch >> 2) & 1, (branch >> 3) & 1});
            const double f = testing::oracle_fidelity(r.output.amplitudes(), expect);
            check.expect(f >= 1 - 1e-9, "triple " + std::to_string(k) + " branch " + std::to_string(branch) + " fidelity " + fmt(f));
        }
    }
    std::vector<profiles::ConnectivityGraph> graphs = {profiles::ConnectivityGraph::line(5),
                                                       profiles::ConnectivityGraph::ring(6),
                                                       profiles::ConnectivityGraph::complete(4),
                                                       profiles::ConnectivityGraph(4, {{0, 1}, {1, 2}, {1, 3}})};
    for (const auto &g : graphs) {
        const std::size_t n = g.num_qubits();
        const Vector psi = apps::build_cluster_state(g).amplitudes();
        for (std::size_t a = 0; a < n; ++a) {
            Matrix s = testing::oracle_embed(testing::oracle_gate(G::X), {a}, n);
            for (std::size_t b : g.neighbors(a)) s = s * testing::oracle_embed(testing::oracle_gate(G::Z), {b}, n);
            const double ev = psi.dot(s * psi).real();
            check.expect(std::abs(ev - 1.0) <= 1e-10, "stabilizer at node " + std::to_string(a) + " gives " + fmt(ev));
        }
    }
}

// 8. Golden data.
void golden_data(Check &check) {
    using profiles::builtin_profile;
    const auto transmon = builtin_profile("superconducting-transmon");
    const auto *cz = transmon.find_gate(G::CZ);
    check.expect(cz && cz->fidelity == 0.998 && cz->duration_ns == 40.0, "transmon CZ");
    check.expect(builtin_profile("fluxonium").t2_us == 1480.0, "fluxonium T2*");
    const auto ion = builtin_profile("trapped-ion");
    const auto *ms = ion.find_gate(G::CNOT);
    check.expect(ion.t2_us == 5500.0 * 1e6 && ms && ms->fidelity == 0.999, "trapped-ion coherence / two-qubit gate");
    const auto *rydberg = builtin_profile("neutral-atom").find_gate(G::CZ);
    check.expect(rydberg && rydberg->fidelity == 0.995 && rydberg->duration_ns == 200.0, "neutral-atom CZ");
    const auto nv = builtin_profile("nv-center");
    check.expect(nv.t2_dd_us == 1.58e6, "NV electron 1.58 s");
    check.expect(nv.constants.count("nuclear_t2_dd_us") && nv.constants.at("nuclear_t2_dd_us") == 63e6, "NV nuclear 63 s");
    check.expect(nv.constants.count("remote_entanglement_rate_hz") && nv.constants.at("remote_entanglement_rate_hz") == 9.0,
                 "NV entanglement rate 9 Hz");
    const auto mem = builtin_profile("quantum-memory-ensemble");
    check.expect(mem.constants.count("eit_storage_lifetime_us") && mem.constants.at("eit_storage_lifetime_us") == 16e6,
                 "memory 16 s");
    check.expect(mem.constants.count("afc_storage_lifetime_us") &&
                     std::abs(mem.constants.at("afc_storage_lifetime_us") - 52.9 * 60e6) < 1e-3,
                 "memory 52.9 min");

    // Demand rows as read off the comparison table: a check mark or an
    // explicit necessity is full, "Released" is none, qualified cells partial.
    using L = SupportLevel;
    const std::vector<std::pair<std::string, std::array<L, 5>>> table = {
        {"quantum-annealing", {L::full, L::none, L::full, L::full, L::partial}},
        {"quantum-walk", {L::partial, L::none, L::partial, L::full, L::partial}},
        {"mbqc", {L::partial, L::none, L::partial, L::full, L::full}},
        {"analogue-simulation", {L::full, L::none, L::partial, L::full, L::partial}},
        {"quantum-memory", {L::full, L::none, L::partial, L::full, L::none}},
        {"circuit-model-universal", {L::full, L::full, L::full, L::full, L::full}},
    };
    for (const auto &[name, levels] : table) {
        const auto d = apps::builtin_demand(name);
        for (std::size_t r = 0; r < 5; ++r)
            check.expect(d.demand(kAllRules[r]) == levels[r], name + " rule " + std::to_string(r + 1));
    }

    const char *golden[6][7] = {
        {"comp", "yes", "no", "no", "no", "comp", "yes"},   {"yes", "yes", "yes", "yes", "yes", "yes", "yes"},
        {"comp", "comp", "yes", "yes", "no", "comp", "comp"}, {"yes", "yes", "yes", "yes", "yes", "yes", "yes"},
        {"yes", "yes", "yes", "yes", "yes", "yes", "yes"},  {"comp", "comp", "no", "no", "no", "comp", "comp"},
    };
    auto code = [](matcher::Overall o) {
        return o == matcher::Overall::supported ? "yes" : o == matcher::Overall::unsupported ? "no" : "comp";
    };
    const auto a = matcher::builtin_match_matrix({}, 1);
    const auto b = matcher::builtin_match_matrix({}, 4);
    check.expect(a.cells == b.cells, "matrix differs between runs");
    check.expect(a.demands.size() == 6 && a.devices.size() == 7, "matrix shape");
    for (std::size_t d = 0; d < a.demands.size() && d < 6; ++d)
        for (std::size_t v = 0; v < a.devices.size() && v < 7; ++v)
            check.expect(std::string(code(a.cells[d][v].overall)) == golden[d][v], a.demands[d] + " x " + a.devices[v]);
    auto cell = [&](const std::string &dem, const std::string &dev) {
        for (std::size_t d = 0; d < a.demands.size(); ++d)
            for (std::size_t v = 0; v < a.devices.size(); ++v)
                if (a.demands[d] == dem && a.devices[v] == dev) return a.cells[d][v].overall;
        throw std::logic_error("missing cell");
    };
    check.expect(cell("circuit-model-universal", "quantum-memory-ensemble") == matcher::Overall::unsupported,
                 "quantum memory vs circuit model");
    check.expect(cell("mbqc", "photonic-mbqc") == matcher::Overall::supported, "photonic vs mbqc");
}

// 9. CLI contract.
void cli_contract(Check &check) {
#ifdef AQM_HAVE_CLI
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "aqm_acceptance";
    fs::create_directories(dir);
    auto write = [&](const std::string &name, const std::string &text) {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    };
    const std::string bell = write("bell.circ", "qubits 2\nH 0\nCNOT 0 1\nMEASURE 0\nMEASURE 1\n");
    const std::string bad = write("bad.circ", "qubits 2\nH 7\n");
    auto run = [](const std::vector<std::string> &args, std::string *out = nullptr) {
        std::ostringstream o, e;
        const int code = cli::run_cli(args, o, e);
        if (out) *out = o.str();
        return code;
    };

    check.expect(run({"profiles", "list"}) == 0, "profiles list exit code");
    check.expect(run({"walk", "--steps", "2"}) == 0, "walk exit code");
    check.expect(run({"simulate", bad}) == 1, "parse error exit code");
    check.expect(run({"no-such-command"}) == 1, "unknown command exit code");
    check.expect(run({"simulate", bell, "--shots", "-3"}) == 1, "bad option exit code");
    check.expect(run({"match", "--profile", "quantum-memory-ensemble", "--demand", "circuit-model-universal"}) == 2,
                 "match failure exit code");
    check.expect(run({"transpile", bell, "--profile", "nv-center"}) == 2, "transpile failure exit code");
    check.expect(run({"match", "--profile", "photonic-mbqc", "--demand", "mbqc"}) == 0, "match success exit code");

    std::string out;
    check.expect(run({"simulate", bell, "--shots", "10000", "--seed", "0"}, &out) == 0, "bell sampling exit code");
    std::istringstream lines(out);
    long total = 0;
    for (std::string line; std::getline(lines, line);) {
        std::istringstream words(line);
        std::string key;
        long count = 0;
        words >> key >> count;
        if (key == "shots" || key == "seed") continue;
        check.expect(key == "00" || key == "11", "bell outcome " + key);
        total += count;
    }
    check.expect(total == 10000, "bell shot total " + std::to_string(total));
    for (std::uint64_t seed : {0u, 1u, 12345u}) {
        std::string first, second;
        const std::vector<std::string> args = {"simulate", bell, "--shots", "2000", "--seed", std::to_string(seed), "--json"};
        run(args, &first);
        run(args, &second);
        check.expect(!first.empty() && first == second, "rerun with seed " + std::to_string(seed) + " differs");
    }
    fs::remove_all(dir);
#else
    check.expect(false, "built without the command line tool");
#endif
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check &)>>> criteria = {
        {"1 semantics core", semantics_core},
        {"2 routing correctness", routing_correctness},
        {"3 decomposition", decomposition},
        {"4 naimark dilation", dilation},
        {"5 annealing", annealing},
        {"6 quantum walk", quantum_walk},
        {"7 mbqc", mbqc},
        {"8 golden data", golden_data},
        {"9 cli contract", cli_contract},
    };
    int failed = 0;
    for (const auto &[name, body] : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(check);
        } catch (const std::exception &e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = check.failures() == 0;
        failed += !ok;
        std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << fmt(seconds) << " s";
        if (!ok) std::cout << ", " << check.failures() << " failed checks";
        std::cout << ")" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
