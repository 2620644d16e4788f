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

#include "aqm/cli/cli.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "aqm/applications/annealing.h"
#include "aqm/applications/demand.h"
#include "aqm/applications/mbqc.h"
#include "aqm/applications/walk.h"
#include "aqm/core/circuit.h"
#include "aqm/core/errors.h"
#include "aqm/core/measurement.h"
#include "aqm/core/simulator.h"
#include "aqm/matcher/matcher.h"
#include "aqm/matcher/plan.h"
#include "aqm/matcher/report.h"
#include "aqm/profiles/profile.h"
#include "json.hpp"

namespace aqm::cli {
namespace {

using Json = nlohmann::ordered_json;

/// Bad input: exit code 1.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A rule the device cannot meet: exit code 2.
class RuleFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

profiles::DeviceProfile load_profile(const std::string &name_or_path) {
    for (const auto &name : profiles::builtin_profile_names()) {
        if (name == name_or_path) {
            return profiles::builtin_profile(name);
        }
    }
    return profiles::parse_device_profile(read_file(name_or_path));
}

Circuit load_circuit(const std::string &path) {
    return parse_circuit(read_file(path));
}

std::string bits_of(std::size_t index, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t q = 0; q < n; ++q) {
        if ((index >> q) & 1) {
            s[q] = '1';
        }
    }
    return s;
}

// ---- simulate ----

struct SimulateArgs {
    std::string circuit;
    std::size_t shots = 1024;
    std::optional<std::uint64_t> seed;
    bool json = false;
};

int cmd_simulate(const SimulateArgs &a, std::uint64_t seed, std::ostream &out) {
    const Circuit c = load_circuit(a.circuit);
    const std::size_t n = c.num_qubits();
    bool has_measure = false;
    for (const auto &in : c.instructions()) {
        has_measure |= in.gate == GateKind::MEASURE;
    }
    Rng rng(seed);
    std::map<std::string, std::size_t> counts;
    auto sample_final = [&](const StateVector &s) {
        std::vector<double> p(s.dimension());
        for (std::size_t i = 0; i < p.size(); ++i) {
            p[i] = s.probability(i);
        }
        return bits_of(sample_outcome(p, rng), n);
    };
    if (!c.has_non_unitary()) {
        const StateVector final_state = apply_circuit(c, basis_state(n, 0), rng).final_state;
        std::vector<double> p(final_state.dimension());
        for (std::size_t i = 0; i < p.size(); ++i) {
            p[i] = final_state.probability(i);
        }
        for (std::size_t s = 0; s < a.shots; ++s) {
            ++counts[bits_of(sample_outcome(p, rng), n)];
        }
    } else {
        for (std::size_t s = 0; s < a.shots; ++s) {
            CircuitRun run = apply_circuit(c, basis_state(n, 0), rng);
            if (has_measure) {
                std::string bits;
                for (const auto &r : run.records) {
                    bits += r.outcome_index ? '1' : '0';
                }
                ++counts[bits];
            } else {
                ++counts[sample_final(run.final_state)];
            }
        }
    }
    if (a.json) {
        Json doc;
        doc["shots"] = a.shots;
        doc["seed"] = seed;
        Json jc = Json::object();
        for (const auto &[k, v] : counts) {
            jc[k] = v;
        }
        doc["counts"] = jc;
        out << doc.dump(2) << "\n";
    } else {
        out << "shots " << a.shots << "\nseed " << seed << "\n";
        for (const auto &[k, v] : counts) {
            out << k << " " << v << "\n";
        }
    }
    return kExitOk;
}

// ---- transpile ----

struct TranspileArgs {
    std::string circuit;
    std::string profile;
    double epsilon = 1e-3;
    std::size_t max_depth = 12;
    double threshold = compensation::kDefaultCoherenceThreshold;
    std::string output;
    bool no_rewrite = false, no_approximate = false, no_route = false, no_expand = false, no_budget = false;
    bool json = false;
};

std::string word_text(const std::vector<GateKind> &word) {
    if (word.empty()) {
        return "(identity)";
    }
    std::string s;
    for (GateKind g : word) {
        s += (s.empty() ? "" : " ") + std::string(gate_name(g));
    }
    return s;
}

int cmd_transpile(const TranspileArgs &a, std::ostream &out, std::ostream &err) {
    const Circuit c = load_circuit(a.circuit);
    const profiles::DeviceProfile device = load_profile(a.profile);
    matcher::PlanOptions po;
    po.max_depth = a.max_depth;
    po.coherence_threshold = a.threshold;
    po.rewrite = !a.no_rewrite;
    po.approximate = !a.no_approximate;
    po.route = !a.no_route;
    po.expand = !a.no_expand;
    po.budget = !a.no_budget;
    const matcher::CompilationResult r = matcher::plan_compensation(device, c, a.epsilon, po);

    const std::string circuit_text = format_circuit(r.circuit);
    if (r.ok() && !a.output.empty()) {
        std::ofstream f(a.output, std::ios::binary);
        if (!f) {
            throw UsageError("cannot write '" + a.output + "'");
        }
        f << circuit_text;
    }
    std::size_t total_gates = 0;
    for (const auto &[name, count] : r.cost.gate_count_by_name) {
        total_gates += count;
    }
    if (a.json) {
        Json doc;
        doc["ok"] = r.ok();
        doc["device"] = device.name;
        if (r.failure) {
            doc["failure"] = {{"rule", static_cast<int>(r.failure->rule)},
                              {"rule_name", std::string(rule_name(r.failure->rule))},
                              {"message", r.failure->message}};
        } else {
            doc["circuit"] = circuit_text;
            Json counts = Json::object();
            for (const auto &[k, v] : r.cost.gate_count_by_name) {
                counts[k] = v;
            }
            doc["cost"] = {{"gate_count_by_name", counts},
                           {"total_duration_ns", r.cost.total_duration_ns},
                           {"fidelity_estimate", r.cost.fidelity_estimate},
                           {"added_ancillas", r.cost.added_ancillas}};
            if (r.budget) {
                doc["budget"] = {{"pass", r.budget->pass}, {"ratio", r.budget->ratio},
                                 {"threshold", r.budget->threshold}};
            }
        }
        Json approx = Json::array();
        for (const auto &ap : r.approximations) {
            Json w = Json::array();
            for (GateKind g : ap.result.word) {
                w.push_back(std::string(gate_name(g)));
            }
            approx.push_back({{"gate", std::string(gate_name(ap.original.gate))},
                              {"qubit", ap.original.qubits[0]},
                              {"angle", ap.original.angle},
                              {"word", w},
                              {"distance", ap.result.distance},
                              {"achieved", ap.result.achieved}});
        }
        doc["approximations"] = approx;
        Json log = Json::array();
        for (const auto &p : r.pass_log) {
            log.push_back({{"pass", p.pass},
                           {"before", p.instructions_before},
                           {"after", p.instructions_after},
                           {"note", p.note}});
        }
        doc["pass_log"] = log;
        out << doc.dump(2) << "\n";
    } else {
        if (r.ok() && a.output.empty()) {
            out << circuit_text;
        }
        for (const auto &ap : r.approximations) {
            out << "# approximation: " << gate_name(ap.original.gate) << "(" << fmt(ap.original.angle)
                << ") on qubit " << ap.original.qubits[0] << " -> " << word_text(ap.result.word) << "  distance "
                << fmt(ap.result.distance) << (ap.result.achieved ? "" : " (not achieved)") << "\n";
        }
        for (const auto &p : r.pass_log) {
            out << "# pass " << p.pass << ": " << p.instructions_before << " -> " << p.instructions_after
                << (p.note.empty() ? "" : "  (" + p.note + ")") << "\n";
        }
        if (r.ok()) {
            out << "# cost: " << total_gates << " gates, " << fmt(r.cost.total_duration_ns)
                << " ns, fidelity estimate " << fmt(r.cost.fidelity_estimate) << "\n";
            out << "# gate counts:";
            for (const auto &[k, v] : r.cost.gate_count_by_name) {
                out << " " << k << "=" << v;
            }
            out << "\n";
        }
    }
    if (r.failure) {
        err << "error: rule " << static_cast<int>(r.failure->rule) << " (" << rule_name(r.failure->rule)
            << "): " << r.failure->message << "\n";
        return kExitRuleFailure;
    }
    return kExitOk;
}

// ---- match ----

struct MatchArgs {
    std::string profile;
    std::string demand;
    bool matrix = false;
    unsigned jobs = 1;
    bool allow_qec = false;
    double threshold = compensation::kDefaultCoherenceThreshold;
    bool json = false;
};

int cmd_match(const MatchArgs &a, std::ostream &out) {
    matcher::MatchOptions mo;
    mo.allow_qec = a.allow_qec;
    mo.coherence_threshold = a.threshold;
    const auto format = a.json ? matcher::ReportFormat::json : matcher::ReportFormat::text;
    if (a.matrix) {
        out << matcher::render_matrix(matcher::builtin_match_matrix(mo, a.jobs), format);
        return kExitOk;
    }
    if (a.profile.empty() || a.demand.empty()) {
        throw UsageError("match needs --profile and --demand (or --matrix)");
    }
    apps::DemandProfile demand;
    try {
        demand = apps::builtin_demand(a.demand);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    const auto report = matcher::match_profiles(load_profile(a.profile), demand, mo);
    out << matcher::render_report(report, format);
    return report.exit_code();
}

// ---- anneal ----

struct AnnealArgs {
    std::string problem;
    double t_final = 50.0;
    std::size_t steps = 5000;
    bool json = false;
};

int cmd_anneal(const AnnealArgs &a, std::ostream &out) {
    const apps::IsingProblem problem = apps::parse_ising_problem(read_file(a.problem));
    apps::AnnealSchedule schedule;
    schedule.t_final = a.t_final;
    schedule.num_steps = a.steps;
    const apps::AnnealResult r = apps::anneal(problem, schedule);
    const double success = apps::anneal_success(r.final_state, problem);
    const std::size_t n = problem.num_spins;
    if (a.json) {
        Json doc;
        doc["num_spins"] = n;
        doc["t_final"] = a.t_final;
        doc["steps"] = a.steps;
        doc["success_probability"] = success;
        doc["final_energy"] = r.energies.back();
        Json probs = Json::object();
        for (std::size_t i = 0; i < r.final_state.dimension(); ++i) {
            probs[bits_of(i, n)] = r.final_state.probability(i);
        }
        doc["probabilities"] = probs;
        out << doc.dump(2) << "\n";
    } else {
        out << "success_probability " << fmt(success) << "\n";
        out << "final_energy " << fmt(r.energies.back()) << "\n";
        for (std::size_t i = 0; i < r.final_state.dimension(); ++i) {
            const double p = r.final_state.probability(i);
            if (p >= 1e-6) {
                out << bits_of(i, n) << " " << fmt(p) << "\n";
            }
        }
    }
    return kExitOk;
}

// ---- walk ----

struct WalkArgs {
    std::size_t steps = 10;
    std::string coin = "hadamard";
    std::string coin_state = "0";
    long position = 0;
    std::optional<std::size_t> width;
    bool classical = false;
    std::vector<std::size_t> fit;
    bool json = false;
};

int cmd_walk(const WalkArgs &a, std::ostream &out) {
    apps::WalkSpec spec;
    spec.num_steps = a.steps;
    spec.initial_position = a.position;
    spec.mode = a.classical ? apps::WalkMode::classical : apps::WalkMode::quantum;
    if (a.coin == "hadamard") {
        spec.coin = UnitaryMatrix(gate_matrix(GateKind::H));
    } else if (a.coin == "identity") {
        spec.coin = UnitaryMatrix::identity(1);
    } else if (a.coin == "x") {
        spec.coin = UnitaryMatrix(gate_matrix(GateKind::X));
    } else {
        throw UsageError("unknown coin '" + a.coin + "' (hadamard, identity, x)");
    }
    if (a.coin_state == "0") {
        spec.initial_coin = basis_state(1, 0);
    } else if (a.coin_state == "1") {
        spec.initial_coin = basis_state(1, 1);
    } else if (a.coin_state == "sym") {
        spec.initial_coin = qubit_state(1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0)));
    } else {
        throw UsageError("unknown coin state '" + a.coin_state + "' (0, 1, sym)");
    }
    std::size_t horizon = a.fit.empty() ? a.steps : std::max(a.steps, a.fit[1]);
    spec.line_half_width = a.width ? *a.width : horizon + static_cast<std::size_t>(std::labs(a.position));
    const apps::WalkResult r = apps::walk_run(spec);
    std::optional<double> exponent;
    if (!a.fit.empty()) {
        exponent = apps::walk_variance_exponent(spec, a.fit[0], a.fit[1]);
    }
    const long w = r.half_width;
    if (a.json) {
        Json doc;
        doc["steps"] = a.steps;
        doc["mode"] = a.classical ? "classical" : "quantum";
        Json dist = Json::object();
        for (long x = -w; x <= w; ++x) {
            const double p = r.probability(a.steps, x);
            if (p > 1e-15) {
                dist[std::to_string(x)] = p;
            }
        }
        doc["distribution"] = dist;
        if (exponent) {
            doc["variance_exponent"] = *exponent;
        }
        out << doc.dump(2) << "\n";
    } else {
        for (long x = -w; x <= w; ++x) {
            const double p = r.probability(a.steps, x);
            if (p > 1e-15) {
                out << x << " " << fmt(p) << "\n";
            }
        }
        if (exponent) {
            out << "variance_exponent " << fmt(*exponent) << "\n";
        }
    }
    return kExitOk;
}

// ---- mbqc ----

struct MbqcArgs {
    std::string pattern;
    std::string builtin;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    std::string input;
    std::string outcomes;
    std::optional<std::uint64_t> seed;
    bool json = false;
};

int cmd_mbqc(const MbqcArgs &a, std::uint64_t seed, std::ostream &out) {
    apps::MeasurementPattern pattern;
    if (!a.builtin.empty()) {
        if (!a.pattern.empty()) {
            throw UsageError("give either a pattern file or --builtin, not both");
        }
        if (a.builtin == "euler") {
            pattern = apps::euler_pattern(a.alpha, a.beta, a.gamma);
        } else if (a.builtin == "cnot") {
            pattern = apps::cnot_pattern();
        } else {
            throw UsageError("unknown builtin pattern '" + a.builtin + "' (euler, cnot)");
        }
    } else if (!a.pattern.empty()) {
        pattern = apps::parse_pattern(read_file(a.pattern));
    } else {
        throw UsageError("mbqc needs a pattern file or --builtin");
    }
    std::optional<StateVector> input;
    if (!a.input.empty()) {
        if (a.input.size() != pattern.inputs.size() || a.input.find_first_not_of("01") != std::string::npos) {
            throw UsageError("--input must be a bitstring with one bit per pattern input");
        }
        std::size_t index = 0;
        for (std::size_t k = 0; k < a.input.size(); ++k) {
            index |= static_cast<std::size_t>(a.input[k] == '1') << k;
        }
        input = basis_state(a.input.size(), index);
    }
    auto execute = [&]() {
        if (a.outcomes.empty()) {
            return apps::mbqc_execute(pattern, input, seed);
        }
        if (a.outcomes.find_first_not_of("01") != std::string::npos) {
            throw UsageError("--outcomes must be a bitstring");
        }
        std::vector<int> forced;
        for (char ch : a.outcomes) {
            forced.push_back(ch == '1');
        }
        return apps::mbqc_execute_branch(pattern, input, forced);
    };
    const apps::MbqcResult r = execute();
    const std::size_t k = pattern.outputs.size();
    if (a.json) {
        Json doc;
        Json outcomes = Json::object();
        for (const auto &m : pattern.measurements) {
            outcomes[std::to_string(m.qubit)] = *r.outcomes[m.qubit];
        }
        doc["outcomes"] = outcomes;
        doc["branch_probability"] = r.branch_probability;
        Json amps = Json::array();
        for (std::size_t i = 0; i < r.output.dimension(); ++i) {
            amps.push_back({r.output.amplitude(i).real(), r.output.amplitude(i).imag()});
        }
        doc["output_qubits"] = pattern.outputs;
        doc["output"] = amps;
        out << doc.dump(2) << "\n";
    } else {
        out << "outcomes";
        for (const auto &m : pattern.measurements) {
            out << " s[" << m.qubit << "]=" << *r.outcomes[m.qubit];
        }
        out << "\nbranch_probability " << fmt(r.branch_probability) << "\n";
        out << "output";
        for (std::size_t q : pattern.outputs) {
            out << " " << q;
        }
        out << "\n";
        for (std::size_t i = 0; i < r.output.dimension(); ++i) {
            const Complex z = r.output.amplitude(i);
            out << bits_of(i, k) << " " << fmt(z.real()) << (z.imag() < 0 ? " - " : " + ") << fmt(std::abs(z.imag()))
                << "i\n";
        }
    }
    return kExitOk;
}

// ---- profiles ----

int cmd_profiles_list(bool json, std::ostream &out) {
    const auto names = profiles::builtin_profile_names();
    if (json) {
        out << Json(names).dump(2) << "\n";
    } else {
        for (const auto &n : names) {
            out << n << "\n";
        }
    }
    return kExitOk;
}

int cmd_profiles_show(const std::string &name, bool json, std::ostream &out) {
    const profiles::DeviceProfile p = load_profile(name);
    if (json) {
        out << profiles::serialize_device_profile(p);
        return kExitOk;
    }
    auto cite = [&p](const std::string &key) {
        auto it = p.notes.find(key);
        return it == p.notes.end() ? std::string() : "  [" + it->second + "]";
    };
    out << "name: " << p.name << "\n";
    out << "num_qubits: " << p.num_qubits << cite("num_qubits") << "\n";
    out << "connectivity:";
    if (p.connectivity.edges().empty()) {
        out << " (none)";
    }
    for (auto [a, b] : p.connectivity.edges()) {
        out << " " << a << "-" << b;
    }
    out << "\nnative_gates:\n";
    for (const auto &g : p.native_gates) {
        const std::string key = "native_gates." + std::string(gate_name(g.gate));
        out << "  " << gate_name(g.gate) << " arity " << g.arity << ", duration_ns " << fmt(g.duration_ns)
            << cite(key + ".duration_ns") << ", fidelity " << fmt(g.fidelity) << cite(key + ".fidelity") << "\n";
    }
    out << "t1_us: " << fmt(p.t1_us) << cite("t1_us") << "\n";
    out << "t2_us: " << fmt(p.t2_us) << cite("t2_us") << "\n";
    if (p.t2_dd_us) {
        out << "t2_dd_us: " << fmt(*p.t2_dd_us) << cite("t2_dd_us") << "\n";
    }
    out << "measurement: computational_only " << (p.measurement.computational_only ? "true" : "false")
        << ", mid_circuit " << (p.measurement.mid_circuit ? "true" : "false") << "\n";
    out << "  fidelity " << fmt(p.measurement.fidelity) << cite("measurement.fidelity") << "\n";
    out << "  duration_ns " << fmt(p.measurement.duration_ns) << cite("measurement.duration_ns") << "\n";
    out << "rule_support:" << cite("rule_support") << "\n";
    for (AqmRule r : kAllRules) {
        out << "  " << rule_name(r) << ": " << support_level_name(p.support(r))
            << cite("rule_support." + std::string(rule_name(r))) << "\n";
    }
    out << "qec_capable: " << (p.qec_capable ? "true" : "false") << cite("qec_capable") << "\n";
    if (!p.constants.empty()) {
        out << "constants:\n";
        for (const auto &[k, v] : p.constants) {
            out << "  " << k << ": " << fmt(v) << cite("constants." + k) << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

Environment environment_from_process(std::ostream &err) {
    Environment env;
    if (const char *s = std::getenv("AQM_SEED")) {
        char *end = nullptr;
        errno = 0;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (*s == '\0' || *end != '\0' || errno != 0 || *s == '-') {
            err << "warning: ignoring malformed AQM_SEED '" << s << "'\n";
        } else {
            env.seed = v;
        }
    }
    return env;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const Environment &env) {
    CLI::App app{"Abstract qubit model toolkit: simulation, compensation, applications and device matching", "aqm"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "aqm 0.1.0");

    SimulateArgs sim;
    auto *simulate = app.add_subcommand("simulate", "Sample measurement outcomes of a circuit");
    simulate->add_option("circuit", sim.circuit, "Circuit file")->required();
    simulate->add_option("--shots", sim.shots, "Number of shots")->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
    simulate->add_option("--seed", sim.seed, "PRNG seed (default: AQM_SEED or 0)");
    simulate->add_flag("--json", sim.json, "JSON output");

    TranspileArgs tr;
    auto *transpile = app.add_subcommand("transpile", "Compile a circuit for a device profile");
    transpile->add_option("circuit", tr.circuit, "Circuit file")->required();
    transpile->add_option("--profile", tr.profile, "Builtin profile name or profile file")->required();
    transpile->add_option("--epsilon", tr.epsilon, "Approximation tolerance")->check(CLI::Range(1e-12, 0.999999));
    transpile->add_option("--max-depth", tr.max_depth, "Approximation search depth")->check(CLI::Range(0, 30));
    transpile->add_option("--threshold", tr.threshold, "Coherence budget as a fraction of T2")
        ->check(CLI::PositiveNumber);
    transpile->add_option("-o,--output", tr.output, "Write the compiled circuit here");
    transpile->add_flag("--no-rewrite", tr.no_rewrite, "Skip basis rewriting");
    transpile->add_flag("--no-approximate", tr.no_approximate, "Skip rotation approximation");
    transpile->add_flag("--no-route", tr.no_route, "Skip routing");
    transpile->add_flag("--no-expand", tr.no_expand, "Skip SWAP expansion");
    transpile->add_flag("--no-budget", tr.no_budget, "Skip the coherence budget check");
    transpile->add_flag("--json", tr.json, "JSON output");

    MatchArgs ma;
    auto *match = app.add_subcommand("match", "Match a device profile against an application demand");
    match->add_option("--profile", ma.profile, "Builtin profile name or profile file");
    match->add_option("--demand", ma.demand, "Builtin demand name");
    match->add_flag("--matrix", ma.matrix, "Every builtin demand against every builtin device");
    match->add_option("--jobs", ma.jobs, "Threads for --matrix")->check(CLI::Range(1u, 256u));
    match->add_flag("--allow-qec", ma.allow_qec, "Count error correction as coherence compensation");
    match->add_option("--threshold", ma.threshold, "Coherence budget as a fraction of T2")
        ->check(CLI::PositiveNumber);
    match->add_flag("--json", ma.json, "JSON output");

    AnnealArgs an;
    auto *anneal = app.add_subcommand("anneal", "Simulate annealing on an Ising problem");
    anneal->add_option("problem", an.problem, "Ising problem file")->required();
    anneal->add_option("--t-final", an.t_final, "Total evolution time")->check(CLI::NonNegativeNumber);
    anneal->add_option("--steps", an.steps, "Integration steps")->check(CLI::Range(1, 10000000));
    anneal->add_flag("--json", an.json, "JSON output");

    WalkArgs wa;
    auto *walk = app.add_subcommand("walk", "Run a coined walk on a line");
    walk->add_option("--steps", wa.steps, "Number of steps");
    walk->add_option("--coin", wa.coin, "hadamard, identity or x");
    walk->add_option("--coin-state", wa.coin_state, "0, 1 or sym");
    walk->add_option("--position", wa.position, "Initial position");
    walk->add_option("--width", wa.width, "Line half-width (default: enough for every step)");
    walk->add_flag("--classical", wa.classical, "Measure the coin after every step");
    walk->add_option("--fit", wa.fit, "Fit the spreading exponent over [T_MIN, T_MAX]")->expected(2);
    walk->add_flag("--json", wa.json, "JSON output");

    MbqcArgs mb;
    auto *mbqc = app.add_subcommand("mbqc", "Execute a measurement pattern");
    mbqc->add_option("pattern", mb.pattern, "Pattern file");
    mbqc->add_option("--builtin", mb.builtin, "euler or cnot");
    mbqc->add_option("--alpha", mb.alpha, "Euler angle alpha (radians)");
    mbqc->add_option("--beta", mb.beta, "Euler angle beta (radians)");
    mbqc->add_option("--gamma", mb.gamma, "Euler angle gamma (radians)");
    mbqc->add_option("--input", mb.input, "Computational-basis input bitstring (default |+>)");
    mbqc->add_option("--outcomes", mb.outcomes, "Force these outcomes, in measurement order");
    mbqc->add_option("--seed", mb.seed, "PRNG seed (default: AQM_SEED or 0)");
    mbqc->add_flag("--json", mb.json, "JSON output");

    auto *prof = app.add_subcommand("profiles", "Inspect device profiles");
    prof->require_subcommand(1);
    bool list_json = false;
    auto *list = prof->add_subcommand("list", "Builtin profile names");
    list->add_flag("--json", list_json, "JSON output");
    std::string show_name;
    bool show_json = false;
    auto *show = prof->add_subcommand("show", "Print a profile with its citations");
    show->add_option("name", show_name, "Builtin profile name or profile file")->required();
    show->add_flag("--json", show_json, "Print the profile JSON");

    std::vector<const char *> argv = {"aqm"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::uint64_t default_seed = env.seed.value_or(0);
    try {
        if (simulate->parsed()) {
            return cmd_simulate(sim, sim.seed.value_or(default_seed), out);
        }
        if (transpile->parsed()) {
            return cmd_transpile(tr, out, err);
        }
        if (match->parsed()) {
            return cmd_match(ma, out);
        }
        if (anneal->parsed()) {
            return cmd_anneal(an, out);
        }
        if (walk->parsed()) {
            return cmd_walk(wa, out);
        }
        if (mbqc->parsed()) {
            return cmd_mbqc(mb, mb.seed.value_or(default_seed), out);
        }
        if (list->parsed()) {
            return cmd_profiles_list(list_json, out);
        }
        if (show->parsed()) {
            return cmd_profiles_show(show_name, show_json, out);
        }
    } catch (const RuleFailure &e) {
        err << "error: " << e.what() << "\n";
        return kExitRuleFailure;
    } catch (const RuleViolation &e) {
        err << "error: " << e.what() << "\n";
        return kExitRuleFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace aqm::cli
