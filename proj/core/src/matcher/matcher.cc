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

#include "aqm/matcher/matcher.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "aqm/compensation/rewrite.h"
#include "aqm/matcher/plan.h"

namespace aqm::matcher {

using apps::DemandProfile;
using profiles::DeviceProfile;

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ok:
            return "ok";
        case Verdict::ok_with_compensation:
            return "ok_with_compensation";
        case Verdict::fail:
            return "fail";
    }
    return "?";
}

std::optional<Verdict> parse_verdict(std::string_view name) {
    for (Verdict v : {Verdict::ok, Verdict::ok_with_compensation, Verdict::fail}) {
        if (verdict_name(v) == name) {
            return v;
        }
    }
    return std::nullopt;
}

std::string_view overall_name(Overall o) {
    switch (o) {
        case Overall::supported:
            return "supported";
        case Overall::supported_with_compensation:
            return "supported_with_compensation";
        case Overall::unsupported:
            return "unsupported";
    }
    return "?";
}

std::optional<Overall> parse_overall(std::string_view name) {
    for (Overall o : {Overall::supported, Overall::supported_with_compensation, Overall::unsupported}) {
        if (overall_name(o) == name) {
            return o;
        }
    }
    return std::nullopt;
}

namespace {

std::map<std::string, double> cost_summary(const CompilationResult &plan) {
    std::size_t gates = 0;
    for (const auto &[name, count] : plan.cost.gate_count_by_name) {
        gates += count;
    }
    std::map<std::string, double> out = {
        {"gate_count", static_cast<double>(gates)},
        {"total_duration_ns", plan.cost.total_duration_ns},
        {"fidelity_estimate", plan.cost.fidelity_estimate},
        {"added_ancillas", static_cast<double>(plan.cost.added_ancillas)},
    };
    if (plan.budget) {
        out["duration_over_t2"] = plan.budget->ratio;
    }
    return out;
}

bool has_two_qubit_gate(const DeviceProfile &d) {
    for (const auto &g : d.native_gates) {
        if (g.arity == 2) {
            return true;
        }
    }
    return false;
}

// Lexicographically first pair at maximal hop distance.
std::pair<std::size_t, std::size_t> farthest_pair(const DeviceProfile &d) {
    std::pair<std::size_t, std::size_t> best{0, 1};
    std::size_t best_hops = 0;
    for (std::size_t a = 0; a < d.num_qubits; ++a) {
        for (std::size_t b = a + 1; b < d.num_qubits; ++b) {
            std::size_t h = profiles::hop_distance(d.connectivity, a, b);
            if (h > best_hops) {
                best_hops = h;
                best = {a, b};
            }
        }
    }
    return best;
}

struct Attempt {
    bool viable;
    std::optional<Compensation> compensation;
    std::string reason;
};

Attempt from_plan(const CompilationResult &plan, std::string technique, std::string what) {
    if (!plan.ok()) {
        return {false, std::nullopt,
                technique + " not viable: " + what + " fails (rule " +
                    std::to_string(static_cast<int>(plan.failure->rule)) + "): " + plan.failure->message};
    }
    return {true, Compensation{std::move(technique), cost_summary(plan)}, "reference plan: " + what};
}

Attempt try_compensate(AqmRule rule, const DeviceProfile &device, const MatchOptions &options) {
    const bool some_support = device.support(rule) >= SupportLevel::partial;
    PlanOptions po;
    po.coherence_threshold = options.coherence_threshold;
    switch (rule) {
        case AqmRule::states:
            return {false, std::nullopt, "no compensation technique exists for qubit states"};
        case AqmRule::operations: {
            if (!some_support) {
                return {false, std::nullopt, "gate decomposition not viable: device offers no gate operations"};
            }
            const auto native = device.native_gate_kinds();
            if (!compensation::is_exact_universal_basis(native)) {
                return {false, std::nullopt,
                        "gate decomposition not viable: native gates do not generate a universal set"};
            }
            auto plan = plan_compensation(device, bell_circuit(), options.epsilon, po);
            return from_plan(plan, "gate decomposition", "Bell circuit");
        }
        case AqmRule::connectivity: {
            if (!some_support) {
                return {false, std::nullopt, "gate routing not viable: no coupling between qubits"};
            }
            if (device.num_qubits < 2 || !device.connectivity.is_connected()) {
                return {false, std::nullopt, "gate routing not viable: connectivity graph is disconnected"};
            }
            if (!has_two_qubit_gate(device)) {
                return {false, std::nullopt, "gate routing not viable: no native two-qubit gate to build SWAPs"};
            }
            auto [a, b] = farthest_pair(device);
            Circuit c(device.num_qubits);
            c.append(GateKind::CNOT, {a, b});
            auto plan = plan_compensation(device, c, options.epsilon, po);
            return from_plan(plan, "gate routing",
                             "CNOT " + std::to_string(a) + " " + std::to_string(b) + " (farthest pair)");
        }
        case AqmRule::coherence: {
            if (options.allow_qec && device.qec_capable) {
                return {true, Compensation{"quantum error correction", {}},
                        "device is marked QEC-capable; QEC is counted as compensation by option"};
            }
            return {false, std::nullopt,
                    device.qec_capable ? "quantum error correction is not counted as compensation (see allow_qec)"
                                       : "device is not QEC-capable"};
        }
        case AqmRule::readout: {
            if (!some_support) {
                return {false, std::nullopt, "measurements with auxiliary qubits not viable: no readout"};
            }
            if (device.num_qubits < 2) {
                return {false, std::nullopt, "measurements with auxiliary qubits not viable: no spare qubit"};
            }
            auto plan = plan_compensation(device, bell_circuit(), options.epsilon, po);
            auto attempt = from_plan(plan, "measurements with auxiliary qubits", "system-ancilla entangler");
            if (attempt.compensation) {
                attempt.compensation->cost["added_ancillas"] = 1.0;
            }
            return attempt;
        }
    }
    return {false, std::nullopt, "unknown rule"};
}

}  // namespace

MatchReport match_profiles(const DeviceProfile &device, const DemandProfile &demand, const MatchOptions &options) {
    MatchReport report{device.name, demand.name, {}, Overall::supported, {}};
    bool any_compensated = false;
    bool any_failed = false;
    for (AqmRule rule : kAllRules) {
        RuleVerdict v{rule, demand.demand(rule), device.support(rule), Verdict::ok, std::nullopt, ""};
        if (v.demand > v.support) {
            Attempt a = try_compensate(rule, device, options);
            v.verdict = a.viable ? Verdict::ok_with_compensation : Verdict::fail;
            v.compensation = std::move(a.compensation);
            v.reason = std::move(a.reason);
        }
        any_compensated |= v.verdict == Verdict::ok_with_compensation;
        any_failed |= v.verdict == Verdict::fail;
        report.rules.push_back(std::move(v));
    }
    report.overall = any_failed        ? Overall::unsupported
                     : any_compensated ? Overall::supported_with_compensation
                                       : Overall::supported;
    for (const auto &[key, note] : device.notes) {
        report.citations["device:" + key] = note;
    }
    for (AqmRule rule : kAllRules) {
        const std::string &note = demand.rule_demand[rule].note;
        if (!note.empty()) {
            report.citations["demand:" + std::string(rule_name(rule))] = note;
        }
    }
    return report;
}

MatchMatrix match_matrix(const std::vector<DeviceProfile> &devices, const std::vector<DemandProfile> &demands,
                         const MatchOptions &options, unsigned jobs) {
    MatchMatrix m;
    for (const auto &d : demands) {
        m.demands.push_back(d.name);
    }
    for (const auto &d : devices) {
        m.devices.push_back(d.name);
    }
    const std::size_t cols = devices.size();
    const std::size_t total = demands.size() * cols;
    std::vector<std::optional<MatchReport>> flat(total);
    std::vector<std::exception_ptr> errors(total);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < total; k = next++) {
            try {
                flat[k] = match_profiles(devices[k % cols], demands[k / cols], options);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(total)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    m.cells.assign(demands.size(), {});
    for (std::size_t k = 0; k < total; ++k) {
        m.cells[k / cols].push_back(std::move(*flat[k]));
    }
    return m;
}

MatchMatrix builtin_match_matrix(const MatchOptions &options, unsigned jobs) {
    std::vector<DeviceProfile> devices;
    for (const auto &name : profiles::builtin_profile_names()) {
        devices.push_back(profiles::builtin_profile(name));
    }
    std::vector<DemandProfile> demands;
    for (const auto &name : apps::builtin_demand_names()) {
        demands.push_back(apps::builtin_demand(name));
    }
    return match_matrix(devices, demands, options, jobs);
}

}  // namespace aqm::matcher
