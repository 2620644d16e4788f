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

#include <fstream>
#include <functional>
#include <sstream>

#include "aqm/core/errors.h"
#include "aqm/profiles/graph.h"
#include "aqm/profiles/profile.h"
#include "json.hpp"

namespace aqm::profiles {
namespace {

using Json = nlohmann::json;

std::string builtin_text(const std::string &name) {
    return std::string(builtin_profile_json(name));
}

std::string mutate(const std::string &name, const std::function<void(Json &)> &f) {
    Json j = Json::parse(builtin_text(name));
    f(j);
    return j.dump();
}

std::string error_of(const std::string &text) {
    try {
        parse_device_profile(text);
    } catch (const ProfileError &e) {
        return e.what();
    }
    return "";
}

// Every simple path from a to b, by brute-force DFS.
void all_paths(const ConnectivityGraph &g, std::size_t at, std::size_t b, std::vector<std::size_t> &cur,
               std::vector<std::vector<std::size_t>> &out) {
    if (at == b) {
        out.push_back(cur);
        return;
    }
    for (std::size_t n = 0; n < g.num_qubits(); ++n) {
        if (g.has_edge(at, n) && std::find(cur.begin(), cur.end(), n) == cur.end()) {
            cur.push_back(n);
            all_paths(g, n, b, cur, out);
            cur.pop_back();
        }
    }
}

std::vector<std::size_t> oracle_path(const ConnectivityGraph &g, std::size_t a, std::size_t b) {
    std::vector<std::vector<std::size_t>> paths;
    std::vector<std::size_t> cur = {a};
    all_paths(g, a, b, cur, paths);
    if (paths.empty()) return {};
    // Shortest, ties broken lexicographically.
    return *std::min_element(paths.begin(), paths.end(), [](const auto &x, const auto &y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
}

TEST(Graph, ShortestPathExamples) {
    EXPECT_EQ(shortest_path(ConnectivityGraph::line(3), 0, 2), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(shortest_path(ConnectivityGraph::ring(4), 2, 2), (std::vector<std::size_t>{2}));
    EXPECT_EQ(shortest_path(ConnectivityGraph::ring(4), 0, 2), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(shortest_path(ConnectivityGraph::ring(4), 2, 0), (std::vector<std::size_t>{2, 1, 0}));
    ConnectivityGraph split(4, {{0, 1}, {2, 3}});
    EXPECT_FALSE(split.is_connected());
    try {
        shortest_path(split, 0, 3);
        FAIL() << "expected a rule violation";
    } catch (const RuleViolation &e) {
        EXPECT_EQ(e.rule(), AqmRule::connectivity);
    }
}

TEST(Graph, ShortestPathMatchesExhaustiveEnumeration) {
    // Every graph on 5 labelled nodes.
    const std::size_t n = 5;
    std::vector<Edge> pairs;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    for (unsigned mask = 0; mask < (1u << pairs.size()); mask += 7) {
        ConnectivityGraph g(n);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask & (1u << k)) g.add_edge(pairs[k].first, pairs[k].second);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                const auto expect = oracle_path(g, a, b);
                if (expect.empty()) {
                    EXPECT_THROW(shortest_path(g, a, b), RuleViolation);
                } else {
                    EXPECT_EQ(shortest_path(g, a, b), expect) << "mask " << mask;
                    EXPECT_EQ(hop_distance(g, a, b), expect.size() - 1);
                }
            }
        }
    }
}

TEST(Graph, Invariants) {
    EXPECT_THROW(ConnectivityGraph(3, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(ConnectivityGraph(3, {{0, 3}}), std::invalid_argument);
    ConnectivityGraph g(3, {{2, 0}});
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_EQ(g.neighbors(0), (std::vector<std::size_t>{2}));
    EXPECT_TRUE(ConnectivityGraph::complete(4).is_complete());
    EXPECT_EQ(ConnectivityGraph::complete(4).edges().size(), 6u);
    EXPECT_FALSE(ConnectivityGraph::line(4).is_complete());
}

TEST(Profiles, BuiltinsParseValidateAndRoundTrip) {
    const auto names = builtin_profile_names();
    EXPECT_EQ(names, (std::vector<std::string>{"fluxonium", "neutral-atom", "nv-center", "photonic-mbqc",
                                               "quantum-memory-ensemble", "superconducting-transmon",
                                               "trapped-ion"}));
    for (const auto &name : names) {
        const DeviceProfile p = builtin_profile(name);
        EXPECT_EQ(p.name, name);
        EXPECT_TRUE(validate_profile(p).ok()) << name;
        EXPECT_EQ(parse_device_profile(serialize_device_profile(p)), p) << name;
        EXPECT_EQ(serialize_device_profile(parse_device_profile(serialize_device_profile(p))),
                  serialize_device_profile(p));
        // Every numeric field carries a citation or an explicit placeholder note.
        for (const char *key : {"t1_us", "t2_us", "measurement.fidelity", "measurement.duration_ns", "num_qubits",
                                "qec_capable", "rule_support"}) {
            EXPECT_TRUE(p.notes.count(key)) << name << " lacks a note for " << key;
        }
        for (const auto &g : p.native_gates) {
            const std::string key = "native_gates." + std::string(gate_name(g.gate));
            EXPECT_TRUE(p.notes.count(key + ".duration_ns") && p.notes.count(key + ".fidelity")) << name << " " << key;
        }
        for (const auto &[k, v] : p.constants) {
            EXPECT_TRUE(p.notes.count("constants." + k)) << name << " " << k;
        }
    }
}

TEST(Profiles, CitedConstants) {
    const auto transmon = builtin_profile("superconducting-transmon");
    ASSERT_TRUE(transmon.has_gate(GateKind::CZ));
    EXPECT_EQ(transmon.find_gate(GateKind::CZ)->duration_ns, 40.0);
    EXPECT_EQ(transmon.find_gate(GateKind::CZ)->fidelity, 0.998);
    EXPECT_EQ(transmon.t2_us, 300.0);

    const auto ion = builtin_profile("trapped-ion");
    EXPECT_EQ(ion.t2_us, 5.5e9);
    EXPECT_EQ(ion.find_gate(GateKind::CNOT)->fidelity, 0.999);
    EXPECT_TRUE(ion.connectivity.is_complete());

    EXPECT_EQ(builtin_profile("fluxonium").t2_us, 1480.0);

    const auto atom = builtin_profile("neutral-atom");
    EXPECT_EQ(atom.find_gate(GateKind::CZ)->fidelity, 0.995);
    EXPECT_EQ(atom.find_gate(GateKind::CZ)->duration_ns, 200.0);

    const auto nv = builtin_profile("nv-center");
    EXPECT_EQ(nv.t2_dd_us, 1.58e6);
    EXPECT_EQ(nv.constants.at("nuclear_t2_dd_us"), 6.3e7);
    EXPECT_EQ(nv.constants.at("remote_entanglement_rate_hz"), 9.0);

    const auto mem = builtin_profile("quantum-memory-ensemble");
    EXPECT_EQ(mem.constants.at("eit_storage_lifetime_us"), 16e6);
    EXPECT_EQ(mem.constants.at("afc_storage_lifetime_us"), 3.174e9);
    EXPECT_EQ(mem.support(AqmRule::operations), SupportLevel::none);
    EXPECT_TRUE(mem.native_gates.empty());

    EXPECT_TRUE(validate_profile(builtin_profile("photonic-mbqc")).ok());
}

TEST(Profiles, UnknownBuiltinListsAvailable) {
    try {
        builtin_profile("ibm-eagle");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("trapped-ion"), std::string::npos);
    }
}

TEST(Profiles, ParseErrorsNameTheField) {
    const std::string t = "superconducting-transmon";
    EXPECT_NE(error_of(mutate(t, [](Json &j) { j["native_gates"][11]["fidelity"] = 1.2; }))
                  .find("native_gates[11].fidelity"),
              std::string::npos);
    EXPECT_NE(error_of(mutate(t, [](Json &j) { j.erase("connectivity"); })).find("connectivity: missing field"),
              std::string::npos);
    EXPECT_NE(error_of(mutate(t, [](Json &j) { j["colour"] = "blue"; })).find("colour: unknown field"),
              std::string::npos);
    EXPECT_NE(error_of(mutate(t, [](Json &j) { j["measurement"]["basis"] = "z"; })).find("measurement.basis"),
              std::string::npos);
    EXPECT_NE(error_of(mutate(t, [](Json &j) { j["t2_us"] = "long"; })).find("t2_us: expected a number"),
              std::string::npos);
    EXPECT_NE(error_of(mutate(t, [](Json &j) { j["t1_us"] = -1; })).find("t1_us"), std::string::npos);
    EXPECT_NE(error_of(mutate(t, [](Json &j) { j["rule_support"]["states"] = "most"; })).find("rule_support.states"),
              std::string::npos);
    EXPECT_NE(error_of(mutate(t, [](Json &j) { j["native_gates"][0]["gate"] = "FOO"; })).find("native_gates[0].gate"),
              std::string::npos);
    EXPECT_NE(error_of("{not json").find("JSON syntax error"), std::string::npos);
    std::ifstream f(std::string(AQM_TEST_DATA_DIR) + "/missing_connectivity.json");
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_NE(error_of(ss.str()).find("missing field"), std::string::npos);
}

TEST(Profiles, CrossFieldValidation) {
    auto p = builtin_profile("superconducting-transmon");
    p.rule_support[AqmRule::operations].level = SupportLevel::none;
    auto v = validate_profile(p);
    ASSERT_FALSE(v.ok());
    EXPECT_EQ(v.violations[0].path, "native_gates[11].gate");

    auto q = builtin_profile("fluxonium");
    q.connectivity = ConnectivityGraph(9);
    q.connectivity.add_edge(0, 8);
    q.num_qubits = 4;
    EXPECT_FALSE(validate_profile(q).ok());

    auto r = builtin_profile("photonic-mbqc");
    r.native_gates.push_back({GateKind::CZ, 2, 10.0, 0.9});
    r.connectivity = ConnectivityGraph(r.num_qubits);
    EXPECT_FALSE(validate_profile(r).ok());

    auto s = builtin_profile("trapped-ion");
    s.native_gates.push_back({GateKind::CCX, 3, 10.0, 0.9});
    EXPECT_TRUE(validate_profile(s).ok());  // complete graph has triangles
    s.connectivity = ConnectivityGraph::line(s.num_qubits);
    EXPECT_FALSE(validate_profile(s).ok());

    auto t = builtin_profile("neutral-atom");
    t.native_gates[0].duration_ns = 0.0;
    t.native_gates[1].arity = 2;
    EXPECT_EQ(validate_profile(t).violations.size(), 2u);
}

}  // namespace
}  // namespace aqm::profiles
