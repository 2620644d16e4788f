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

#include "aqm/profiles/profile.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "json.hpp"

namespace aqm::profiles {

using Json = nlohmann::ordered_json;

const GateSpec *DeviceProfile::find_gate(GateKind kind) const {
    for (const auto &g : native_gates) {
        if (g.gate == kind) {
            return &g;
        }
    }
    return nullptr;
}

std::vector<GateKind> DeviceProfile::native_gate_kinds() const {
    std::vector<GateKind> out;
    out.reserve(native_gates.size());
    for (const auto &g : native_gates) {
        out.push_back(g.gate);
    }
    return out;
}

namespace {

bool positive_finite(double x) {
    return std::isfinite(x) && x > 0.0;
}

bool has_clique(const ConnectivityGraph &g, int size) {
    if (size <= 1) {
        return g.num_qubits() >= 1;
    }
    if (size == 2) {
        return !g.edges().empty();
    }
    // size 3: a triangle
    for (auto [a, b] : g.edges()) {
        for (std::size_t c : g.neighbors(a)) {
            if (c != b && g.has_edge(b, c)) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

ProfileValidation validate_profile(const DeviceProfile &p) {
    ProfileValidation result;
    auto fail = [&](std::string path, std::string message) {
        result.violations.push_back({std::move(path), std::move(message)});
    };

    if (p.name.empty()) {
        fail("name", "must not be empty");
    }
    if (p.num_qubits < 1) {
        fail("num_qubits", "must be at least 1");
    }
    {
        std::size_t k = 0;
        for (auto [a, b] : p.connectivity.edges()) {
            if (a >= p.num_qubits || b >= p.num_qubits) {
                fail("connectivity[" + std::to_string(k) + "]", "edge (" + std::to_string(a) + "," +
                                                                    std::to_string(b) + ") out of range for " +
                                                                    std::to_string(p.num_qubits) + " qubits");
            }
            ++k;
        }
    }

    std::set<GateKind> seen;
    for (std::size_t k = 0; k < p.native_gates.size(); ++k) {
        const auto &g = p.native_gates[k];
        const std::string path = "native_gates[" + std::to_string(k) + "]";
        const GateInfo &info = gate_info(g.gate);
        if (!info.is_unitary) {
            fail(path + ".gate", std::string(info.name) + " is not a gate");
        }
        if (!seen.insert(g.gate).second) {
            fail(path + ".gate", "duplicate gate " + std::string(info.name));
        }
        if (g.arity != info.arity) {
            fail(path + ".arity", std::string(info.name) + " has arity " + std::to_string(info.arity) + ", not " +
                                      std::to_string(g.arity));
        }
        if (!positive_finite(g.duration_ns)) {
            fail(path + ".duration_ns", "must be > 0");
        }
        if (!(std::isfinite(g.fidelity) && g.fidelity > 0.0 && g.fidelity <= 1.0)) {
            fail(path + ".fidelity", "must lie in (0, 1]");
        }
        if (info.arity >= 2) {
            if (!has_clique(p.connectivity, info.arity)) {
                fail(path + ".gate", std::string(info.name) + " is not executable on any coupled qubit set");
            }
            if (p.support(AqmRule::operations) == SupportLevel::none) {
                fail(path + ".gate", "multi-qubit native gate listed while rule_support.operations is none");
            }
        }
    }

    if (!positive_finite(p.t1_us)) {
        fail("t1_us", "must be > 0");
    }
    if (!positive_finite(p.t2_us)) {
        fail("t2_us", "must be > 0");
    }
    if (p.t2_dd_us && !positive_finite(*p.t2_dd_us)) {
        fail("t2_dd_us", "must be > 0");
    }
    if (!(std::isfinite(p.measurement.fidelity) && p.measurement.fidelity > 0.0 && p.measurement.fidelity <= 1.0)) {
        fail("measurement.fidelity", "must lie in (0, 1]");
    }
    if (!positive_finite(p.measurement.duration_ns)) {
        fail("measurement.duration_ns", "must be > 0");
    }
    for (const auto &[key, value] : p.constants) {
        if (!std::isfinite(value)) {
            fail("constants." + key, "must be finite");
        }
    }
    return result;
}

namespace {

void require_object(const Json &j, const std::string &path) {
    if (!j.is_object()) {
        throw ProfileError(path, "expected an object");
    }
}

void reject_unknown(const Json &j, const std::string &prefix, std::initializer_list<std::string_view> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
            throw ProfileError(prefix + it.key(), "unknown field");
        }
    }
}

const Json &field(const Json &j, const std::string &prefix, const std::string &key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ProfileError(prefix + key, "missing field");
    }
    return *it;
}

double number_at(const Json &j, const std::string &path) {
    if (!j.is_number()) {
        throw ProfileError(path, "expected a number");
    }
    return j.get<double>();
}

std::size_t index_at(const Json &j, const std::string &path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ProfileError(path, "expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

bool bool_at(const Json &j, const std::string &path) {
    if (!j.is_boolean()) {
        throw ProfileError(path, "expected true or false");
    }
    return j.get<bool>();
}

std::string string_at(const Json &j, const std::string &path) {
    if (!j.is_string()) {
        throw ProfileError(path, "expected a string");
    }
    return j.get<std::string>();
}

}  // namespace

DeviceProfile parse_device_profile(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error &e) {
        throw ProfileError("", std::string("JSON syntax error: ") + e.what());
    }
    require_object(doc, "");
    reject_unknown(doc, "", {"name", "num_qubits", "connectivity", "native_gates", "t1_us", "t2_us", "t2_dd_us",
                             "measurement", "rule_support", "qec_capable", "notes", "constants"});

    DeviceProfile p;
    p.name = string_at(field(doc, "", "name"), "name");
    p.num_qubits = index_at(field(doc, "", "num_qubits"), "num_qubits");
    if (p.num_qubits < 1) {
        throw ProfileError("num_qubits", "must be at least 1");
    }

    const Json &conn = field(doc, "", "connectivity");
    if (!conn.is_array()) {
        throw ProfileError("connectivity", "expected an array of [a, b] pairs");
    }
    p.connectivity = ConnectivityGraph(p.num_qubits);
    for (std::size_t k = 0; k < conn.size(); ++k) {
        const std::string path = "connectivity[" + std::to_string(k) + "]";
        if (!conn[k].is_array() || conn[k].size() != 2) {
            throw ProfileError(path, "expected a pair [a, b]");
        }
        std::size_t a = index_at(conn[k][0], path + "[0]");
        std::size_t b = index_at(conn[k][1], path + "[1]");
        try {
            p.connectivity.add_edge(a, b);
        } catch (const std::invalid_argument &e) {
            throw ProfileError(path, e.what());
        }
    }

    const Json &gates = field(doc, "", "native_gates");
    if (!gates.is_array()) {
        throw ProfileError("native_gates", "expected an array");
    }
    for (std::size_t k = 0; k < gates.size(); ++k) {
        const std::string prefix = "native_gates[" + std::to_string(k) + "].";
        require_object(gates[k], prefix.substr(0, prefix.size() - 1));
        reject_unknown(gates[k], prefix, {"gate", "arity", "duration_ns", "fidelity"});
        std::string name = string_at(field(gates[k], prefix, "gate"), prefix + "gate");
        auto kind = parse_gate_name(name);
        if (!kind) {
            throw ProfileError(prefix + "gate", "unknown gate '" + name + "'");
        }
        GateSpec g{*kind, 0, 0.0, 0.0};
        g.arity = static_cast<int>(index_at(field(gates[k], prefix, "arity"), prefix + "arity"));
        g.duration_ns = number_at(field(gates[k], prefix, "duration_ns"), prefix + "duration_ns");
        g.fidelity = number_at(field(gates[k], prefix, "fidelity"), prefix + "fidelity");
        p.native_gates.push_back(g);
    }

    p.t1_us = number_at(field(doc, "", "t1_us"), "t1_us");
    p.t2_us = number_at(field(doc, "", "t2_us"), "t2_us");
    if (doc.contains("t2_dd_us")) {
        p.t2_dd_us = number_at(doc["t2_dd_us"], "t2_dd_us");
    }

    const Json &meas = field(doc, "", "measurement");
    require_object(meas, "measurement");
    reject_unknown(meas, "measurement.", {"computational_only", "fidelity", "duration_ns", "mid_circuit"});
    p.measurement.computational_only =
        bool_at(field(meas, "measurement.", "computational_only"), "measurement.computational_only");
    p.measurement.fidelity = number_at(field(meas, "measurement.", "fidelity"), "measurement.fidelity");
    p.measurement.duration_ns = number_at(field(meas, "measurement.", "duration_ns"), "measurement.duration_ns");
    p.measurement.mid_circuit = bool_at(field(meas, "measurement.", "mid_circuit"), "measurement.mid_circuit");

    if (doc.contains("notes")) {
        const Json &notes = doc["notes"];
        require_object(notes, "notes");
        for (auto it = notes.begin(); it != notes.end(); ++it) {
            p.notes[it.key()] = string_at(it.value(), "notes." + it.key());
        }
    }

    const Json &rules = field(doc, "", "rule_support");
    require_object(rules, "rule_support");
    reject_unknown(rules, "rule_support.", {"states", "operations", "connectivity", "coherence", "readout"});
    for (AqmRule r : kAllRules) {
        const std::string key(rule_name(r));
        std::string lvl = string_at(field(rules, "rule_support.", key), "rule_support." + key);
        auto level = parse_support_level(lvl);
        if (!level) {
            throw ProfileError("rule_support." + key, "expected \"full\", \"partial\" or \"none\", got \"" + lvl + "\"");
        }
        p.rule_support[r].level = *level;
        if (auto it = p.notes.find("rule_support." + key); it != p.notes.end()) {
            p.rule_support[r].note = it->second;
        }
    }

    p.qec_capable = bool_at(field(doc, "", "qec_capable"), "qec_capable");

    if (doc.contains("constants")) {
        const Json &constants = doc["constants"];
        require_object(constants, "constants");
        for (auto it = constants.begin(); it != constants.end(); ++it) {
            p.constants[it.key()] = number_at(it.value(), "constants." + it.key());
        }
    }

    auto validation = validate_profile(p);
    if (!validation.ok()) {
        const auto &v = validation.violations.front();
        std::string msg = v.message;
        if (validation.violations.size() > 1) {
            msg += " (and " + std::to_string(validation.violations.size() - 1) + " more)";
        }
        throw ProfileError(v.path, msg);
    }
    return p;
}

std::string serialize_device_profile(const DeviceProfile &p) {
    Json doc;
    doc["name"] = p.name;
    doc["num_qubits"] = p.num_qubits;
    Json edges = Json::array();
    for (auto [a, b] : p.connectivity.edges()) {
        edges.push_back(Json::array({a, b}));
    }
    doc["connectivity"] = edges;
    Json gates = Json::array();
    for (const auto &g : p.native_gates) {
        Json jg;
        jg["gate"] = std::string(gate_name(g.gate));
        jg["arity"] = g.arity;
        jg["duration_ns"] = g.duration_ns;
        jg["fidelity"] = g.fidelity;
        gates.push_back(jg);
    }
    doc["native_gates"] = gates;
    doc["t1_us"] = p.t1_us;
    doc["t2_us"] = p.t2_us;
    if (p.t2_dd_us) {
        doc["t2_dd_us"] = *p.t2_dd_us;
    }
    doc["measurement"] = {{"computational_only", p.measurement.computational_only},
                          {"fidelity", p.measurement.fidelity},
                          {"duration_ns", p.measurement.duration_ns},
                          {"mid_circuit", p.measurement.mid_circuit}};
    Json rules;
    for (AqmRule r : kAllRules) {
        rules[std::string(rule_name(r))] = std::string(support_level_name(p.rule_support[r].level));
    }
    doc["rule_support"] = rules;
    doc["qec_capable"] = p.qec_capable;
    Json notes = Json::object();
    for (const auto &[k, v] : p.notes) {
        notes[k] = v;
    }
    doc["notes"] = notes;
    if (!p.constants.empty()) {
        Json constants = Json::object();
        for (const auto &[k, v] : p.constants) {
            constants[k] = v;
        }
        doc["constants"] = constants;
    }
    return doc.dump(2) + "\n";
}

}  // namespace aqm::profiles
