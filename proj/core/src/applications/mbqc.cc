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

#include "aqm/applications/mbqc.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "aqm/core/linalg.h"
#include "aqm/core/measurement.h"
#include "json.hpp"

namespace aqm::apps {

using profiles::ConnectivityGraph;

StateVector build_cluster_state(const ConnectivityGraph &graph) {
    const std::size_t n = graph.num_qubits();
    const auto dim = Eigen::Index{1} << n;
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    Vector v(dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        int sign = 1;
        for (auto [a, b] : graph.edges()) {
            if (((x >> a) & 1) && ((x >> b) & 1)) {
                sign = -sign;
            }
        }
        v(x) = amp * sign;
    }
    return StateVector(n, std::move(v));
}

bool Parity::evaluate(const std::vector<std::optional<int>> &outcomes) const {
    int acc = 0;
    for (std::size_t q : qubits) {
        const auto &o = outcomes.at(q);
        if (!o) {
            throw PatternError("parity refers to unmeasured qubit " + std::to_string(q));
        }
        acc ^= *o;
    }
    return acc != 0;
}

void validate_pattern(const MeasurementPattern &pattern) {
    const std::size_t n = pattern.graph.num_qubits();
    if (n == 0) {
        throw PatternError("pattern has no nodes");
    }
    auto check_list = [n](const std::vector<std::size_t> &list, const char *what) {
        std::vector<bool> seen(n, false);
        for (std::size_t q : list) {
            if (q >= n) {
                throw PatternError(std::string(what) + " node " + std::to_string(q) + " out of range");
            }
            if (seen[q]) {
                throw PatternError(std::string(what) + " node " + std::to_string(q) + " listed twice");
            }
            seen[q] = true;
        }
    };
    check_list(pattern.inputs, "input");
    check_list(pattern.outputs, "output");
    if (pattern.outputs.empty()) {
        throw PatternError("pattern has no outputs");
    }

    std::vector<bool> is_output(n, false);
    for (std::size_t q : pattern.outputs) {
        is_output[q] = true;
    }
    std::vector<bool> measured(n, false);
    auto check_domain = [&](const Parity &p, std::size_t at) {
        for (std::size_t q : p.qubits) {
            if (q >= n || !measured[q]) {
                throw PatternError("measurement of node " + std::to_string(at) + " depends on s[" + std::to_string(q) +
                                   "], which is not measured earlier");
            }
        }
    };
    for (const PatternMeasurement &m : pattern.measurements) {
        if (m.qubit >= n) {
            throw PatternError("measured node " + std::to_string(m.qubit) + " out of range");
        }
        if (is_output[m.qubit]) {
            throw PatternError("output node " + std::to_string(m.qubit) + " is measured");
        }
        if (measured[m.qubit]) {
            throw PatternError("node " + std::to_string(m.qubit) + " measured twice");
        }
        if (!std::isfinite(m.theta)) {
            throw PatternError("non-finite angle for node " + std::to_string(m.qubit));
        }
        check_domain(m.s_domain, m.qubit);
        check_domain(m.t_domain, m.qubit);
        measured[m.qubit] = true;
    }
    for (std::size_t q = 0; q < n; ++q) {
        if (!is_output[q] && !measured[q]) {
            throw PatternError("non-output node " + std::to_string(q) + " is never measured");
        }
    }
    for (const PatternCorrection &c : pattern.corrections) {
        if (c.qubit >= n || !is_output[c.qubit]) {
            throw PatternError("correction on non-output node " + std::to_string(c.qubit));
        }
        check_domain(c.x_domain, c.qubit);
        check_domain(c.z_domain, c.qubit);
    }
}

// ---- expressions ----

namespace {

class ExprParser {
   public:
    explicit ExprParser(std::string_view text) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                s_ += c;
            }
        }
        original_ = std::string(text);
    }

    AngleExpression angle() {
        AngleExpression e;
        if (eat("(-1)^")) {
            e.s_domain = group();
            expect("*");
        }
        expect("theta");
        if (eat("+")) {
            if (eat("pi*")) {
                e.t_domain = group();
            } else {
                e.t_domain = group();
                expect("*pi");
            }
        }
        finish();
        return e;
    }

    Parity parity_only() {
        if (s_.empty() || s_ == "0") {
            return {};
        }
        Parity p = parity();
        finish();
        return p;
    }

   private:
    bool eat(std::string_view token) {
        if (s_.compare(pos_, token.size(), token) == 0) {
            pos_ += token.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view token) {
        if (!eat(token)) {
            fail("expected '" + std::string(token) + "'");
        }
    }
    void finish() {
        if (pos_ != s_.size()) {
            fail("unexpected trailing text");
        }
    }
    [[noreturn]] void fail(const std::string &why) const {
        throw PatternError("cannot parse expression \"" + original_ + "\": " + why);
    }
    std::size_t outcome_ref() {
        expect("s[");
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a node index");
        }
        std::size_t q = std::stoul(s_.substr(start, pos_ - start));
        expect("]");
        return q;
    }
    Parity parity() {
        Parity p;
        p.qubits.push_back(outcome_ref());
        while (pos_ < s_.size() && s_.compare(pos_, 3, "+s[") == 0) {
            ++pos_;
            p.qubits.push_back(outcome_ref());
        }
        return p;
    }
    Parity group() {
        if (eat("(")) {
            Parity p = parity();
            expect(")");
            return p;
        }
        Parity p;
        p.qubits.push_back(outcome_ref());
        return p;
    }

    std::string s_;
    std::string original_;
    std::size_t pos_ = 0;
};

std::string parity_terms(const Parity &p) {
    std::string out;
    for (std::size_t i = 0; i < p.qubits.size(); ++i) {
        out += (i ? "+" : "") + std::string("s[") + std::to_string(p.qubits[i]) + "]";
    }
    return out;
}

std::string group_text(const Parity &p) {
    return p.qubits.size() == 1 ? parity_terms(p) : "(" + parity_terms(p) + ")";
}

}  // namespace

AngleExpression parse_angle_expression(std::string_view text) {
    return ExprParser(text).angle();
}

Parity parse_parity(std::string_view text) {
    return ExprParser(text).parity_only();
}

std::string format_parity(const Parity &parity) {
    return parity.empty() ? "0" : parity_terms(parity);
}

std::string format_angle_expression(const Parity &s_domain, const Parity &t_domain) {
    std::string out = s_domain.empty() ? "theta" : "(-1)^" + group_text(s_domain) + " * theta";
    if (!t_domain.empty()) {
        out += " + pi * " + group_text(t_domain);
    }
    return out;
}

// ---- pattern files ----

MeasurementPattern parse_pattern(std::string_view json_text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error &e) {
        throw PatternError(std::string("pattern: JSON syntax error: ") + e.what());
    }
    static const std::vector<std::string> kKeys = {"nodes", "edges", "inputs", "outputs", "order",
                                                   "angles", "adaptivity", "corrections"};
    MeasurementPattern p;
    try {
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (std::find(kKeys.begin(), kKeys.end(), it.key()) == kKeys.end()) {
                throw PatternError("pattern: unknown field '" + it.key() + "'");
            }
        }
        const auto n = doc.at("nodes").get<std::size_t>();
        std::vector<profiles::Edge> edges;
        for (const auto &e : doc.value("edges", json::array())) {
            edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        }
        try {
            p.graph = ConnectivityGraph(n, edges);
        } catch (const std::invalid_argument &e) {
            throw PatternError(std::string("pattern: ") + e.what());
        }
        p.inputs = doc.value("inputs", std::vector<std::size_t>{});
        p.outputs = doc.at("outputs").get<std::vector<std::size_t>>();
        const auto order = doc.at("order").get<std::vector<std::size_t>>();
        const auto angles = doc.at("angles").get<std::vector<double>>();
        std::vector<std::string> adaptivity(order.size(), "theta");
        if (doc.contains("adaptivity")) {
            adaptivity = doc.at("adaptivity").get<std::vector<std::string>>();
        }
        if (angles.size() != order.size() || adaptivity.size() != order.size()) {
            throw PatternError("pattern: order, angles and adaptivity must have equal length");
        }
        for (std::size_t i = 0; i < order.size(); ++i) {
            AngleExpression e = parse_angle_expression(adaptivity[i]);
            p.measurements.push_back({order[i], angles[i], e.s_domain, e.t_domain});
        }
        for (const auto &c : doc.value("corrections", json::array())) {
            p.corrections.push_back({c.at("qubit").get<std::size_t>(), parse_parity(c.value("x", "")),
                                     parse_parity(c.value("z", ""))});
        }
    } catch (const json::exception &e) {
        throw PatternError(std::string("pattern: ") + e.what());
    }
    validate_pattern(p);
    return p;
}

std::string format_pattern(const MeasurementPattern &pattern) {
    nlohmann::ordered_json doc;
    doc["nodes"] = pattern.graph.num_qubits();
    auto edges = nlohmann::ordered_json::array();
    for (auto [a, b] : pattern.graph.edges()) {
        edges.push_back({a, b});
    }
    doc["edges"] = edges;
    doc["inputs"] = pattern.inputs;
    doc["outputs"] = pattern.outputs;
    std::vector<std::size_t> order;
    std::vector<double> angles;
    std::vector<std::string> adaptivity;
    for (const auto &m : pattern.measurements) {
        order.push_back(m.qubit);
        angles.push_back(m.theta);
        adaptivity.push_back(format_angle_expression(m.s_domain, m.t_domain));
    }
    doc["order"] = order;
    doc["angles"] = angles;
    doc["adaptivity"] = adaptivity;
    auto corrections = nlohmann::ordered_json::array();
    for (const auto &c : pattern.corrections) {
        corrections.push_back({{"qubit", c.qubit}, {"x", format_parity(c.x_domain)}, {"z", format_parity(c.z_domain)}});
    }
    doc["corrections"] = corrections;
    return doc.dump(2) + "\n";
}

MeasurementPattern euler_pattern(double alpha, double beta, double gamma) {
    MeasurementPattern p;
    p.graph = ConnectivityGraph::line(5);
    p.inputs = {0};
    p.outputs = {4};
    p.measurements = {
        {0, -alpha, {}, {}},
        {1, -beta, Parity{{0}}, {}},
        {2, -gamma, Parity{{1}}, {}},
        {3, 0.0, {}, {}},
    };
    p.corrections = {{4, Parity{{1, 3}}, Parity{{0, 2}}}};
    return p;
}

MeasurementPattern cnot_pattern() {
    MeasurementPattern p;
    p.graph = ConnectivityGraph(4, {{0, 2}, {1, 2}, {2, 3}});
    p.inputs = {0, 1};
    p.outputs = {0, 3};
    p.measurements = {
        {1, 0.0, {}, {}},
        {2, 0.0, {}, {}},
    };
    p.corrections = {
        {3, Parity{{2}}, Parity{{1}}},
        {0, {}, Parity{{1}}},
    };
    return p;
}

// ---- execution ----

namespace {

// Projects live position `pos` onto <b| and drops it from the register.
Vector contract(const Vector &v, std::size_t pos, Complex b0, Complex b1) {
    const Eigen::Index half = v.size() / 2;
    Vector out(half);
    const Eigen::Index low_mask = (Eigen::Index{1} << pos) - 1;
    for (Eigen::Index r = 0; r < half; ++r) {
        const Eigen::Index full0 = (r & low_mask) | ((r & ~low_mask) << 1);
        const Eigen::Index full1 = full0 | (Eigen::Index{1} << pos);
        out(r) = std::conj(b0) * v(full0) + std::conj(b1) * v(full1);
    }
    return out;
}

template <typename Choose>
MbqcResult execute(const MeasurementPattern &pattern, const std::optional<StateVector> &input, Choose choose) {
    validate_pattern(pattern);
    const std::size_t n = pattern.graph.num_qubits();
    if (n > 16) {
        throw PatternError("pattern has more than 16 nodes");
    }
    const StateVector in = input ? *input : plus_state(pattern.inputs.size());
    if (in.num_qubits() != pattern.inputs.size()) {
        throw PatternError("input has " + std::to_string(in.num_qubits()) + " qubits but the pattern has " +
                           std::to_string(pattern.inputs.size()) + " inputs");
    }

    // Inputs on their nodes, |+> elsewhere, then CZ on every edge.
    const auto dim = Eigen::Index{1} << n;
    const double plus_amp =
        std::pow(1.0 / std::sqrt(2.0), static_cast<double>(n - pattern.inputs.size()));
    Vector v(dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        std::size_t in_index = 0;
        for (std::size_t k = 0; k < pattern.inputs.size(); ++k) {
            in_index |= static_cast<std::size_t>((x >> pattern.inputs[k]) & 1) << k;
        }
        int sign = 1;
        for (auto [a, b] : pattern.graph.edges()) {
            if (((x >> a) & 1) && ((x >> b) & 1)) {
                sign = -sign;
            }
        }
        v(x) = in.amplitude(in_index) * plus_amp * static_cast<double>(sign);
    }

    std::vector<std::size_t> live(n);
    for (std::size_t q = 0; q < n; ++q) {
        live[q] = q;
    }
    MbqcResult result{in, in, std::vector<std::optional<int>>(n), 1.0, {}};
    for (std::size_t i = 0; i < pattern.measurements.size(); ++i) {
        const PatternMeasurement &m = pattern.measurements[i];
        double angle = m.theta;
        if (m.s_domain.evaluate(result.outcomes)) {
            angle = -angle;
        }
        if (m.t_domain.evaluate(result.outcomes)) {
            angle += kPi;
        }
        const std::size_t pos = static_cast<std::size_t>(std::find(live.begin(), live.end(), m.qubit) - live.begin());
        const Complex phase = std::polar(1.0, angle);
        const double r = 1.0 / std::sqrt(2.0);
        Vector plus = contract(v, pos, r, r * phase);
        Vector minus = contract(v, pos, r, -r * phase);
        const double probs[2] = {plus.squaredNorm(), minus.squaredNorm()};
        const int outcome = choose(i, std::span<const double>(probs, 2));
        if (probs[outcome] <= kZeroProbability) {
            throw PatternError("outcome " + std::to_string(outcome) + " on node " + std::to_string(m.qubit) +
                               " has probability zero");
        }
        result.outcomes[m.qubit] = outcome;
        result.branch_probability *= probs[outcome];
        v = (outcome == 0 ? plus : minus) / std::sqrt(probs[outcome]);
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(pos));
    }

    // Reorder the surviving register into output order.
    const std::size_t k = pattern.outputs.size();
    std::vector<std::size_t> pos_of(k);
    for (std::size_t j = 0; j < k; ++j) {
        pos_of[j] = static_cast<std::size_t>(std::find(live.begin(), live.end(), pattern.outputs[j]) - live.begin());
    }
    Vector out(Eigen::Index{1} << k);
    for (Eigen::Index y = 0; y < out.size(); ++y) {
        Eigen::Index x = 0;
        for (std::size_t j = 0; j < k; ++j) {
            x |= ((y >> j) & 1) << pos_of[j];
        }
        out(y) = v(x);
    }
    result.raw_output = StateVector::normalized(out);

    for (const PatternCorrection &c : pattern.corrections) {
        const bool x = c.x_domain.evaluate(result.outcomes);
        const bool z = c.z_domain.evaluate(result.outcomes);
        result.byproducts.emplace_back(x, z);
        const std::size_t j =
            static_cast<std::size_t>(std::find(pattern.outputs.begin(), pattern.outputs.end(), c.qubit) -
                                     pattern.outputs.begin());
        const Eigen::Index bit = Eigen::Index{1} << j;
        if (x) {
            for (Eigen::Index y = 0; y < out.size(); ++y) {
                if (!(y & bit)) {
                    std::swap(out(y), out(y | bit));
                }
            }
        }
        if (z) {
            for (Eigen::Index y = 0; y < out.size(); ++y) {
                if (y & bit) {
                    out(y) = -out(y);
                }
            }
        }
    }
    result.output = StateVector::normalized(out);
    return result;
}

}  // namespace

MbqcResult mbqc_execute(const MeasurementPattern &pattern, const std::optional<StateVector> &input,
                        std::uint64_t seed) {
    Rng rng(seed);
    return execute(pattern, input, [&rng](std::size_t, std::span<const double> probs) {
        return static_cast<int>(sample_outcome(probs, rng));
    });
}

MbqcResult mbqc_execute_branch(const MeasurementPattern &pattern, const std::optional<StateVector> &input,
                               const std::vector<int> &forced_outcomes) {
    if (forced_outcomes.size() != pattern.measurements.size()) {
        throw PatternError("expected " + std::to_string(pattern.measurements.size()) + " forced outcomes, got " +
                           std::to_string(forced_outcomes.size()));
    }
    return execute(pattern, input, [&forced_outcomes](std::size_t i, std::span<const double>) {
        const int o = forced_outcomes[i];
        if (o != 0 && o != 1) {
            throw PatternError("forced outcomes must be 0 or 1");
        }
        return o;
    });
}

}  // namespace aqm::apps
