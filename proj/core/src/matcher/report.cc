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

#include "aqm/matcher/report.h"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace aqm::matcher {

using Json = nlohmann::ordered_json;

ReportFormat parse_report_format(std::string_view name) {
    if (name == "text") {
        return ReportFormat::text;
    }
    if (name == "json") {
        return ReportFormat::json;
    }
    throw std::invalid_argument("unknown report format '" + std::string(name) + "' (expected text or json)");
}

namespace {

Json report_json(const MatchReport &r) {
    Json doc;
    doc["device"] = r.device;
    doc["demand"] = r.demand;
    Json rules = Json::array();
    for (const RuleVerdict &v : r.rules) {
        Json jr;
        jr["rule"] = std::string(rule_name(v.rule));
        jr["demand"] = std::string(support_level_name(v.demand));
        jr["support"] = std::string(support_level_name(v.support));
        jr["verdict"] = std::string(verdict_name(v.verdict));
        if (v.compensation) {
            Json cost = Json::object();
            for (const auto &[k, x] : v.compensation->cost) {
                cost[k] = x;
            }
            jr["compensation"] = {{"technique", v.compensation->technique}, {"cost", cost}};
        }
        if (!v.reason.empty()) {
            jr["reason"] = v.reason;
        }
        rules.push_back(jr);
    }
    doc["rules"] = rules;
    doc["overall"] = std::string(overall_name(r.overall));
    doc["exit_code"] = r.exit_code();
    Json citations = Json::object();
    for (const auto &[k, note] : r.citations) {
        citations[k] = note;
    }
    doc["citations"] = citations;
    return doc;
}

template <typename T, typename F>
T parse_enum(const Json &j, const char *what, F parse) {
    auto v = parse(j.get<std::string>());
    if (!v) {
        throw std::invalid_argument(std::string("report: bad ") + what + " '" + j.get<std::string>() + "'");
    }
    return *v;
}

MatchReport report_from_json(const Json &doc) {
    MatchReport r;
    r.device = doc.at("device").get<std::string>();
    r.demand = doc.at("demand").get<std::string>();
    for (const Json &jr : doc.at("rules")) {
        RuleVerdict v{};
        v.rule = parse_enum<AqmRule>(jr.at("rule"), "rule", parse_rule_name);
        v.demand = parse_enum<SupportLevel>(jr.at("demand"), "level", parse_support_level);
        v.support = parse_enum<SupportLevel>(jr.at("support"), "level", parse_support_level);
        v.verdict = parse_enum<Verdict>(jr.at("verdict"), "verdict", parse_verdict);
        if (jr.contains("compensation")) {
            Compensation c;
            c.technique = jr.at("compensation").at("technique").get<std::string>();
            for (auto it = jr.at("compensation").at("cost").begin(); it != jr.at("compensation").at("cost").end();
                 ++it) {
                c.cost[it.key()] = it.value().get<double>();
            }
            v.compensation = std::move(c);
        }
        v.reason = jr.value("reason", "");
        r.rules.push_back(std::move(v));
    }
    r.overall = parse_enum<Overall>(doc.at("overall"), "overall verdict", parse_overall);
    for (auto it = doc.at("citations").begin(); it != doc.at("citations").end(); ++it) {
        r.citations[it.key()] = it.value().get<std::string>();
    }
    if (doc.contains("exit_code") && doc.at("exit_code").get<int>() != r.exit_code()) {
        throw std::invalid_argument("report: exit_code disagrees with overall verdict");
    }
    return r;
}

std::string short_overall(Overall o) {
    switch (o) {
        case Overall::supported:
            return "yes";
        case Overall::supported_with_compensation:
            return "comp";
        case Overall::unsupported:
            return "no";
    }
    return "?";
}

}  // namespace

std::string render_report(const MatchReport &report, ReportFormat format) {
    if (format == ReportFormat::json) {
        return report_json(report).dump(2) + "\n";
    }
    std::ostringstream os;
    os << "device: " << report.device << "\n";
    os << "demand: " << report.demand << "\n\n";
    os << std::left << std::setw(14) << "rule" << std::setw(9) << "demand" << std::setw(9) << "support"
       << "verdict\n";
    for (const RuleVerdict &v : report.rules) {
        os << std::left << std::setw(14) << rule_name(v.rule) << std::setw(9) << support_level_name(v.demand)
           << std::setw(9) << support_level_name(v.support) << verdict_name(v.verdict) << "\n";
        if (v.compensation) {
            os << "    compensation: " << v.compensation->technique;
            auto it = v.compensation->cost.find("total_duration_ns");
            if (it != v.compensation->cost.end()) {
                os << " (" << it->second << " ns";
                auto f = v.compensation->cost.find("fidelity_estimate");
                if (f != v.compensation->cost.end()) {
                    os << ", fidelity " << f->second;
                }
                os << ")";
            }
            os << "\n";
        }
        if (!v.reason.empty()) {
            os << "    " << v.reason << "\n";
        }
    }
    os << "\noverall: " << overall_name(report.overall) << " (exit code " << report.exit_code() << ")\n";
    if (!report.citations.empty()) {
        os << "\ncitations:\n";
        for (const auto &[k, note] : report.citations) {
            os << "  " << k << ": " << note << "\n";
        }
    }
    return os.str();
}

MatchReport parse_report_json(std::string_view text) {
    try {
        return report_from_json(Json::parse(text.begin(), text.end()));
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("report: ") + e.what());
    }
}

std::string render_matrix(const MatchMatrix &matrix, ReportFormat format) {
    if (format == ReportFormat::json) {
        Json doc;
        doc["demands"] = matrix.demands;
        doc["devices"] = matrix.devices;
        Json cells = Json::array();
        for (const auto &row : matrix.cells) {
            Json jrow = Json::array();
            for (const auto &cell : row) {
                jrow.push_back(report_json(cell));
            }
            cells.push_back(jrow);
        }
        doc["cells"] = cells;
        return doc.dump(2) + "\n";
    }
    std::size_t first = 6;
    for (const auto &d : matrix.demands) {
        first = std::max(first, d.size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(first + 2)) << "demand";
    for (const auto &dev : matrix.devices) {
        os << std::setw(static_cast<int>(dev.size() + 2)) << dev;
    }
    os << "\n";
    for (std::size_t i = 0; i < matrix.cells.size(); ++i) {
        os << std::setw(static_cast<int>(first + 2)) << matrix.demands[i];
        for (std::size_t j = 0; j < matrix.cells[i].size(); ++j) {
            os << std::setw(static_cast<int>(matrix.devices[j].size() + 2))
               << short_overall(matrix.cells[i][j].overall);
        }
        os << "\n";
    }
    os << "\nyes = supported, comp = supported with compensation, no = unsupported\n";
    return os.str();
}

}  // namespace aqm::matcher
