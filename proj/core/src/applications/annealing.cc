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

#include "aqm/applications/annealing.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace aqm::apps {

void validate_ising_problem(const IsingProblem &problem) {
    if (problem.num_spins == 0) {
        throw std::invalid_argument("Ising problem needs at least one spin");
    }
    if (problem.h.size() != problem.num_spins) {
        throw std::invalid_argument("Ising problem: expected " + std::to_string(problem.num_spins) +
                                    " field values, got " + std::to_string(problem.h.size()));
    }
    for (double v : problem.h) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("Ising problem: non-finite field");
        }
    }
    for (const Coupling &c : problem.couplings) {
        if (c.i >= problem.num_spins || c.j >= problem.num_spins || c.i == c.j) {
            throw std::invalid_argument("Ising problem: bad coupling (" + std::to_string(c.i) + ", " +
                                        std::to_string(c.j) + ")");
        }
        if (!std::isfinite(c.value)) {
            throw std::invalid_argument("Ising problem: non-finite coupling");
        }
    }
}

IsingProblem parse_ising_problem(std::string_view json_text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("Ising problem: JSON syntax error: ") + e.what());
    }
    IsingProblem p;
    try {
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (it.key() != "n" && it.key() != "h" && it.key() != "J") {
                throw std::invalid_argument("Ising problem: unknown field '" + it.key() + "'");
            }
        }
        p.num_spins = doc.at("n").get<std::size_t>();
        p.h = doc.at("h").get<std::vector<double>>();
        if (doc.contains("J")) {
            for (const auto &entry : doc.at("J")) {
                if (!entry.is_array() || entry.size() != 3) {
                    throw std::invalid_argument("Ising problem: each J entry must be [i, j, value]");
                }
                p.couplings.push_back({entry[0].get<std::size_t>(), entry[1].get<std::size_t>(), entry[2].get<double>()});
            }
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("Ising problem: ") + e.what());
    }
    validate_ising_problem(p);
    return p;
}

std::string format_ising_problem(const IsingProblem &problem) {
    nlohmann::ordered_json doc;
    doc["n"] = problem.num_spins;
    doc["h"] = problem.h;
    auto j = nlohmann::ordered_json::array();
    for (const Coupling &c : problem.couplings) {
        j.push_back({c.i, c.j, c.value});
    }
    doc["J"] = j;
    return doc.dump() + "\n";
}

namespace {

double ramp(const std::vector<double> &table, double t, double t_final, bool rising) {
    if (t_final <= 0.0) {
        return rising ? 0.0 : 1.0;
    }
    const double s = std::clamp(t / t_final, 0.0, 1.0);
    if (table.empty()) {
        return rising ? s : 1.0 - s;
    }
    const double x = s * static_cast<double>(table.size() - 1);
    const auto k = std::min(static_cast<std::size_t>(x), table.size() - 2);
    const double frac = x - static_cast<double>(k);
    return table[k] + (table[k + 1] - table[k]) * frac;
}

void check_table(const std::vector<double> &table, const char *name, double start, double end) {
    if (table.size() < 2) {
        throw std::invalid_argument(std::string("schedule: ") + name + " table needs at least 2 points");
    }
    if (table.front() != start || table.back() != end) {
        throw std::invalid_argument(std::string("schedule: ") + name + " must run from " +
                                    std::to_string(static_cast<int>(start)) + " to " +
                                    std::to_string(static_cast<int>(end)));
    }
    for (std::size_t k = 1; k < table.size(); ++k) {
        if (!std::isfinite(table[k]) || (end > start ? table[k] < table[k - 1] : table[k] > table[k - 1])) {
            throw std::invalid_argument(std::string("schedule: ") + name + " is not monotone");
        }
    }
}

}  // namespace

double AnnealSchedule::lambda0(double t) const {
    return ramp(lambda0_table, t, t_final, false);
}

double AnnealSchedule::lambda1(double t) const {
    return ramp(lambda1_table, t, t_final, true);
}

void validate_schedule(const AnnealSchedule &schedule) {
    if (!std::isfinite(schedule.t_final) || schedule.t_final < 0.0) {
        throw std::invalid_argument("schedule: t_final must be finite and >= 0");
    }
    if (schedule.t_final > 0.0 && schedule.num_steps == 0) {
        throw std::invalid_argument("schedule: num_steps must be positive when t_final > 0");
    }
    if (!schedule.lambda0_table.empty() || !schedule.lambda1_table.empty()) {
        check_table(schedule.lambda0_table, "lambda0", 1.0, 0.0);
        check_table(schedule.lambda1_table, "lambda1", 0.0, 1.0);
    }
}

std::vector<double> ising_energies(const IsingProblem &problem) {
    validate_ising_problem(problem);
    const std::size_t dim = std::size_t{1} << problem.num_spins;
    std::vector<double> e(dim, 0.0);
    for (std::size_t x = 0; x < dim; ++x) {
        auto z = [x](std::size_t q) { return ((x >> q) & 1) ? -1.0 : 1.0; };
        double v = 0.0;
        for (std::size_t q = 0; q < problem.num_spins; ++q) {
            v += problem.h[q] * z(q);
        }
        for (const Coupling &c : problem.couplings) {
            v += c.value * z(c.i) * z(c.j);
        }
        e[x] = v;
    }
    return e;
}

namespace {

Matrix driver_hamiltonian(std::size_t n) {
    const auto dim = Eigen::Index{1} << n;
    Matrix h0 = Matrix::Zero(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        for (std::size_t q = 0; q < n; ++q) {
            h0(x ^ (Eigen::Index{1} << q), x) -= 1.0;
        }
    }
    return h0;
}

Matrix combine(const Matrix &h0, const std::vector<double> &diag, double l0, double l1) {
    Matrix h = l0 * h0;
    for (std::size_t x = 0; x < diag.size(); ++x) {
        h(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) += l1 * diag[x];
    }
    return h;
}

double energy(const Vector &psi, const Matrix &h) {
    return psi.dot(h * psi).real();
}

}  // namespace

Matrix build_annealing_hamiltonian(const IsingProblem &problem, double lambda0, double lambda1) {
    if (!std::isfinite(lambda0) || !std::isfinite(lambda1)) {
        throw std::invalid_argument("build_annealing_hamiltonian: non-finite schedule value");
    }
    return combine(driver_hamiltonian(problem.num_spins), ising_energies(problem), lambda0, lambda1);
}

AnnealResult anneal(const IsingProblem &problem, const AnnealSchedule &schedule) {
    validate_schedule(schedule);
    validate_ising_problem(problem);
    if (problem.num_spins > kMaxAnnealSpins) {
        throw std::invalid_argument("anneal: at most " + std::to_string(kMaxAnnealSpins) + " spins");
    }
    const Matrix h0 = driver_hamiltonian(problem.num_spins);
    const std::vector<double> diag = ising_energies(problem);
    auto hamiltonian = [&](double t) { return combine(h0, diag, schedule.lambda0(t), schedule.lambda1(t)); };

    Vector psi = plus_state(problem.num_spins).amplitudes();
    AnnealResult result{plus_state(problem.num_spins), {0.0}, {energy(psi, hamiltonian(0.0))}};
    if (schedule.t_final > 0.0) {
        const double dt = schedule.t_final / static_cast<double>(schedule.num_steps);
        for (std::size_t k = 0; k < schedule.num_steps; ++k) {
            // First-order product step at the left end of the interval.
            const double t_k = static_cast<double>(k) * dt;
            psi = hermitian_evolution(hamiltonian(t_k), dt) * psi;
            const double t_end = static_cast<double>(k + 1) * dt;
            result.times.push_back(t_end);
            result.energies.push_back(energy(psi, hamiltonian(t_end)));
        }
    }
    if (std::abs(psi.norm() - 1.0) > 1e-8) {
        throw std::runtime_error("anneal: norm drifted by " + std::to_string(std::abs(psi.norm() - 1.0)));
    }
    result.final_state = StateVector::normalized(psi);
    return result;
}

double anneal_success(const StateVector &final_state, const IsingProblem &problem) {
    const std::vector<double> e = ising_energies(problem);
    if (e.size() != final_state.dimension()) {
        throw std::invalid_argument("anneal_success: state and problem sizes differ");
    }
    const double lowest = *std::min_element(e.begin(), e.end());
    double p = 0.0;
    for (std::size_t x = 0; x < e.size(); ++x) {
        if (e[x] <= lowest + 1e-9) {
            p += final_state.probability(x);
        }
    }
    return p;
}

StateVector evolve_hamiltonian(const Matrix &hamiltonian, const StateVector &initial, double t) {
    if (static_cast<std::size_t>(hamiltonian.rows()) != initial.dimension() || !is_hermitian(hamiltonian)) {
        throw std::invalid_argument("evolve_hamiltonian: Hamiltonian must be Hermitian and match the state");
    }
    return StateVector::normalized(hermitian_evolution(hamiltonian, t) * initial.amplitudes());
}

}  // namespace aqm::apps
