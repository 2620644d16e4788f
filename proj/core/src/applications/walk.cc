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

#include "aqm/applications/walk.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "aqm/core/gates.h"

namespace aqm::apps {

WalkSpec hadamard_walk(std::size_t num_steps, std::size_t half_width) {
    WalkSpec spec;
    spec.num_steps = num_steps;
    spec.line_half_width = half_width;
    spec.coin = UnitaryMatrix(gate_matrix(GateKind::H));
    return spec;
}

double WalkResult::probability(std::size_t step, long position) const {
    if (position < -half_width || position > half_width) {
        return 0.0;
    }
    return distributions.at(step)[static_cast<std::size_t>(position + half_width)];
}

double WalkResult::mean_squared_displacement(std::size_t step, long origin) const {
    const auto &dist = distributions.at(step);
    double msd = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const double dx = static_cast<double>(static_cast<long>(i) - half_width - origin);
        msd += dist[i] * dx * dx;
    }
    return msd;
}

namespace {

void check_spec(const WalkSpec &spec) {
    const auto w = static_cast<long>(spec.line_half_width);
    if (spec.coin.num_qubits() != 1 || spec.initial_coin.num_qubits() != 1) {
        throw std::invalid_argument("walk: coin must be a single qubit");
    }
    if (spec.initial_position < -w || spec.initial_position > w) {
        throw std::invalid_argument("walk: initial position outside the line");
    }
    if (std::labs(spec.initial_position) + static_cast<long>(spec.num_steps) > w) {
        throw std::invalid_argument("walk: " + std::to_string(spec.num_steps) + " steps from position " +
                                    std::to_string(spec.initial_position) + " can leave the line -" +
                                    std::to_string(w) + ".." + std::to_string(w));
    }
}

WalkResult run_quantum(const WalkSpec &spec) {
    const auto w = static_cast<long>(spec.line_half_width);
    const auto sites = static_cast<std::size_t>(2 * w + 1);
    // amp[2 * site + coin]
    std::vector<Complex> amp(2 * sites, Complex{0.0, 0.0});
    const auto start = static_cast<std::size_t>(spec.initial_position + w);
    amp[2 * start] = spec.initial_coin.amplitude(0);
    amp[2 * start + 1] = spec.initial_coin.amplitude(1);
    const Matrix &u = spec.coin.matrix();

    WalkResult result{w, {}};
    auto record = [&] {
        std::vector<double> dist(sites);
        for (std::size_t x = 0; x < sites; ++x) {
            dist[x] = std::norm(amp[2 * x]) + std::norm(amp[2 * x + 1]);
        }
        result.distributions.push_back(std::move(dist));
    };
    record();
    std::vector<Complex> next(amp.size());
    for (std::size_t t = 0; t < spec.num_steps; ++t) {
        std::fill(next.begin(), next.end(), Complex{0.0, 0.0});
        for (std::size_t x = 0; x < sites; ++x) {
            const Complex c0 = u(0, 0) * amp[2 * x] + u(0, 1) * amp[2 * x + 1];
            const Complex c1 = u(1, 0) * amp[2 * x] + u(1, 1) * amp[2 * x + 1];
            if (c0 != Complex{0.0, 0.0}) {
                next[2 * (x - 1)] += c0;
            }
            if (c1 != Complex{0.0, 0.0}) {
                next[2 * (x + 1) + 1] += c1;
            }
        }
        amp.swap(next);
        record();
    }
    return result;
}

WalkResult run_classical(const WalkSpec &spec) {
    const auto w = static_cast<long>(spec.line_half_width);
    const auto sites = static_cast<std::size_t>(2 * w + 1);
    // prob[2 * site + coin]
    std::vector<double> prob(2 * sites, 0.0);
    const auto start = static_cast<std::size_t>(spec.initial_position + w);
    prob[2 * start] = spec.initial_coin.probability(0);
    prob[2 * start + 1] = spec.initial_coin.probability(1);
    const Matrix &u = spec.coin.matrix();
    const double t00 = std::norm(u(0, 0)), t01 = std::norm(u(0, 1));
    const double t10 = std::norm(u(1, 0)), t11 = std::norm(u(1, 1));

    WalkResult result{w, {}};
    auto record = [&] {
        std::vector<double> dist(sites);
        for (std::size_t x = 0; x < sites; ++x) {
            dist[x] = prob[2 * x] + prob[2 * x + 1];
        }
        result.distributions.push_back(std::move(dist));
    };
    record();
    std::vector<double> next(prob.size());
    for (std::size_t t = 0; t < spec.num_steps; ++t) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t x = 0; x < sites; ++x) {
            const double p0 = t00 * prob[2 * x] + t01 * prob[2 * x + 1];
            const double p1 = t10 * prob[2 * x] + t11 * prob[2 * x + 1];
            if (p0 != 0.0) {
                next[2 * (x - 1)] += p0;
            }
            if (p1 != 0.0) {
                next[2 * (x + 1) + 1] += p1;
            }
        }
        prob.swap(next);
        record();
    }
    return result;
}

}  // namespace

WalkResult walk_run(const WalkSpec &spec) {
    check_spec(spec);
    return spec.mode == WalkMode::quantum ? run_quantum(spec) : run_classical(spec);
}

double walk_variance_exponent(const WalkSpec &spec, std::size_t t_min, std::size_t t_max) {
    if (t_min < 1) {
        throw std::invalid_argument("walk_variance_exponent: t_min must be >= 1");
    }
    if (t_max < t_min || t_max - t_min + 1 < 3) {
        throw std::invalid_argument("walk_variance_exponent: need at least 3 points for the fit");
    }
    WalkSpec run = spec;
    run.num_steps = t_max;
    const WalkResult result = walk_run(run);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double n = 0;
    for (std::size_t t = t_min; t <= t_max; ++t) {
        const double msd = result.mean_squared_displacement(t, spec.initial_position);
        if (!(msd > 0.0)) {
            throw std::invalid_argument("walk_variance_exponent: zero spread at t = " + std::to_string(t));
        }
        const double x = std::log(static_cast<double>(t));
        const double y = std::log(msd);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        n += 1;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace aqm::apps
