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


#ifndef AQM_APPLICATIONS_WALK_H
#define AQM_APPLICATIONS_WALK_H

#include <cstddef>
#include <vector>

#include "aqm/core/state.h"
#include "aqm/core/unitary.h"

namespace aqm::apps {

enum class WalkMode {
    quantum,
    /// The coin is measured after every toss: a Markov chain with
    /// transition probabilities |U_ab|^2.
    classical,
};

/// Coined walk on positions -W..W. One step applies the coin, then moves
/// coin |0> one site left and coin |1> one site right.
struct WalkSpec {
    std::size_t num_steps = 0;
    std::size_t line_half_width = 0;
    UnitaryMatrix coin = UnitaryMatrix::identity(1);
    StateVector initial_coin = basis_state(1, 0);
    long initial_position = 0;
    WalkMode mode = WalkMode::quantum;
};

WalkSpec hadamard_walk(std::size_t num_steps, std::size_t half_width);

struct WalkResult {
    long half_width;
    /// distributions[t][x + W] = P(position x after t steps), t = 0..num_steps.
    std::vector<std::vector<double>> distributions;

    double probability(std::size_t step, long position) const;
    /// Mean squared displacement from `origin` after `step` steps.
    double mean_squared_displacement(std::size_t step, long origin) const;
};

/// Throws std::invalid_argument when the walker could leave the line.
WalkResult walk_run(const WalkSpec &spec);

/// Least-squares slope of log MSD against log t over integer t in
/// [t_min, t_max], with the MSD taken about the initial position.
double walk_variance_exponent(const WalkSpec &spec, std::size_t t_min, std::size_t t_max);

}  // namespace aqm::apps

#endif
