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


#ifndef AQM_APPLICATIONS_ANNEALING_H
#define AQM_APPLICATIONS_ANNEALING_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "aqm/core/linalg.h"
#include "aqm/core/state.h"

namespace aqm::apps {

struct Coupling {
    std::size_t i;
    std::size_t j;
    double value;

    bool operator==(const Coupling &) const = default;
};

/// H1 = sum_i h_i Z_i + sum_(ij) J_ij Z_i Z_j, with Z|0> = +|0>.
struct IsingProblem {
    std::size_t num_spins = 0;
    std::vector<double> h;
    std::vector<Coupling> couplings;

    bool operator==(const IsingProblem &) const = default;
};

/// Throws std::invalid_argument on mismatched sizes, bad indices or
/// non-finite coefficients.
void validate_ising_problem(const IsingProblem &problem);

/// {"n": int, "h": [num], "J": [[i, j, num], ...]}
IsingProblem parse_ising_problem(std::string_view json_text);
std::string format_ising_problem(const IsingProblem &problem);

/// lambda0(t) and lambda1(t) over [0, t_final].
///
/// With empty tables both ramps are linear. Otherwise each table samples its
/// ramp at equally spaced points from t = 0 to t = t_final and is linearly
/// interpolated; lambda0 must run 1 -> 0 and lambda1 0 -> 1, monotonically.
struct AnnealSchedule {
    double t_final = 0.0;
    std::size_t num_steps = 0;
    std::vector<double> lambda0_table;
    std::vector<double> lambda1_table;

    double lambda0(double t) const;
    double lambda1(double t) const;
};

void validate_schedule(const AnnealSchedule &schedule);

/// Diagonal of H1 in the computational basis.
std::vector<double> ising_energies(const IsingProblem &problem);

/// lambda0 * H0 + lambda1 * H1 with H0 = -sum_i X_i.
Matrix build_annealing_hamiltonian(const IsingProblem &problem, double lambda0, double lambda1);

struct AnnealResult {
    StateVector final_state;
    /// Times at which energies were sampled: 0 and the end of every step.
    std::vector<double> times;
    /// <H(t)> at each entry of `times`.
    std::vector<double> energies;
};

inline constexpr std::size_t kMaxAnnealSpins = 12;

/// Starts in |+>^n and applies exp(-i H(t_k) dt) per step, with H evaluated
/// at the left end of each step, t_k = k dt.
AnnealResult anneal(const IsingProblem &problem, const AnnealSchedule &schedule);

/// Probability mass on the computational basis states minimising H1.
double anneal_success(const StateVector &final_state, const IsingProblem &problem);

/// exp(-i H t) |psi> for a fixed Hermitian H (analogue simulation).
StateVector evolve_hamiltonian(const Matrix &hamiltonian, const StateVector &initial, double t);

}  // namespace aqm::apps

#endif
