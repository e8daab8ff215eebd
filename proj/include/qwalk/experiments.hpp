// Copyright 2026 The qwalk Authors
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

#ifndef QWALK_EXPERIMENTS_HPP
#define QWALK_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "qwalk/noise.hpp"
#include "qwalk/walker.hpp"

namespace qwalk {

/// Averaged fidelity of the noisy walker against the ideal one, all start
/// positions, coin |0>. `per_input_fidelity[k]` is the trial mean for start k.
struct FidelityReport {
    size_t num_qubits = 0;
    size_t steps = 0;
    NoiseConfig noise;
    std::vector<double> per_input_fidelity;
    double mean_fidelity = 0;
    /// Standard error of the mean over trials (each trial covers every start).
    double std_error = 0;
};

/// Monte-Carlo fidelity: every trial runs the transpiled m-step circuit under
/// `simulate_noisy` once per start position. Trials are split over `threads`
/// workers; results do not depend on the thread count.
FidelityReport fidelity_avg(size_t num_qubits, size_t steps, const NoiseConfig &cfg,
                            size_t threads = 1);

/// (1 - per_cnot_error)^cnot_count
double success_prob_estimate(size_t cnot_count, double per_cnot_error);

/// Gate tally of the transpiled single-step walker.
GateCounts walker_cnot_count(size_t num_qubits);

struct SweepRow {
    double eps_scale = 0;
    size_t steps = 0;
    size_t trials = 0;
    double mean_fidelity = 0;
    double std_fidelity = 0;
};

struct SweepConfig {
    size_t num_qubits = 4;
    std::vector<double> eps_grid;
    size_t min_steps = 1;
    size_t max_steps = 50;
    /// eps_scale is taken from the grid; eps_low, seed, trials and sampling from here.
    NoiseConfig base;
    size_t threads = 1;
};

/// Fidelity over an (eps, m) grid. Each trial evolves all start positions
/// through `max_steps` freshly-noised copies of the transpiled step, sharing
/// one noise draw per step across the start positions, and records the
/// fidelity after every step. Rows come back sorted by (eps_scale, steps).
std::vector<SweepRow> sweep_fidelity(const SweepConfig &cfg);

/// CSV with header `eps_scale,steps,trials,mean_fidelity,std_fidelity`.
std::string sweep_csv(const std::vector<SweepRow> &rows);

std::string fidelity_report_json(const FidelityReport &report);

/// `n` values from lo to hi inclusive, log-spaced when lo > 0, linear otherwise.
std::vector<double> eps_range(double lo, double hi, size_t n);

}  // namespace qwalk

#endif
