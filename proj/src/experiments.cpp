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

#include "qwalk/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qwalk/transpile.hpp"

namespace qwalk {

namespace {

/// Runs body(t) for t in [0, count) on up to `threads` workers, interleaved.
void parallel_for(size_t count, size_t threads, const std::function<void(size_t)> &body) {
    threads = std::clamp<size_t>(threads, 1, std::max<size_t>(count, 1));
    if (threads == 1) {
        for (size_t t = 0; t < count; t++) {
            body(t);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    for (size_t w = 0; w < threads; w++) {
        workers.emplace_back([&, w] {
            try {
                for (size_t t = w; t < count; t += threads) {
                    body(t);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &worker : workers) {
        worker.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

struct MeanStd {
    double mean = 0;
    double std = 0;
};

MeanStd mean_std(std::span<const double> xs) {
    MeanStd out;
    if (xs.empty()) {
        return out;
    }
    for (double x : xs) {
        out.mean += x;
    }
    out.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0;
        for (double x : xs) {
            ss += (x - out.mean) * (x - out.mean);
        }
        out.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return out;
}

/// Applies one noisy pass of `step` to every state, sharing each CNOT draw
/// across the batch (i.e. the same noisy step operator acts on all inputs).
void apply_noisy_step(const Circuit &step, std::vector<StateVector> &states,
                      const NoiseConfig &cfg, Rng &rng, const NoisyCnotSample *fixed) {
    for (const auto &instr : step.instructions()) {
        if (instr.is_single_qubit()) {
            Matrix g = gate_matrix(instr.gate);
            for (auto &s : states) {
                apply_single_qubit(s.amps(), instr.target, g);
            }
            continue;
        }
        NoisyCnotSample drawn;
        if (!fixed) {
            drawn = sample_noisy_cnot(cfg, rng);
        }
        const Matrix &m = fixed ? fixed->matrix : drawn.matrix;
        for (auto &s : states) {
            apply_two_qubit(s.amps(), instr.controls[0].qubit, instr.target, m);
        }
    }
    for (auto &s : states) {
        s.normalize();
    }
}

std::string fmt10(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

}  // namespace

FidelityReport fidelity_avg(size_t num_qubits, size_t steps, const NoiseConfig &cfg,
                            size_t threads) {
    cfg.validate();
    WalkerSpec probe{num_qubits, 0, steps, 0};
    probe.validate();
    size_t positions = probe.num_positions();

    Circuit step = transpile_to_cnot(build_walker_step(num_qubits));
    Circuit circuit(num_qubits);
    for (size_t i = 0; i < steps; i++) {
        circuit.append(step);
    }

    std::vector<StateVector> ideal;
    for (size_t k = 0; k < positions; k++) {
        ideal.push_back(evolve_ideal({num_qubits, k, steps, 0}).state);
    }

    // fid[t * positions + k]
    std::vector<double> fid(cfg.trials * positions);
    parallel_for(cfg.trials, threads, [&](size_t t) {
        for (size_t k = 0; k < positions; k++) {
            Rng rng(derive_seed(cfg.seed, k, t));
            StateVector out = simulate_noisy(circuit, walker_basis_state(num_qubits, k, 0), cfg, rng);
            fid[t * positions + k] = overlap_squared(ideal[k], out);
        }
    });

    FidelityReport report;
    report.num_qubits = num_qubits;
    report.steps = steps;
    report.noise = cfg;
    report.per_input_fidelity.assign(positions, 0);
    std::vector<double> per_trial(cfg.trials, 0);
    for (size_t t = 0; t < cfg.trials; t++) {
        for (size_t k = 0; k < positions; k++) {
            double f = fid[t * positions + k];
            report.per_input_fidelity[k] += f / static_cast<double>(cfg.trials);
            per_trial[t] += f / static_cast<double>(positions);
        }
    }
    MeanStd ms = mean_std(per_trial);
    report.mean_fidelity = 0;
    for (double f : report.per_input_fidelity) {
        report.mean_fidelity += f;
    }
    report.mean_fidelity /= static_cast<double>(positions);
    report.std_error = ms.std / std::sqrt(static_cast<double>(cfg.trials));
    return report;
}

double success_prob_estimate(size_t cnot_count, double per_cnot_error) {
    if (!(per_cnot_error >= 0 && per_cnot_error < 1)) {
        throw std::invalid_argument("per-CNOT error must lie in [0, 1)");
    }
    return std::pow(1 - per_cnot_error, static_cast<double>(cnot_count));
}

GateCounts walker_cnot_count(size_t num_qubits) {
    return count_gates(transpile_to_cnot(build_walker_step(num_qubits)));
}

std::vector<SweepRow> sweep_fidelity(const SweepConfig &cfg) {
    if (cfg.eps_grid.empty()) {
        throw std::invalid_argument("sweep: eps grid is empty");
    }
    if (cfg.min_steps < 1 || cfg.min_steps > cfg.max_steps) {
        throw std::invalid_argument("sweep: need 1 <= min_steps <= max_steps");
    }
    WalkerSpec probe{cfg.num_qubits, 0, 0, 0};
    probe.validate();
    size_t positions = probe.num_positions();

    std::vector<double> grid = cfg.eps_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    for (double eps : grid) {
        NoiseConfig point = cfg.base;
        point.eps_scale = eps;
        point.eps_low = std::min(cfg.base.eps_low, eps);
        point.validate();
    }

    Circuit step = transpile_to_cnot(build_walker_step(cfg.num_qubits));
    Matrix u = ideal_step_unitary(cfg.num_qubits);

    // ideal[m][k] for m = 0..max_steps
    std::vector<std::vector<StateVector>> ideal(cfg.max_steps + 1);
    for (size_t k = 0; k < positions; k++) {
        ideal[0].push_back(walker_basis_state(cfg.num_qubits, k, 0));
    }
    for (size_t m = 1; m <= cfg.max_steps; m++) {
        for (size_t k = 0; k < positions; k++) {
            ideal[m].push_back(mat_apply(u, ideal[m - 1][k]));
        }
    }

    size_t num_steps = cfg.max_steps - cfg.min_steps + 1;
    size_t trials = cfg.base.trials;
    std::vector<SweepRow> rows;
    for (double eps : grid) {
        NoiseConfig point = cfg.base;
        point.eps_scale = eps;
        point.eps_low = std::min(cfg.base.eps_low, eps);

        // trial_fid[t * num_steps + (m - min_steps)]
        std::vector<double> trial_fid(trials * num_steps);
        uint64_t point_key = std::bit_cast<uint64_t>(eps);
        parallel_for(trials, cfg.threads, [&](size_t t) {
            Rng rng(derive_seed(point.seed, point_key, t));
            std::optional<NoisyCnotSample> fixed;
            if (point.sampling == Sampling::FixedPerTrial) {
                fixed = sample_noisy_cnot(point, rng);
            }
            std::vector<StateVector> states = ideal[0];
            for (size_t m = 1; m <= cfg.max_steps; m++) {
                apply_noisy_step(step, states, point, rng, fixed ? &*fixed : nullptr);
                if (m < cfg.min_steps) {
                    continue;
                }
                double total = 0;
                for (size_t k = 0; k < positions; k++) {
                    total += overlap_squared(ideal[m][k], states[k]);
                }
                trial_fid[t * num_steps + (m - cfg.min_steps)] = total / static_cast<double>(positions);
            }
        });

        for (size_t s = 0; s < num_steps; s++) {
            std::vector<double> column(trials);
            for (size_t t = 0; t < trials; t++) {
                column[t] = trial_fid[t * num_steps + s];
            }
            MeanStd ms = mean_std(column);
            rows.push_back({eps, cfg.min_steps + s, trials, ms.mean, ms.std});
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow> &rows) {
    std::ostringstream out;
    out << "eps_scale,steps,trials,mean_fidelity,std_fidelity\n";
    for (const auto &r : rows) {
        out << fmt10(r.eps_scale) << "," << r.steps << "," << r.trials << ","
            << fmt10(r.mean_fidelity) << "," << fmt10(r.std_fidelity) << "\n";
    }
    return out.str();
}

std::string fidelity_report_json(const FidelityReport &report) {
    nlohmann::json j;
    j["num_qubits"] = report.num_qubits;
    j["steps"] = report.steps;
    j["noise"] = {
        {"eps_scale", report.noise.eps_scale},
        {"eps_low", report.noise.eps_low},
        {"seed", report.noise.seed},
        {"trials", report.noise.trials},
        {"sampling", sampling_name(report.noise.sampling)},
    };
    j["per_input_fidelity"] = report.per_input_fidelity;
    j["mean_fidelity"] = report.mean_fidelity;
    j["std_error"] = report.std_error;
    return j.dump(2) + "\n";
}

std::vector<double> eps_range(double lo, double hi, size_t n) {
    if (n == 0 || !(lo >= 0) || !(hi >= lo)) {
        throw std::invalid_argument("eps range needs 0 <= lo <= hi and at least one point");
    }
    if (n == 1) {
        return {lo};
    }
    std::vector<double> out(n);
    for (size_t i = 0; i < n; i++) {
        double f = static_cast<double>(i) / static_cast<double>(n - 1);
        out[i] = lo > 0 ? lo * std::pow(hi / lo, f) : lo + (hi - lo) * f;
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

}  // namespace qwalk
