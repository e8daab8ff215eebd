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

#include "qwalk/noise.hpp"

#include <cmath>

namespace qwalk {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Row of the beta entry for each input column, and the rows/eps indices of its errors.
struct ColumnLayout {
    size_t beta_row;
    std::array<size_t, 3> eps_rows;
    std::array<size_t, 3> eps_index;  // 0-based: e1 -> 0
};

constexpr std::array<ColumnLayout, 4> kColumns{{
    {0, {1, 2, 3}, {0, 1, 2}},
    {1, {0, 2, 3}, {3, 4, 5}},
    {3, {0, 1, 2}, {6, 7, 8}},
    {2, {0, 1, 3}, {9, 10, 11}},
}};

}  // namespace

std::optional<Sampling> sampling_from_name(std::string_view name) {
    if (name == "fresh") {
        return Sampling::FreshPerGate;
    }
    if (name == "fixed") {
        return Sampling::FixedPerTrial;
    }
    return std::nullopt;
}

std::string_view sampling_name(Sampling s) {
    return s == Sampling::FreshPerGate ? "fresh" : "fixed";
}

void NoiseConfig::validate() const {
    if (!(eps_low >= 0 && eps_low <= eps_scale && eps_scale <= 1)) {
        throw std::invalid_argument("noise config requires 0 <= eps_low <= eps_scale <= 1");
    }
    if (trials == 0) {
        throw std::invalid_argument("noise config requires trials >= 1");
    }
}

double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b) {
    return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

NoisyCnotSample make_noisy_cnot(const std::array<double, 12> &eps) {
    NoisyCnotSample s;
    s.eps = eps;
    s.matrix = Matrix(4);
    for (size_t col = 0; col < 4; col++) {
        const auto &layout = kColumns[col];
        double leak = 0;
        for (size_t j = 0; j < 3; j++) {
            double e = eps[layout.eps_index[j]];
            if (!(e >= 0) || !std::isfinite(e)) {
                throw std::invalid_argument("error amplitudes must be finite and non-negative");
            }
            leak += e * e;
            s.matrix(layout.eps_rows[j], col) = e;
        }
        if (leak >= 1) {
            throw std::invalid_argument("error amplitudes leave no room for beta in column " +
                                        std::to_string(col + 1));
        }
        // beta1..beta4 belong to columns 0, 1, 2, 3 in that order.
        s.beta[col] = std::sqrt(1 - leak);
        s.matrix(layout.beta_row, col) = s.beta[col];
    }
    return s;
}

NoisyCnotSample sample_noisy_cnot(const NoiseConfig &cfg, Rng &rng) {
    cfg.validate();
    std::array<double, 12> eps{};
    double span = cfg.eps_scale - cfg.eps_low;
    for (auto &e : eps) {
        e = cfg.eps_low + span * uniform01(rng);
    }
    return make_noisy_cnot(eps);
}

void apply_two_qubit(std::span<Complex> amps, size_t high, size_t low, const Matrix &m) {
    if (m.dim() != 4 || high == low) {
        throw std::invalid_argument("apply_two_qubit: need a 4x4 matrix on distinct qubits");
    }
    size_t hb = size_t{1} << high;
    size_t lb = size_t{1} << low;
    for (size_t i = 0; i < amps.size(); i++) {
        if (i & (hb | lb)) {
            continue;
        }
        const std::array<size_t, 4> idx{i, i | lb, i | hb, i | hb | lb};
        std::array<Complex, 4> in{amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
        for (size_t r = 0; r < 4; r++) {
            Complex acc{};
            for (size_t c = 0; c < 4; c++) {
                acc += m(r, c) * in[c];
            }
            amps[idx[r]] = acc;
        }
    }
}

StateVector simulate_noisy(const Circuit &c, const StateVector &input, const NoiseConfig &cfg,
                           Rng &rng) {
    cfg.validate();
    if (input.num_qubits() != c.width()) {
        throw std::invalid_argument("simulate_noisy: state width does not match circuit");
    }
    for (const auto &instr : c.instructions()) {
        if (!instr.is_single_qubit() && !instr.is_cnot()) {
            throw std::invalid_argument(
                "simulate_noisy: circuit must be in the CNOT + single-qubit basis; transpile first");
        }
    }
    std::optional<NoisyCnotSample> fixed;
    if (cfg.sampling == Sampling::FixedPerTrial) {
        fixed = sample_noisy_cnot(cfg, rng);
    }
    StateVector state = input;
    for (const auto &instr : c.instructions()) {
        if (instr.is_single_qubit()) {
            apply_instruction(state, instr);
            continue;
        }
        const Matrix &m = fixed ? fixed->matrix : sample_noisy_cnot(cfg, rng).matrix;
        apply_two_qubit(state.amps(), instr.controls[0].qubit, instr.target, m);
    }
    // The sampled operators are linear, so one renormalization at the end equals
    // renormalizing after every gate.
    state.normalize();
    return state;
}

}  // namespace qwalk
