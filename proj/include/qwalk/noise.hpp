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

#ifndef QWALK_NOISE_HPP
#define QWALK_NOISE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>

#include "qwalk/circuit.hpp"

namespace qwalk {

enum class Sampling {
    FreshPerGate,   // new error amplitudes for every CNOT
    FixedPerTrial,  // one draw shared by every CNOT of a trial
};

std::optional<Sampling> sampling_from_name(std::string_view name);
std::string_view sampling_name(Sampling s);

struct NoiseConfig {
    double eps_scale = 0;  // upper bound of the error amplitude range
    double eps_low = 0;
    uint64_t seed = 0;
    size_t trials = 200;
    Sampling sampling = Sampling::FreshPerGate;

    /// Throws std::invalid_argument unless 0 <= eps_low <= eps_scale <= 1 and trials >= 1.
    void validate() const;
};

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng &rng);

/// Independent stream seed for (seed, a, b); used to key trials and grid points.
uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b = 0);

/// One draw of the probabilistic CNOT. Columns index the input basis state
/// |control target>; each column holds one beta (the intended output) and three
/// error amplitudes:
///
///   [ b1  e4  e7  e10 ]
///   [ e1  b2  e8  e11 ]
///   [ e2  e5  e9  b4  ]
///   [ e3  e6  b3  e12 ]
///
/// Every beta is chosen so its column has unit norm.
struct NoisyCnotSample {
    std::array<double, 4> beta{};
    std::array<double, 12> eps{};
    Matrix matrix;
};

/// Assembles the sample for explicit error amplitudes (eps[0] is e1).
NoisyCnotSample make_noisy_cnot(const std::array<double, 12> &eps);

/// Draws twelve error amplitudes uniformly from [eps_low, eps_scale].
NoisyCnotSample sample_noisy_cnot(const NoiseConfig &cfg, Rng &rng);

/// Applies a 4x4 operator to qubits (high, low); local index = 2*bit(high) + bit(low).
void apply_two_qubit(std::span<Complex> amps, size_t high, size_t low, const Matrix &m);

/// One noisy trial: single-qubit gates are ideal, every CNOT is replaced by a
/// NoisyCnotSample. The returned state is renormalized.
StateVector simulate_noisy(const Circuit &c, const StateVector &input, const NoiseConfig &cfg,
                           Rng &rng);

}  // namespace qwalk

#endif
