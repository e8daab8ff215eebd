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

#include <gtest/gtest.h>

#include "qwalk/transpile.hpp"
#include "qwalk/walker.hpp"

using namespace qwalk;

namespace {

NoiseConfig config(double eps_scale, uint64_t seed = 42) {
    NoiseConfig cfg;
    cfg.eps_scale = eps_scale;
    cfg.seed = seed;
    return cfg;
}

void expect_unit_columns(const Matrix &m, double tol) {
    for (size_t c = 0; c < m.dim(); c++) {
        double norm = 0;
        for (size_t r = 0; r < m.dim(); r++) {
            norm += std::norm(m(r, c));
        }
        EXPECT_NEAR(std::sqrt(norm), 1, tol) << "column " << c;
    }
}

}  // namespace

TEST(noise, config_validation) {
    EXPECT_NO_THROW(config(0.01).validate());
    NoiseConfig bad = config(0.01);
    bad.eps_low = 0.02;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = config(1.5);
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = config(0.01);
    bad.trials = 0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(noise, noiseless_sample_is_cnot) {
    Rng rng(1);
    NoisyCnotSample s = sample_noisy_cnot(config(0), rng);
    Matrix cnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    EXPECT_EQ(s.matrix, cnot);
    for (double b : s.beta) {
        EXPECT_EQ(b, 1.0);
    }
}

TEST(noise, entry_placement) {
    std::array<double, 12> eps{};
    for (size_t i = 0; i < 12; i++) {
        eps[i] = 0.01 * static_cast<double>(i + 1);
    }
    NoisyCnotSample s = make_noisy_cnot(eps);
    const Matrix &m = s.matrix;
    auto e = [&](size_t j) { return Complex(eps[j - 1]); };
    auto b = [&](size_t j) { return Complex(s.beta[j - 1]); };
    Matrix expect{
        {b(1), e(4), e(7), e(10)},
        {e(1), b(2), e(8), e(11)},
        {e(2), e(5), e(9), b(4)},
        {e(3), e(6), b(3), e(12)},
    };
    EXPECT_EQ(m, expect);
    EXPECT_NEAR(s.beta[0], std::sqrt(1 - (0.01 * 0.01 + 0.02 * 0.02 + 0.03 * 0.03)), 1e-15);
    EXPECT_NEAR(s.beta[3], std::sqrt(1 - (0.1 * 0.1 + 0.11 * 0.11 + 0.12 * 0.12)), 1e-15);
}

TEST(noise, column_norms) {
    Rng rng(9);
    for (double scale : {1e-5, 1e-3, 1e-2, 0.1, 0.5}) {
        for (int i = 0; i < 50; i++) {
            NoisyCnotSample s = sample_noisy_cnot(config(scale), rng);
            expect_unit_columns(s.matrix, 1e-12);
            for (double eps : s.eps) {
                EXPECT_GE(eps, 0);
                EXPECT_LE(eps, scale);
            }
            for (double beta : s.beta) {
                EXPECT_GT(beta, 0);
                EXPECT_LE(beta, 1);
            }
        }
    }
}

TEST(noise, eps_range_respected) {
    NoiseConfig cfg = config(2e-2);
    cfg.eps_low = 1e-2;
    Rng rng(3);
    for (int i = 0; i < 100; i++) {
        for (double e : sample_noisy_cnot(cfg, rng).eps) {
            EXPECT_GE(e, 1e-2);
            EXPECT_LE(e, 2e-2);
        }
    }
}

TEST(noise, large_leak_rejected) {
    std::array<double, 12> eps{};
    eps[0] = eps[1] = eps[2] = 0.6;
    EXPECT_THROW(make_noisy_cnot(eps), std::invalid_argument);
    eps.fill(0);
    eps[5] = -0.1;
    EXPECT_THROW(make_noisy_cnot(eps), std::invalid_argument);
}

TEST(noise, seeded_sample_is_deterministic) {
    Rng a(42), b(42);
    EXPECT_EQ(sample_noisy_cnot(config(1e-2), a).matrix, sample_noisy_cnot(config(1e-2), b).matrix);
}

TEST(noise, derive_seed_separates_streams) {
    EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
    EXPECT_NE(derive_seed(1, 2, 3), derive_seed(1, 3, 2));
    EXPECT_NE(derive_seed(1, 2, 3), derive_seed(2, 2, 3));
}

TEST(noise, uniform01_range) {
    Rng rng(0);
    for (int i = 0; i < 1000; i++) {
        double u = uniform01(rng);
        EXPECT_GE(u, 0);
        EXPECT_LT(u, 1);
    }
}

TEST(noise, single_cnot_on_10_picks_column) {
    // Register |q1 q0> = |10>: control q1 set, target q0 clear; local index 2.
    Circuit c(2, {Instruction::cnot(1, 0)});
    Rng rng(5), replay(5);
    NoiseConfig cfg = config(0.05);
    StateVector out = simulate_noisy(c, StateVector::from_bits("10"), cfg, rng);
    Matrix m = sample_noisy_cnot(cfg, replay).matrix;
    double norm = 0;
    for (size_t r = 0; r < 4; r++) {
        norm += std::norm(m(r, 2));
    }
    for (size_t r = 0; r < 4; r++) {
        EXPECT_NEAR(std::abs(out[r] - m(r, 2) / std::sqrt(norm)), 0, 1e-15) << r;
    }
}

TEST(noise, local_index_follows_control_and_target) {
    // Control on the low qubit: |q1 q0> = |01> has control set, so it maps through column 2.
    Circuit c(2, {Instruction::cnot(0, 1)});
    Rng rng(5), replay(5);
    NoiseConfig cfg = config(0.05);
    StateVector out = simulate_noisy(c, StateVector::from_bits("01"), cfg, rng);
    Matrix m = sample_noisy_cnot(cfg, replay).matrix;
    // Local |control target> index k sits at register index (target << 1 | control).
    for (size_t k = 0; k < 4; k++) {
        size_t control = k >> 1, target = k & 1;
        EXPECT_NEAR(std::abs(out[(target << 1) | control] - m(k, 2)), 0, 1e-15) << k;
    }
}

TEST(noise, noiseless_matches_ideal_bitwise) {
    Circuit step = transpile_to_cnot(build_walker_step(4));
    for (size_t k = 0; k < 8; k++) {
        StateVector in = walker_basis_state(4, k, 0);
        Rng rng(k);
        StateVector noisy = simulate_noisy(step, in, config(0), rng);
        StateVector ideal = simulate(step, in);
        ideal.normalize();
        EXPECT_EQ(noisy, ideal) << k;
    }
}

TEST(noise, fixed_per_trial_reuses_one_sample) {
    Circuit c = parse_qwc("qubits 2\ncnot 1 0\ncnot 1 0");
    NoiseConfig cfg = config(0.05);
    cfg.sampling = Sampling::FixedPerTrial;
    Rng rng(8), replay(8);
    StateVector out = simulate_noisy(c, StateVector::from_bits("10"), cfg, rng);
    Matrix m = sample_noisy_cnot(cfg, replay).matrix;
    StateVector expect(2);
    expect = StateVector::from_bits("10");
    apply_two_qubit(expect.amps(), 1, 0, m);
    apply_two_qubit(expect.amps(), 1, 0, m);
    expect.normalize();
    EXPECT_LE(max_abs_diff(out, expect), 1e-15);
}

TEST(noise, rejects_untranspiled_circuit) {
    Circuit c = parse_qwc("qubits 3\nmcx 0:+ 1:+ 2");
    Rng rng(0);
    EXPECT_THROW(simulate_noisy(c, StateVector(3), config(0.01), rng), std::invalid_argument);
    Circuit neg = parse_qwc("qubits 2\nmcx 0:- 1");
    EXPECT_THROW(simulate_noisy(neg, StateVector(2), config(0.01), rng), std::invalid_argument);
}

TEST(noise, output_is_normalized_and_lossy) {
    Circuit step = transpile_to_cnot(build_walker_step(4));
    Rng rng(21);
    StateVector in = walker_basis_state(4, 0, 0);
    StateVector out = simulate_noisy(step, in, config(1e-2), rng);
    EXPECT_NEAR(out.norm_squared(), 1, 1e-12);
    EXPECT_LT(overlap_squared(out, simulate(step, in)), 1.0);
}

TEST(noise, sampling_names) {
    EXPECT_EQ(sampling_from_name("fresh"), Sampling::FreshPerGate);
    EXPECT_EQ(sampling_from_name("fixed"), Sampling::FixedPerTrial);
    EXPECT_FALSE(sampling_from_name("other").has_value());
    EXPECT_EQ(sampling_name(Sampling::FixedPerTrial), "fixed");
}
