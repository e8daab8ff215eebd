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

#include "qwalk/walker.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qwalk/transpile.hpp"

using namespace qwalk;
using qwalk::testing::kInvSqrt2;
using qwalk::testing::sparse_state;
using qwalk::testing::walker_index;

namespace {

size_t after(const Circuit &c, size_t position, unsigned coin) {
    StateVector out = simulate(c, walker_basis_state(c.width(), position, coin));
    for (size_t i = 0; i < out.size(); i++) {
        if (std::norm(out[i]) > 0.5) {
            return i;
        }
    }
    return SIZE_MAX;
}

/// One ideal step written out by hand: H on the coin, then shift by -1 on coin 0 and +1 on coin 1.
StateVector hand_step(size_t num_qubits, const StateVector &in) {
    size_t positions = size_t{1} << (num_qubits - 1);
    std::vector<Complex> out(in.size());
    for (size_t p = 0; p < positions; p++) {
        Complex a0 = in[walker_index(p, 0)], a1 = in[walker_index(p, 1)];
        Complex c0 = (a0 + a1) * kInvSqrt2, c1 = (a0 - a1) * kInvSqrt2;
        out[walker_index((p + positions - 1) % positions, 0)] += c0;
        out[walker_index((p + 1) % positions, 1)] += c1;
    }
    return StateVector(num_qubits, out);
}

}  // namespace

TEST(walker, spec_validation) {
    EXPECT_THROW((WalkerSpec{1, 0, 0, 0}.validate()), std::invalid_argument);
    EXPECT_THROW((WalkerSpec{4, 8, 0, 0}.validate()), std::invalid_argument);
    EXPECT_THROW((WalkerSpec{4, 0, 0, 2}.validate()), std::invalid_argument);
    EXPECT_NO_THROW((WalkerSpec{4, 7, 3, 1}.validate()));
    EXPECT_THROW(build_increment(1), std::invalid_argument);
}

TEST(walker, increment_examples) {
    Circuit inc = build_increment(4);
    EXPECT_EQ(after(inc, 0, 1), walker_index(1, 1));
    EXPECT_EQ(after(inc, 7, 1), walker_index(0, 1));
    for (size_t p = 0; p < 8; p++) {
        EXPECT_EQ(after(inc, p, 0), walker_index(p, 0));
    }
}

TEST(walker, decrement_examples) {
    Circuit dec = build_decrement(4);
    EXPECT_EQ(after(dec, 0, 0), walker_index(7, 0));
    EXPECT_EQ(after(dec, 1, 0), walker_index(0, 0));
    for (size_t p = 0; p < 8; p++) {
        EXPECT_EQ(after(dec, p, 1), walker_index(p, 1));
    }
}

TEST(walker, shift_permutations_all_widths) {
    for (size_t n = 2; n <= 6; n++) {
        size_t positions = size_t{1} << (n - 1);
        Circuit inc = build_increment(n), dec = build_decrement(n);
        for (size_t p = 0; p < positions; p++) {
            EXPECT_EQ(after(inc, p, 1), walker_index((p + 1) % positions, 1));
            EXPECT_EQ(after(dec, p, 0), walker_index((p + positions - 1) % positions, 0));
        }
    }
}

TEST(walker, cascade_shape) {
    Circuit inc = build_increment(4);
    ASSERT_EQ(inc.size(), 3u);
    EXPECT_EQ(inc.instructions()[0].controls.size(), 3u);
    EXPECT_EQ(inc.instructions()[1].controls.size(), 2u);
    EXPECT_EQ(inc.instructions()[2], Instruction::cnot(0, 1));
    Circuit dec = build_decrement(4);
    for (const auto &instr : dec.instructions()) {
        for (const auto &c : instr.controls) {
            EXPECT_EQ(c.polarity, Polarity::Negative);
        }
    }
}

TEST(walker, one_step_from_origin) {
    StateVector out = simulate(build_walker_step(4), walker_basis_state(4, 0, 0));
    StateVector expect = sparse_state(4, {{0b1110, kInvSqrt2}, {0b0011, kInvSqrt2}});
    EXPECT_LE(max_abs_diff(out, expect), 1e-12);
}

TEST(walker, one_step_every_start) {
    for (size_t k = 0; k < 8; k++) {
        StateVector out = evolve_ideal({4, k, 1, 0}).state;
        StateVector expect =
            sparse_state(4, {{walker_index((k + 7) % 8, 0), kInvSqrt2}, {walker_index((k + 1) % 8, 1), kInvSqrt2}});
        EXPECT_LE(max_abs_diff(out, expect), 1e-12) << k;
    }
}

TEST(walker, two_steps_every_start) {
    for (size_t k = 0; k < 8; k++) {
        StateVector out = evolve_ideal({4, k, 2, 0}).state;
        StateVector expect = sparse_state(4, {
                                                 {walker_index((k + 6) % 8, 0), 0.5},
                                                 {walker_index(k, 1), 0.5},
                                                 {walker_index(k, 0), 0.5},
                                                 {walker_index((k + 2) % 8, 1), -0.5},
                                             });
        EXPECT_LE(max_abs_diff(out, expect), 1e-12) << k;
    }
}

TEST(walker, two_steps_from_origin_labels) {
    StateVector out = evolve_ideal({4, 0, 2, 0}).state;
    EXPECT_NEAR(out[0b1100].real(), 0.5, 1e-12);
    EXPECT_NEAR(out[0b0000].real(), 0.5, 1e-12);
    EXPECT_NEAR(out[0b0001].real(), 0.5, 1e-12);
    EXPECT_NEAR(out[0b0101].real(), -0.5, 1e-12);
}

TEST(walker, zero_steps_is_start_state) {
    EXPECT_EQ(evolve_ideal({4, 5, 0, 1}).state, walker_basis_state(4, 5, 1));
}

TEST(walker, step_unitary) {
    Matrix u = ideal_step_unitary(4);
    EXPECT_EQ(u.dim(), 16u);
    EXPECT_TRUE(is_unitary(u, 1e-12));
    StateVector out = mat_apply(u, walker_basis_state(4, 0, 0));
    EXPECT_LE(max_abs_diff(out, sparse_state(4, {{0b1110, kInvSqrt2}, {0b0011, kInvSqrt2}})), 1e-12);
    EXPECT_TRUE(is_unitary(ideal_step_unitary(2), 1e-12));
}

TEST(walker, matches_hand_written_step) {
    for (size_t n = 2; n <= 5; n++) {
        Matrix u = ideal_step_unitary(n);
        for (size_t i = 0; i < u.dim(); i++) {
            StateVector in = StateVector::basis(n, i);
            EXPECT_LE(max_abs_diff(mat_apply(u, in), hand_step(n, in)), 1e-12) << n << " " << i;
        }
    }
}

TEST(walker, coin_definite_columns_are_shifts) {
    // Without the coin Hadamard, every basis input maps to a single basis output.
    Circuit shifts = build_decrement(4);
    shifts.append(build_increment(4));
    Matrix u = circuit_unitary(shifts);
    for (size_t col = 0; col < 16; col++) {
        size_t nonzero = 0;
        for (size_t row = 0; row < 16; row++) {
            nonzero += std::abs(u(row, col)) > 0.5;
        }
        EXPECT_EQ(nonzero, 1u) << col;
    }
}

TEST(walker, shift_order_irrelevant) {
    Circuit a(4), b(4);
    a.append(build_decrement(4));
    a.append(build_increment(4));
    b.append(build_increment(4));
    b.append(build_decrement(4));
    EXPECT_EQ(circuit_unitary(a), circuit_unitary(b));
}

TEST(walker, increment_cycles) {
    for (size_t n = 2; n <= 4; n++) {
        Matrix inc = circuit_unitary(build_increment(n));
        Matrix id = Matrix::identity(inc.dim());
        EXPECT_LE(dist_up_to_global_phase(matrix_power(inc, size_t{1} << (n - 1)), id), 1e-9) << n;
        // Coin 1 selects INC and coin 0 selects DEC, so forcing each active value in turn undoes the other.
        Circuit round(n);
        round.append(build_increment(n));
        round.append(Instruction::single(Gate::pauli_x(), 0));
        round.append(build_decrement(n));
        round.append(Instruction::single(Gate::pauli_x(), 0));
        EXPECT_LE(dist_up_to_global_phase(circuit_unitary(round), id), 1e-9) << n;
    }
}

TEST(walker, norm_preserved_fifty_steps) {
    Matrix u = ideal_step_unitary(4);
    StateVector s = walker_basis_state(4, 3, 0);
    for (size_t m = 1; m <= 50; m++) {
        s = mat_apply(u, s);
        EXPECT_NEAR(s.norm_squared(), 1, 1e-9) << m;
    }
}

TEST(walker, parity_support) {
    for (size_t k = 0; k < 8; k++) {
        for (size_t m = 0; m <= 7; m++) {
            StateVector s = evolve_ideal({4, k, m, 0}).state;
            for (size_t i = 0; i < s.size(); i++) {
                if (std::abs(s[i]) > 1e-12) {
                    size_t j = i >> 1;
                    EXPECT_EQ((j + 16 - k + m) % 2, 0u) << k << " " << m << " " << j;
                }
            }
        }
    }
}

TEST(walker, circuit_and_matrix_paths_agree) {
    for (size_t m : {0u, 1u, 5u, 17u}) {
        for (unsigned coin : {0u, 1u}) {
            WalkerSpec spec{4, 3, m, coin};
            EXPECT_LE(max_abs_diff(evolve_ideal(spec).state, evolve_circuit(spec).state), 1e-12);
        }
    }
    EXPECT_EQ(build_walker_circuit(4, 3).size(), 3 * build_walker_step(4).size());
}

TEST(walker, transpiled_step_equivalent) {
    Circuit t = transpile_to_cnot(build_walker_step(4));
    EXPECT_TRUE(is_cnot_basis(t));
    EXPECT_LE(dist_up_to_global_phase(circuit_unitary(t), ideal_step_unitary(4)), 1e-9);
}

TEST(walker, amplitude_accessor) {
    WalkerState s = evolve_ideal({4, 0, 1, 0});
    EXPECT_NEAR(s.amplitude(7, 0).real(), kInvSqrt2, 1e-12);
    EXPECT_NEAR(s.amplitude(1, 1).real(), kInvSqrt2, 1e-12);
}
