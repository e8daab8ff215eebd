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

#ifndef QWALK_WALKER_HPP
#define QWALK_WALKER_HPP

#include "qwalk/circuit.hpp"

namespace qwalk {

// Register layout for an N-qubit walker on a cycle of 2^(N-1) positions:
// qubit 0 is the coin, qubits 1..N-1 hold position bits p_0..p_{N-2}
// (least significant first). Basis index = (position << 1) | coin, so ket
// labels read |p_{N-2} ... p_0 c>.

struct WalkerSpec {
    size_t num_qubits = 4;
    size_t start_position = 0;
    size_t steps = 0;
    unsigned initial_coin = 0;

    size_t num_positions() const {
        return size_t{1} << (num_qubits - 1);
    }
    void validate() const;
};

struct WalkerState {
    StateVector state;

    Complex amplitude(size_t position, unsigned coin) const {
        return state[(position << 1) | coin];
    }
};

/// |position> (x) |coin> on `num_qubits` qubits.
StateVector walker_basis_state(size_t num_qubits, size_t position, unsigned coin);

/// Coin-on-|1> controlled P_k -> P_{k+1 mod 2^(N-1)}: a descending cascade of
/// multi-controlled NOTs ending in CNOT(coin -> p_0).
Circuit build_increment(size_t num_qubits);

/// Coin-on-|0> controlled P_k -> P_{k-1 mod 2^(N-1)}: the increment cascade with
/// every control negated (borrow instead of carry).
Circuit build_decrement(size_t num_qubits);

/// H on the coin, then decrement, then increment.
Circuit build_walker_step(size_t num_qubits);

/// `steps` concatenated copies of the step circuit.
Circuit build_walker_circuit(size_t num_qubits, size_t steps);

Matrix ideal_step_unitary(size_t num_qubits);

/// Exact amplitudes after `spec.steps` ideal steps (matrix path).
WalkerState evolve_ideal(const WalkerSpec &spec);

/// Same evolution computed gate-by-gate on the multi-step circuit.
WalkerState evolve_circuit(const WalkerSpec &spec);

}  // namespace qwalk

#endif
