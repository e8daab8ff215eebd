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

namespace qwalk {

namespace {

void require_width(size_t num_qubits) {
    if (num_qubits < 2) {
        throw std::invalid_argument("walker needs at least 2 qubits (coin + 1 position bit)");
    }
    if (num_qubits > kMaxStateQubits) {
        throw CapacityError("walker width " + std::to_string(num_qubits) + " exceeds limit");
    }
}

Circuit build_cascade(size_t num_qubits, Polarity polarity) {
    require_width(num_qubits);
    Circuit c(num_qubits);
    // Position bit j lives on qubit j + 1 and flips when the coin fires and all
    // lower position bits equal the polarity value.
    for (size_t j = num_qubits - 1; j-- > 0;) {
        std::vector<Control> controls{{0, polarity}};
        for (size_t lower = 0; lower < j; lower++) {
            controls.push_back({lower + 1, polarity});
        }
        c.append(Instruction::mcx(std::move(controls), j + 1));
    }
    return c;
}

}  // namespace

void WalkerSpec::validate() const {
    require_width(num_qubits);
    if (start_position >= num_positions()) {
        throw std::invalid_argument("start position " + std::to_string(start_position) +
                                    " outside [0, " + std::to_string(num_positions()) + ")");
    }
    if (initial_coin > 1) {
        throw std::invalid_argument("coin must be 0 or 1");
    }
}

StateVector walker_basis_state(size_t num_qubits, size_t position, unsigned coin) {
    return StateVector::basis(num_qubits, (position << 1) | coin);
}

Circuit build_increment(size_t num_qubits) {
    return build_cascade(num_qubits, Polarity::Positive);
}

Circuit build_decrement(size_t num_qubits) {
    return build_cascade(num_qubits, Polarity::Negative);
}

Circuit build_walker_step(size_t num_qubits) {
    require_width(num_qubits);
    Circuit c(num_qubits);
    c.append(Instruction::single(Gate::hadamard(), 0));
    c.append(build_decrement(num_qubits));
    c.append(build_increment(num_qubits));
    return c;
}

Circuit build_walker_circuit(size_t num_qubits, size_t steps) {
    Circuit step = build_walker_step(num_qubits);
    Circuit c(num_qubits);
    for (size_t i = 0; i < steps; i++) {
        c.append(step);
    }
    return c;
}

Matrix ideal_step_unitary(size_t num_qubits) {
    return circuit_unitary(build_walker_step(num_qubits));
}

WalkerState evolve_ideal(const WalkerSpec &spec) {
    spec.validate();
    StateVector state = walker_basis_state(spec.num_qubits, spec.start_position, spec.initial_coin);
    if (spec.steps == 0) {
        return {state};
    }
    Matrix u = ideal_step_unitary(spec.num_qubits);
    for (size_t i = 0; i < spec.steps; i++) {
        state = mat_apply(u, state);
    }
    return {state};
}

WalkerState evolve_circuit(const WalkerSpec &spec) {
    spec.validate();
    StateVector state = walker_basis_state(spec.num_qubits, spec.start_position, spec.initial_coin);
    Circuit step = build_walker_step(spec.num_qubits);
    for (size_t i = 0; i < spec.steps; i++) {
        state = simulate(step, state);
    }
    return {state};
}

}  // namespace qwalk
