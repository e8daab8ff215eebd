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

#ifndef QWALK_CIRCUIT_HPP
#define QWALK_CIRCUIT_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/gates.hpp"
#include "qwalk/kernel.hpp"

namespace qwalk {

struct Control {
    size_t qubit = 0;
    Polarity polarity = Polarity::Positive;

    bool operator==(const Control &other) const = default;
};

/// One circuit step. A non-empty control list is only legal on an X gate,
/// giving CNOT (one control) or a multi-controlled NOT.
struct Instruction {
    Gate gate;
    size_t target = 0;
    std::vector<Control> controls;

    static Instruction single(Gate g, size_t qubit) {
        return {g, qubit, {}};
    }
    static Instruction cnot(size_t control, size_t target) {
        return {Gate::pauli_x(), target, {{control, Polarity::Positive}}};
    }
    static Instruction mcx(std::vector<Control> controls, size_t target) {
        return {Gate::pauli_x(), target, std::move(controls)};
    }

    /// Exactly one positive control on X.
    bool is_cnot() const;
    bool is_single_qubit() const {
        return controls.empty();
    }
    bool has_negative_control() const;

    bool operator==(const Instruction &other) const = default;
};

/// Throws std::invalid_argument if `instr` is malformed for a register of `width` qubits.
void validate_instruction(const Instruction &instr, size_t width);

/// Ordered gate program on a fixed register. Instruction order is execution order.
class Circuit {
   public:
    explicit Circuit(size_t width);
    Circuit(size_t width, std::vector<Instruction> instructions);

    size_t width() const {
        return width_;
    }
    const std::vector<Instruction> &instructions() const {
        return instructions_;
    }
    size_t size() const {
        return instructions_.size();
    }

    void append(Instruction instr);
    void append(const Circuit &other);

    /// Reversed order with every gate replaced by its inverse.
    Circuit inverse() const;

    bool operator==(const Circuit &other) const = default;

   private:
    size_t width_;
    std::vector<Instruction> instructions_;
};

struct GateCounts {
    size_t cnot = 0;
    size_t single_qubit = 0;
    std::map<size_t, size_t> mcx_by_arity;

    bool operator==(const GateCounts &other) const = default;
};

/// Malformed circuit text. `line()` is 1-based.
class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, const std::string &what);
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

Circuit parse_qwc(std::string_view text);
std::string emit_qwc(const Circuit &c);

/// Product of the embedded per-instruction unitaries (later instructions on the left).
Matrix circuit_unitary(const Circuit &c);

/// Full-register matrix of a single instruction.
Matrix embed_instruction(const Instruction &instr, size_t width);

/// Gate-local statevector evolution.
StateVector simulate(const Circuit &c, const StateVector &input);

/// In-place variants of the gate-local kernels.
void apply_single_qubit(std::span<Complex> amps, size_t qubit, const Matrix &g);
void apply_instruction(StateVector &state, const Instruction &instr);

GateCounts count_gates(const Circuit &c);

}  // namespace qwalk

#endif
