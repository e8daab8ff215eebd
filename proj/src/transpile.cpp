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

#include "qwalk/transpile.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numbers>

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

size_t gray(size_t i) {
    return i ^ (i >> 1);
}

/// Index of the single bit in which consecutive Gray codes differ.
size_t gray_step_bit(size_t i, size_t period) {
    size_t diff = gray(i) ^ gray((i + 1) % period);
    return static_cast<size_t>(std::countr_zero(diff));
}

void require_positive_mcx(const Instruction &instr, size_t arity, const char *who) {
    if (instr.gate.kind != GateKind::PauliX || instr.controls.size() != arity ||
        instr.has_negative_control()) {
        throw std::invalid_argument(std::string(who) + ": expected X with exactly " +
                                    std::to_string(arity) + " positive controls");
    }
}

/// Emits exp(i * sum_S angle(S) * parity_S(x)) over all non-empty subsets S of
/// `qubits`, where S is given as a bitmask over positions in `qubits`.
///
/// Terms containing the last qubit are accumulated on it while a Gray code
/// walks the remaining qubits; the rest recurse on the shorter prefix. This
/// uses 2^k - 2 CNOTs for k qubits.
void emit_phase_polynomial(std::vector<Instruction> &out, std::span<const size_t> qubits,
                           const std::function<double(size_t)> &angle) {
    size_t k = qubits.size();
    if (k == 0) {
        return;
    }
    size_t acc = qubits[k - 1];
    size_t period = size_t{1} << (k - 1);
    for (size_t i = 0; i < period; i++) {
        double a = angle(gray(i) | period);
        if (a != 0) {
            out.push_back(Instruction::single(Gate::t(a), acc));
        }
        if (k > 1) {
            out.push_back(Instruction::cnot(qubits[gray_step_bit(i, period)], acc));
        }
    }
    emit_phase_polynomial(out, qubits.first(k - 1), angle);
}

/// Coefficients turning prod_{q in S} x_q into a parity expansion, scaled so the
/// full product picks up phase `total`.
std::function<double(size_t)> product_phase(size_t num_qubits, double total) {
    double unit = total / static_cast<double>(size_t{1} << (num_qubits - 1));
    return [unit](size_t mask) {
        return std::popcount(mask) % 2 == 1 ? unit : -unit;
    };
}

std::vector<Instruction> lower_instruction(const Instruction &instr, bool verify) {
    switch (instr.controls.size()) {
        case 0:
        case 1:
            return {instr};
        case 2:
            return decompose_toffoli(instr);
        case 3:
            return decompose_c3not(instr);
        default:
            return decompose_mcx(instr, verify);
    }
}

}  // namespace

std::optional<LoweringLevel> lowering_level_from_name(std::string_view name) {
    if (name == "negctrl") {
        return LoweringLevel::EliminateNegativeControls;
    }
    if (name == "toffoli") {
        return LoweringLevel::ToToffoli;
    }
    if (name == "cnot") {
        return LoweringLevel::ToCnot;
    }
    return std::nullopt;
}

Circuit eliminate_negative_controls(const Circuit &c) {
    Circuit out(c.width());
    for (const auto &instr : c.instructions()) {
        if (!instr.has_negative_control()) {
            out.append(instr);
            continue;
        }
        std::vector<size_t> flipped;
        Instruction positive = instr;
        for (auto &ctl : positive.controls) {
            if (ctl.polarity == Polarity::Negative) {
                flipped.push_back(ctl.qubit);
                ctl.polarity = Polarity::Positive;
            }
        }
        for (size_t q : flipped) {
            out.append(Instruction::single(Gate::pauli_x(), q));
        }
        out.append(std::move(positive));
        for (size_t q : flipped) {
            out.append(Instruction::single(Gate::pauli_x(), q));
        }
    }
    return out;
}

std::vector<Instruction> decompose_toffoli(const Instruction &instr) {
    require_positive_mcx(instr, 2, "decompose_toffoli");
    size_t a = instr.controls[0].qubit;
    size_t b = instr.controls[1].qubit;
    size_t t = instr.target;
    Gate h = Gate::hadamard();
    Gate tg = Gate::t(kPi / 4);
    Gate tdg = Gate::t(-kPi / 4);
    return {
        Instruction::single(h, t),
        Instruction::cnot(b, t),
        Instruction::single(tdg, t),
        Instruction::cnot(a, t),
        Instruction::single(tg, t),
        Instruction::cnot(b, t),
        Instruction::single(tdg, t),
        Instruction::cnot(a, t),
        Instruction::single(tg, b),
        Instruction::single(tg, t),
        Instruction::single(h, t),
        Instruction::cnot(a, b),
        Instruction::single(tg, a),
        Instruction::single(tdg, b),
        Instruction::cnot(a, b),
    };
}

std::vector<Instruction> decompose_c3not(const Instruction &instr) {
    require_positive_mcx(instr, 3, "decompose_c3not");
    const std::array<size_t, 3> ctl{instr.controls[0].qubit, instr.controls[1].qubit,
                                    instr.controls[2].qubit};
    size_t t = instr.target;
    std::vector<Instruction> out;

    // Uniformly controlled R_y: the target sees R_y(pi) exactly when all three
    // controls are set, identity otherwise. Inside the R_z frame this becomes
    // C^3(-iX).
    out.push_back(Instruction::single(Gate::rz(kPi / 2), t));
    for (size_t i = 0; i < 8; i++) {
        double sign = std::popcount(gray(i)) % 2 == 0 ? 1.0 : -1.0;
        out.push_back(Instruction::single(Gate::ry(sign * kPi / 8), t));
        out.push_back(Instruction::cnot(ctl[gray_step_bit(i, 8)], t));
    }
    out.push_back(Instruction::single(Gate::rz(-kPi / 2), t));

    // Restore the relative phase: +i when all controls are set.
    emit_phase_polynomial(out, ctl, product_phase(3, kPi / 2));
    return out;
}

std::vector<Instruction> decompose_mcx(const Instruction &instr, bool verify) {
    if (instr.gate.kind != GateKind::PauliX || instr.controls.size() < 4 ||
        instr.has_negative_control()) {
        throw std::invalid_argument("decompose_mcx: expected X with at least 4 positive controls");
    }
    size_t n = instr.controls.size();
    if (n > kMcxMaxControls) {
        throw CapacityError("decompose_mcx: " + std::to_string(n) + " controls exceed limit " +
                            std::to_string(kMcxMaxControls));
    }
    if (verify && n > kMcxVerifyMaxControls) {
        throw CapacityError("decompose_mcx: cannot verify " + std::to_string(n) +
                            " controls (limit " + std::to_string(kMcxVerifyMaxControls) +
                            "); disable verification to proceed");
    }

    std::vector<size_t> qubits;
    for (const auto &c : instr.controls) {
        qubits.push_back(c.qubit);
    }
    qubits.push_back(instr.target);

    std::vector<Instruction> out;
    out.push_back(Instruction::single(Gate::hadamard(), instr.target));
    emit_phase_polynomial(out, qubits, product_phase(n + 1, kPi));
    out.push_back(Instruction::single(Gate::hadamard(), instr.target));

    if (verify) {
        // Relabel onto a compact register: control i -> bit n - i, target -> bit 0.
        std::vector<size_t> remap(*std::max_element(qubits.begin(), qubits.end()) + 1);
        for (size_t i = 0; i < n; i++) {
            remap[instr.controls[i].qubit] = n - i;
        }
        remap[instr.target] = 0;
        Circuit local(n + 1);
        for (Instruction step : out) {
            step.target = remap[step.target];
            for (auto &c : step.controls) {
                c.qubit = remap[c.qubit];
            }
            local.append(std::move(step));
        }
        std::vector<Polarity> pos(n, Polarity::Positive);
        double d = dist_up_to_global_phase(circuit_unitary(local), mcx_unitary(n, pos));
        if (d > kPassTolerance) {
            throw VerificationError("decompose_mcx: network deviates by " + std::to_string(d));
        }
    }
    return out;
}

Circuit lower(const Circuit &c, LoweringLevel level, TranspileOptions options) {
    Circuit positive = eliminate_negative_controls(c);
    if (level == LoweringLevel::EliminateNegativeControls) {
        if (options.verify && c.width() <= kVerifyMaxQubits) {
            verify_equivalent(c, positive, kPassTolerance, "negative-control elimination");
        }
        return positive;
    }
    size_t keep_arity = level == LoweringLevel::ToToffoli ? 2 : 1;
    Circuit out(c.width());
    for (const auto &instr : positive.instructions()) {
        if (instr.controls.size() <= keep_arity) {
            out.append(instr);
            continue;
        }
        for (auto &step : lower_instruction(instr, options.verify)) {
            out.append(std::move(step));
        }
    }
    if (options.verify && c.width() <= kVerifyMaxQubits) {
        verify_equivalent(c, out, kPassTolerance, "lowering");
    }
    return out;
}

Circuit transpile_to_cnot(const Circuit &c, TranspileOptions options) {
    return lower(c, LoweringLevel::ToCnot, options);
}

bool is_cnot_basis(const Circuit &c) {
    return std::all_of(c.instructions().begin(), c.instructions().end(),
                       [](const Instruction &i) { return i.is_single_qubit() || i.is_cnot(); });
}

void verify_equivalent(const Circuit &expected, const Circuit &actual, double tol,
                       std::string_view what) {
    if (expected.width() != actual.width()) {
        throw VerificationError(std::string(what) + ": width changed");
    }
    double d = dist_up_to_global_phase(circuit_unitary(actual), circuit_unitary(expected));
    if (d > tol) {
        throw VerificationError(std::string(what) + ": unitary deviates by " + std::to_string(d));
    }
}

}  // namespace qwalk
