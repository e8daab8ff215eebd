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

#ifndef QWALK_TRANSPILE_HPP
#define QWALK_TRANSPILE_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "qwalk/circuit.hpp"

namespace qwalk {

enum class LoweringLevel {
    /// Positive controls only; arities untouched.
    EliminateNegativeControls,
    /// Positive controls, at most two per gate (Toffoli and CNOT kept).
    ToToffoli,
    /// CNOT plus single-qubit gates.
    ToCnot,
};

std::optional<LoweringLevel> lowering_level_from_name(std::string_view name);

/// Widest register for which passes check their own output against the input unitary.
inline constexpr size_t kVerifyMaxQubits = 5;

/// Largest MCX arity `decompose_mcx` will verify; larger ones need verify=false.
inline constexpr size_t kMcxVerifyMaxControls = 7;

/// Hard limit on MCX arity (the ancilla-free network has 2^(n+1) gates).
inline constexpr size_t kMcxMaxControls = 20;

inline constexpr double kPassTolerance = 1e-9;

struct TranspileOptions {
    bool verify = true;
};

/// Thrown when a pass's output fails its unitary-equivalence check.
struct VerificationError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Replaces each negative control by a positive one wrapped in X gates on that qubit.
Circuit eliminate_negative_controls(const Circuit &c);

/// 6-CNOT network with H, T(pi/4), T(-pi/4). Requires X with exactly 2 positive controls.
std::vector<Instruction> decompose_toffoli(const Instruction &instr);

/// Exact three-control NOT: an R_y(+-pi/8) multiplexer on the target, framed by
/// R_z(pi/2) / R_z(-pi/2), followed by a diagonal phase correction on the controls.
/// Requires X with exactly 3 positive controls.
std::vector<Instruction> decompose_c3not(const Instruction &instr);

/// Ancilla-free n-control NOT (n >= 4) as H, a phase polynomial over all n+1 qubits, H.
/// With `verify`, the result is checked against `mcx_unitary` and arities above
/// kMcxVerifyMaxControls raise CapacityError.
std::vector<Instruction> decompose_mcx(const Instruction &instr, bool verify = true);

/// Negative-control elimination followed by arity-directed lowering to CNOT + 1q gates.
Circuit transpile_to_cnot(const Circuit &c, TranspileOptions options = {});

Circuit lower(const Circuit &c, LoweringLevel level, TranspileOptions options = {});

/// True when every instruction is a plain single-qubit gate or a positive CNOT.
bool is_cnot_basis(const Circuit &c);

/// Throws VerificationError unless the unitaries agree up to global phase within `tol`.
void verify_equivalent(const Circuit &expected, const Circuit &actual, double tol, std::string_view what);

}  // namespace qwalk

#endif
