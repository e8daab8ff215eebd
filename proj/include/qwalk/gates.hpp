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

#ifndef QWALK_GATES_HPP
#define QWALK_GATES_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qwalk/kernel.hpp"

namespace qwalk {

enum class GateKind {
    Identity,
    Hadamard,
    PauliX,
    RotY,
    RotZ,
    GlobalPhase,
    TPhase,
    U1,
    U2,
    U3,
};

/// Number of real angle parameters taken by `kind`.
size_t param_count(GateKind kind);

/// Lowercase text-format mnemonic ("h", "ry", "u3", ...).
std::string_view mnemonic(GateKind kind);
std::optional<GateKind> kind_from_mnemonic(std::string_view name);

/// A single-qubit gate from the catalog together with its angles (radians).
///
/// Conventions follow the matrices used throughout this project:
///   RotY(t)        = [[cos t/2, sin t/2], [-sin t/2, cos t/2]]
///   RotZ(a)        = diag(e^{ia/2}, e^{-ia/2})
///   GlobalPhase(d) = e^{id} I
///   TPhase(p)      = diag(1, e^{ip}) = RotZ(-p) GlobalPhase(p/2)
///   U3(t, p, l)    = [[cos t/2, -e^{il} sin t/2], [e^{ip} sin t/2, e^{i(l+p)} cos t/2]]
/// Note RotY and RotZ are the transposed/conjugated forms of the more common
/// convention; TPhase only decomposes as above under these signs.
struct Gate {
    GateKind kind = GateKind::Identity;
    std::array<double, 3> params{};

    static Gate identity() {
        return {GateKind::Identity, {}};
    }
    static Gate hadamard() {
        return {GateKind::Hadamard, {}};
    }
    static Gate pauli_x() {
        return {GateKind::PauliX, {}};
    }
    static Gate ry(double theta) {
        return {GateKind::RotY, {theta, 0, 0}};
    }
    static Gate rz(double alpha) {
        return {GateKind::RotZ, {alpha, 0, 0}};
    }
    static Gate global_phase(double delta) {
        return {GateKind::GlobalPhase, {delta, 0, 0}};
    }
    static Gate t(double phi) {
        return {GateKind::TPhase, {phi, 0, 0}};
    }
    static Gate u1(double lambda) {
        return {GateKind::U1, {lambda, 0, 0}};
    }
    static Gate u2(double phi, double lambda) {
        return {GateKind::U2, {phi, lambda, 0}};
    }
    static Gate u3(double theta, double phi, double lambda) {
        return {GateKind::U3, {theta, phi, lambda}};
    }

    /// Builds a gate from a kind and exactly `param_count(kind)` angles.
    static Gate make(GateKind kind, std::span<const double> angles);

    std::span<const double> angles() const {
        return {params.data(), param_count(kind)};
    }

    bool operator==(const Gate &other) const = default;
};

/// 2x2 unitary for `g`.
Matrix gate_matrix(const Gate &g);

/// A catalog gate whose matrix is the adjoint of `gate_matrix(g)`.
Gate inverse(const Gate &g);

enum class Polarity {
    Positive,  // fires on |1>
    Negative,  // fires on |0>
};

/// Permutation matrix of the n-controlled NOT on n+1 qubits.
///
/// The target is basis bit 0; controls occupy bits n..1 with `polarities[0]`
/// the most significant. All-positive gives [[I, 0], [0, X]] with X in the
/// bottom-right corner; all-negative puts X in the top-left corner.
Matrix mcx_unitary(size_t num_controls, std::span<const Polarity> polarities);

}  // namespace qwalk

#endif
