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

#include "qwalk/gates.hpp"

#include <cmath>
#include <numbers>

namespace qwalk {

namespace {

struct KindInfo {
    GateKind kind;
    std::string_view name;
    size_t params;
};

constexpr std::array<KindInfo, 10> kKinds{{
    {GateKind::Identity, "id", 0},
    {GateKind::Hadamard, "h", 0},
    {GateKind::PauliX, "x", 0},
    {GateKind::RotY, "ry", 1},
    {GateKind::RotZ, "rz", 1},
    {GateKind::GlobalPhase, "phase", 1},
    {GateKind::TPhase, "t", 1},
    {GateKind::U1, "u1", 1},
    {GateKind::U2, "u2", 2},
    {GateKind::U3, "u3", 3},
}};

const KindInfo &info(GateKind kind) {
    return kKinds[static_cast<size_t>(kind)];
}

Complex expi(double x) {
    return std::polar(1.0, x);
}

}  // namespace

size_t param_count(GateKind kind) {
    return info(kind).params;
}

std::string_view mnemonic(GateKind kind) {
    return info(kind).name;
}

std::optional<GateKind> kind_from_mnemonic(std::string_view name) {
    for (const auto &k : kKinds) {
        if (k.name == name) {
            return k.kind;
        }
    }
    return std::nullopt;
}

Gate Gate::make(GateKind kind, std::span<const double> angles) {
    if (angles.size() != param_count(kind)) {
        throw std::invalid_argument("gate '" + std::string(mnemonic(kind)) + "' takes " +
                                    std::to_string(param_count(kind)) + " angle(s), got " +
                                    std::to_string(angles.size()));
    }
    Gate g{kind, {}};
    for (size_t i = 0; i < angles.size(); i++) {
        if (!std::isfinite(angles[i])) {
            throw std::invalid_argument("gate angle must be finite");
        }
        g.params[i] = angles[i];
    }
    return g;
}

Matrix gate_matrix(const Gate &g) {
    const auto &p = g.params;
    switch (g.kind) {
        case GateKind::Identity:
            return {{1, 0}, {0, 1}};
        case GateKind::Hadamard: {
            double r = std::numbers::sqrt2 / 2;
            return {{r, r}, {r, -r}};
        }
        case GateKind::PauliX:
            return {{0, 1}, {1, 0}};
        case GateKind::RotY: {
            double c = std::cos(p[0] / 2);
            double s = std::sin(p[0] / 2);
            return {{c, s}, {-s, c}};
        }
        case GateKind::RotZ:
            return {{expi(p[0] / 2), 0}, {0, expi(-p[0] / 2)}};
        case GateKind::GlobalPhase:
            return {{expi(p[0]), 0}, {0, expi(p[0])}};
        case GateKind::TPhase:
        case GateKind::U1:
            return {{1, 0}, {0, expi(p[0])}};
        case GateKind::U2: {
            double r = std::numbers::sqrt2 / 2;
            return {{r, -r * expi(p[1])}, {r * expi(p[0]), r * expi(p[0] + p[1])}};
        }
        case GateKind::U3: {
            double c = std::cos(p[0] / 2);
            double s = std::sin(p[0] / 2);
            return {{c, -expi(p[2]) * s}, {expi(p[1]) * s, expi(p[1] + p[2]) * c}};
        }
    }
    throw std::logic_error("unhandled gate kind");
}

Gate inverse(const Gate &g) {
    const auto &p = g.params;
    switch (g.kind) {
        case GateKind::Identity:
        case GateKind::Hadamard:
        case GateKind::PauliX:
            return g;
        case GateKind::RotY:
        case GateKind::RotZ:
        case GateKind::GlobalPhase:
        case GateKind::TPhase:
        case GateKind::U1:
            return {g.kind, {-p[0], 0, 0}};
        case GateKind::U2:
            return Gate::u3(-std::numbers::pi / 2, -p[1], -p[0]);
        case GateKind::U3:
            return Gate::u3(-p[0], -p[2], -p[1]);
    }
    throw std::logic_error("unhandled gate kind");
}

Matrix mcx_unitary(size_t num_controls, std::span<const Polarity> polarities) {
    if (polarities.size() != num_controls) {
        throw std::invalid_argument("mcx_unitary: polarity count must equal control count");
    }
    if (num_controls + 1 > kMaxUnitaryQubits) {
        throw CapacityError("mcx_unitary: " + std::to_string(num_controls) +
                            " controls exceed the full-unitary cap");
    }
    size_t dim = size_t{1} << (num_controls + 1);
    // Control bit pattern that fires the NOT, as seen in index bits n..1.
    size_t fire = 0;
    for (size_t i = 0; i < num_controls; i++) {
        if (polarities[i] == Polarity::Positive) {
            fire |= size_t{1} << (num_controls - i);
        }
    }
    Matrix m(dim);
    for (size_t col = 0; col < dim; col++) {
        size_t row = (col & ~size_t{1}) == fire ? col ^ 1 : col;
        m(row, col) = 1;
    }
    return m;
}

}  // namespace qwalk
