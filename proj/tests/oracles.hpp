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

// Reference constructions used as test oracles. They are written out directly
// from basis-state definitions and avoid the library's kron/embedding paths.

#ifndef QWALK_TESTS_ORACLES_HPP
#define QWALK_TESTS_ORACLES_HPP

#include <cmath>
#include <vector>

#include "qwalk/circuit.hpp"

namespace qwalk::testing {

inline const double kInvSqrt2 = 1 / std::sqrt(2.0);

/// Permutation matrix of X on `target` fired when every control matches its polarity.
inline Matrix explicit_controlled_x(size_t width, size_t target, const std::vector<Control> &controls) {
    size_t dim = size_t{1} << width;
    Matrix m(dim);
    for (size_t col = 0; col < dim; col++) {
        bool fire = true;
        for (const auto &c : controls) {
            bool bit = (col >> c.qubit) & 1;
            fire &= bit == (c.polarity == Polarity::Positive);
        }
        size_t row = fire ? col ^ (size_t{1} << target) : col;
        m(row, col) = 1;
    }
    return m;
}

/// C^nNOT with every control on the given polarity; controls on bits n..1, target bit 0.
inline Matrix explicit_uniform_mcx(size_t n, Polarity p) {
    std::vector<Control> controls;
    for (size_t q = 1; q <= n; q++) {
        controls.push_back({q, p});
    }
    return explicit_controlled_x(n + 1, 0, controls);
}

/// Amplitude vector with the given (index, amplitude) entries.
inline StateVector sparse_state(size_t n, const std::vector<std::pair<size_t, Complex>> &entries) {
    std::vector<Complex> amps(size_t{1} << n);
    for (const auto &[i, a] : entries) {
        amps[i] += a;
    }
    return StateVector(n, amps);
}

/// Walker basis index for a position and coin.
inline size_t walker_index(size_t position, unsigned coin) {
    return (position << 1) | coin;
}

}  // namespace qwalk::testing

#endif
