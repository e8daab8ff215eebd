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

#ifndef QWALK_KERNEL_HPP
#define QWALK_KERNEL_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

/// Thrown when a dense object would exceed the configured size limits.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// Largest matrix side accepted by `kron` and friends (2^14).
inline constexpr size_t kMaxMatrixDim = size_t{1} << 14;

/// Widest register for which a full unitary may be built.
inline constexpr size_t kMaxUnitaryQubits = 12;

/// Widest register accepted by statevector simulation.
inline constexpr size_t kMaxStateQubits = 26;

inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kEquivTolerance = 1e-10;

/// Dense square complex matrix, row-major.
class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(size_t dim);
    Matrix(size_t dim, std::vector<Complex> entries);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(size_t dim);

    size_t dim() const {
        return dim_;
    }
    Complex &operator()(size_t row, size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    Matrix adjoint() const;
    Complex trace() const;
    bool is_finite() const;

    Matrix operator*(const Matrix &other) const;
    Matrix operator*(Complex scale) const;
    bool operator==(const Matrix &other) const = default;

   private:
    size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// Amplitudes of an n-qubit register. Basis index bit q is the value of qubit q.
class StateVector {
   public:
    StateVector() = default;
    explicit StateVector(size_t num_qubits);
    StateVector(size_t num_qubits, std::vector<Complex> amps);

    /// |index> on `num_qubits` qubits.
    static StateVector basis(size_t num_qubits, size_t index);

    /// Parses a ket label written q_{n-1}...q_0, e.g. "110".
    static StateVector from_bits(const std::string &bits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t size() const {
        return amps_.size();
    }
    Complex &operator[](size_t i) {
        return amps_[i];
    }
    const Complex &operator[](size_t i) const {
        return amps_[i];
    }
    std::span<Complex> amps() {
        return amps_;
    }
    std::span<const Complex> amps() const {
        return amps_;
    }

    double norm_squared() const;
    /// Scales to unit norm. Throws std::domain_error on a zero vector.
    void normalize();

    bool operator==(const StateVector &other) const = default;

   private:
    size_t num_qubits_ = 0;
    std::vector<Complex> amps_;
};

/// Basis label of `index` written q_{n-1}...q_0.
std::string basis_label(size_t index, size_t num_qubits);

Matrix kron(const Matrix &a, const Matrix &b);

/// u * s. Requires u.dim() == 2^s.num_qubits().
StateVector mat_apply(const Matrix &u, const StateVector &s);

/// min over phi of ||a - e^{i phi} b||_F.
double dist_up_to_global_phase(const Matrix &a, const Matrix &b);

/// max |a_ij - b_ij|.
double max_abs_diff(const Matrix &a, const Matrix &b);
double max_abs_diff(const StateVector &a, const StateVector &b);

bool is_unitary(const Matrix &a, double tol);

/// <a|b>
Complex inner(const StateVector &a, const StateVector &b);

/// |<a|b>|^2
double overlap_squared(const StateVector &a, const StateVector &b);

Matrix matrix_power(const Matrix &a, size_t exponent);

}  // namespace qwalk

#endif
