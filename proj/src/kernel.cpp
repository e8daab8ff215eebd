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

#include "qwalk/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace qwalk {

namespace {

void check_dim(size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("matrix dimension must be positive");
    }
    if (dim > kMaxMatrixDim) {
        throw CapacityError("matrix dimension " + std::to_string(dim) + " exceeds limit " +
                            std::to_string(kMaxMatrixDim));
    }
}

void check_finite(std::span<const Complex> values) {
    for (const auto &v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("non-finite entry");
        }
    }
}

}  // namespace

Matrix::Matrix(size_t dim) : dim_(dim) {
    check_dim(dim);
    entries_.assign(dim * dim, Complex{});
}

Matrix::Matrix(size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    check_dim(dim);
    if (entries_.size() != dim * dim) {
        throw std::invalid_argument("matrix entry count does not match dimension");
    }
    check_finite(entries_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    check_dim(dim_);
    entries_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("matrix must be square");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    check_finite(entries_);
}

Matrix Matrix::identity(size_t dim) {
    Matrix m(dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex Matrix::trace() const {
    Complex t{};
    for (size_t i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

bool Matrix::is_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex &v) {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
    });
}

Matrix Matrix::operator*(const Matrix &other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("matrix product dimension mismatch");
    }
    Matrix out(dim_);
    // Embedded gates are very sparse, so skipping zero entries of the left
    // factor turns most products into O(nnz * dim).
    for (size_t i = 0; i < dim_; i++) {
        Complex *out_row = &out.entries_[i * dim_];
        for (size_t k = 0; k < dim_; k++) {
            Complex a = (*this)(i, k);
            if (a == Complex{}) {
                continue;
            }
            const Complex *b_row = &other.entries_[k * dim_];
            for (size_t j = 0; j < dim_; j++) {
                out_row[j] += a * b_row[j];
            }
        }
    }
    return out;
}

Matrix Matrix::operator*(Complex scale) const {
    Matrix out = *this;
    for (auto &v : out.entries_) {
        v *= scale;
    }
    return out;
}

StateVector::StateVector(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxStateQubits) {
        throw CapacityError("state width " + std::to_string(num_qubits) + " outside [1, " +
                            std::to_string(kMaxStateQubits) + "]");
    }
    amps_.assign(size_t{1} << num_qubits, Complex{});
    amps_[0] = 1;
}

StateVector::StateVector(size_t num_qubits, std::vector<Complex> amps) : StateVector(num_qubits) {
    if (amps.size() != amps_.size()) {
        throw std::invalid_argument("amplitude count does not match qubit count");
    }
    check_finite(amps);
    amps_ = std::move(amps);
}

StateVector StateVector::basis(size_t num_qubits, size_t index) {
    StateVector s(num_qubits);
    if (index >= s.size()) {
        throw std::out_of_range("basis index out of range");
    }
    s.amps_[0] = 0;
    s.amps_[index] = 1;
    return s;
}

StateVector StateVector::from_bits(const std::string &bits) {
    if (bits.empty()) {
        throw std::invalid_argument("empty bitstring");
    }
    size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may only contain 0 and 1: '" + bits + "'");
        }
        index = (index << 1) | static_cast<size_t>(c - '0');
    }
    return basis(bits.size(), index);
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::normalize() {
    double n2 = norm_squared();
    if (!(n2 > 0)) {
        throw std::domain_error("cannot normalize a zero state");
    }
    double scale = 1 / std::sqrt(n2);
    for (auto &a : amps_) {
        a *= scale;
    }
}

std::string basis_label(size_t index, size_t num_qubits) {
    std::string out(num_qubits, '0');
    for (size_t q = 0; q < num_qubits; q++) {
        if ((index >> q) & 1) {
            out[num_qubits - 1 - q] = '1';
        }
    }
    return out;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    size_t dim = a.dim() * b.dim();
    if (a.dim() != 0 && dim / a.dim() != b.dim()) {
        throw CapacityError("kron dimension overflow");
    }
    Matrix out(dim);
    for (size_t ia = 0; ia < a.dim(); ia++) {
        for (size_t ja = 0; ja < a.dim(); ja++) {
            Complex x = a(ia, ja);
            if (x == Complex{}) {
                continue;
            }
            for (size_t ib = 0; ib < b.dim(); ib++) {
                for (size_t jb = 0; jb < b.dim(); jb++) {
                    out(ia * b.dim() + ib, ja * b.dim() + jb) = x * b(ib, jb);
                }
            }
        }
    }
    return out;
}

StateVector mat_apply(const Matrix &u, const StateVector &s) {
    if (u.dim() != s.size()) {
        throw std::invalid_argument("mat_apply: matrix dim " + std::to_string(u.dim()) +
                                    " does not match state size " + std::to_string(s.size()));
    }
    std::vector<Complex> out(s.size());
    for (size_t r = 0; r < u.dim(); r++) {
        Complex acc{};
        for (size_t c = 0; c < u.dim(); c++) {
            acc += u(r, c) * s[c];
        }
        out[r] = acc;
    }
    return StateVector(s.num_qubits(), std::move(out));
}

double dist_up_to_global_phase(const Matrix &a, const Matrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("dist_up_to_global_phase: dimension mismatch");
    }
    // tr(b^dagger a) without forming the adjoint.
    Complex overlap{};
    for (size_t i = 0; i < a.entries().size(); i++) {
        overlap += std::conj(b.entries()[i]) * a.entries()[i];
    }
    Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex{1};
    double total = 0;
    for (size_t i = 0; i < a.entries().size(); i++) {
        total += std::norm(a.entries()[i] - phase * b.entries()[i]);
    }
    return std::sqrt(total);
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double worst = 0;
    for (size_t i = 0; i < a.entries().size(); i++) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("max_abs_diff: size mismatch");
    }
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

bool is_unitary(const Matrix &a, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("is_unitary: tolerance must be positive");
    }
    Matrix g = a.adjoint() * a;
    return max_abs_diff(g, Matrix::identity(a.dim())) <= tol;
}

Complex inner(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner: size mismatch");
    }
    Complex acc{};
    for (size_t i = 0; i < a.size(); i++) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double overlap_squared(const StateVector &a, const StateVector &b) {
    return std::norm(inner(a, b));
}

Matrix matrix_power(const Matrix &a, size_t exponent) {
    Matrix result = Matrix::identity(a.dim());
    Matrix base = a;
    while (exponent > 0) {
        if (exponent & 1) {
            result = base * result;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

}  // namespace qwalk
