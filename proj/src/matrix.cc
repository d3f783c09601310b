// Copyright 2026 The mbqc Authors
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

#include "mbqc/matrix.h"

#include <cmath>

#include "mbqc/error.h"

namespace mbqc {

Matrix::Matrix(size_t dim) : dim_(dim), entries_(dim * dim) {
}

Matrix::Matrix(size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim * dim) {
        fail(ErrorCode::DimensionMismatch, "matrix needs dim*dim entries");
    }
}

Matrix Matrix::identity(size_t dim) {
    Matrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
    Matrix m(diag.size());
    for (size_t k = 0; k < diag.size(); k++) {
        m(k, k) = diag[k];
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

Matrix Matrix::kron(const Matrix &other) const {
    size_t d = dim_ * other.dim_;
    Matrix out(d);
    for (size_t r1 = 0; r1 < dim_; r1++) {
        for (size_t c1 = 0; c1 < dim_; c1++) {
            Complex a = (*this)(r1, c1);
            for (size_t r2 = 0; r2 < other.dim_; r2++) {
                for (size_t c2 = 0; c2 < other.dim_; c2++) {
                    out(r1 * other.dim_ + r2, c1 * other.dim_ + c2) = a * other(r2, c2);
                }
            }
        }
    }
    return out;
}

Matrix Matrix::operator*(const Matrix &other) const {
    if (dim_ != other.dim_) {
        fail(ErrorCode::DimensionMismatch, "matrix product of different dimensions");
    }
    Matrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t k = 0; k < dim_; k++) {
            Complex a = (*this)(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < dim_; c++) {
                out(r, c) += a * other(k, c);
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix &other) const {
    if (dim_ != other.dim_) {
        fail(ErrorCode::DimensionMismatch, "matrix sum of different dimensions");
    }
    Matrix out = *this;
    for (size_t k = 0; k < entries_.size(); k++) {
        out.entries_[k] += other.entries_[k];
    }
    return out;
}

Matrix Matrix::operator-(const Matrix &other) const {
    return *this + other * Complex{-1};
}

Matrix Matrix::operator*(Complex scalar) const {
    Matrix out = *this;
    for (auto &e : out.entries_) {
        e *= scalar;
    }
    return out;
}

std::vector<Complex> Matrix::operator*(std::span<const Complex> vec) const {
    if (vec.size() != dim_) {
        fail(ErrorCode::DimensionMismatch, "matrix-vector product of different dimensions");
    }
    std::vector<Complex> out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        Complex acc = 0;
        for (size_t c = 0; c < dim_; c++) {
            acc += (*this)(r, c) * vec[c];
        }
        out[r] = acc;
    }
    return out;
}

double Matrix::max_abs_diff(const Matrix &other) const {
    if (dim_ != other.dim_) {
        fail(ErrorCode::DimensionMismatch, "comparing matrices of different dimensions");
    }
    double worst = 0;
    for (size_t k = 0; k < entries_.size(); k++) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

bool Matrix::is_unitary(double tol) const {
    return (adjoint() * *this).max_abs_diff(identity(dim_)) <= tol;
}

bool Matrix::is_hermitian(double tol) const {
    return adjoint().max_abs_diff(*this) <= tol;
}

bool Matrix::is_involution(double tol) const {
    return (*this * *this).max_abs_diff(identity(dim_)) <= tol;
}

bool equal_up_to_phase(const Matrix &a, const Matrix &b, double tol) {
    if (a.dim() != b.dim()) {
        return false;
    }
    // Fix the phase on the largest entry of b.
    size_t best = 0;
    for (size_t k = 0; k < b.entries().size(); k++) {
        if (std::abs(b.entries()[k]) > std::abs(b.entries()[best])) {
            best = k;
        }
    }
    Complex bb = b.entries()[best];
    Complex aa = a.entries()[best];
    if (std::abs(bb) <= tol || std::abs(aa) <= tol) {
        return a.max_abs_diff(b) <= tol;
    }
    Complex phase = (aa / std::abs(aa)) / (bb / std::abs(bb));
    return a.max_abs_diff(b * phase) <= tol;
}

size_t qubit_count_for_dim(size_t dim) {
    size_t n = 0;
    while ((size_t{1} << n) < dim) {
        n++;
    }
    if (dim == 0 || (size_t{1} << n) != dim) {
        fail(ErrorCode::DimensionMismatch, "dimension " + std::to_string(dim) + " is not a power of two");
    }
    return n;
}

}  // namespace mbqc
