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

#ifndef MBQC_MATRIX_H
#define MBQC_MATRIX_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mbqc {

using Complex = std::complex<double>;

/// Tolerance for logical (state / operator) comparisons.
inline constexpr double kTol = 1e-9;
/// Tolerance for norm checks.
inline constexpr double kNormTol = 1e-12;

/// Dense square complex matrix, row-major. Small (2x2 .. 2^12) by construction.
class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(size_t dim);
    Matrix(size_t dim, std::vector<Complex> entries);

    static Matrix identity(size_t dim);
    static Matrix diagonal(std::span<const Complex> diag);

    size_t dim() const {
        return dim_;
    }
    Complex operator()(size_t row, size_t col) const {
        return entries_[row * dim_ + col];
    }
    Complex &operator()(size_t row, size_t col) {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    Matrix adjoint() const;
    Matrix kron(const Matrix &other) const;
    Matrix operator*(const Matrix &other) const;
    Matrix operator+(const Matrix &other) const;
    Matrix operator-(const Matrix &other) const;
    Matrix operator*(Complex scalar) const;
    std::vector<Complex> operator*(std::span<const Complex> vec) const;

    double max_abs_diff(const Matrix &other) const;
    bool is_unitary(double tol = kTol) const;
    bool is_hermitian(double tol = kTol) const;
    bool is_involution(double tol = kTol) const;

    bool operator==(const Matrix &other) const = default;

   private:
    size_t dim_ = 0;
    std::vector<Complex> entries_;
};

inline Matrix operator*(Complex scalar, const Matrix &m) {
    return m * scalar;
}

/// True when a = e^{i t} b for some real t, entrywise within tol.
bool equal_up_to_phase(const Matrix &a, const Matrix &b, double tol = kTol);

/// Number of qubits a matrix of this dimension acts on; throws unless dim is a power of two.
size_t qubit_count_for_dim(size_t dim);

}  // namespace mbqc

#endif
