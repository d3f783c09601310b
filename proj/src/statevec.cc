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

#include "mbqc/statevec.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mbqc/error.h"

namespace mbqc {

namespace {

void check_targets(size_t num_qubits, std::span<const size_t> targets) {
    for (size_t k = 0; k < targets.size(); k++) {
        if (targets[k] >= num_qubits) {
            fail(ErrorCode::OutOfRange,
                 "target qubit " + std::to_string(targets[k]) + " out of range for " + std::to_string(num_qubits) +
                     " qubits");
        }
        for (size_t j = 0; j < k; j++) {
            if (targets[j] == targets[k]) {
                fail(ErrorCode::InvalidArgument, "duplicate target qubit " + std::to_string(targets[k]));
            }
        }
    }
}

size_t bit_of(size_t num_qubits, size_t qubit) {
    return size_t{1} << (num_qubits - 1 - qubit);
}

}  // namespace

StateVector::StateVector(size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits == 0 || num_qubits > 24) {
        fail(ErrorCode::InvalidArgument, "num_qubits must be in [1, 24]");
    }
    if (amplitudes_.size() != (size_t{1} << num_qubits)) {
        fail(ErrorCode::DimensionMismatch, "amplitude count must be 2^num_qubits");
    }
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

bool StateVector::is_normalized(double tol) const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return std::abs(total - 1) <= tol;
}

StateVector StateVector::normalized() const {
    double n = norm();
    if (n <= 0) {
        fail(ErrorCode::InvalidArgument, "cannot normalize the zero vector");
    }
    return scaled(1 / n);
}

Complex StateVector::inner(const StateVector &other) const {
    if (num_qubits_ != other.num_qubits_) {
        fail(ErrorCode::DimensionMismatch, "inner product of states with different qubit counts");
    }
    Complex acc = 0;
    for (size_t k = 0; k < amplitudes_.size(); k++) {
        acc += std::conj(amplitudes_[k]) * other.amplitudes_[k];
    }
    return acc;
}

StateVector StateVector::tensor(const StateVector &other) const {
    std::vector<Complex> out(dim() * other.dim());
    for (size_t a = 0; a < dim(); a++) {
        for (size_t b = 0; b < other.dim(); b++) {
            out[a * other.dim() + b] = amplitudes_[a] * other.amplitudes_[b];
        }
    }
    return StateVector(num_qubits_ + other.num_qubits_, std::move(out));
}

StateVector StateVector::scaled(Complex factor) const {
    std::vector<Complex> out = amplitudes_;
    for (auto &a : out) {
        a *= factor;
    }
    return StateVector(num_qubits_, std::move(out));
}

LocalUnitary::LocalUnitary() : matrix_(Matrix::identity(2)), arity_(1) {
}

LocalUnitary::LocalUnitary(Matrix matrix, double tol) : matrix_(std::move(matrix)), arity_(0) {
    if (matrix_.dim() != 2 && matrix_.dim() != 4) {
        fail(ErrorCode::DimensionMismatch, "local unitaries act on 1 or 2 qubits");
    }
    if (!matrix_.is_unitary(tol)) {
        fail(ErrorCode::NotUnitary, "matrix is not unitary");
    }
    arity_ = matrix_.dim() == 2 ? 1 : 2;
}

LocalUnitary LocalUnitary::adjoint() const {
    return LocalUnitary(matrix_.adjoint());
}

LocalUnitary LocalUnitary::operator*(const LocalUnitary &other) const {
    return LocalUnitary(matrix_ * other.matrix_);
}

StateVector basis_state(Basis basis) {
    const double r = 1 / std::sqrt(2.0);
    switch (basis) {
        case Basis::Zero:
            return StateVector(1, {1, 0});
        case Basis::One:
            return StateVector(1, {0, 1});
        case Basis::Plus:
            return StateVector(1, {r, r});
        case Basis::Minus:
            return StateVector(1, {r, -r});
    }
    fail(ErrorCode::InvalidArgument, "unknown basis");
}

StateVector make_state(size_t num_qubits, const std::map<size_t, Basis> &assignment) {
    if (num_qubits == 0) {
        fail(ErrorCode::InvalidArgument, "need at least one qubit");
    }
    for (size_t q = 0; q < num_qubits; q++) {
        if (!assignment.contains(q)) {
            fail(ErrorCode::InvalidArgument, "no basis state assigned to qubit " + std::to_string(q));
        }
    }
    if (assignment.size() != num_qubits) {
        fail(ErrorCode::OutOfRange, "assignment names qubits beyond the register");
    }
    StateVector out = basis_state(assignment.at(0));
    for (size_t q = 1; q < num_qubits; q++) {
        out = out.tensor(basis_state(assignment.at(q)));
    }
    return out;
}

StateVector apply_matrix(const StateVector &state, const Matrix &op, std::span<const size_t> targets) {
    size_t n = state.num_qubits();
    check_targets(n, targets);
    size_t k = targets.size();
    if (k == 0 || op.dim() != (size_t{1} << k)) {
        fail(ErrorCode::DimensionMismatch, "operator dimension does not match target count");
    }
    std::vector<size_t> masks(k);
    size_t all_targets = 0;
    for (size_t j = 0; j < k; j++) {
        masks[j] = bit_of(n, targets[j]);
        all_targets |= masks[j];
    }
    size_t local_dim = op.dim();
    std::vector<size_t> offsets(local_dim, 0);
    for (size_t local = 0; local < local_dim; local++) {
        for (size_t j = 0; j < k; j++) {
            // targets[0] is the most significant bit of the local index.
            if (local & (size_t{1} << (k - 1 - j))) {
                offsets[local] |= masks[j];
            }
        }
    }
    auto amps = state.amplitudes();
    std::vector<Complex> out(amps.size());
    std::vector<Complex> gathered(local_dim);
    for (size_t base = 0; base < amps.size(); base++) {
        if (base & all_targets) {
            continue;
        }
        for (size_t local = 0; local < local_dim; local++) {
            gathered[local] = amps[base | offsets[local]];
        }
        for (size_t r = 0; r < local_dim; r++) {
            Complex acc = 0;
            for (size_t c = 0; c < local_dim; c++) {
                acc += op(r, c) * gathered[c];
            }
            out[base | offsets[r]] = acc;
        }
    }
    return StateVector(n, std::move(out));
}

StateVector apply(const StateVector &state, const LocalUnitary &u, std::span<const size_t> targets) {
    if (targets.size() != u.arity()) {
        fail(ErrorCode::DimensionMismatch, "target count does not match gate arity");
    }
    return apply_matrix(state, u.matrix(), targets);
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        fail(ErrorCode::DimensionMismatch, "comparing states with different qubit counts");
    }
    return std::abs(a.inner(b)) >= 1 - tol;
}

StateVector random_state(size_t num_qubits, uint64_t seed) {
    if (num_qubits == 0) {
        fail(ErrorCode::InvalidArgument, "need at least one qubit");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> amps(size_t{1} << num_qubits);
    for (auto &a : amps) {
        double re = normal(rng);
        double im = normal(rng);
        a = Complex(re, im);
    }
    return StateVector(num_qubits, std::move(amps)).normalized();
}

LocalUnitary random_unitary(size_t num_qubits, uint64_t seed) {
    if (num_qubits != 1 && num_qubits != 2) {
        fail(ErrorCode::InvalidArgument, "random unitaries act on 1 or 2 qubits");
    }
    size_t dim = size_t{1} << num_qubits;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    // Gram-Schmidt on Gaussian columns gives a QR factor with positive diagonal R, which is Haar distributed.
    std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
    for (size_t c = 0; c < dim; c++) {
        for (auto &a : cols[c]) {
            double re = normal(rng);
            double im = normal(rng);
            a = Complex(re, im);
        }
        for (size_t p = 0; p < c; p++) {
            Complex overlap = 0;
            for (size_t r = 0; r < dim; r++) {
                overlap += std::conj(cols[p][r]) * cols[c][r];
            }
            for (size_t r = 0; r < dim; r++) {
                cols[c][r] -= overlap * cols[p][r];
            }
        }
        double norm = 0;
        for (auto &a : cols[c]) {
            norm += std::norm(a);
        }
        norm = std::sqrt(norm);
        for (auto &a : cols[c]) {
            a /= norm;
        }
    }
    Matrix m(dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            m(r, c) = cols[c][r];
        }
    }
    return LocalUnitary(std::move(m));
}

StateVector permute_qubits(const StateVector &state, std::span<const size_t> new_position) {
    size_t n = state.num_qubits();
    if (new_position.size() != n) {
        fail(ErrorCode::DimensionMismatch, "permutation size must equal qubit count");
    }
    std::vector<bool> seen(n, false);
    for (size_t p : new_position) {
        if (p >= n || seen[p]) {
            fail(ErrorCode::InvalidArgument, "not a permutation");
        }
        seen[p] = true;
    }
    auto amps = state.amplitudes();
    std::vector<Complex> out(amps.size());
    for (size_t index = 0; index < amps.size(); index++) {
        size_t moved = 0;
        for (size_t q = 0; q < n; q++) {
            if (index & bit_of(n, q)) {
                moved |= bit_of(n, new_position[q]);
            }
        }
        out[moved] = amps[index];
    }
    return StateVector(n, std::move(out));
}

StateVector embed(
    const StateVector &inner,
    std::span<const size_t> inner_qubits,
    const std::map<size_t, Basis> &others,
    size_t num_qubits) {
    if (inner_qubits.size() != inner.num_qubits()) {
        fail(ErrorCode::DimensionMismatch, "inner qubit list does not match the inner state");
    }
    check_targets(num_qubits, inner_qubits);
    std::vector<size_t> order(inner_qubits.begin(), inner_qubits.end());
    StateVector combined = inner;
    for (const auto &[q, basis] : others) {
        if (std::find(order.begin(), order.end(), q) != order.end()) {
            fail(ErrorCode::InvalidArgument, "qubit " + std::to_string(q) + " is both input and ancilla");
        }
        order.push_back(q);
        combined = combined.tensor(basis_state(basis));
    }
    if (order.size() != num_qubits) {
        fail(ErrorCode::InvalidArgument, "inputs and ancillas do not cover the register");
    }
    check_targets(num_qubits, order);
    return permute_qubits(combined, order);
}

StateVector factor_out(const StateVector &state, std::span<const size_t> keep, double tol) {
    size_t n = state.num_qubits();
    check_targets(n, keep);
    if (keep.empty()) {
        fail(ErrorCode::InvalidArgument, "nothing to keep");
    }
    std::vector<size_t> rest;
    for (size_t q = 0; q < n; q++) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
            rest.push_back(q);
        }
    }
    size_t keep_dim = size_t{1} << keep.size();
    size_t rest_dim = size_t{1} << rest.size();
    auto index_of = [&](size_t keep_local, size_t rest_local) {
        size_t index = 0;
        for (size_t j = 0; j < keep.size(); j++) {
            if (keep_local & (size_t{1} << (keep.size() - 1 - j))) {
                index |= bit_of(n, keep[j]);
            }
        }
        for (size_t j = 0; j < rest.size(); j++) {
            if (rest_local & (size_t{1} << (rest.size() - 1 - j))) {
                index |= bit_of(n, rest[j]);
            }
        }
        return index;
    };
    auto amps = state.amplitudes();
    std::vector<std::vector<Complex>> slices(rest_dim, std::vector<Complex>(keep_dim));
    std::vector<double> weights(rest_dim, 0);
    size_t best = 0;
    for (size_t r = 0; r < rest_dim; r++) {
        for (size_t k = 0; k < keep_dim; k++) {
            slices[r][k] = amps[index_of(k, r)];
            weights[r] += std::norm(slices[r][k]);
        }
        if (weights[r] > weights[best]) {
            best = r;
        }
    }
    StateVector out = StateVector(keep.size(), slices[best]).normalized();
    for (size_t r = 0; r < rest_dim; r++) {
        Complex overlap = 0;
        for (size_t k = 0; k < keep_dim; k++) {
            overlap += std::conj(out[k]) * slices[r][k];
        }
        if (weights[r] - std::norm(overlap) > tol) {
            fail(ErrorCode::NotProductState, "kept qubits are entangled with the rest of the register");
        }
    }
    return out;
}

}  // namespace mbqc
