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

#ifndef MBQC_STATEVEC_H
#define MBQC_STATEVEC_H

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mbqc/matrix.h"

namespace mbqc {

/// Qubit 0 is the most significant bit of the amplitude index:
/// |q0 q1 ... q_{n-1}> lives at index q0*2^{n-1} + ... + q_{n-1}.
class StateVector {
   public:
    StateVector(size_t num_qubits, std::vector<Complex> amplitudes);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](size_t index) const {
        return amplitudes_[index];
    }

    double norm() const;
    bool is_normalized(double tol = kNormTol) const;
    StateVector normalized() const;
    Complex inner(const StateVector &other) const;
    StateVector tensor(const StateVector &other) const;
    StateVector scaled(Complex factor) const;

   private:
    size_t num_qubits_;
    std::vector<Complex> amplitudes_;
};

enum class Basis { Zero, One, Plus, Minus };

/// A 1- or 2-qubit unitary. Construction checks unitarity.
class LocalUnitary {
   public:
    LocalUnitary();
    explicit LocalUnitary(Matrix matrix, double tol = kTol);

    size_t arity() const {
        return arity_;
    }
    const Matrix &matrix() const {
        return matrix_;
    }
    LocalUnitary adjoint() const;
    LocalUnitary operator*(const LocalUnitary &other) const;

   private:
    Matrix matrix_;
    size_t arity_;
};

StateVector basis_state(Basis basis);
StateVector make_state(size_t num_qubits, const std::map<size_t, Basis> &assignment);

/// Applies any 2^k x 2^k matrix to the listed qubits (no unitarity requirement).
StateVector apply_matrix(const StateVector &state, const Matrix &op, std::span<const size_t> targets);
StateVector apply(const StateVector &state, const LocalUnitary &u, std::span<const size_t> targets);

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol = kTol);

/// Independent standard normals for real and imaginary parts, then normalized.
StateVector random_state(size_t num_qubits, uint64_t seed);

/// Haar-random unitary on 1 or 2 qubits.
LocalUnitary random_unitary(size_t num_qubits, uint64_t seed);

/// Moves qubit k of `state` to position new_position[k].
StateVector permute_qubits(const StateVector &state, std::span<const size_t> new_position);

/// Places `inner` on the listed qubits of an n-qubit register whose remaining
/// qubits hold the given basis states.
StateVector embed(
    const StateVector &inner,
    std::span<const size_t> inner_qubits,
    const std::map<size_t, Basis> &others,
    size_t num_qubits);

/// Splits off the state of `keep` (in that order) from a register in which the
/// remaining qubits are unentangled with them. Throws NotProductState otherwise.
StateVector factor_out(const StateVector &state, std::span<const size_t> keep, double tol = kTol);

}  // namespace mbqc

#endif
