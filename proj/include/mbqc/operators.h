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

#ifndef MBQC_OPERATORS_H
#define MBQC_OPERATORS_H

#include <optional>
#include <string>
#include <string_view>

#include "mbqc/statevec.h"

namespace mbqc {

namespace gates {
// Y = (0 -i; i 0). R_z(phi) = diag(1, e^{i phi}).
LocalUnitary I();
LocalUnitary X();
LocalUnitary Y();
LocalUnitary Z();
LocalUnitary H();
LocalUnitary S();
LocalUnitary S_dag();
LocalUnitary T();
LocalUnitary T_dag();
LocalUnitary rz(double phi);
LocalUnitary cnot();
LocalUnitary cz();

/// Looks up a named single-qubit gate ("I", "H", "S", "Sdg", "T", "Tdg", "X", "Y", "Z").
std::optional<LocalUnitary> by_name(std::string_view name);

/// Best-effort human name for a matrix up to global phase ("H", "CNot", ...), or "U".
std::string identify(const Matrix &m, double tol = kTol);
}  // namespace gates

/// Phased Pauli word. Phase is i^phase_power.
class PauliString {
   public:
    PauliString() = default;
    PauliString(std::string letters, int phase_power = 0);

    static PauliString identity(size_t num_qubits);
    /// Accepts an optional leading sign ("+", "-", "i", "-i") then letters over IXYZ.
    static PauliString from_str(std::string_view text);
    /// Matches a matrix exactly (phase included) against every phased Pauli word.
    static std::optional<PauliString> from_matrix(const Matrix &m, double tol = kTol);

    size_t num_qubits() const {
        return letters_.size();
    }
    const std::string &letters() const {
        return letters_;
    }
    int phase_power() const {
        return phase_power_;
    }
    Complex phase() const;
    std::string phase_str() const;
    std::string str() const;

    bool has_x(size_t q) const;
    bool has_z(size_t q) const;
    bool is_identity_up_to_phase() const;

    PauliString operator*(const PauliString &other) const;
    PauliString inverse() const;
    Matrix matrix() const;
    StateVector apply(const StateVector &state) const;
    StateVector apply(const StateVector &state, std::span<const size_t> targets) const;

    bool operator==(const PauliString &other) const = default;

   private:
    std::string letters_;
    int phase_power_ = 0;
};

PauliString pauli_multiply(const PauliString &p, const PauliString &q);

/// Hermitian involution on 1 or 2 qubits.
class Observable {
   public:
    Observable(Matrix matrix, std::string label);
    /// Labels itself by matching known forms (Paulis, tensor Paulis, O(theta)).
    explicit Observable(Matrix matrix);

    static Observable pauli(std::string_view letters);

    size_t arity() const {
        return arity_;
    }
    const Matrix &matrix() const {
        return matrix_;
    }
    const std::string &label() const {
        return label_;
    }

   private:
    Matrix matrix_;
    std::string label_;
    size_t arity_;
};

/// cos(theta) X + sin(theta) Y, the observable of the one-way basis B(theta).
Observable observable_o(double theta);

/// Returns v^dagger o v.
Observable conjugate_observable(const LocalUnitary &v, const Observable &o);

/// Recovers theta when `m` equals cos(theta) X + sin(theta) Y; theta in [0, 2 pi).
std::optional<double> o_angle(const Matrix &m, double tol = kTol);

/// Human label for a Hermitian involution.
std::string describe_observable(const Matrix &m, double tol = kTol);

enum class GateKind { H, Rz, CNot, CZ, Custom };

/// A gate from the set the Pauli frame knows how to commute through.
/// `global_phase` lets adjusted gates absorb the e^{i phi} picked up by R_z.
struct GateDescriptor {
    GateKind kind = GateKind::H;
    double angle = 0;
    double global_phase = 0;
    std::optional<Matrix> custom;

    static GateDescriptor h();
    static GateDescriptor rz(double angle);
    static GateDescriptor cnot();
    static GateDescriptor cz();

    size_t arity() const;
    Matrix matrix() const;
};

struct PushThroughResult {
    PauliString pauli;
    GateDescriptor gate;
};

/// Finds (sigma', g') with g * sigma = sigma' * g'. Throws UnsupportedGate for Custom.
PushThroughResult push_through(const PauliString &sigma, const GateDescriptor &gate);

double wrap_angle(double angle);

}  // namespace mbqc

#endif
