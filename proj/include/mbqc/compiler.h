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

#ifndef MBQC_COMPILER_H
#define MBQC_COMPILER_H

#include <vector>

#include "mbqc/oneway.h"
#include "mbqc/verify.h"

namespace mbqc {

/// Chained generalized state transfers: steps[k].dest == steps[k+1].source.
struct GstSequence {
    std::vector<GstStep> steps;

    void validate() const;
    /// Product of the simulated unitaries, last step leftmost.
    Matrix composed_unitary() const;
};

struct CircuitGate {
    enum class Kind { U1, CNot };
    Kind kind = Kind::U1;
    LocalUnitary u;
    size_t q = 0;
    size_t control = 0;
    size_t target = 0;

    static CircuitGate single(size_t q, LocalUnitary u);
    static CircuitGate cnot(size_t control, size_t target);
};

/// Circuit over {CNot} and arbitrary single-qubit unitaries.
struct CircuitIR {
    size_t num_qubits = 0;
    std::vector<CircuitGate> gates;

    void validate() const;
    Matrix unitary() const;
};

/// Product over k = m..1 of H R_z(-angle_k); the first measurement is the rightmost factor.
Matrix pattern_net_unitary(const OneWayPattern &pattern);

/// Step k is GST(R_z(-angle_k), H) from chain qubit k-1 to k.
GstSequence pattern_to_gst(const OneWayPattern &pattern);

/// Inverse of pattern_to_gst. Throws NonTranslatable unless every step is GST(R_z(theta), H).
OneWayPattern gst_to_pattern(const GstSequence &sequence);

/// u = e^{i phase} R_z(phi3) H R_z(phi2) H R_z(phi1).
struct EulerZxz {
    double phase = 0;
    double phi1 = 0;
    double phi2 = 0;
    double phi3 = 0;

    Matrix reconstruct() const;
};

EulerZxz euler_zxz(const LocalUnitary &u);

/// Four angles [-phi1, -phi2, -phi3, 0] whose net unitary equals u up to phase.
OneWayPattern compile_unitary_to_pattern(const LocalUnitary &u);

/// Peephole pass: [.., a, 0, b, ..] -> [.., a+b, ..] and [.., 0, 0, ..] -> [..].
OneWayPattern simplify_pattern(const OneWayPattern &pattern);

/// Every observable measured by the GST sequence induced by `pattern`.
std::vector<Observable> induced_observables(const OneWayPattern &pattern);

/// Concatenated GST plans with each destination starting in `dest_init`.
ProtocolTrace gst_sequence_trace(const GstSequence &sequence, Basis dest_init = Basis::Zero);

enum class PatternOrder {
    /// C_Z cascade applied as unitaries, then the O(angle) measurements.
    UnitaryCluster,
    /// Cluster built by the measurement cascade first, then the O(angle) measurements.
    PrepFirst,
    /// Per edge: C_Z-on-|+> step then O(angle) on its left qubit; equals the GST plans.
    Interleaved,
};

ProtocolTrace pattern_trace(const OneWayPattern &pattern, PatternOrder order);

/// Lowers a circuit to measurements only: each single-qubit gate becomes the
/// 4-step GST chain of its compiled pattern, each CNot the 4-measurement step
/// with a fresh ancilla.
ProtocolTrace lower_circuit(const CircuitIR &circuit);

/// Runs the pattern with feedforward over every outcome sequence. A branch passes when
/// its frame-corrected output matches the net unitary applied to `input`; the frame is
/// reported as the branch's Pauli.
ProtocolReport check_pattern(const OneWayPattern &pattern, const StateVector &input, double tol = kTol);

/// check_pattern on `shots` sampled outcome sequences.
ProtocolReport check_pattern_sampled(
    const OneWayPattern &pattern, const StateVector &input, size_t shots, uint64_t seed, double tol = kTol);

}  // namespace mbqc

#endif
