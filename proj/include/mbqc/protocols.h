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

#ifndef MBQC_PROTOCOLS_H
#define MBQC_PROTOCOLS_H

#include <map>
#include <string>
#include <vector>

#include "mbqc/measurement.h"

namespace mbqc {

/// Generalized state transfer: moves the state of `source` to `dest` while
/// applying v1 before and v2 after the transfer. The Pauli byproduct sits
/// between them: dest ends in v2 * P * v1 |phi>.
struct GstStep {
    LocalUnitary v1;
    LocalUnitary v2;
    size_t source = 0;
    size_t dest = 1;

    Matrix simulated_unitary() const;
};

struct PrepGate {
    LocalUnitary gate;
    std::vector<size_t> targets;
};

/// A measurement protocol plus what it claims to compute. The caller supplies
/// the state of `input_qubits`; the claim is that after `plan` the qubits in
/// `output_qubits` hold P * target_unitary * input for some Pauli P.
struct ProtocolTrace {
    std::string name;
    size_t num_qubits = 0;
    std::vector<size_t> input_qubits;
    std::map<size_t, Basis> ancillas;
    std::vector<PrepGate> preparation;
    MeasurementPlan plan;
    Matrix target_unitary;
    std::vector<size_t> output_qubits;

    void validate() const;
    StateVector initial_state(const StateVector &input) const;
    StateVector target_state(const StateVector &input) const;
    size_t extra_qubits() const {
        return num_qubits - input_qubits.size();
    }
};

/// {X^(dest), Z^(source) Z^(dest), X^(source)} with dest starting in |0>.
ProtocolTrace state_transfer_plan(size_t source, size_t dest);

/// [(v2 X v2^dag)_dest; (v1^dag Z v1)_source (x) (v2 Z v2^dag)_dest; (v1^dag X v1)_source].
ProtocolTrace gst_plan(const GstStep &step);

/// {Z^(c), Z^(a) X^(c), Z^(c) X^(b), X^(c)} with c starting in |0>.
ProtocolTrace cnot_plan(size_t a, size_t b, size_t c);

/// {Z^(b), Z^(a) X^(b)}: C_Z on |phi> (x) |+> with no ancilla. Both a and b are
/// inputs; the caller is responsible for b holding |+>.
ProtocolTrace cz_plus_plan(size_t a, size_t b);

}  // namespace mbqc

#endif
