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

#include "mbqc/protocols.h"

#include <algorithm>
#include <string>

#include "mbqc/error.h"

namespace mbqc {

Matrix GstStep::simulated_unitary() const {
    return v2.matrix() * v1.matrix();
}

void ProtocolTrace::validate() const {
    if (num_qubits == 0) {
        fail(ErrorCode::InvalidArgument, "protocol has an empty register");
    }
    if (input_qubits.empty()) {
        fail(ErrorCode::InvalidArgument, "protocol has no input qubits");
    }
    std::vector<bool> covered(num_qubits, false);
    auto claim = [&](size_t q) {
        if (q >= num_qubits) {
            fail(ErrorCode::OutOfRange, "qubit " + std::to_string(q) + " outside the register");
        }
        if (covered[q]) {
            fail(ErrorCode::InvalidArgument, "qubit " + std::to_string(q) + " initialized twice");
        }
        covered[q] = true;
    };
    for (size_t q : input_qubits) {
        claim(q);
    }
    for (const auto &[q, basis] : ancillas) {
        claim(q);
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
        fail(ErrorCode::InvalidArgument, "some qubits are neither input nor ancilla");
    }
    if (output_qubits.size() != input_qubits.size()) {
        fail(ErrorCode::DimensionMismatch, "output count must equal input count");
    }
    for (size_t q : output_qubits) {
        if (q >= num_qubits) {
            fail(ErrorCode::OutOfRange, "output qubit " + std::to_string(q) + " outside the register");
        }
    }
    if (target_unitary.dim() != (size_t{1} << output_qubits.size()) || !target_unitary.is_unitary()) {
        fail(ErrorCode::NotUnitary, "target must be a unitary on the output qubits");
    }
    for (const auto &gate : preparation) {
        for (size_t t : gate.targets) {
            if (t >= num_qubits) {
                fail(ErrorCode::OutOfRange, "preparation gate outside the register");
            }
        }
    }
    for (const auto &step : plan) {
        if (step.targets.size() != step.observable.arity()) {
            fail(ErrorCode::DimensionMismatch, "observable arity does not match its targets");
        }
        for (size_t t : step.targets) {
            if (t >= num_qubits) {
                fail(ErrorCode::OutOfRange, "measurement target " + std::to_string(t) + " outside the register");
            }
        }
    }
}

StateVector ProtocolTrace::initial_state(const StateVector &input) const {
    validate();
    StateVector state = embed(input, input_qubits, ancillas, num_qubits);
    for (const auto &gate : preparation) {
        state = apply(state, gate.gate, gate.targets);
    }
    return state;
}

StateVector ProtocolTrace::target_state(const StateVector &input) const {
    if (input.num_qubits() != input_qubits.size()) {
        fail(ErrorCode::DimensionMismatch, "input state does not match the protocol's input qubits");
    }
    return StateVector(input.num_qubits(), target_unitary * input.amplitudes());
}

namespace {

size_t register_size(std::initializer_list<size_t> qubits) {
    return std::max(qubits) + 1;
}

Observable tensor(const Observable &a, const Observable &b) {
    return Observable(a.matrix().kron(b.matrix()));
}

// Qubits below the largest index that the protocol never touches idle in |0>.
void fill_idle(ProtocolTrace &trace) {
    for (size_t q = 0; q < trace.num_qubits; q++) {
        bool used = std::find(trace.input_qubits.begin(), trace.input_qubits.end(), q) != trace.input_qubits.end();
        if (!used && !trace.ancillas.contains(q)) {
            trace.ancillas[q] = Basis::Zero;
        }
    }
}

}  // namespace

ProtocolTrace state_transfer_plan(size_t source, size_t dest) {
    if (source == dest) {
        fail(ErrorCode::InvalidArgument, "state transfer needs distinct source and destination");
    }
    ProtocolTrace trace;
    trace.name = "state-transfer";
    trace.num_qubits = register_size({source, dest});
    trace.input_qubits = {source};
    trace.ancillas = {{dest, Basis::Zero}};
    trace.plan = {
        {Observable::pauli("X"), {dest}},
        {Observable::pauli("ZZ"), {source, dest}},
        {Observable::pauli("X"), {source}},
    };
    trace.target_unitary = Matrix::identity(2);
    trace.output_qubits = {dest};
    fill_idle(trace);
    return trace;
}

ProtocolTrace gst_plan(const GstStep &step) {
    if (step.source == step.dest) {
        fail(ErrorCode::InvalidArgument, "generalized state transfer needs distinct source and destination");
    }
    const Observable x = Observable::pauli("X");
    const Observable z = Observable::pauli("Z");
    LocalUnitary v2_dag = step.v2.adjoint();
    ProtocolTrace trace;
    trace.name = "gst(" + gates::identify(step.v1.matrix()) + "," + gates::identify(step.v2.matrix()) + ")";
    trace.num_qubits = register_size({step.source, step.dest});
    trace.input_qubits = {step.source};
    trace.ancillas = {{step.dest, Basis::Zero}};
    trace.plan = {
        {conjugate_observable(v2_dag, x), {step.dest}},
        {tensor(conjugate_observable(step.v1, z), conjugate_observable(v2_dag, z)), {step.source, step.dest}},
        {conjugate_observable(step.v1, x), {step.source}},
    };
    trace.target_unitary = step.simulated_unitary();
    trace.output_qubits = {step.dest};
    fill_idle(trace);
    return trace;
}

ProtocolTrace cnot_plan(size_t a, size_t b, size_t c) {
    if (a == b || a == c || b == c) {
        fail(ErrorCode::InvalidArgument, "CNot step needs three distinct qubits");
    }
    ProtocolTrace trace;
    trace.name = "cnot";
    trace.num_qubits = register_size({a, b, c});
    trace.input_qubits = {a, b};
    trace.ancillas = {{c, Basis::Zero}};
    trace.plan = {
        {Observable::pauli("Z"), {c}},
        {Observable::pauli("ZX"), {a, c}},
        {Observable::pauli("ZX"), {c, b}},
        {Observable::pauli("X"), {c}},
    };
    trace.target_unitary = gates::cnot().matrix();
    trace.output_qubits = {a, b};
    fill_idle(trace);
    return trace;
}

ProtocolTrace cz_plus_plan(size_t a, size_t b) {
    if (a == b) {
        fail(ErrorCode::InvalidArgument, "C_Z step needs two distinct qubits");
    }
    ProtocolTrace trace;
    trace.name = "cz-plus";
    trace.num_qubits = register_size({a, b});
    trace.input_qubits = {a, b};
    trace.plan = {
        {Observable::pauli("Z"), {b}},
        {Observable::pauli("ZX"), {a, b}},
    };
    trace.target_unitary = gates::cz().matrix();
    trace.output_qubits = {a, b};
    fill_idle(trace);
    return trace;
}

}  // namespace mbqc
