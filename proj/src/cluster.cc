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

#include "mbqc/cluster.h"

#include <algorithm>
#include <string>

#include "mbqc/error.h"

namespace mbqc {

namespace {

constexpr size_t kMaxChainLength = 12;

// Operator acting as `local` on qubits (k, k+1) of an n-qubit register.
Matrix on_edge(const Matrix &local, size_t n, size_t k) {
    Matrix out = k == 0 ? local : Matrix::identity(size_t{1} << k).kron(local);
    size_t tail = n - k - 2;
    if (tail > 0) {
        out = out.kron(Matrix::identity(size_t{1} << tail));
    }
    return out;
}

}  // namespace

void ChainSpec::validate() const {
    if (length < 2 || length > kMaxChainLength) {
        fail(ErrorCode::OutOfRange, "chain length must be in [2, " + std::to_string(kMaxChainLength) + "]");
    }
    if (input_state.num_qubits() != 1) {
        fail(ErrorCode::DimensionMismatch, "chain input must be a single qubit");
    }
    if (!input_state.is_normalized(1e-9)) {
        fail(ErrorCode::InvalidArgument, "chain input must be normalized");
    }
}

StateVector ChainSpec::initial_state() const {
    validate();
    StateVector state = input_state;
    for (size_t q = 1; q < length; q++) {
        state = state.tensor(basis_state(Basis::Plus));
    }
    return state;
}

StateVector cluster_unitary(const ChainSpec &spec) {
    std::vector<size_t> order(spec.length - 1);
    for (size_t k = 0; k < order.size(); k++) {
        order[k] = k;
    }
    return cluster_unitary(spec, order);
}

StateVector cluster_unitary(const ChainSpec &spec, std::span<const size_t> edge_order) {
    StateVector state = spec.initial_state();
    std::vector<size_t> sorted(edge_order.begin(), edge_order.end());
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 0; k < sorted.size(); k++) {
        if (sorted[k] != k || sorted.size() != spec.length - 1) {
            fail(ErrorCode::InvalidArgument, "edge order must be a permutation of the chain's edges");
        }
    }
    const LocalUnitary cz = gates::cz();
    for (size_t k : edge_order) {
        const size_t targets[2] = {k, k + 1};
        state = apply(state, cz, targets);
    }
    return state;
}

PauliString cz_plus_byproduct(size_t num_qubits, size_t a, size_t b, Outcome i, Outcome j) {
    std::string letters(num_qubits, 'I');
    if (i == -1) {
        letters.at(a) = 'Z';
    }
    if (j == -1) {
        letters.at(b) = 'Z';
    }
    return PauliString(letters);
}

namespace {

template <typename MeasureFn>
ClusterResult run_cascade(const ChainSpec &spec, MeasureFn &&measure) {
    StateVector state = spec.initial_state();
    PauliString byproduct = PauliString::identity(spec.length);
    std::vector<MeasurementRecord> records;
    const Observable z = Observable::pauli("Z");
    const Observable zx = Observable::pauli("ZX");
    for (size_t k = 0; k + 1 < spec.length; k++) {
        const size_t right[1] = {k + 1};
        const size_t edge[2] = {k, k + 1};
        auto first = measure(state, z, std::span<const size_t>(right), 2 * k);
        state = first.post;
        auto second = measure(state, zx, std::span<const size_t>(edge), 2 * k + 1);
        state = second.post;
        // Earlier byproducts are Z-type and commute with this edge's observables
        // and with the remaining C_Z gates, so the per-edge terms simply multiply.
        byproduct = pauli_multiply(
            byproduct, cz_plus_byproduct(spec.length, k, k + 1, first.record.outcome, second.record.outcome));
        records.push_back(std::move(first.record));
        records.push_back(std::move(second.record));
    }
    return {std::move(state), std::move(byproduct), std::move(records)};
}

}  // namespace

ClusterResult cluster_by_measurement(const ChainSpec &spec, std::span<const Outcome> outcomes) {
    spec.validate();
    if (outcomes.size() != 2 * (spec.length - 1)) {
        fail(ErrorCode::InvalidArgument, "need 2(n-1) forced outcomes");
    }
    return run_cascade(spec, [&](const StateVector &state, const Observable &o, std::span<const size_t> targets, size_t index) {
        auto forced = measure_forced(state, o, targets, outcomes[index]);
        MeasurementRecord record{o, std::vector<size_t>(targets.begin(), targets.end()), outcomes[index], forced.probability};
        return SampledResult{std::move(record), std::move(forced.post)};
    });
}

ClusterResult cluster_by_measurement(const ChainSpec &spec, Rng &rng) {
    spec.validate();
    return run_cascade(spec, [&](const StateVector &state, const Observable &o, std::span<const size_t> targets, size_t) {
        return measure_sampled(state, o, targets, rng);
    });
}

ProtocolTrace cluster_trace(size_t length) {
    if (length < 2 || length > kMaxChainLength) {
        fail(ErrorCode::OutOfRange, "chain length must be in [2, " + std::to_string(kMaxChainLength) + "]");
    }
    ProtocolTrace trace;
    trace.name = "cluster-" + std::to_string(length);
    trace.num_qubits = length;
    Matrix target = Matrix::identity(size_t{1} << length);
    for (size_t k = 0; k + 1 < length; k++) {
        trace.plan.push_back({Observable::pauli("Z"), {k + 1}});
        trace.plan.push_back({Observable::pauli("ZX"), {k, k + 1}});
        target = on_edge(gates::cz().matrix(), length, k) * target;
    }
    for (size_t q = 0; q < length; q++) {
        trace.input_qubits.push_back(q);
        trace.output_qubits.push_back(q);
    }
    trace.target_unitary = target;
    return trace;
}

}  // namespace mbqc
