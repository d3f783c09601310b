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

#ifndef MBQC_CLUSTER_H
#define MBQC_CLUSTER_H

#include <vector>

#include "mbqc/protocols.h"

namespace mbqc {

/// 1D chain: qubit 0 holds the input, qubits 1..length-1 start in |+>.
struct ChainSpec {
    size_t length;
    StateVector input_state;

    void validate() const;
    /// |phi> (x) |+>^(length-1), before any entangling.
    StateVector initial_state() const;
};

/// Applies C_Z to every neighbouring pair, edges (0,1), (1,2), ... in order.
StateVector cluster_unitary(const ChainSpec &spec);
/// Same cascade with a caller-chosen edge order; edge k joins qubits k and k+1.
StateVector cluster_unitary(const ChainSpec &spec, std::span<const size_t> edge_order);

struct ClusterResult {
    StateVector state;
    /// state == byproduct * cluster_unitary(spec), up to global phase.
    PauliString byproduct;
    std::vector<MeasurementRecord> records;
};

/// Byproduct Z_a^{(1-i)/2} Z_b^{(1-j)/2} left by the ancilla-free C_Z step.
PauliString cz_plus_byproduct(size_t num_qubits, size_t a, size_t b, Outcome i, Outcome j);

/// Runs the C_Z-on-|+> measurement step on edges (0,1), (1,2), ... left to right.
/// `outcomes` holds 2(length-1) values: (i_0, j_0, i_1, j_1, ...).
ClusterResult cluster_by_measurement(const ChainSpec &spec, std::span<const Outcome> outcomes);
ClusterResult cluster_by_measurement(const ChainSpec &spec, Rng &rng);

/// The measurement cascade as a protocol whose inputs are all chain qubits and
/// whose target is the C_Z cascade.
ProtocolTrace cluster_trace(size_t length);

}  // namespace mbqc

#endif
