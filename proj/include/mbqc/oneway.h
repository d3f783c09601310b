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

#ifndef MBQC_ONEWAY_H
#define MBQC_ONEWAY_H

#include <vector>

#include "mbqc/cluster.h"

namespace mbqc {

inline constexpr size_t kMaxPatternLength = 10;

/// Angles measured (as O(angle)) on chain qubits 0..m-1; qubit m is the output.
struct OneWayPattern {
    std::vector<double> angles;

    size_t chain_length() const {
        return angles.size() + 1;
    }
    size_t output_qubit() const {
        return angles.size();
    }
    void validate() const;
};

/// Known Pauli error on the logical output qubit.
struct PauliFrame {
    PauliString current = PauliString("I");

    /// Angle to measure so that a logical O(angle) measurement is realized.
    double adapt(double angle) const;
    /// Frame after measuring with `measured_angle` and seeing `outcome`.
    PauliFrame advance(double measured_angle, Outcome outcome) const;
    StateVector correct(const StateVector &output) const;
};

/// Measures O(angle_k) on qubit k of the unitary-prepared cluster, every branch.
std::vector<Branch> execute_enumerated(const OneWayPattern &pattern, const StateVector &input);

/// The output qubit's state in a branch produced by execute_enumerated.
StateVector pattern_output(const OneWayPattern &pattern, const Branch &branch);

struct AdaptiveRun {
    StateVector output;
    PauliFrame frame;
    std::vector<double> measured_angles;
    std::vector<MeasurementRecord> records;
    double weight = 1.0;

    StateVector corrected() const {
        return frame.correct(output);
    }
};

/// Sampled execution with feedforward of the Pauli frame into later angles.
AdaptiveRun execute_adaptive(const OneWayPattern &pattern, const StateVector &input, Rng &rng);

/// Every outcome sequence of the adaptive execution, with its probability as `weight`.
std::vector<AdaptiveRun> execute_adaptive_all(const OneWayPattern &pattern, const StateVector &input);

}  // namespace mbqc

#endif
