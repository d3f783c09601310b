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

#ifndef MBQC_VERIFY_H
#define MBQC_VERIFY_H

#include <optional>
#include <string>
#include <vector>

#include "mbqc/protocols.h"

namespace mbqc {

inline constexpr size_t kMaxPauliSearchQubits = 6;

struct PauliEquivalenceResult {
    bool found = false;
    PauliString pauli;
    /// |<actual | P target>| for the returned P (best candidate when not found).
    double fidelity = 0;
};

/// Exhaustive search over {I,X,Y,Z}^n in lexicographic order (I<X<Y<Z, qubit 0 first)
/// for the first P with actual == P * target up to global phase.
PauliEquivalenceResult extract_pauli(const StateVector &actual, const StateVector &target, double tol = kTol);

struct BranchReport {
    std::vector<Outcome> outcomes;
    double weight = 0;
    std::optional<PauliString> pauli;
    double fidelity = 0;
    bool pass = false;
    std::string error;
};

struct ProtocolReport {
    std::string protocol;
    std::string target;
    std::vector<BranchReport> branches;
    double weight_sum = 0;
    bool pass = false;
};

/// Enumerates every branch of `trace` on `input` and checks each output against
/// the target up to a Pauli operator.
ProtocolReport check_protocol(const ProtocolTrace &trace, const StateVector &input, double tol = kTol);

/// Same checks on `shots` sampled outcome sequences instead of every branch.
/// For plans past the enumeration limit; weight_sum is not constrained.
ProtocolReport check_protocol_sampled(
    const ProtocolTrace &trace, const StateVector &input, size_t shots, uint64_t seed, double tol = kTol);

enum class Family { F1, F2 };

bool family_membership(const Observable &o, Family family);

}  // namespace mbqc

#endif
