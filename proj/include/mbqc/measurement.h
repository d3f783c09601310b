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

#ifndef MBQC_MEASUREMENT_H
#define MBQC_MEASUREMENT_H

#include <random>
#include <vector>

#include "mbqc/operators.h"

namespace mbqc {

/// Outcomes are the eigenvalues +1 / -1, never bits.
using Outcome = int;

inline constexpr double kZeroProbability = 1e-12;
inline constexpr size_t kMaxPlanLength = 20;

using Rng = std::mt19937_64;

struct MeasurementStep {
    Observable observable;
    std::vector<size_t> targets;
};

using MeasurementPlan = std::vector<MeasurementStep>;

struct MeasurementRecord {
    Observable observable;
    std::vector<size_t> targets;
    Outcome outcome;
    double probability;
};

struct Branch {
    std::vector<MeasurementRecord> records;
    StateVector state;
    double weight;

    std::vector<Outcome> outcomes() const;
};

struct ForcedResult {
    double probability;
    StateVector post;
};

struct SampledResult {
    MeasurementRecord record;
    StateVector post;
};

/// Born probability of `outcome` for observable `o` on `targets`.
double outcome_probability(const StateVector &state, const Observable &o, std::span<const size_t> targets, Outcome outcome);

/// Projects onto the `outcome` eigenspace. Throws ZeroProbabilityBranch below kZeroProbability.
ForcedResult measure_forced(const StateVector &state, const Observable &o, std::span<const size_t> targets, Outcome outcome);

SampledResult measure_sampled(const StateVector &state, const Observable &o, std::span<const size_t> targets, Rng &rng);

/// Depth-first, +1 before -1. Zero-probability subtrees are pruned.
std::vector<Branch> enumerate_branches(const StateVector &state, const MeasurementPlan &plan);

/// Runs `plan` with every outcome fixed in advance.
Branch run_forced(const StateVector &state, const MeasurementPlan &plan, std::span<const Outcome> outcomes);

}  // namespace mbqc

#endif
