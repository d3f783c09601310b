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

#include "mbqc/measurement.h"

#include <algorithm>
#include <string>

#include "mbqc/error.h"

namespace mbqc {

namespace {

void check_outcome(Outcome outcome) {
    if (outcome != 1 && outcome != -1) {
        fail(ErrorCode::InvalidArgument, "outcomes are +1 or -1");
    }
}

void check_step(const StateVector &state, const Observable &o, std::span<const size_t> targets) {
    if (o.arity() != targets.size()) {
        fail(ErrorCode::DimensionMismatch, "observable arity does not match target count");
    }
    for (size_t t : targets) {
        if (t >= state.num_qubits()) {
            fail(ErrorCode::OutOfRange, "measurement target " + std::to_string(t) + " out of range");
        }
    }
}

// (I + outcome * O) / 2 applied to the targets.
StateVector project(const StateVector &state, const Observable &o, std::span<const size_t> targets, Outcome outcome) {
    Matrix projector = (Matrix::identity(o.matrix().dim()) + o.matrix() * Complex(outcome)) * Complex(0.5);
    return apply_matrix(state, projector, targets);
}

double clamp_probability(double p) {
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace

std::vector<Outcome> Branch::outcomes() const {
    std::vector<Outcome> out;
    out.reserve(records.size());
    for (const auto &r : records) {
        out.push_back(r.outcome);
    }
    return out;
}

double outcome_probability(const StateVector &state, const Observable &o, std::span<const size_t> targets, Outcome outcome) {
    check_outcome(outcome);
    check_step(state, o, targets);
    StateVector projected = project(state, o, targets, outcome);
    double n = projected.norm();
    return clamp_probability(n * n);
}

ForcedResult measure_forced(const StateVector &state, const Observable &o, std::span<const size_t> targets, Outcome outcome) {
    check_outcome(outcome);
    check_step(state, o, targets);
    StateVector projected = project(state, o, targets, outcome);
    double n = projected.norm();
    double probability = clamp_probability(n * n);
    if (probability < kZeroProbability) {
        fail(ErrorCode::ZeroProbabilityBranch,
             "outcome " + std::to_string(outcome) + " of " + o.label() + " has probability " +
                 std::to_string(probability));
    }
    return {probability, projected.scaled(1 / n)};
}

SampledResult measure_sampled(const StateVector &state, const Observable &o, std::span<const size_t> targets, Rng &rng) {
    double p_plus = outcome_probability(state, o, targets, +1);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    double u = uniform(rng);
    Outcome outcome = u < p_plus ? +1 : -1;
    // Never pick a numerically empty branch.
    if (outcome == +1 && p_plus < kZeroProbability) {
        outcome = -1;
    } else if (outcome == -1 && 1 - p_plus < kZeroProbability) {
        outcome = +1;
    }
    ForcedResult forced = measure_forced(state, o, targets, outcome);
    MeasurementRecord record{o, std::vector<size_t>(targets.begin(), targets.end()), outcome, forced.probability};
    return {std::move(record), std::move(forced.post)};
}

namespace {

void expand(const MeasurementPlan &plan, size_t depth, Branch &current, std::vector<Branch> &out) {
    if (depth == plan.size()) {
        out.push_back(current);
        return;
    }
    const auto &step = plan[depth];
    StateVector before = current.state;
    double weight_before = current.weight;
    for (Outcome outcome : {+1, -1}) {
        StateVector projected = project(before, step.observable, step.targets, outcome);
        double n = projected.norm();
        double probability = clamp_probability(n * n);
        if (probability < kZeroProbability || weight_before * probability < kZeroProbability) {
            continue;
        }
        current.records.push_back({step.observable, step.targets, outcome, probability});
        current.state = projected.scaled(1 / n);
        current.weight = weight_before * probability;
        expand(plan, depth + 1, current, out);
        current.records.pop_back();
    }
    current.state = before;
    current.weight = weight_before;
}

}  // namespace

std::vector<Branch> enumerate_branches(const StateVector &state, const MeasurementPlan &plan) {
    if (plan.empty()) {
        fail(ErrorCode::InvalidArgument, "measurement plan is empty");
    }
    if (plan.size() > kMaxPlanLength) {
        fail(ErrorCode::PlanTooLong,
             "plan has " + std::to_string(plan.size()) + " measurements; limit is " + std::to_string(kMaxPlanLength));
    }
    for (const auto &step : plan) {
        check_step(state, step.observable, step.targets);
    }
    Branch current{{}, state, 1.0};
    std::vector<Branch> out;
    expand(plan, 0, current, out);
    return out;
}

Branch run_forced(const StateVector &state, const MeasurementPlan &plan, std::span<const Outcome> outcomes) {
    if (outcomes.size() != plan.size()) {
        fail(ErrorCode::InvalidArgument, "need exactly one forced outcome per measurement");
    }
    Branch branch{{}, state, 1.0};
    for (size_t k = 0; k < plan.size(); k++) {
        auto result = measure_forced(branch.state, plan[k].observable, plan[k].targets, outcomes[k]);
        branch.records.push_back({plan[k].observable, plan[k].targets, outcomes[k], result.probability});
        branch.weight *= result.probability;
        branch.state = std::move(result.post);
    }
    return branch;
}

}  // namespace mbqc
