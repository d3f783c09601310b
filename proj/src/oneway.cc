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

#include "mbqc/oneway.h"

#include <cmath>
#include <array>
#include <numbers>
#include <optional>
#include <string>

#include "mbqc/error.h"

namespace mbqc {

void OneWayPattern::validate() const {
    if (angles.size() > kMaxPatternLength) {
        fail(ErrorCode::PlanTooLong,
             "pattern has " + std::to_string(angles.size()) + " measurements; limit is " +
                 std::to_string(kMaxPatternLength));
    }
    for (double a : angles) {
        if (!std::isfinite(a)) {
            fail(ErrorCode::InvalidArgument, "pattern angles must be finite");
        }
    }
}

double PauliFrame::adapt(double angle) const {
    // An X-type frame letter flips the sign of the next R_z angle.
    return current.has_x(0) ? wrap_angle(-angle) : wrap_angle(angle);
}

PauliFrame PauliFrame::advance(double logical_angle, Outcome outcome) const {
    double measured = adapt(logical_angle);
    // Measuring O(measured) on a qubit holding sigma|psi> leaves X^s H R_z(-measured) sigma |psi>
    // on the next one. Commute sigma through R_z, then through H.
    auto through_rz = push_through(current, GateDescriptor::rz(-measured));
    if (std::abs(std::remainder(through_rz.gate.angle + logical_angle, 2 * std::numbers::pi)) > 1e-12) {
        fail(ErrorCode::InvalidArgument, "frame adaptation did not restore the logical angle");
    }
    auto through_h = push_through(through_rz.pauli, GateDescriptor::h());
    PauliString byproduct = outcome == -1 ? PauliString("X") : PauliString("I");
    return PauliFrame{pauli_multiply(byproduct, through_h.pauli)};
}

StateVector PauliFrame::correct(const StateVector &output) const {
    return current.inverse().apply(output);
}

std::vector<Branch> execute_enumerated(const OneWayPattern &pattern, const StateVector &input) {
    pattern.validate();
    if (input.num_qubits() != 1) {
        fail(ErrorCode::DimensionMismatch, "one-way patterns take a single input qubit");
    }
    if (pattern.angles.empty()) {
        return {Branch{{}, input, 1.0}};
    }
    StateVector cluster = cluster_unitary(ChainSpec{pattern.chain_length(), input});
    MeasurementPlan plan;
    for (size_t k = 0; k < pattern.angles.size(); k++) {
        plan.push_back({observable_o(pattern.angles[k]), {k}});
    }
    return enumerate_branches(cluster, plan);
}

StateVector pattern_output(const OneWayPattern &pattern, const Branch &branch) {
    if (branch.state.num_qubits() == 1) {
        return branch.state;
    }
    const size_t keep[1] = {pattern.output_qubit()};
    return factor_out(branch.state, keep);
}

namespace {

void check_input(const OneWayPattern &pattern, const StateVector &input) {
    pattern.validate();
    if (input.num_qubits() != 1) {
        fail(ErrorCode::DimensionMismatch, "one-way patterns take a single input qubit");
    }
}

// Depth-first walk over outcome sequences with feedforward; `choose` returns the outcomes to follow at step k.
template <typename Choose, typename Emit>
void walk_adaptive(const OneWayPattern &pattern, size_t k, const StateVector &state, const PauliFrame &frame,
                   AdaptiveRun &partial, Choose &&choose, Emit &&emit) {
    if (k == pattern.angles.size()) {
        const size_t keep[1] = {pattern.output_qubit()};
        AdaptiveRun run = partial;
        run.output = factor_out(state, keep);
        run.frame = frame;
        emit(std::move(run));
        return;
    }
    double measured = frame.adapt(pattern.angles[k]);
    Observable o = observable_o(measured);
    const size_t target[1] = {k};
    for (Outcome s : choose(state, o, k)) {
        if (s == 0) {
            continue;
        }
        auto result = measure_forced(state, o, target, s);
        double before = partial.weight;
        partial.weight *= result.probability;
        partial.measured_angles.push_back(measured);
        partial.records.push_back(MeasurementRecord{o, {k}, s, result.probability});
        walk_adaptive(pattern, k + 1, result.post, frame.advance(pattern.angles[k], s), partial, choose, emit);
        partial.records.pop_back();
        partial.measured_angles.pop_back();
        partial.weight = before;
    }
}

}  // namespace

AdaptiveRun execute_adaptive(const OneWayPattern &pattern, const StateVector &input, Rng &rng) {
    check_input(pattern, input);
    if (pattern.angles.empty()) {
        return AdaptiveRun{input, PauliFrame{}, {}, {}, 1.0};
    }
    StateVector cluster = cluster_unitary(ChainSpec{pattern.chain_length(), input});
    AdaptiveRun partial{input, PauliFrame{}, {}, {}, 1.0};
    std::optional<AdaptiveRun> out;
    walk_adaptive(
        pattern, 0, cluster, PauliFrame{}, partial,
        [&](const StateVector &state, const Observable &o, size_t k) {
            const size_t target[1] = {k};
            double p_plus = outcome_probability(state, o, target, +1);
            std::uniform_real_distribution<double> uniform(0.0, 1.0);
            Outcome s = uniform(rng) < p_plus ? +1 : -1;
            if (s == +1 && p_plus < kZeroProbability) {
                s = -1;
            } else if (s == -1 && 1 - p_plus < kZeroProbability) {
                s = +1;
            }
            return std::array<Outcome, 2>{s, 0};
        },
        [&](AdaptiveRun run) { out = std::move(run); });
    return std::move(*out);
}

std::vector<AdaptiveRun> execute_adaptive_all(const OneWayPattern &pattern, const StateVector &input) {
    check_input(pattern, input);
    if (pattern.angles.empty()) {
        return {AdaptiveRun{input, PauliFrame{}, {}, {}, 1.0}};
    }
    StateVector cluster = cluster_unitary(ChainSpec{pattern.chain_length(), input});
    AdaptiveRun partial{input, PauliFrame{}, {}, {}, 1.0};
    std::vector<AdaptiveRun> runs;
    walk_adaptive(
        pattern, 0, cluster, PauliFrame{}, partial,
        [&](const StateVector &state, const Observable &o, size_t k) {
            const size_t target[1] = {k};
            std::array<Outcome, 2> next{0, 0};
            if (outcome_probability(state, o, target, +1) > kZeroProbability) {
                next[0] = +1;
            }
            if (outcome_probability(state, o, target, -1) > kZeroProbability) {
                next[1] = -1;
            }
            return next;
        },
        [&](AdaptiveRun run) { runs.push_back(std::move(run)); });
    return runs;
}

}  // namespace mbqc
