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

#include "mbqc/verify.h"

#include <bit>
#include <cmath>
#include <numbers>

#include "mbqc/error.h"

namespace mbqc {

PauliEquivalenceResult extract_pauli(const StateVector &actual, const StateVector &target, double tol) {
    size_t n = actual.num_qubits();
    if (target.num_qubits() != n) {
        fail(ErrorCode::DimensionMismatch, "extract_pauli needs states of equal size");
    }
    if (n > kMaxPauliSearchQubits) {
        fail(ErrorCode::OutOfRange, "Pauli search is limited to " + std::to_string(kMaxPauliSearchQubits) + " qubits");
    }
    static constexpr char order[4] = {'I', 'X', 'Y', 'Z'};
    static constexpr Complex i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    auto a = actual.amplitudes();
    auto t = target.amplitudes();
    size_t dim = a.size();
    PauliEquivalenceResult best;
    best.pauli = PauliString::identity(n);
    size_t total = size_t{1} << (2 * n);
    std::string letters(n, 'I');
    for (size_t code = 0; code < total; code++) {
        size_t x_mask = 0;
        size_t z_mask = 0;
        int y_count = 0;
        for (size_t q = 0; q < n; q++) {
            char letter = order[(code >> (2 * (n - 1 - q))) & 3];
            letters[q] = letter;
            size_t bit = size_t{1} << (n - 1 - q);
            if (letter == 'X' || letter == 'Y') {
                x_mask |= bit;
            }
            if (letter == 'Z' || letter == 'Y') {
                z_mask |= bit;
            }
            y_count += letter == 'Y';
        }
        // P|j> = i^{#Y} (-1)^{|j & z_mask|} |j ^ x_mask>
        Complex overlap = 0;
        for (size_t j = 0; j < dim; j++) {
            Complex term = std::conj(a[j ^ x_mask]) * t[j];
            overlap += (std::popcount(j & z_mask) & 1) ? -term : term;
        }
        overlap *= i_pow[y_count % 4];
        double fidelity = std::abs(overlap);
        if (fidelity > best.fidelity) {
            best.fidelity = fidelity;
            best.pauli = PauliString(letters);
        }
        if (fidelity >= 1 - tol) {
            return {true, PauliString(letters), fidelity};
        }
    }
    best.found = false;
    return best;
}

namespace {

BranchReport report_branch(const ProtocolTrace &trace, const Branch &branch, const StateVector &target, double tol) {
    BranchReport report;
    report.outcomes = branch.outcomes();
    report.weight = branch.weight;
    try {
        StateVector output = factor_out(branch.state, trace.output_qubits);
        auto found = extract_pauli(output, target, tol);
        report.fidelity = found.fidelity;
        report.pass = found.found;
        if (found.found) {
            report.pauli = found.pauli;
        } else {
            report.error = "NotPauliEquivalent";
        }
    } catch (const Error &e) {
        report.pass = false;
        report.error = error_code_name(e.code());
    }
    return report;
}

void check_input(const ProtocolTrace &trace, const StateVector &input) {
    trace.validate();
    if (input.num_qubits() != trace.input_qubits.size()) {
        fail(ErrorCode::DimensionMismatch, "input state does not match the protocol's input qubits");
    }
    if (!input.is_normalized(1e-9)) {
        fail(ErrorCode::InvalidArgument, "input state must be normalized");
    }
}

}  // namespace

ProtocolReport check_protocol(const ProtocolTrace &trace, const StateVector &input, double tol) {
    check_input(trace, input);
    StateVector initial = trace.initial_state(input);
    StateVector target = trace.target_state(input);
    ProtocolReport report;
    report.protocol = trace.name;
    report.target = gates::identify(trace.target_unitary);
    report.pass = true;
    for (const auto &branch : enumerate_branches(initial, trace.plan)) {
        report.branches.push_back(report_branch(trace, branch, target, tol));
        report.weight_sum += branch.weight;
        report.pass = report.pass && report.branches.back().pass;
    }
    report.pass = report.pass && std::abs(report.weight_sum - 1) <= 1e-9;
    return report;
}

ProtocolReport check_protocol_sampled(
    const ProtocolTrace &trace, const StateVector &input, size_t shots, uint64_t seed, double tol) {
    check_input(trace, input);
    StateVector initial = trace.initial_state(input);
    StateVector target = trace.target_state(input);
    ProtocolReport report;
    report.protocol = trace.name;
    report.target = gates::identify(trace.target_unitary);
    report.pass = true;
    Rng rng(seed);
    for (size_t shot = 0; shot < shots; shot++) {
        Branch branch{{}, initial, 1.0};
        for (const auto &step : trace.plan) {
            auto result = measure_sampled(branch.state, step.observable, step.targets, rng);
            branch.weight *= result.record.probability;
            branch.records.push_back(std::move(result.record));
            branch.state = std::move(result.post);
        }
        report.branches.push_back(report_branch(trace, branch, target, tol));
        report.weight_sum += branch.weight;
        report.pass = report.pass && report.branches.back().pass;
    }
    return report;
}

bool family_membership(const Observable &o, Family family) {
    const Matrix &m = o.matrix();
    const Matrix zx = PauliString("ZX").matrix();
    if (m.dim() == 4) {
        return m.max_abs_diff(zx) <= kTol;
    }
    if (family == Family::F1) {
        const Matrix candidates[3] = {
            PauliString("X").matrix(),
            PauliString("Z").matrix(),
            observable_o(-std::numbers::pi / 4).matrix(),
        };
        for (const auto &c : candidates) {
            if (m.max_abs_diff(c) <= kTol) {
                return true;
            }
        }
        return false;
    }
    if (m.max_abs_diff(PauliString("Z").matrix()) <= kTol) {
        return true;
    }
    return o_angle(m, kTol).has_value();
}

}  // namespace mbqc
