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

#include "mbqc/compiler.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "mbqc/error.h"
#include "mbqc/verify.h"

namespace mbqc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr size_t kMaxLoweredRegister = 12;

bool is_zero_angle(double angle) {
    return std::abs(std::remainder(angle, 2 * kPi)) <= 1e-12;
}

Matrix h_rz(double angle) {
    return gates::H().matrix() * gates::rz(angle).matrix();
}

}  // namespace

void GstSequence::validate() const {
    for (size_t k = 0; k + 1 < steps.size(); k++) {
        if (steps[k].dest != steps[k + 1].source) {
            fail(ErrorCode::InvalidArgument, "GST step " + std::to_string(k) + " does not feed the next step");
        }
    }
    for (const auto &step : steps) {
        if (step.source == step.dest) {
            fail(ErrorCode::InvalidArgument, "GST step with source == dest");
        }
    }
}

Matrix GstSequence::composed_unitary() const {
    Matrix u = Matrix::identity(2);
    for (const auto &step : steps) {
        u = step.simulated_unitary() * u;
    }
    return u;
}

CircuitGate CircuitGate::single(size_t q, LocalUnitary u) {
    if (u.arity() != 1) {
        fail(ErrorCode::DimensionMismatch, "single-qubit gate needs a 2x2 unitary");
    }
    CircuitGate g;
    g.kind = Kind::U1;
    g.u = std::move(u);
    g.q = q;
    return g;
}

CircuitGate CircuitGate::cnot(size_t control, size_t target) {
    CircuitGate g;
    g.kind = Kind::CNot;
    g.control = control;
    g.target = target;
    return g;
}

void CircuitIR::validate() const {
    if (num_qubits == 0 || num_qubits > kMaxPauliSearchQubits) {
        fail(ErrorCode::OutOfRange, "circuits act on 1.." + std::to_string(kMaxPauliSearchQubits) + " qubits");
    }
    for (const auto &g : gates) {
        if (g.kind == CircuitGate::Kind::U1) {
            if (g.q >= num_qubits) {
                fail(ErrorCode::OutOfRange, "gate qubit out of range");
            }
            if (g.u.arity() != 1) {
                fail(ErrorCode::DimensionMismatch, "single-qubit gate needs a 2x2 unitary");
            }
        } else {
            if (g.control >= num_qubits || g.target >= num_qubits) {
                fail(ErrorCode::OutOfRange, "CNot qubit out of range");
            }
            if (g.control == g.target) {
                fail(ErrorCode::InvalidArgument, "CNot control equals target");
            }
        }
    }
}

Matrix CircuitIR::unitary() const {
    validate();
    size_t dim = size_t{1} << num_qubits;
    Matrix total(dim);
    for (size_t col = 0; col < dim; col++) {
        std::vector<Complex> basis(dim);
        basis[col] = 1;
        StateVector state(num_qubits, std::move(basis));
        for (const auto &g : gates) {
            if (g.kind == CircuitGate::Kind::U1) {
                const size_t t[1] = {g.q};
                state = apply(state, g.u, t);
            } else {
                const size_t t[2] = {g.control, g.target};
                state = apply(state, gates::cnot(), t);
            }
        }
        for (size_t row = 0; row < dim; row++) {
            total(row, col) = state[row];
        }
    }
    return total;
}

Matrix pattern_net_unitary(const OneWayPattern &pattern) {
    pattern.validate();
    Matrix u = Matrix::identity(2);
    for (double angle : pattern.angles) {
        u = h_rz(-angle) * u;
    }
    return u;
}

GstSequence pattern_to_gst(const OneWayPattern &pattern) {
    pattern.validate();
    GstSequence sequence;
    for (size_t k = 0; k < pattern.angles.size(); k++) {
        sequence.steps.push_back(GstStep{gates::rz(-pattern.angles[k]), gates::H(), k, k + 1});
    }
    return sequence;
}

OneWayPattern gst_to_pattern(const GstSequence &sequence) {
    sequence.validate();
    const Matrix h = gates::H().matrix();
    OneWayPattern pattern;
    for (size_t k = 0; k < sequence.steps.size(); k++) {
        const auto &step = sequence.steps[k];
        if (step.v2.matrix().max_abs_diff(h) > 1e-9) {
            fail(ErrorCode::NonTranslatable, "GST step " + std::to_string(k) + " does not end with H");
        }
        const Matrix &v1 = step.v1.matrix();
        if (std::abs(v1(0, 1)) > 1e-9 || std::abs(v1(1, 0)) > 1e-9 || std::abs(v1(0, 0) - Complex{1}) > 1e-9) {
            fail(ErrorCode::NonTranslatable, "GST step " + std::to_string(k) + " does not start with R_z");
        }
        pattern.angles.push_back(wrap_angle(-std::arg(v1(1, 1))));
    }
    pattern.validate();
    return pattern;
}

Matrix EulerZxz::reconstruct() const {
    const Matrix h = gates::H().matrix();
    return gates::rz(phi3).matrix() * h * gates::rz(phi2).matrix() * h * gates::rz(phi1).matrix() *
           std::polar(1.0, phase);
}

EulerZxz euler_zxz(const LocalUnitary &u) {
    if (u.arity() != 1) {
        fail(ErrorCode::DimensionMismatch, "Euler decomposition needs a single-qubit unitary");
    }
    const Matrix &m = u.matrix();
    // R_z(c) H R_z(b) H R_z(a) = e^{ib/2} [[cos(b/2), -i sin(b/2) e^{ia}], [-i sin(b/2) e^{ic}, cos(b/2) e^{i(a+c)}]].
    double c = std::abs(m(0, 0));
    double s = std::abs(m(0, 1));
    EulerZxz out;
    if (s <= 1e-12) {
        out.phi2 = 0;
        out.phase = std::arg(m(0, 0));
        out.phi1 = std::arg(m(1, 1)) - out.phase;
    } else if (c <= 1e-12) {
        out.phi2 = kPi;
        out.phase = std::arg(m(1, 0));
        out.phi1 = std::arg(m(0, 1)) - out.phase;
    } else {
        out.phi2 = 2 * std::atan2(s, c);
        out.phase = std::arg(m(0, 0)) - out.phi2 / 2;
        out.phi1 = std::arg(m(0, 1)) - out.phase - out.phi2 / 2 + kPi / 2;
        out.phi3 = std::arg(m(1, 0)) - out.phase - out.phi2 / 2 + kPi / 2;
    }
    out.phase = wrap_angle(out.phase);
    out.phi1 = wrap_angle(out.phi1);
    out.phi2 = wrap_angle(out.phi2);
    out.phi3 = wrap_angle(out.phi3);
    return out;
}

OneWayPattern compile_unitary_to_pattern(const LocalUnitary &u) {
    EulerZxz e = euler_zxz(u);
    return OneWayPattern{{wrap_angle(-e.phi1), wrap_angle(-e.phi2), wrap_angle(-e.phi3), 0.0}};
}

OneWayPattern simplify_pattern(const OneWayPattern &pattern) {
    std::vector<double> angles = pattern.angles;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k + 1 < angles.size(); k++) {
            if (is_zero_angle(angles[k]) && is_zero_angle(angles[k + 1])) {
                // H H = I
                angles.erase(angles.begin() + k, angles.begin() + k + 2);
                changed = true;
                break;
            }
        }
        if (changed) {
            continue;
        }
        for (size_t k = 1; k + 1 < angles.size(); k++) {
            if (is_zero_angle(angles[k])) {
                // H R_z(-b) H H R_z(-a) = H R_z(-(a+b))
                angles[k - 1] = wrap_angle(angles[k - 1] + angles[k + 1]);
                angles.erase(angles.begin() + k, angles.begin() + k + 2);
                changed = true;
                break;
            }
        }
    }
    return OneWayPattern{std::move(angles)};
}

std::vector<Observable> induced_observables(const OneWayPattern &pattern) {
    std::vector<Observable> out;
    for (const auto &step : pattern_to_gst(pattern).steps) {
        for (const auto &m : gst_plan(step).plan) {
            out.push_back(m.observable);
        }
    }
    return out;
}

ProtocolTrace gst_sequence_trace(const GstSequence &sequence, Basis dest_init) {
    sequence.validate();
    if (sequence.steps.empty()) {
        fail(ErrorCode::InvalidArgument, "empty GST sequence");
    }
    ProtocolTrace trace;
    trace.name = "gst-sequence";
    size_t max_qubit = 0;
    for (const auto &step : sequence.steps) {
        max_qubit = std::max({max_qubit, step.source, step.dest});
        for (auto &m : gst_plan(step).plan) {
            trace.plan.push_back(std::move(m));
        }
    }
    trace.num_qubits = max_qubit + 1;
    size_t input = sequence.steps.front().source;
    trace.input_qubits = {input};
    for (size_t q = 0; q < trace.num_qubits; q++) {
        if (q != input) {
            trace.ancillas[q] = dest_init;
        }
    }
    trace.target_unitary = sequence.composed_unitary();
    trace.output_qubits = {sequence.steps.back().dest};
    return trace;
}

ProtocolTrace pattern_trace(const OneWayPattern &pattern, PatternOrder order) {
    pattern.validate();
    if (pattern.angles.empty()) {
        fail(ErrorCode::InvalidArgument, "pattern has no measurements");
    }
    size_t m = pattern.angles.size();
    ProtocolTrace trace;
    trace.num_qubits = m + 1;
    trace.input_qubits = {0};
    for (size_t q = 1; q <= m; q++) {
        trace.ancillas[q] = Basis::Plus;
    }
    trace.target_unitary = pattern_net_unitary(pattern);
    trace.output_qubits = {m};
    switch (order) {
        case PatternOrder::UnitaryCluster:
            trace.name = "pattern";
            for (size_t k = 0; k < m; k++) {
                trace.preparation.push_back({gates::cz(), {k, k + 1}});
            }
            for (size_t k = 0; k < m; k++) {
                trace.plan.push_back({observable_o(pattern.angles[k]), {k}});
            }
            break;
        case PatternOrder::PrepFirst:
            trace.name = "pattern-prep-first";
            for (size_t k = 0; k < m; k++) {
                trace.plan.push_back({Observable::pauli("Z"), {k + 1}});
                trace.plan.push_back({Observable::pauli("ZX"), {k, k + 1}});
            }
            for (size_t k = 0; k < m; k++) {
                trace.plan.push_back({observable_o(pattern.angles[k]), {k}});
            }
            break;
        case PatternOrder::Interleaved: {
            trace.name = "pattern-interleaved";
            ProtocolTrace gst = gst_sequence_trace(pattern_to_gst(pattern), Basis::Plus);
            trace.plan = std::move(gst.plan);
            break;
        }
    }
    trace.validate();
    return trace;
}

ProtocolTrace lower_circuit(const CircuitIR &circuit) {
    circuit.validate();
    size_t n = circuit.num_qubits;
    std::vector<size_t> home(n);
    std::vector<std::optional<size_t>> spare(n);
    for (size_t q = 0; q < n; q++) {
        home[q] = q;
    }
    ProtocolTrace trace;
    trace.name = "circuit";
    size_t next_fresh = n;
    auto fresh = [&]() {
        size_t q = next_fresh++;
        trace.ancillas[q] = Basis::Zero;
        return q;
    };
    for (const auto &g : circuit.gates) {
        if (g.kind == CircuitGate::Kind::U1) {
            OneWayPattern pattern = compile_unitary_to_pattern(g.u);
            for (double angle : pattern.angles) {
                // Ping-pong between two physical qubits: the previous home was
                // last measured by a one-qubit observable and can take the next transfer.
                size_t dest = spare[g.q] ? *spare[g.q] : fresh();
                GstStep step{gates::rz(-angle), gates::H(), home[g.q], dest};
                for (auto &m : gst_plan(step).plan) {
                    trace.plan.push_back(std::move(m));
                }
                spare[g.q] = home[g.q];
                home[g.q] = dest;
            }
        } else {
            size_t ancilla = fresh();
            for (auto &m : cnot_plan(home[g.control], home[g.target], ancilla).plan) {
                trace.plan.push_back(std::move(m));
            }
        }
    }
    if (next_fresh > kMaxLoweredRegister) {
        fail(ErrorCode::PlanTooLong, "lowered circuit needs " + std::to_string(next_fresh) + " qubits");
    }
    trace.num_qubits = next_fresh;
    for (size_t q = 0; q < n; q++) {
        trace.input_qubits.push_back(q);
    }
    trace.output_qubits = home;
    trace.target_unitary = circuit.unitary();
    trace.validate();
    return trace;
}

namespace {

BranchReport adaptive_branch(const AdaptiveRun &run, const StateVector &want, double tol) {
    BranchReport b;
    for (const auto &r : run.records) {
        b.outcomes.push_back(r.outcome);
    }
    b.weight = run.weight;
    b.pauli = run.frame.current;
    b.fidelity = std::abs(want.inner(run.corrected()));
    b.pass = b.fidelity >= 1 - tol;
    return b;
}

ProtocolReport pattern_report(const OneWayPattern &pattern) {
    ProtocolReport report;
    report.protocol = "pattern-adaptive";
    report.target = gates::identify(pattern_net_unitary(pattern));
    report.pass = true;
    return report;
}

StateVector pattern_target(const OneWayPattern &pattern, const StateVector &input) {
    const size_t q0[1] = {0};
    return apply_matrix(input, pattern_net_unitary(pattern), q0);
}

}  // namespace

ProtocolReport check_pattern(const OneWayPattern &pattern, const StateVector &input, double tol) {
    ProtocolReport report = pattern_report(pattern);
    StateVector want = pattern_target(pattern, input);
    for (const auto &run : execute_adaptive_all(pattern, input)) {
        report.branches.push_back(adaptive_branch(run, want, tol));
        report.weight_sum += run.weight;
        report.pass = report.pass && report.branches.back().pass;
    }
    report.pass = report.pass && std::abs(report.weight_sum - 1) <= tol;
    return report;
}

ProtocolReport check_pattern_sampled(
    const OneWayPattern &pattern, const StateVector &input, size_t shots, uint64_t seed, double tol) {
    ProtocolReport report = pattern_report(pattern);
    StateVector want = pattern_target(pattern, input);
    Rng rng(seed);
    for (size_t shot = 0; shot < shots; shot++) {
        AdaptiveRun run = execute_adaptive(pattern, input, rng);
        report.branches.push_back(adaptive_branch(run, want, tol));
        report.weight_sum += run.weight;
        report.pass = report.pass && report.branches.back().pass;
    }
    return report;
}

}  // namespace mbqc
