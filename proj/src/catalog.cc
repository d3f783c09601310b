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

#include "mbqc/catalog.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "mbqc/compiler.h"
#include "mbqc/error.h"

namespace mbqc {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::string> split_label(const std::string &label) {
    std::vector<std::string> parts;
    const std::string sep = "⊗";
    size_t start = 0;
    while (true) {
        size_t at = label.find(sep, start);
        if (at == std::string::npos) {
            parts.push_back(label.substr(start));
            return parts;
        }
        parts.push_back(label.substr(start, at - start));
        start = at + sep.size();
    }
}

std::string outcomes_str(const std::vector<Outcome> &outcomes) {
    std::string s = "(";
    for (size_t k = 0; k < outcomes.size(); k++) {
        s += (k ? "," : "");
        s += outcomes[k] > 0 ? "+1" : "-1";
    }
    return s + ")";
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

Json sequence_json(const MeasurementPlan &plan) {
    Json out = Json::array();
    for (const auto &step : plan) {
        out.push_back(describe_step(step));
    }
    return out;
}

void append_sequence(std::ostringstream &text, const MeasurementPlan &plan) {
    text << "  sequence: {";
    for (size_t k = 0; k < plan.size(); k++) {
        text << (k ? ", " : "") << describe_step(plan[k]);
    }
    text << "}\n";
}

void append_report(std::ostringstream &text, const ProtocolReport &report) {
    text << "  target: " << report.target << "\n";
    for (const auto &b : report.branches) {
        text << "  branch " << outcomes_str(b.outcomes) << " weight " << fmt(b.weight) << " byproduct "
             << (b.pauli ? b.pauli->letters() : std::string("none")) << (b.pass ? "  ok" : "  FAIL") << "\n";
    }
    text << "  weight sum " << fmt(report.weight_sum) << "\n";
}

DemoResult finish(std::string figure, std::string title, const ProtocolTrace &trace, const ProtocolReport &report,
                  Json checks, bool extra_pass, const std::string &extra_text) {
    DemoResult result;
    result.figure = figure;
    result.pass = report.pass && extra_pass;
    std::ostringstream text;
    text << "demo " << figure << ": " << title << "\n";
    append_sequence(text, trace.plan);
    append_report(text, report);
    text << extra_text;
    text << "  result: " << (result.pass ? "PASS" : "FAIL") << "\n";
    result.text = text.str();
    result.report = Json{
        {"figure", figure},
        {"title", title},
        {"sequence", sequence_json(trace.plan)},
        {"checks", std::move(checks)},
        {"report", to_json(report)},
        {"pass", result.pass},
    };
    return result;
}

DemoResult gst_demo(std::string figure, std::string title, const LocalUnitary &v1, const std::vector<Matrix> &printed,
                    uint64_t seed, double tol) {
    ProtocolTrace trace = gst_plan(GstStep{v1, gates::H(), 0, 1});
    bool match = trace.plan.size() == printed.size();
    for (size_t k = 0; match && k < printed.size(); k++) {
        match = trace.plan[k].observable.matrix().max_abs_diff(printed[k]) <= 1e-10;
    }
    auto report = check_protocol(trace, random_state(1, seed), tol);
    std::string extra = std::string("  printed observables regenerated: ") + (match ? "yes" : "NO") + "\n";
    return finish(figure, title, trace, report, Json{{"printed_observables_match", match}}, match, extra);
}

DemoResult pattern_demo(std::string figure, std::string title, const OneWayPattern &pattern, const Matrix &expected,
                        uint64_t seed, double tol) {
    ProtocolTrace trace = pattern_trace(pattern, PatternOrder::UnitaryCluster);
    Matrix net = pattern_net_unitary(pattern);
    bool match = equal_up_to_phase(net, expected, tol);
    auto report = check_protocol(trace, random_state(1, seed), tol);
    std::string extra = "  net unitary: " + gates::identify(net) + (match ? " (as claimed)" : " (MISMATCH)") + "\n";
    Json angles = pattern.angles;
    return finish(figure, title, trace, report,
                  Json{{"angles", angles}, {"net_unitary", gates::identify(net)}, {"net_unitary_matches", match}}, match,
                  extra);
}

DemoResult adaptive_demo(std::string figure, std::string title, const OneWayPattern &pattern, const Matrix &expected,
                         uint64_t seed, double tol) {
    Matrix net = pattern_net_unitary(pattern);
    bool match = equal_up_to_phase(net, expected, tol);
    StateVector input = random_state(1, seed);
    const size_t q0[1] = {0};
    StateVector want = apply_matrix(input, net, q0);
    DemoResult result;
    result.figure = figure;
    std::ostringstream text;
    text << "demo " << figure << ": " << title << "\n";
    text << "  angles: {";
    for (size_t k = 0; k < pattern.angles.size(); k++) {
        text << (k ? ", " : "") << fmt(pattern.angles[k]);
    }
    text << "}\n";
    Json branches = Json::array();
    double weight_sum = 0;
    bool all = true;
    for (const auto &run : execute_adaptive_all(pattern, input)) {
        std::vector<Outcome> outcomes;
        Json measured = Json::array();
        for (const auto &r : run.records) {
            outcomes.push_back(r.outcome);
        }
        for (double a : run.measured_angles) {
            measured.push_back(a);
        }
        double fidelity = std::abs(want.inner(run.corrected()));
        bool pass = fidelity >= 1 - tol;
        all = all && pass;
        weight_sum += run.weight;
        text << "  branch " << outcomes_str(outcomes) << " weight " << fmt(run.weight) << " frame "
             << run.frame.current.letters() << (pass ? "  ok" : "  FAIL") << "\n";
        branches.push_back(Json{{"outcomes", outcomes},
                                {"weight", run.weight},
                                {"measured_angles", measured},
                                {"frame", run.frame.current.letters()},
                                {"pass", pass}});
    }
    bool weights_ok = std::abs(weight_sum - 1) <= tol;
    text << "  weight sum " << fmt(weight_sum) << "\n";
    text << "  net unitary matches printed product: " << (match ? "yes" : "NO") << "\n";
    result.pass = all && weights_ok && match;
    text << "  result: " << (result.pass ? "PASS" : "FAIL") << "\n";
    result.text = text.str();
    Json angles = pattern.angles;
    result.report = Json{
        {"figure", figure},
        {"title", title},
        {"angles", angles},
        {"checks", Json{{"net_unitary_matches", match}, {"weight_sum", weight_sum}}},
        {"branches", branches},
        {"pass", result.pass},
    };
    return result;
}

Matrix cz_plus_expected(Complex alpha, Complex beta, Outcome i, Outcome j) {
    StateVector base(2, {alpha, alpha, beta, -beta});
    std::string letters = {i == -1 ? 'Z' : 'I', j == -1 ? 'Z' : 'I'};
    StateVector v = PauliString(letters).apply(base).scaled(1 / std::sqrt(2.0));
    return Matrix(2, {v[0], v[1], v[2], v[3]});
}

}  // namespace

std::string describe_step(const MeasurementStep &step) {
    auto parts = split_label(step.observable.label());
    std::string out;
    if (parts.size() == step.targets.size()) {
        for (size_t k = 0; k < parts.size(); k++) {
            out += (k ? "⊗" : "") + parts[k] + "^(" + std::to_string(step.targets[k]) + ")";
        }
        return out;
    }
    out = step.observable.label() + "^(";
    for (size_t k = 0; k < step.targets.size(); k++) {
        out += (k ? "," : "") + std::to_string(step.targets[k]);
    }
    return out + ")";
}

std::vector<std::string> protocol_names() {
    return {"state-transfer", "gst-h", "gst-hsdag", "gst-ht", "cnot", "cz-plus", "broken-cz"};
}

NamedProtocol named_protocol(std::string_view name, uint64_t seed) {
    if (name == "state-transfer") {
        return {state_transfer_plan(0, 1), random_state(1, seed)};
    }
    if (name == "gst-h") {
        return {gst_plan(GstStep{gates::I(), gates::H(), 0, 1}), random_state(1, seed)};
    }
    if (name == "gst-hsdag") {
        return {gst_plan(GstStep{gates::S_dag(), gates::H(), 0, 1}), random_state(1, seed)};
    }
    if (name == "gst-ht") {
        return {gst_plan(GstStep{gates::T(), gates::H(), 0, 1}), random_state(1, seed)};
    }
    if (name == "cnot") {
        return {cnot_plan(0, 1, 2), random_state(2, seed)};
    }
    if (name == "cz-plus") {
        return {cz_plus_plan(0, 1), random_state(1, seed).tensor(basis_state(Basis::Plus))};
    }
    if (name == "broken-cz") {
        ProtocolTrace trace = cz_plus_plan(0, 1);
        trace.name = "broken-cz";
        return {std::move(trace), random_state(1, seed).tensor(basis_state(Basis::Zero))};
    }
    fail(ErrorCode::InvalidArgument, "unknown protocol \"" + std::string(name) + "\"");
}

std::vector<std::string> demo_ids() {
    return {"1", "4", "5", "6", "7", "9", "11", "12", "14", "15", "16L", "16R"};
}

DemoResult run_demo(std::string_view figure, uint64_t seed, double tol) {
    const Matrix x = PauliString("X").matrix();
    const Matrix y = PauliString("Y").matrix();
    const Matrix z = PauliString("Z").matrix();
    const Matrix zx = PauliString("ZX").matrix();
    if (figure == "1") {
        auto p = named_protocol("state-transfer", seed);
        auto report = check_protocol(p.trace, p.input, tol);
        return finish("1", "state transfer", p.trace, report, Json::object(), true, "");
    }
    if (figure == "4") {
        return gst_demo("4", "step of simulation of H (V1=I, V2=H)", gates::I(), {z, zx, x}, seed, tol);
    }
    if (figure == "5") {
        return gst_demo("5", "step of simulation of HS† (V1=S†, V2=H)", gates::S_dag(), {z, zx, y}, seed, tol);
    }
    if (figure == "6") {
        Matrix x_minus_y = (x - y) * Complex(1 / std::sqrt(2.0));
        return gst_demo("6", "step of simulation of HT (V1=T, V2=H)", gates::T(), {z, zx, x_minus_y}, seed, tol);
    }
    if (figure == "7") {
        auto p = named_protocol("cnot", seed);
        auto report = check_protocol(p.trace, p.input, tol);
        return finish("7", "step of simulation of CNot", p.trace, report, Json::object(), true, "");
    }
    if (figure == "9") {
        auto p = named_protocol("cz-plus", seed);
        auto report = check_protocol(p.trace, p.input, tol);
        StateVector phi = random_state(1, seed);
        StateVector initial = p.trace.initial_state(p.input);
        Json psi2 = Json::array();
        bool all_up_to_phase = true;
        std::ostringstream extra;
        for (Outcome i : {+1, -1}) {
            for (Outcome j : {+1, -1}) {
                const Outcome forced[2] = {i, j};
                Branch b = run_forced(initial, p.trace.plan, forced);
                Matrix expected = cz_plus_expected(phi[0], phi[1], i, j);
                StateVector expected_state(2, {expected(0, 0), expected(0, 1), expected(1, 0), expected(1, 1)});
                double diff = 0;
                for (size_t k = 0; k < 4; k++) {
                    diff = std::max(diff, std::abs(b.state[k] - expected_state[k]));
                }
                bool componentwise = diff <= 1e-10;
                bool up_to_phase = equal_up_to_global_phase(b.state, expected_state, tol);
                Complex phase = expected_state.inner(b.state);
                all_up_to_phase = all_up_to_phase && up_to_phase;
                psi2.push_back(Json{
                    {"i", i},
                    {"j", j},
                    {"componentwise", componentwise},
                    {"up_to_global_phase", up_to_phase},
                    {"relative_phase", to_json(phase)},
                });
                extra << "  psi2 (i=" << (i > 0 ? "+1" : "-1") << ", j=" << (j > 0 ? "+1" : "-1")
                      << "): componentwise " << (componentwise ? "match" : "differs") << ", up to phase "
                      << (up_to_phase ? "match" : "differs") << " (relative phase " << fmt(phase.real()) << "+"
                      << fmt(phase.imag()) << "i)\n";
            }
        }
        return finish("9", "C_Z on |phi>⊗|+> without ancilla", p.trace, report, Json{{"psi2", psi2}}, all_up_to_phase,
                      extra.str());
    }
    if (figure == "11") {
        const size_t n = 4;
        ProtocolTrace trace = cluster_trace(n);
        StateVector input = ChainSpec{n, random_state(1, seed)}.initial_state();
        auto report = check_protocol(trace, input, tol);
        bool counts = trace.plan.size() == 2 * (n - 1) && trace.extra_qubits() == 0;
        std::string extra = "  measurements " + std::to_string(trace.plan.size()) + ", extra qubits " +
                            std::to_string(trace.extra_qubits()) + "\n";
        return finish("11", "measurement cascade for a 4-qubit cluster state", trace, report,
                      Json{{"measurements", trace.plan.size()}, {"extra_qubits", trace.extra_qubits()}}, counts, extra);
    }
    if (figure == "12") {
        return pattern_demo("12", "one-way simulation of H, measurements {X,Y,Y,Y}", OneWayPattern{{0, kPi / 2, kPi / 2, kPi / 2}},
                            gates::H().matrix(), seed, tol);
    }
    if (figure == "14") {
        return pattern_demo("14", "one-way simulation of S†", OneWayPattern{{0, 0, kPi / 2, 0}}, gates::S_dag().matrix(),
                            seed, tol);
    }
    if (figure == "15") {
        Rng rng(seed);
        std::uniform_real_distribution<double> angle(0, 2 * kPi);
        double xi = angle(rng), eta = angle(rng), zeta = angle(rng);
        const Matrix h = gates::H().matrix();
        Matrix printed = h * gates::rz(-zeta).matrix() * h * gates::rz(-eta).matrix() * h * gates::rz(-xi).matrix() * h;
        return adaptive_demo("15", "general one-qubit unitary H R_z(-zeta) H R_z(-eta) H R_z(-xi) H",
                             OneWayPattern{{0, xi, eta, zeta}}, printed, seed, tol);
    }
    if (figure == "16L") {
        return pattern_demo("16L", "two-qubit one-way simulation of H", OneWayPattern{{0}}, gates::H().matrix(), seed, tol);
    }
    if (figure == "16R") {
        return pattern_demo("16R", "one-way simulation of (HS†)(HS†)(H) = S", OneWayPattern{{0, kPi / 2, kPi / 2}},
                            gates::S().matrix(), seed, tol);
    }
    fail(ErrorCode::InvalidArgument, "unknown figure \"" + std::string(figure) + "\"");
}

}  // namespace mbqc
