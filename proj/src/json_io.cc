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

#include "mbqc/json_io.h"

#include <numbers>
#include <string>

#include "mbqc/error.h"

namespace mbqc {

namespace {

const char *basis_name(Basis b) {
    switch (b) {
        case Basis::Zero:
            return "zero";
        case Basis::One:
            return "one";
        case Basis::Plus:
            return "plus";
        case Basis::Minus:
            return "minus";
    }
    return "?";
}

Complex complex_from_json(const Json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    fail(ErrorCode::ParseError, "expected a number or [re, im], got " + j.dump());
}

template <typename Fn>
auto guarded(Fn &&fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Json::exception &e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

size_t qubit_field(const Json &j, const char *key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
        fail(ErrorCode::ParseError, std::string("missing or invalid qubit field \"") + key + "\"");
    }
    return j[key].get<size_t>();
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception &e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

Json to_json(const Complex &c) {
    return Json::array({c.real(), c.imag()});
}

Json to_json(const StateVector &state) {
    Json out = Json::array();
    for (const auto &a : state.amplitudes()) {
        out.push_back(to_json(a));
    }
    return out;
}

Json to_json(const Matrix &m) {
    Json out = Json::array();
    for (size_t r = 0; r < m.dim(); r++) {
        Json row = Json::array();
        for (size_t c = 0; c < m.dim(); c++) {
            row.push_back(to_json(m(r, c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const Observable &o) {
    return Json{{"label", o.label()}, {"matrix", to_json(o.matrix())}};
}

Json to_json(const PauliString &p) {
    return Json{{"phase", p.phase_str()}, {"letters", p.letters()}};
}

Json to_json(const MeasurementRecord &record) {
    return Json{
        {"observable", record.observable.label()},
        {"targets", record.targets},
        {"outcome", record.outcome},
        {"probability", record.probability},
    };
}

Json to_json(const Branch &branch, bool include_state) {
    Json records = Json::array();
    for (const auto &r : branch.records) {
        records.push_back(to_json(r));
    }
    Json out{{"records", std::move(records)}, {"weight", branch.weight}};
    if (include_state) {
        out["state"] = to_json(branch.state);
    }
    return out;
}

Json to_json(const ProtocolTrace &trace) {
    Json ancillas = Json::object();
    for (const auto &[q, b] : trace.ancillas) {
        ancillas[std::to_string(q)] = basis_name(b);
    }
    Json preparation = Json::array();
    for (const auto &g : trace.preparation) {
        preparation.push_back(Json{{"gate", gates::identify(g.gate.matrix())}, {"targets", g.targets}});
    }
    Json plan = Json::array();
    for (const auto &step : trace.plan) {
        Json entry = to_json(step.observable);
        entry["targets"] = step.targets;
        plan.push_back(std::move(entry));
    }
    return Json{
        {"name", trace.name},
        {"num_qubits", trace.num_qubits},
        {"input_qubits", trace.input_qubits},
        {"ancillas", std::move(ancillas)},
        {"preparation", std::move(preparation)},
        {"plan", std::move(plan)},
        {"target_unitary", to_json(trace.target_unitary)},
        {"output_qubits", trace.output_qubits},
    };
}

Json to_json(const ProtocolReport &report) {
    Json branches = Json::array();
    for (const auto &b : report.branches) {
        Json entry{{"outcomes", b.outcomes}, {"weight", b.weight}};
        entry["pauli"] = b.pauli ? Json(b.pauli->letters()) : Json(nullptr);
        entry["pass"] = b.pass;
        branches.push_back(std::move(entry));
    }
    return Json{
        {"protocol", report.protocol},
        {"target", report.target},
        {"branches", std::move(branches)},
        {"weight_sum", report.weight_sum},
        {"pass", report.pass},
    };
}

Json to_json(const OneWayPattern &pattern) {
    return Json{{"angles", pattern.angles}};
}

Json to_json(const GstSequence &sequence) {
    Json steps = Json::array();
    for (const auto &step : sequence.steps) {
        Json observables = Json::array();
        for (const auto &m : gst_plan(step).plan) {
            observables.push_back(m.observable.label());
        }
        steps.push_back(Json{
            {"v1", to_json(step.v1.matrix())},
            {"v2", to_json(step.v2.matrix())},
            {"v1_name", gates::identify(step.v1.matrix())},
            {"v2_name", gates::identify(step.v2.matrix())},
            {"source", step.source},
            {"dest", step.dest},
            {"observables", std::move(observables)},
        });
    }
    return Json{{"steps", std::move(steps)}};
}

Json to_json(const EulerZxz &euler) {
    return Json{{"phase", euler.phase}, {"phi1", euler.phi1}, {"phi2", euler.phi2}, {"phi3", euler.phi3}};
}

Json to_json(const ChainSpec &spec) {
    return Json{{"n", spec.length}, {"input_state", to_json(spec.input_state)}};
}

StateVector state_from_json(const Json &j) {
    return guarded([&] {
        if (!j.is_array() || j.empty()) {
            fail(ErrorCode::ParseError, "state must be a non-empty array of amplitudes");
        }
        std::vector<Complex> amps;
        for (const auto &e : j) {
            amps.push_back(complex_from_json(e));
        }
        size_t n = qubit_count_for_dim(amps.size());
        if (n == 0) {
            fail(ErrorCode::ParseError, "state needs at least two amplitudes");
        }
        return StateVector(n, std::move(amps));
    });
}

Matrix matrix_from_json(const Json &j) {
    return guarded([&] {
        if (!j.is_array() || j.empty()) {
            fail(ErrorCode::ParseError, "matrix must be an array of rows");
        }
        size_t dim = j.size();
        std::vector<Complex> entries;
        for (const auto &row : j) {
            if (!row.is_array() || row.size() != dim) {
                fail(ErrorCode::ParseError, "matrix must be square");
            }
            for (const auto &e : row) {
                entries.push_back(complex_from_json(e));
            }
        }
        return Matrix(dim, std::move(entries));
    });
}

PauliString pauli_from_json(const Json &j) {
    return guarded([&] {
        std::string phase = j.at("phase").get<std::string>();
        std::string letters = j.at("letters").get<std::string>();
        int power = phase == "+1" ? 0 : phase == "+i" ? 1 : phase == "-1" ? 2 : phase == "-i" ? 3 : -1;
        if (power < 0) {
            fail(ErrorCode::ParseError, "unknown Pauli phase " + phase);
        }
        return PauliString(letters, power);
    });
}

ChainSpec chain_spec_from_json(const Json &j) {
    return guarded([&] {
        ChainSpec spec{qubit_field(j, "n"), state_from_json(j.at("input_state"))};
        spec.validate();
        return spec;
    });
}

GstSequence gst_sequence_from_json(const Json &j) {
    return guarded([&] {
        GstSequence sequence;
        for (const auto &s : j.at("steps")) {
            sequence.steps.push_back(GstStep{
                LocalUnitary(matrix_from_json(s.at("v1"))),
                LocalUnitary(matrix_from_json(s.at("v2"))),
                qubit_field(s, "source"),
                qubit_field(s, "dest"),
            });
        }
        sequence.validate();
        return sequence;
    });
}

CircuitIR circuit_from_json(const Json &j) {
    return guarded([&] {
        CircuitIR circuit;
        circuit.num_qubits = qubit_field(j, "n");
        for (const auto &g : j.at("gates")) {
            std::string type = g.at("type").get<std::string>();
            if (type == "u1") {
                std::optional<LocalUnitary> u;
                if (g.contains("matrix")) {
                    u = LocalUnitary(matrix_from_json(g.at("matrix")));
                } else if (g.contains("name")) {
                    u = gates::by_name(g.at("name").get<std::string>());
                }
                if (!u) {
                    fail(ErrorCode::ParseError, "u1 gate needs a \"matrix\" or a known \"name\"");
                }
                circuit.gates.push_back(CircuitGate::single(qubit_field(g, "q"), *u));
            } else if (type == "cnot") {
                circuit.gates.push_back(CircuitGate::cnot(qubit_field(g, "control"), qubit_field(g, "target")));
            } else {
                fail(ErrorCode::ParseError, "unknown gate type " + type);
            }
        }
        circuit.validate();
        return circuit;
    });
}

PatternFile pattern_from_json(const Json &j) {
    return guarded([&] {
        PatternFile file;
        if (!j.is_object() || !j.contains("angles") || !j["angles"].is_array()) {
            fail(ErrorCode::ParseError, "pattern needs an \"angles\" array");
        }
        for (const auto &a : j["angles"]) {
            if (a.is_number()) {
                file.pattern.angles.push_back(a.get<double>());
            } else if (a == "X") {
                file.pattern.angles.push_back(0);
            } else if (a == "Y") {
                file.pattern.angles.push_back(std::numbers::pi / 2);
            } else {
                fail(ErrorCode::ParseError, "angles are radians, \"X\" or \"Y\"; got " + a.dump());
            }
        }
        file.pattern.validate();
        if (j.contains("input_state")) {
            file.input_state = state_from_json(j["input_state"]);
            if (file.input_state->num_qubits() != 1) {
                fail(ErrorCode::ParseError, "pattern input must be a single qubit");
            }
            if (!file.input_state->is_normalized(1e-9)) {
                fail(ErrorCode::ParseError, "pattern input must be normalized");
            }
        }
        return file;
    });
}

}  // namespace mbqc
