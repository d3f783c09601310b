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

#include "mbqc/mbqc.h"

#include <cstring>
#include <optional>
#include <string>

#include "mbqc/catalog.h"
#include "mbqc/error.h"
#include "mbqc/json_io.h"

struct mbqc_state {
    mbqc::StateVector value;
};

struct mbqc_pattern {
    mbqc::OneWayPattern value;
    std::optional<mbqc::StateVector> input;
};

struct mbqc_report {
    mbqc::ProtocolReport value;
};

namespace {

using namespace mbqc;

thread_local std::string last_error;

mbqc_status status_for(ErrorCode code) {
    return static_cast<mbqc_status>(static_cast<int>(code));
}

template <typename F>
mbqc_status guard(F &&body) {
    try {
        body();
        last_error.clear();
        return MBQC_OK;
    } catch (const Error &e) {
        last_error = e.what();
        return status_for(e.code());
    } catch (const std::exception &e) {
        last_error = e.what();
        return MBQC_ERR_INTERNAL;
    }
}

mbqc_status null_pointer(const char *what) {
    last_error = std::string(what) + " is NULL";
    return MBQC_ERR_NULL_POINTER;
}

char *dup_string(const std::string &s) {
    char *out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Matrix matrix_from_pairs(const double *u8) {
    Matrix m(2);
    for (size_t k = 0; k < 4; k++) {
        m(k / 2, k % 2) = Complex(u8[2 * k], u8[2 * k + 1]);
    }
    return m;
}

StateVector loaded_state(const Json &j) {
    StateVector s = state_from_json(j);
    if (s.norm() <= kNormTol) {
        fail(ErrorCode::InvalidArgument, "state has zero norm");
    }
    return s.normalized();
}

Json compile_json(const LocalUnitary &u, bool simplify) {
    OneWayPattern pattern = compile_unitary_to_pattern(u);
    if (simplify) {
        pattern = simplify_pattern(pattern);
    }
    Json observables = Json::array();
    bool in_family = true;
    for (const auto &o : induced_observables(pattern)) {
        observables.push_back(o.label());
        in_family = in_family && family_membership(o, Family::F2);
    }
    Json out = to_json(pattern);
    out["euler"] = to_json(euler_zxz(u));
    out["net_unitary"] = to_json(pattern_net_unitary(pattern));
    out["gst_sequence"] = pattern.angles.empty() ? Json{{"steps", Json::array()}} : to_json(pattern_to_gst(pattern));
    out["observables"] = std::move(observables);
    out["observables_in_f2"] = in_family;
    return out;
}

ProtocolReport verify_trace(const ProtocolTrace &trace, const StateVector &input, const mbqc_verify_options &o) {
    if (o.mode == MBQC_MODE_SAMPLE) {
        return check_protocol_sampled(trace, input, o.shots, o.seed, o.tol);
    }
    return check_protocol(trace, input, o.tol);
}

}  // namespace

extern "C" {

const char *mbqc_version(void) {
    return "0.1.0";
}

const char *mbqc_status_name(mbqc_status status) {
    switch (status) {
        case MBQC_OK:
            return "OK";
        case MBQC_ERR_NULL_POINTER:
            return "NullPointer";
        case MBQC_ERR_INTERNAL:
            return "Internal";
        default:
            if (status >= MBQC_ERR_INVALID_ARGUMENT && status <= MBQC_ERR_PARSE) {
                return error_code_name(static_cast<ErrorCode>(status));
            }
            return "Unknown";
    }
}

const char *mbqc_last_error(void) {
    return last_error.c_str();
}

void mbqc_string_free(char *s) {
    delete[] s;
}

mbqc_verify_options mbqc_verify_options_default(void) {
    return mbqc_verify_options{42, kTol, MBQC_MODE_ENUMERATE, 1000, MBQC_ORDER_ADAPTIVE};
}

mbqc_status mbqc_state_random(size_t num_qubits, uint64_t seed, mbqc_state **out) {
    if (!out) {
        return null_pointer("out");
    }
    return guard([&] { *out = new mbqc_state{random_state(num_qubits, seed)}; });
}

mbqc_status mbqc_state_basis(size_t num_qubits, size_t index, mbqc_state **out) {
    if (!out) {
        return null_pointer("out");
    }
    return guard([&] {
        if (num_qubits == 0 || num_qubits > 24) {
            fail(ErrorCode::OutOfRange, "qubit count must be in 1..24");
        }
        if (index >= (size_t{1} << num_qubits)) {
            fail(ErrorCode::OutOfRange, "basis index out of range");
        }
        std::vector<Complex> amps(size_t{1} << num_qubits);
        amps[index] = 1;
        *out = new mbqc_state{StateVector(num_qubits, std::move(amps))};
    });
}

mbqc_status mbqc_state_from_json(const char *json, mbqc_state **out) {
    if (!json || !out) {
        return null_pointer(json ? "out" : "json");
    }
    return guard([&] { *out = new mbqc_state{loaded_state(parse_json(json))}; });
}

mbqc_status mbqc_state_to_json(const mbqc_state *state, char **out) {
    if (!state || !out) {
        return null_pointer(state ? "out" : "state");
    }
    return guard([&] { *out = dup_string(to_json(state->value).dump()); });
}

size_t mbqc_state_num_qubits(const mbqc_state *state) {
    return state ? state->value.num_qubits() : 0;
}

mbqc_status mbqc_state_amplitude(const mbqc_state *state, size_t index, double *re, double *im) {
    if (!state || !re || !im) {
        return null_pointer("argument");
    }
    return guard([&] {
        if (index >= state->value.dim()) {
            fail(ErrorCode::OutOfRange, "amplitude index out of range");
        }
        *re = state->value[index].real();
        *im = state->value[index].imag();
    });
}

mbqc_status mbqc_state_fidelity(const mbqc_state *a, const mbqc_state *b, double *out) {
    if (!a || !b || !out) {
        return null_pointer("argument");
    }
    return guard([&] {
        if (a->value.num_qubits() != b->value.num_qubits()) {
            fail(ErrorCode::DimensionMismatch, "states have different qubit counts");
        }
        *out = std::abs(a->value.inner(b->value));
    });
}

void mbqc_state_free(mbqc_state *state) {
    delete state;
}

mbqc_status mbqc_pattern_create(const double *angles, size_t count, mbqc_pattern **out) {
    if (!out || (!angles && count > 0)) {
        return null_pointer(out ? "angles" : "out");
    }
    return guard([&] {
        OneWayPattern p{std::vector<double>(angles, angles + count)};
        p.validate();
        *out = new mbqc_pattern{std::move(p), std::nullopt};
    });
}

mbqc_status mbqc_pattern_from_json(const char *json, mbqc_pattern **out) {
    if (!json || !out) {
        return null_pointer(json ? "out" : "json");
    }
    return guard([&] {
        PatternFile file = pattern_from_json(parse_json(json));
        *out = new mbqc_pattern{std::move(file.pattern), std::move(file.input_state)};
    });
}

mbqc_status mbqc_pattern_to_json(const mbqc_pattern *pattern, char **out) {
    if (!pattern || !out) {
        return null_pointer(pattern ? "out" : "pattern");
    }
    return guard([&] {
        Json j = to_json(pattern->value);
        if (pattern->input) {
            j["input_state"] = to_json(*pattern->input);
        }
        *out = dup_string(j.dump());
    });
}

size_t mbqc_pattern_length(const mbqc_pattern *pattern) {
    return pattern ? pattern->value.angles.size() : 0;
}

mbqc_status mbqc_pattern_angle(const mbqc_pattern *pattern, size_t k, double *out) {
    if (!pattern || !out) {
        return null_pointer("argument");
    }
    return guard([&] {
        if (k >= pattern->value.angles.size()) {
            fail(ErrorCode::OutOfRange, "angle index out of range");
        }
        *out = pattern->value.angles[k];
    });
}

mbqc_status mbqc_pattern_net_unitary(const mbqc_pattern *pattern, double *out8) {
    if (!pattern || !out8) {
        return null_pointer("argument");
    }
    return guard([&] {
        Matrix m = pattern_net_unitary(pattern->value);
        for (size_t k = 0; k < 4; k++) {
            out8[2 * k] = m(k / 2, k % 2).real();
            out8[2 * k + 1] = m(k / 2, k % 2).imag();
        }
    });
}

mbqc_status mbqc_pattern_simplify(const mbqc_pattern *pattern, mbqc_pattern **out) {
    if (!pattern || !out) {
        return null_pointer("argument");
    }
    return guard([&] { *out = new mbqc_pattern{simplify_pattern(pattern->value), pattern->input}; });
}

mbqc_status mbqc_pattern_run(
    const mbqc_pattern *pattern, const mbqc_state *input, mbqc_mode mode, uint64_t seed, char **json_out) {
    if (!pattern || !json_out) {
        return null_pointer("argument");
    }
    return guard([&] {
        StateVector in = input ? input->value : pattern->input ? *pattern->input : random_state(1, seed);
        std::vector<AdaptiveRun> runs;
        if (mode == MBQC_MODE_SAMPLE) {
            Rng rng(seed);
            runs.push_back(execute_adaptive(pattern->value, in, rng));
        } else {
            runs = execute_adaptive_all(pattern->value, in);
        }
        Json branches = Json::array();
        for (const auto &run : runs) {
            Json outcomes = Json::array();
            for (const auto &r : run.records) {
                outcomes.push_back(r.outcome);
            }
            branches.push_back(Json{
                {"outcomes", std::move(outcomes)},
                {"weight", run.weight},
                {"measured_angles", run.measured_angles},
                {"frame", run.frame.current.letters()},
                {"output", to_json(run.output)},
                {"corrected", to_json(run.corrected())},
            });
        }
        Json j{
            {"angles", pattern->value.angles},
            {"mode", mode == MBQC_MODE_SAMPLE ? "sample" : "enumerate"},
            {"input_state", to_json(in)},
            {"net_unitary", gates::identify(pattern_net_unitary(pattern->value))},
            {"branches", std::move(branches)},
        };
        *json_out = dup_string(j.dump(2));
    });
}

void mbqc_pattern_free(mbqc_pattern *pattern) {
    delete pattern;
}

mbqc_status mbqc_compile_unitary(const double *u8, int simplify, char **json_out) {
    if (!u8 || !json_out) {
        return null_pointer("argument");
    }
    return guard([&] { *json_out = dup_string(compile_json(LocalUnitary(matrix_from_pairs(u8)), simplify).dump(2)); });
}

mbqc_status mbqc_compile_gate(const char *name, int simplify, char **json_out) {
    if (!name || !json_out) {
        return null_pointer("argument");
    }
    return guard([&] {
        auto found = gates::by_name(name);
        if (!found) {
            fail(ErrorCode::InvalidArgument, std::string("unknown gate \"") + name + "\"");
        }
        LocalUnitary u = *found;
        if (u.arity() != 1) {
            fail(ErrorCode::UnsupportedGate, std::string("compile takes one-qubit gates; got ") + name);
        }
        *json_out = dup_string(compile_json(u, simplify).dump(2));
    });
}

mbqc_status mbqc_translate(const char *json, char **json_out) {
    if (!json || !json_out) {
        return null_pointer("argument");
    }
    return guard([&] {
        Json j = parse_json(json);
        Json out;
        if (j.is_object() && j.contains("angles")) {
            out = to_json(pattern_to_gst(pattern_from_json(j).pattern));
        } else if (j.is_object() && j.contains("steps")) {
            out = to_json(gst_to_pattern(gst_sequence_from_json(j)));
        } else {
            fail(ErrorCode::ParseError, "expected a pattern (\"angles\") or a GST sequence (\"steps\")");
        }
        *json_out = dup_string(out.dump(2));
    });
}

mbqc_status mbqc_verify_named(const char *name, const mbqc_verify_options *options, mbqc_report **out) {
    if (!name || !out) {
        return null_pointer("argument");
    }
    mbqc_verify_options o = options ? *options : mbqc_verify_options_default();
    return guard([&] {
        NamedProtocol p = named_protocol(name, o.seed);
        *out = new mbqc_report{verify_trace(p.trace, p.input, o)};
    });
}

mbqc_status mbqc_verify_pattern(
    const mbqc_pattern *pattern, const mbqc_state *input, const mbqc_verify_options *options, mbqc_report **out) {
    if (!pattern || !out) {
        return null_pointer("argument");
    }
    mbqc_verify_options o = options ? *options : mbqc_verify_options_default();
    return guard([&] {
        StateVector in = input ? input->value : pattern->input ? *pattern->input : random_state(1, o.seed);
        if (o.order == MBQC_ORDER_ADAPTIVE) {
            *out = new mbqc_report{o.mode == MBQC_MODE_SAMPLE
                                       ? check_pattern_sampled(pattern->value, in, o.shots, o.seed, o.tol)
                                       : check_pattern(pattern->value, in, o.tol)};
            return;
        }
        PatternOrder order = o.order == MBQC_ORDER_PREP_FIRST     ? PatternOrder::PrepFirst
                             : o.order == MBQC_ORDER_INTERLEAVED ? PatternOrder::Interleaved
                                                                 : PatternOrder::UnitaryCluster;
        *out = new mbqc_report{verify_trace(pattern_trace(pattern->value, order), in, o)};
    });
}

mbqc_status mbqc_verify_circuit(const char *json, const mbqc_verify_options *options, mbqc_report **out) {
    if (!json || !out) {
        return null_pointer("argument");
    }
    mbqc_verify_options o = options ? *options : mbqc_verify_options_default();
    return guard([&] {
        Json j = parse_json(json);
        CircuitIR circuit = circuit_from_json(j);
        ProtocolTrace trace = lower_circuit(circuit);
        StateVector in = j.contains("input_state") ? loaded_state(j["input_state"]) : [&] {
            std::vector<Complex> amps(size_t{1} << circuit.num_qubits);
            amps[0] = 1;
            return StateVector(circuit.num_qubits, std::move(amps));
        }();
        *out = new mbqc_report{verify_trace(trace, in, o)};
    });
}

int mbqc_report_passed(const mbqc_report *report) {
    return report && report->value.pass ? 1 : 0;
}

size_t mbqc_report_branch_count(const mbqc_report *report) {
    return report ? report->value.branches.size() : 0;
}

mbqc_status mbqc_report_to_json(const mbqc_report *report, char **out) {
    if (!report || !out) {
        return null_pointer("argument");
    }
    return guard([&] { *out = dup_string(to_json(report->value).dump(2)); });
}

void mbqc_report_free(mbqc_report *report) {
    delete report;
}

mbqc_status mbqc_protocol_names(char **json_out) {
    if (!json_out) {
        return null_pointer("json_out");
    }
    return guard([&] { *json_out = dup_string(Json(protocol_names()).dump()); });
}

mbqc_status mbqc_demo_ids(char **json_out) {
    if (!json_out) {
        return null_pointer("json_out");
    }
    return guard([&] { *json_out = dup_string(Json(demo_ids()).dump()); });
}

mbqc_status mbqc_demo(const char *id, uint64_t seed, double tol, int *passed, char **text_out, char **json_out) {
    if (!id || !passed) {
        return null_pointer("argument");
    }
    return guard([&] {
        DemoResult d = run_demo(id, seed, tol);
        *passed = d.pass ? 1 : 0;
        if (text_out) {
            *text_out = dup_string(d.text);
        }
        if (json_out) {
            *json_out = dup_string(d.report.dump(2));
        }
    });
}

}  // extern "C"
