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

#ifndef MBQC_MBQC_H
#define MBQC_MBQC_H

#include <stddef.h>
#include <stdint.h>

#if defined(MBQC_BUILDING_LIBRARY)
#define MBQC_API __attribute__((visibility("default")))
#else
#define MBQC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mbqc_status {
    MBQC_OK = 0,
    MBQC_ERR_INVALID_ARGUMENT = 1,
    MBQC_ERR_OUT_OF_RANGE = 2,
    MBQC_ERR_DIMENSION_MISMATCH = 3,
    MBQC_ERR_NOT_UNITARY = 4,
    MBQC_ERR_NOT_HERMITIAN = 5,
    MBQC_ERR_ZERO_PROBABILITY_BRANCH = 6,
    MBQC_ERR_PLAN_TOO_LONG = 7,
    MBQC_ERR_NON_TRANSLATABLE = 8,
    MBQC_ERR_UNSUPPORTED_GATE = 9,
    MBQC_ERR_NOT_PRODUCT_STATE = 10,
    MBQC_ERR_PARSE = 11,
    MBQC_ERR_NULL_POINTER = 12,
    MBQC_ERR_INTERNAL = 13,
} mbqc_status;

typedef enum mbqc_mode {
    MBQC_MODE_ENUMERATE = 0,
    MBQC_MODE_SAMPLE = 1,
} mbqc_mode;

/// How a pattern is checked. ADAPTIVE feeds the Pauli frame into later angles;
/// the other three measure fixed angles and rely on Pauli equivalence alone.
typedef enum mbqc_order {
    MBQC_ORDER_ADAPTIVE = 0,
    MBQC_ORDER_UNITARY_CLUSTER = 1,
    MBQC_ORDER_PREP_FIRST = 2,
    MBQC_ORDER_INTERLEAVED = 3,
} mbqc_order;

typedef struct mbqc_verify_options {
    uint64_t seed;
    double tol;
    mbqc_mode mode;
    size_t shots;
    mbqc_order order;
} mbqc_verify_options;

typedef struct mbqc_state mbqc_state;
typedef struct mbqc_pattern mbqc_pattern;
typedef struct mbqc_report mbqc_report;

MBQC_API const char *mbqc_version(void);
MBQC_API const char *mbqc_status_name(mbqc_status status);
/// Message of the last failing call on this thread; empty after a success.
MBQC_API const char *mbqc_last_error(void);
/// Frees strings returned through char** out parameters.
MBQC_API void mbqc_string_free(char *s);

/// seed 42, tol 1e-9, enumerate, 1000 shots, adaptive.
MBQC_API mbqc_verify_options mbqc_verify_options_default(void);

MBQC_API mbqc_status mbqc_state_random(size_t num_qubits, uint64_t seed, mbqc_state **out);
MBQC_API mbqc_status mbqc_state_basis(size_t num_qubits, size_t index, mbqc_state **out);
/// [[re, im], ...] amplitudes; normalized on load.
MBQC_API mbqc_status mbqc_state_from_json(const char *json, mbqc_state **out);
MBQC_API mbqc_status mbqc_state_to_json(const mbqc_state *state, char **out);
MBQC_API size_t mbqc_state_num_qubits(const mbqc_state *state);
MBQC_API mbqc_status mbqc_state_amplitude(const mbqc_state *state, size_t index, double *re, double *im);
/// |<a|b>|.
MBQC_API mbqc_status mbqc_state_fidelity(const mbqc_state *a, const mbqc_state *b, double *out);
MBQC_API void mbqc_state_free(mbqc_state *state);

MBQC_API mbqc_status mbqc_pattern_create(const double *angles, size_t count, mbqc_pattern **out);
/// {"angles": [...], "input_state": [...]}; the input state is optional.
MBQC_API mbqc_status mbqc_pattern_from_json(const char *json, mbqc_pattern **out);
MBQC_API mbqc_status mbqc_pattern_to_json(const mbqc_pattern *pattern, char **out);
MBQC_API size_t mbqc_pattern_length(const mbqc_pattern *pattern);
MBQC_API mbqc_status mbqc_pattern_angle(const mbqc_pattern *pattern, size_t k, double *out);
/// Row-major 2x2 as interleaved re, im pairs (8 doubles).
MBQC_API mbqc_status mbqc_pattern_net_unitary(const mbqc_pattern *pattern, double *out8);
MBQC_API mbqc_status mbqc_pattern_simplify(const mbqc_pattern *pattern, mbqc_pattern **out);
/// Executes with feedforward. `input` may be NULL: the pattern's own input state, else a seeded random one.
MBQC_API mbqc_status mbqc_pattern_run(
    const mbqc_pattern *pattern, const mbqc_state *input, mbqc_mode mode, uint64_t seed, char **json_out);
MBQC_API void mbqc_pattern_free(mbqc_pattern *pattern);

/// Decomposes a 2x2 unitary (8 doubles as in mbqc_pattern_net_unitary) into a pattern.
/// The JSON holds the pattern, its GST sequence and the observables measured.
MBQC_API mbqc_status mbqc_compile_unitary(const double *u8, int simplify, char **json_out);
/// Same as mbqc_compile_unitary for a named gate (I, X, Y, Z, H, S, Sdg, T, Tdg).
MBQC_API mbqc_status mbqc_compile_gate(const char *name, int simplify, char **json_out);
/// Pattern JSON to GST sequence JSON and back, chosen by the document's shape.
MBQC_API mbqc_status mbqc_translate(const char *json, char **json_out);

MBQC_API mbqc_status mbqc_verify_named(const char *name, const mbqc_verify_options *options, mbqc_report **out);
MBQC_API mbqc_status mbqc_verify_pattern(
    const mbqc_pattern *pattern, const mbqc_state *input, const mbqc_verify_options *options, mbqc_report **out);
/// Circuit JSON {"n", "gates", optional "input_state"}; input defaults to |0...0>.
MBQC_API mbqc_status mbqc_verify_circuit(const char *json, const mbqc_verify_options *options, mbqc_report **out);
MBQC_API int mbqc_report_passed(const mbqc_report *report);
MBQC_API size_t mbqc_report_branch_count(const mbqc_report *report);
MBQC_API mbqc_status mbqc_report_to_json(const mbqc_report *report, char **out);
MBQC_API void mbqc_report_free(mbqc_report *report);

/// JSON array of names accepted by mbqc_verify_named.
MBQC_API mbqc_status mbqc_protocol_names(char **json_out);
/// JSON array of demo ids.
MBQC_API mbqc_status mbqc_demo_ids(char **json_out);
MBQC_API mbqc_status mbqc_demo(const char *id, uint64_t seed, double tol, int *passed, char **text_out, char **json_out);

#ifdef __cplusplus
}
#endif

#endif
