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

#ifndef MBQC_JSON_IO_H
#define MBQC_JSON_IO_H

#include <optional>
#include <string_view>

#include "json.hpp"
#include "mbqc/compiler.h"
#include "mbqc/verify.h"

namespace mbqc {

/// Key order is insertion order, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text);

Json to_json(const Complex &c);
Json to_json(const StateVector &state);
Json to_json(const Matrix &m);
Json to_json(const Observable &o);
Json to_json(const PauliString &p);
Json to_json(const MeasurementRecord &record);
Json to_json(const Branch &branch, bool include_state);
Json to_json(const ProtocolTrace &trace);
Json to_json(const ProtocolReport &report);
Json to_json(const OneWayPattern &pattern);
Json to_json(const GstSequence &sequence);
Json to_json(const EulerZxz &euler);
Json to_json(const ChainSpec &spec);

/// [[re, im], ...] in amplitude index order; a bare number is a real amplitude.
StateVector state_from_json(const Json &j);
Matrix matrix_from_json(const Json &j);
PauliString pauli_from_json(const Json &j);
ChainSpec chain_spec_from_json(const Json &j);
GstSequence gst_sequence_from_json(const Json &j);
CircuitIR circuit_from_json(const Json &j);

struct PatternFile {
    OneWayPattern pattern;
    std::optional<StateVector> input_state;
};

/// {"angles": [...], "input_state": [...]}; "X" and "Y" stand for 0 and pi/2.
PatternFile pattern_from_json(const Json &j);

}  // namespace mbqc

#endif
