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

#ifndef MBQC_CATALOG_H
#define MBQC_CATALOG_H

#include <string>
#include <string_view>
#include <vector>

#include "mbqc/json_io.h"

namespace mbqc {

/// A ready-to-verify protocol with its seeded input.
struct NamedProtocol {
    ProtocolTrace trace;
    StateVector input;
};

/// state-transfer, gst-h, gst-hsdag, gst-ht, cnot, cz-plus, broken-cz.
/// broken-cz is cz-plus fed |phi> (x) |0> instead of |phi> (x) |+>.
NamedProtocol named_protocol(std::string_view name, uint64_t seed);
std::vector<std::string> protocol_names();

/// "Z^(0)⊗X^(2)" style rendering of a plan step.
std::string describe_step(const MeasurementStep &step);

struct DemoResult {
    std::string figure;
    bool pass = false;
    Json report;
    std::string text;
};

/// Reproduces one figure's protocol and checks its claim.
DemoResult run_demo(std::string_view figure, uint64_t seed, double tol = kTol);
std::vector<std::string> demo_ids();

}  // namespace mbqc

#endif
