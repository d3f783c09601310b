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

#include "mbqc/error.h"

namespace mbqc {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::OutOfRange:
            return "OutOfRange";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::ZeroProbabilityBranch:
            return "ZeroProbabilityBranch";
        case ErrorCode::PlanTooLong:
            return "PlanTooLong";
        case ErrorCode::NonTranslatable:
            return "NonTranslatable";
        case ErrorCode::UnsupportedGate:
            return "UnsupportedGate";
        case ErrorCode::NotProductState:
            return "NotProductState";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace mbqc
