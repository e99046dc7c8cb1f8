// Copyright 2026 The Blindgate Authors
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

#ifndef BLINDGATE_ERRORS_H
#define BLINDGATE_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blindgate {

/// Operand sizes disagree (qubit counts, matrix dimensions, vector lengths).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A request exceeds the dense-simulation qubit cap.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// A protocol could not complete because Bob did not return the payload.
struct ProtocolAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line` is 1-based, or 0 when not applicable.
struct ParseError : std::runtime_error {
    ParseError(size_t line, const std::string &message)
        : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line(line) {
    }
    size_t line;
};

}  // namespace blindgate

#endif
