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

#ifndef BLINDGATE_CLI_H
#define BLINDGATE_CLI_H

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "blindgate/matrix.h"
#include "blindgate/two_party.h"

namespace blindgate {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitAbort = 3;

/// Entry point of the `blindgate` tool. Returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Parses one row per line of whitespace-separated entries such as `1`,
/// `-0.5i`, `0.7071+0.7071i`. Throws ParseError.
Matrix parse_matrix_text(std::string_view text);

/// honest, wrong-gate, scramble, lie, drop. WrongGate substitutes `substitute`.
std::optional<BobStrategy> strategy_from_name(std::string_view name, const UnitaryMatrix &substitute);

}  // namespace blindgate

#endif
