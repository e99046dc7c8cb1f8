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

#ifndef BLINDGATE_GATES_H
#define BLINDGATE_GATES_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blindgate/matrix.h"

namespace blindgate {

/// A named gate. The unitary acts on `arity` qubits; local qubit 0 is the
/// least significant bit of the matrix index.
struct GateSpec {
    std::string name;
    size_t arity;
    UnitaryMatrix unitary;

    static GateSpec make(std::string name, UnitaryMatrix unitary);
};

namespace gates {

UnitaryMatrix x();
UnitaryMatrix z();
UnitaryMatrix h();
/// diag(1, i) = T^2.
UnitaryMatrix s();
/// The pi/8 gate diag(1, sqrt(i)).
UnitaryMatrix t();
/// Local qubit 0 is the control, local qubit 1 the target.
UnitaryMatrix cnot();
UnitaryMatrix cz();
UnitaryMatrix swap();
/// Controls on local qubits 0 and 1, target on local qubit 2.
UnitaryMatrix toffoli();
/// Control on local qubit 0, swaps local qubits 1 and 2.
UnitaryMatrix fredkin();

/// Looks up a built-in gate by (case-insensitive) name: I, X, Z, XZ, Y, H, S,
/// SDG, T, TDG, CNOT/CX, CZ, SWAP, TOFFOLI/CCX, FREDKIN/CSWAP.
std::optional<GateSpec> by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace gates

}  // namespace blindgate

#endif
