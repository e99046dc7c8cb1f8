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

#ifndef BLINDGATE_ASSISTED_H
#define BLINDGATE_ASSISTED_H

#include <span>
#include <vector>

#include "blindgate/two_party.h"

namespace blindgate {

/// Secure assisted computational-basis measurement of one wire.
///
/// Alice pads the wire with Z^k X^j, Bob measures and reports m, and Alice
/// outputs m xor j. Throws ProtocolAbort if Bob never answers.
bool assisted_measure(AliceMachine &alice, size_t wire, Bob &bob);

/// Exact distribution of the bits produced by assisted measurement of `wires`
/// in order, averaged over Alice's keys and over Bob's outcomes. Bit k of an
/// outcome index is the result for wires[k]. Neither argument is modified.
std::vector<double> assisted_measure_distribution(
    const AliceMachine &alice, std::span<const size_t> wires, const Bob &bob);

/// One round: pad with Z^k X^j, Bob applies H, Alice undoes with Z^j X^k.
void assisted_hadamard(AliceMachine &alice, size_t wire, Bob &bob);

/// One round with keys (j, k) on the control and (l, m) on the target.
void assisted_cnot(AliceMachine &alice, size_t control, size_t target, Bob &bob);

/// Two rounds. Round 1 asks for T and leaves T^dagger behind when j = 1.
/// Round 2 always asks for S, on the real wire when j = 1 and on a dummy |0>
/// when j = 0, so Bob's requests do not depend on j.
void assisted_t(AliceMachine &alice, size_t wire, Bob &bob);

/// Deliberately broken protocols, kept as negative controls for the checks.
namespace fixtures {

/// assisted_cnot without the Z^m correction on the control.
void assisted_cnot_without_control_fix(AliceMachine &alice, size_t control, size_t target, Bob &bob);

/// assisted_t that pads round 2 with the round-1 bits instead of fresh ones.
void assisted_t_reusing_keys(AliceMachine &alice, size_t wire, Bob &bob);

}  // namespace fixtures

}  // namespace blindgate

#endif
