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

#ifndef BLINDGATE_COMPILER_H
#define BLINDGATE_COMPILER_H

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "blindgate/gates.h"
#include "blindgate/two_party.h"

namespace blindgate {

/// The gate sits too high in the hierarchy for the requested number of rounds.
struct UnsupportedGate : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A Clifford that Bob is asked to apply in the second round, with the Pauli
/// decode for every one-time-pad key (indexed by PauliIndex).
struct ScheduledRequest {
    std::string label;
    UnitaryMatrix gate;
    std::vector<PauliOperator> decodes;
};

/// Executor for a secure assisted gate of hierarchy level at most 3.
///
/// Round 1 pads the wires with a key Pauli E and asks for U. What remains is
/// D_E = U E^dagger U^dagger = P_E G_c, a Pauli times one of finitely many
/// Clifford coset representatives. Every non-identity representative is then
/// requested once, in a fixed order, on either the real wires or fresh dummy
/// wires (chosen by classically controlled SWAPs), so the requests Bob sees
/// do not depend on E.
class CompiledProtocol {
   public:
    const GateSpec &gate() const {
        return spec_;
    }
    /// Round-2 requests, in the order they are sent. Empty for Clifford gates.
    const std::vector<ScheduledRequest> &schedule() const {
        return schedule_;
    }
    std::vector<std::string> round_labels() const;
    /// Key bits drawn per execution.
    size_t key_bits() const {
        return 2 * spec_.arity * (1 + schedule_.size());
    }
    /// Coset (0 = Pauli, i + 1 = schedule()[i]) needed after round 1 with key `key`.
    size_t coset_for_key(PauliIndex key) const {
        return coset_[key.value];
    }
    /// Pauli left over after the coset correction for key `key`.
    const PauliOperator &residual_for_key(PauliIndex key) const {
        return residual_[key.value];
    }

    void run(AliceMachine &alice, std::span<const size_t> wires, Bob &bob) const;
    void run(AliceMachine &alice, std::initializer_list<size_t> wires, Bob &bob) const {
        run(alice, std::span<const size_t>(wires.begin(), wires.size()), bob);
    }

   private:
    friend CompiledProtocol compile_one_round(const GateSpec &u);
    friend CompiledProtocol compile_two_round(const GateSpec &u);
    explicit CompiledProtocol(GateSpec spec) : spec_(std::move(spec)) {
    }

    GateSpec spec_;
    std::vector<size_t> coset_;
    std::vector<PauliOperator> residual_;
    std::vector<ScheduledRequest> schedule_;
};

/// Pads `wires` with a fresh uniformly random Pauli, drawing an x bit then a
/// z bit per wire, and returns it.
PauliOperator draw_pad(AliceMachine &alice, std::span<const size_t> wires);

/// Request kind used on the wire for a gate name (kGate when not special).
RequestKind request_kind_for(const std::string &name);

/// Executor for a Clifford: pad, request, apply the Pauli decode.
/// Throws UnsupportedGate if `u` is not Clifford.
CompiledProtocol compile_one_round(const GateSpec &u);

/// Executor for a level-3 gate using the fixed correction schedule.
/// Throws UnsupportedGate above level 3.
CompiledProtocol compile_two_round(const GateSpec &u);

}  // namespace blindgate

#endif
