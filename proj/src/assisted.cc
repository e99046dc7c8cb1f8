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

#include "blindgate/assisted.h"

#include <functional>

#include "blindgate/gates.h"

namespace blindgate {

namespace {

const PauliOperator kX = PauliOperator::x(1, 0);
const PauliOperator kZ = PauliOperator::z(1, 0);

/// Applies Z^k X^j to one qubit.
void pad(AliceMachine &alice, size_t qubit, bool j, bool k) {
    alice.apply_pauli_if(j, kX, {qubit});
    alice.apply_pauli_if(k, kZ, {qubit});
}

void assisted_t_impl(AliceMachine &alice, size_t wire, Bob &bob, bool fresh_round_two_keys) {
    static const UnitaryMatrix t = gates::t();
    static const UnitaryMatrix s = gates::s();
    bool j = alice.flip_coin();
    bool k = alice.flip_coin();
    pad(alice, wire, j, k);
    alice.request_gate(bob, RequestKind::kT, "T", t, std::span<const size_t>(&wire, 1));
    // X^j Z^k undoes the pad; XTX = T^dagger up to phase leaves T^dagger on the wire when j = 1.
    alice.apply_pauli_if(k, kZ, {wire});
    alice.apply_pauli_if(j, kX, {wire});

    size_t dummy = alice.prepare_zero();
    alice.swap_if(j, wire, dummy);
    bool l = fresh_round_two_keys ? alice.flip_coin() : j;
    bool m = fresh_round_two_keys ? alice.flip_coin() : k;
    pad(alice, dummy, l, m);
    alice.request_gate(bob, RequestKind::kS, "S", s, std::span<const size_t>(&dummy, 1));
    // S Z^m X^l = Z^m (XZ)^l S up to phase.
    alice.note_classical("z = m xor l");
    alice.apply_pauli_if(l, kX, {dummy});
    alice.apply_pauli_if(m != l, kZ, {dummy});
    alice.swap_if(j, wire, dummy);
    alice.release(std::span<const size_t>(&dummy, 1));
}

void assisted_cnot_impl(AliceMachine &alice, size_t control, size_t target, Bob &bob, bool fix_control_phase) {
    static const UnitaryMatrix c = gates::cnot();
    bool j = alice.flip_coin();
    bool k = alice.flip_coin();
    bool l = alice.flip_coin();
    bool m = alice.flip_coin();
    pad(alice, control, j, k);
    pad(alice, target, l, m);
    size_t qubits[2] = {control, target};
    alice.request_gate(bob, RequestKind::kCnot, "CNOT", c, qubits);
    // The inverted control flipped the target.
    alice.apply_pauli_if(j, kX, {target});
    alice.apply_pauli_if(m, kZ, {target});
    alice.apply_pauli_if(l, kX, {target});
    alice.apply_pauli_if(k, kZ, {control});
    alice.apply_pauli_if(j, kX, {control});
    if (fix_control_phase) {
        // Z on the target propagated back to the control as a controlled-(-1).
        alice.apply_pauli_if(m, kZ, {control});
    }
}

}  // namespace

bool assisted_measure(AliceMachine &alice, size_t wire, Bob &bob) {
    bool j = alice.flip_coin();
    bool k = alice.flip_coin();
    pad(alice, wire, j, k);
    bool reported = alice.request_measurement(bob, std::span<const size_t>(&wire, 1))[0];
    alice.note_classical("flip result if j");
    return reported != j;
}

std::vector<double> assisted_measure_distribution(
    const AliceMachine &alice, std::span<const size_t> wires, const Bob &bob) {
    std::vector<double> dist(size_t{1} << wires.size(), 0.0);
    std::function<void(const AliceMachine &, const Bob &, size_t, double, uint64_t)> recurse =
        [&](const AliceMachine &a, const Bob &b, size_t idx, double weight, uint64_t outcome) {
            if (idx == wires.size()) {
                dist[outcome] += weight;
                return;
            }
            for (int key = 0; key < 4; key++) {
                bool j = key & 1, k = key >> 1;
                AliceMachine keyed = a.with_keys(KeySource::scripted({j, k}));
                Bob bob_copy = b;
                bool jj = keyed.flip_coin();
                bool kk = keyed.flip_coin();
                pad(keyed, wires[idx], jj, kk);
                for (auto &branch : keyed.request_measurement_branches(bob_copy, wires.subspan(idx, 1))) {
                    bool bit = branch.reported[0] != jj;
                    recurse(
                        branch.machine, bob_copy, idx + 1, weight * 0.25 * branch.probability,
                        outcome | ((uint64_t)bit << idx));
                }
            }
        };
    recurse(alice, bob, 0, 1.0, 0);
    return dist;
}

void assisted_hadamard(AliceMachine &alice, size_t wire, Bob &bob) {
    static const UnitaryMatrix h = gates::h();
    bool j = alice.flip_coin();
    bool k = alice.flip_coin();
    pad(alice, wire, j, k);
    alice.request_gate(bob, RequestKind::kH, "H", h, std::span<const size_t>(&wire, 1));
    // H Z^k X^j = X^k Z^j H.
    alice.apply_pauli_if(k, kX, {wire});
    alice.apply_pauli_if(j, kZ, {wire});
}

void assisted_cnot(AliceMachine &alice, size_t control, size_t target, Bob &bob) {
    assisted_cnot_impl(alice, control, target, bob, true);
}

void assisted_t(AliceMachine &alice, size_t wire, Bob &bob) {
    assisted_t_impl(alice, wire, bob, true);
}

namespace fixtures {

void assisted_cnot_without_control_fix(AliceMachine &alice, size_t control, size_t target, Bob &bob) {
    assisted_cnot_impl(alice, control, target, bob, false);
}

void assisted_t_reusing_keys(AliceMachine &alice, size_t wire, Bob &bob) {
    assisted_t_impl(alice, wire, bob, false);
}

}  // namespace fixtures

}  // namespace blindgate
