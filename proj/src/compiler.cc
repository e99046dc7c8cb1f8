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

#include "blindgate/compiler.h"

#include "blindgate/errors.h"
#include "blindgate/hierarchy.h"

namespace blindgate {

namespace {

std::vector<PauliOperator> pauli_decode_table(const UnitaryMatrix &g, const std::string &name) {
    size_t n = g.num_qubits();
    std::vector<PauliOperator> table;
    table.reserve(pauli_count(n));
    for (uint64_t e = 0; e < pauli_count(n); e++) {
        auto d = recognize_pauli(decode_for(g, PauliOperator::from_index({e}, n)));
        if (!d.has_value()) {
            throw UnsupportedGate(name + " is not Clifford; it has no one-round protocol");
        }
        table.push_back(*d);
    }
    return table;
}

/// Picks a readable representative for the left-Pauli coset of `d`: a
/// named gate when one fits, else `d` itself.
ScheduledRequest coset_representative(const UnitaryMatrix &d, const std::string &owner, size_t index) {
    size_t n = d.num_qubits();
    for (const auto &name : gates::names()) {
        auto named = gates::by_name(name);
        if (!named.has_value() || named->arity != n) {
            continue;
        }
        if (recognize_pauli(d * named->unitary.adjoint()).has_value()) {
            try {
                return {named->name, named->unitary, pauli_decode_table(named->unitary, named->name)};
            } catch (const UnsupportedGate &) {
                continue;
            }
        }
    }
    std::string label = owner + ".fix" + std::to_string(index);
    return {label, d, pauli_decode_table(d, label)};
}

}  // namespace

PauliOperator draw_pad(AliceMachine &alice, std::span<const size_t> wires) {
    uint64_t x = 0, z = 0;
    for (size_t q = 0; q < wires.size(); q++) {
        x |= (uint64_t)alice.flip_coin() << q;
        z |= (uint64_t)alice.flip_coin() << q;
    }
    PauliOperator e(wires.size(), x, z);
    alice.apply_pauli(e, wires);
    return e;
}

RequestKind request_kind_for(const std::string &name) {
    if (name == "H") {
        return RequestKind::kH;
    }
    if (name == "CNOT") {
        return RequestKind::kCnot;
    }
    if (name == "T") {
        return RequestKind::kT;
    }
    if (name == "S") {
        return RequestKind::kS;
    }
    return RequestKind::kGate;
}

std::vector<std::string> CompiledProtocol::round_labels() const {
    std::vector<std::string> labels{spec_.name};
    for (const auto &r : schedule_) {
        labels.push_back(r.label);
    }
    return labels;
}

void CompiledProtocol::run(AliceMachine &alice, std::span<const size_t> wires, Bob &bob) const {
    size_t n = spec_.arity;
    if (wires.size() != n) {
        throw DimensionError(spec_.name + " acts on " + std::to_string(n) + " wires");
    }
    if (!schedule_.empty() && alice.num_qubits() + n > kMaxQubits) {
        throw CapacityError("not enough room for " + std::to_string(n) + " dummy qubits");
    }
    PauliOperator e = draw_pad(alice, wires);
    alice.request_gate(bob, request_kind_for(spec_.name), spec_.name, spec_.unitary, wires);
    uint64_t key = e.to_index().value;
    size_t coset = coset_[key];
    alice.note_classical("look up correction coset");

    if (!schedule_.empty()) {
        std::vector<size_t> dummies;
        for (size_t q = 0; q < n; q++) {
            dummies.push_back(alice.prepare_zero());
        }
        for (size_t i = 0; i < schedule_.size(); i++) {
            bool route = coset == i + 1;
            for (size_t q = 0; q < n; q++) {
                alice.swap_if(route, wires[q], dummies[q]);
            }
            PauliOperator f = draw_pad(alice, dummies);
            const auto &req = schedule_[i];
            alice.request_gate(bob, request_kind_for(req.label), req.label, req.gate, dummies);
            alice.apply_pauli(req.decodes[f.to_index().value], dummies);
            for (size_t q = 0; q < n; q++) {
                alice.swap_if(route, wires[q], dummies[q]);
            }
        }
        std::vector<size_t> release_order(dummies.rbegin(), dummies.rend());
        alice.release(release_order);
    }
    alice.apply_pauli(residual_[key], wires);
}

CompiledProtocol compile_one_round(const GateSpec &u) {
    CompiledProtocol p(u);
    p.residual_ = pauli_decode_table(u.unitary, u.name);
    p.coset_.assign(p.residual_.size(), 0);
    return p;
}

CompiledProtocol compile_two_round(const GateSpec &u) {
    size_t n = u.arity;
    auto verdict = classify(u.unitary, 3);
    if (!verdict.level.has_value()) {
        throw UnsupportedGate(u.name + " is above level 3; only two-round compilation is supported");
    }
    CompiledProtocol p(u);
    std::vector<UnitaryMatrix> reps;
    for (uint64_t e = 0; e < pauli_count(n); e++) {
        UnitaryMatrix d = decode_for(u.unitary, PauliOperator::from_index({e}, n));
        if (auto pauli = recognize_pauli(d)) {
            p.coset_.push_back(0);
            p.residual_.push_back(*pauli);
            continue;
        }
        size_t found = 0;
        for (size_t c = 0; c < p.schedule_.size(); c++) {
            if (auto pauli = recognize_pauli(d * p.schedule_[c].gate.adjoint())) {
                found = c + 1;
                p.coset_.push_back(found);
                p.residual_.push_back(*pauli);
                break;
            }
        }
        if (found != 0) {
            continue;
        }
        p.schedule_.push_back(coset_representative(d, u.name, p.schedule_.size()));
        auto pauli = recognize_pauli(d * p.schedule_.back().gate.adjoint());
        if (!pauli.has_value()) {
            throw std::logic_error("coset representative does not match its coset");
        }
        p.coset_.push_back(p.schedule_.size());
        p.residual_.push_back(*pauli);
    }
    return p;
}

}  // namespace blindgate
