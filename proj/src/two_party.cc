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

#include "blindgate/two_party.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "blindgate/errors.h"

namespace blindgate {

KeySource KeySource::random(uint64_t seed) {
    KeySource k;
    k.rng_.emplace(seed);
    return k;
}

KeySource KeySource::scripted(std::vector<bool> bits) {
    KeySource k;
    k.script_ = std::move(bits);
    return k;
}

bool KeySource::next() {
    size_t i = consumed_++;
    if (rng_.has_value()) {
        return rng_->coin();
    }
    return i < script_.size() && script_[i];
}

std::vector<std::string> Transcript::labels() const {
    std::vector<std::string> out;
    for (const auto &r : rounds) {
        out.push_back(r.label);
    }
    return out;
}

std::string Transcript::structure() const {
    std::ostringstream out;
    for (const auto &r : rounds) {
        out << r.label << '/' << r.qubits_sent << '/' << r.qubits_returned << '/' << r.bits_returned.size() << ';';
    }
    return out.str();
}

std::string Transcript::export_log() const {
    std::ostringstream out;
    for (size_t i = 0; i < rounds.size(); i++) {
        const auto &r = rounds[i];
        out << "round " << i << " request=" << r.label << " qubits=" << r.qubits_sent << " dir=A->B\n";
        if (r.completed) {
            out << "round " << i << " request=" << r.label << " qubits=" << r.qubits_returned << " dir=B->A\n";
        }
    }
    return out.str();
}

std::string strategy_name(const BobStrategy &strategy) {
    struct Visitor {
        std::string operator()(const Honest &) const {
            return "honest";
        }
        std::string operator()(const WrongGate &) const {
            return "wrong-gate";
        }
        std::string operator()(const Scramble &) const {
            return "scramble";
        }
        std::string operator()(const LieOnMeasurement &) const {
            return "lie";
        }
        std::string operator()(const Drop &) const {
            return "drop";
        }
    };
    return std::visit(Visitor{}, strategy);
}

Bob::Bob(BobStrategy strategy, uint64_t seed) : strategy_(std::move(strategy)), rng_(seed) {
}

void Bob::check_alive(const GateRequest &request) const {
    if (std::holds_alternative<Drop>(strategy_)) {
        throw ProtocolAbort("Bob kept the payload of the " + request.label + " request");
    }
}

void Bob::apply_gate(const GateRequest &request, StateVector &reg, std::span<const size_t> positions) {
    check_alive(request);
    if (!request.gate.has_value()) {
        throw std::invalid_argument("gate request without a gate");
    }
    if (std::holds_alternative<Scramble>(strategy_)) {
        reg.apply(haar_unitary(positions.size(), rng_), positions);
        return;
    }
    if (const auto *wrong = std::get_if<WrongGate>(&strategy_)) {
        if (wrong->substitute.dim() == request.gate->dim()) {
            reg.apply(wrong->substitute, positions);
            return;
        }
    }
    reg.apply(*request.gate, positions);
}

std::vector<bool> Bob::measure(const GateRequest &request, StateVector &reg, std::span<const size_t> positions) {
    check_alive(request);
    if (std::holds_alternative<Scramble>(strategy_)) {
        reg.apply(haar_unitary(positions.size(), rng_), positions);
    }
    bool lie = std::holds_alternative<LieOnMeasurement>(strategy_);
    std::vector<bool> out;
    for (size_t q : positions) {
        auto [bit, next] = blindgate::measure(std::move(reg), q, rng_);
        reg = std::move(next);
        out.push_back(bit != lie);
    }
    return out;
}

std::vector<MeasurementBranch> Bob::measurement_branches(
    const GateRequest &request, const StateVector &reg, std::span<const size_t> positions) {
    check_alive(request);
    StateVector base = reg;
    if (std::holds_alternative<Scramble>(strategy_)) {
        base.apply(haar_unitary(positions.size(), rng_), positions);
    }
    bool lie = std::holds_alternative<LieOnMeasurement>(strategy_);
    auto dist = marginal_distribution(base, positions);
    std::vector<MeasurementBranch> out;
    for (uint64_t outcome = 0; outcome < dist.size(); outcome++) {
        if (dist[outcome] <= 1e-15) {
            continue;
        }
        StateVector s = base;
        std::vector<bool> reported;
        for (size_t k = 0; k < positions.size(); k++) {
            bool bit = (outcome >> k) & 1;
            s.collapse(positions[k], bit);
            reported.push_back(bit != lie);
        }
        out.push_back(MeasurementBranch{dist[outcome], std::move(reported), std::move(s)});
    }
    return out;
}

const char *primitive_name(Primitive p) {
    switch (p) {
        case Primitive::kPrepareZero:
            return "prepare-zero";
        case Primitive::kPauli:
            return "pauli";
        case Primitive::kControlledPauli:
            return "controlled-pauli";
        case Primitive::kSwap:
            return "swap";
        case Primitive::kControlledSwap:
            return "controlled-swap";
        case Primitive::kCoinFlip:
            return "coin-flip";
        case Primitive::kSendToBob:
            return "send";
        case Primitive::kReceiveFromBob:
            return "receive";
        case Primitive::kClassical:
            return "classical";
    }
    return "unknown";
}

bool respects_resource_model(std::span<const OpRecord> log) {
    return std::all_of(log.begin(), log.end(), [](const OpRecord &r) {
        switch (r.kind) {
            case Primitive::kPrepareZero:
            case Primitive::kPauli:
            case Primitive::kControlledPauli:
            case Primitive::kSwap:
            case Primitive::kControlledSwap:
            case Primitive::kCoinFlip:
            case Primitive::kSendToBob:
            case Primitive::kReceiveFromBob:
            case Primitive::kClassical:
                return true;
        }
        return false;
    });
}

AliceMachine::AliceMachine(StateVector data, KeySource keys)
    : reg_(std::move(data)), data_wires_(reg_.num_qubits()), keys_(std::move(keys)), measured_(data_wires_, false) {
}

bool AliceMachine::is_measured(size_t wire) const {
    return wire < measured_.size() && measured_[wire];
}

void AliceMachine::log(Primitive kind, std::string detail) {
    log_.push_back(OpRecord{kind, std::move(detail)});
}

void AliceMachine::check_live(std::span<const size_t> qubits) const {
    for (size_t q : qubits) {
        if (q >= reg_.num_qubits()) {
            throw std::out_of_range("qubit " + std::to_string(q) + " is not in Alice's register");
        }
        if (measured_[q]) {
            throw std::logic_error("qubit " + std::to_string(q) + " was handed to Bob for measurement");
        }
    }
}

bool AliceMachine::flip_coin() {
    bool b = keys_.next();
    keys_used_.push_back(b);
    log(Primitive::kCoinFlip, "key[" + std::to_string(keys_used_.size() - 1) + "]");
    return b;
}

void AliceMachine::apply_pauli(const PauliOperator &p, std::span<const size_t> qubits) {
    check_live(qubits);
    if (p.num_qubits() != qubits.size()) {
        throw DimensionError("Pauli size does not match its qubit list");
    }
    if (!p.is_identity_up_to_phase()) {
        reg_.apply(p.to_matrix(), qubits);
    }
    log(Primitive::kPauli, p.str());
}

void AliceMachine::apply_pauli_if(bool condition, const PauliOperator &p, std::span<const size_t> qubits) {
    check_live(qubits);
    if (p.num_qubits() != qubits.size()) {
        throw DimensionError("Pauli size does not match its qubit list");
    }
    if (condition && !p.is_identity_up_to_phase()) {
        reg_.apply(p.to_matrix(), qubits);
    }
    log(Primitive::kControlledPauli, p.str());
}

void AliceMachine::swap(size_t a, size_t b) {
    size_t q[2] = {a, b};
    check_live(q);
    reg_.swap_qubits(a, b);
    log(Primitive::kSwap, std::to_string(a) + "," + std::to_string(b));
}

void AliceMachine::swap_if(bool condition, size_t a, size_t b) {
    size_t q[2] = {a, b};
    check_live(q);
    if (condition) {
        reg_.swap_qubits(a, b);
    }
    log(Primitive::kControlledSwap, std::to_string(a) + "," + std::to_string(b));
}

size_t AliceMachine::prepare_zero() {
    size_t q = reg_.append_zero_qubit();
    measured_.push_back(false);
    log(Primitive::kPrepareZero, std::to_string(q));
    return q;
}

void AliceMachine::release(std::span<const size_t> dummies) {
    size_t n = reg_.num_qubits();
    std::vector<size_t> sorted(dummies.begin(), dummies.end());
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); i++) {
        if (sorted[i] != n - sorted.size() + i || sorted[i] < data_wires_) {
            throw std::logic_error("only the most recently prepared dummy qubits can be released");
        }
    }
    reg_.discard(sorted);
    measured_.resize(reg_.num_qubits());
}

void AliceMachine::note_classical(std::string what) {
    log(Primitive::kClassical, std::move(what));
}

GateRequest AliceMachine::open_round(RequestKind kind, const std::string &label, std::span<const size_t> qubits) {
    check_live(qubits);
    GateRequest request{kind, label, std::nullopt, {}};
    for (size_t i = 0; i < qubits.size(); i++) {
        request.qubit_ids.push_back(next_qubit_id_++);
    }
    TranscriptRound round;
    round.label = label;
    round.qubit_ids = request.qubit_ids;
    round.qubits_sent = qubits.size();
    round.keys_consumed_at_send = keys_used_.size();
    transcript_.rounds.push_back(std::move(round));
    transcript_.payload_views.push_back(reduced_density(reg_, qubits));
    log(Primitive::kSendToBob, label);
    return request;
}

void AliceMachine::request_gate(
    Bob &bob, RequestKind kind, const std::string &label, const UnitaryMatrix &gate,
    std::span<const size_t> qubits) {
    if (gate.dim() != (size_t{1} << qubits.size())) {
        throw DimensionError("request for a " + std::to_string(gate.num_qubits()) + "-qubit gate on " +
                             std::to_string(qubits.size()) + " qubits");
    }
    GateRequest request = open_round(kind, label, qubits);
    request.gate = gate;
    bob.apply_gate(request, reg_, qubits);
    auto &round = transcript_.rounds.back();
    round.qubits_returned = qubits.size();
    round.completed = true;
    log(Primitive::kReceiveFromBob, label);
}

std::vector<bool> AliceMachine::request_measurement(Bob &bob, std::span<const size_t> qubits) {
    GateRequest request = open_round(RequestKind::kMeasure, "MEASURE", qubits);
    auto bits = bob.measure(request, reg_, qubits);
    for (size_t q : qubits) {
        measured_[q] = true;
    }
    auto &round = transcript_.rounds.back();
    round.bits_returned = bits;
    round.completed = true;
    log(Primitive::kReceiveFromBob, "MEASURE");
    return bits;
}

std::vector<AliceBranch> AliceMachine::request_measurement_branches(Bob &bob, std::span<const size_t> qubits) const {
    AliceMachine sent = *this;
    GateRequest request = sent.open_round(RequestKind::kMeasure, "MEASURE", qubits);
    std::vector<AliceBranch> out;
    for (auto &branch : bob.measurement_branches(request, sent.reg_, qubits)) {
        AliceMachine m = sent;
        m.reg_ = std::move(branch.state);
        for (size_t q : qubits) {
            m.measured_[q] = true;
        }
        auto &round = m.transcript_.rounds.back();
        round.bits_returned = branch.reported;
        round.completed = true;
        m.log(Primitive::kReceiveFromBob, "MEASURE");
        out.push_back(AliceBranch{branch.probability, std::move(branch.reported), std::move(m)});
    }
    return out;
}

AliceMachine AliceMachine::with_keys(KeySource keys) const {
    AliceMachine m = *this;
    m.keys_ = std::move(keys);
    return m;
}

}  // namespace blindgate
