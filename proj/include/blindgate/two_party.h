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

#ifndef BLINDGATE_TWO_PARTY_H
#define BLINDGATE_TWO_PARTY_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "blindgate/matrix.h"
#include "blindgate/pauli.h"
#include "blindgate/simulator.h"

namespace blindgate {

/// Alice's supply of one-time-pad bits: either seeded coin flips or a fixed
/// script (used to enumerate key assignments). A scripted source yields 0
/// once the script is exhausted.
class KeySource {
   public:
    static KeySource random(uint64_t seed);
    static KeySource scripted(std::vector<bool> bits);

    bool next();
    size_t consumed() const {
        return consumed_;
    }

   private:
    KeySource() = default;
    std::optional<Rng> rng_;
    std::vector<bool> script_;
    size_t consumed_ = 0;
};

enum class RequestKind { kH, kCnot, kT, kS, kMeasure, kGate };

/// What Alice asks Bob to do. `qubit_ids` are fresh per-message sequence
/// numbers and carry no information about Alice's wires.
struct GateRequest {
    RequestKind kind;
    std::string label;
    std::optional<UnitaryMatrix> gate;
    std::vector<uint32_t> qubit_ids;
};

/// One exchange as seen by Bob: Alice sends qubits with a request, Bob
/// returns qubits (gates) or bits (measurements).
struct TranscriptRound {
    std::string label;
    std::vector<uint32_t> qubit_ids;
    size_t qubits_sent = 0;
    size_t qubits_returned = 0;
    std::vector<bool> bits_returned;
    bool completed = false;
    /// Key bits Alice had drawn when the payload was sent (analysis only).
    size_t keys_consumed_at_send = 0;
};

struct Transcript {
    std::vector<TranscriptRound> rounds;
    /// Reduced density matrix of each round's payload at the moment it was
    /// sent, in qubit-id order. Recorded for security analysis; never shown to Bob.
    std::vector<Matrix> payload_views;

    std::vector<std::string> labels() const;
    /// Label and qubit counts only; the part of the transcript whose equality defines blindness.
    std::string structure() const;
    /// Line-oriented log: `round <i> request=<label> qubits=<count> dir=<A->B|B->A>`.
    std::string export_log() const;
};

struct Honest {};
/// Applies `substitute` instead of any requested gate of the same arity.
struct WrongGate {
    UnitaryMatrix substitute;
};
/// Applies a fresh Haar-random unitary in place of every requested gate, and
/// before every requested measurement.
struct Scramble {};
/// Honest on gates, flips every reported measurement bit.
struct LieOnMeasurement {};
/// Never returns anything.
struct Drop {};

using BobStrategy = std::variant<Honest, WrongGate, Scramble, LieOnMeasurement, Drop>;

std::string strategy_name(const BobStrategy &strategy);

struct MeasurementBranch {
    double probability;
    std::vector<bool> reported;
    StateVector state;
};

/// The untrusted universal party. Operates on the payload qubits it has been
/// handed, which live at `positions` of the shared simulation register.
class Bob {
   public:
    explicit Bob(BobStrategy strategy = Honest{}, uint64_t seed = 0);

    const BobStrategy &strategy() const {
        return strategy_;
    }

    void apply_gate(const GateRequest &request, StateVector &reg, std::span<const size_t> positions);
    std::vector<bool> measure(const GateRequest &request, StateVector &reg, std::span<const size_t> positions);
    /// Every outcome Bob may report, with probabilities and post-measurement registers.
    std::vector<MeasurementBranch> measurement_branches(
        const GateRequest &request, const StateVector &reg, std::span<const size_t> positions);

   private:
    void check_alive(const GateRequest &request) const;
    BobStrategy strategy_;
    Rng rng_;
};

/// Operations Alice is permitted to perform.
enum class Primitive {
    kPrepareZero,
    kPauli,
    kControlledPauli,
    kSwap,
    kControlledSwap,
    kCoinFlip,
    kSendToBob,
    kReceiveFromBob,
    kClassical,
};

const char *primitive_name(Primitive p);

struct OpRecord {
    Primitive kind;
    std::string detail;
};

/// True iff every logged operation is one of Alice's permitted primitives.
bool respects_resource_model(std::span<const OpRecord> log);

struct AliceBranch;

/// Alice: holds the data register plus any dummy qubits, and can only prepare
/// |0>, apply (classically controlled) Paulis and SWAPs, flip coins, do
/// classical bookkeeping and exchange qubits with Bob. There is no operation
/// for measuring or for applying any other gate.
class AliceMachine {
   public:
    AliceMachine(StateVector data, KeySource keys);

    size_t num_data_wires() const {
        return data_wires_;
    }
    size_t num_qubits() const {
        return reg_.num_qubits();
    }
    /// Simulation state of the whole register (data wires first, then dummies).
    const StateVector &state() const {
        return reg_;
    }
    const std::vector<bool> &key_store() const {
        return keys_used_;
    }
    size_t keys_consumed() const {
        return keys_used_.size();
    }
    const std::vector<OpRecord> &op_log() const {
        return log_;
    }
    const Transcript &transcript() const {
        return transcript_;
    }
    bool is_measured(size_t wire) const;

    bool flip_coin();
    void apply_pauli(const PauliOperator &p, std::span<const size_t> qubits);
    void apply_pauli_if(bool condition, const PauliOperator &p, std::span<const size_t> qubits);
    void apply_pauli(const PauliOperator &p, std::initializer_list<size_t> qubits) {
        apply_pauli(p, std::span<const size_t>(qubits.begin(), qubits.size()));
    }
    void apply_pauli_if(bool condition, const PauliOperator &p, std::initializer_list<size_t> qubits) {
        apply_pauli_if(condition, p, std::span<const size_t>(qubits.begin(), qubits.size()));
    }
    void swap(size_t a, size_t b);
    void swap_if(bool condition, size_t a, size_t b);
    /// Prepares a dummy |0> qubit above all current qubits; returns its index.
    size_t prepare_zero();
    /// Stops tracking the most recently prepared dummies (LIFO).
    void release(std::span<const size_t> dummies);
    void note_classical(std::string what);

    /// Sends `qubits` to Bob with a gate request and receives them back.
    void request_gate(
        Bob &bob, RequestKind kind, const std::string &label, const UnitaryMatrix &gate,
        std::span<const size_t> qubits);
    /// Sends `qubits` to Bob for computational-basis measurement; returns Bob's report.
    /// The qubits stay with Bob.
    std::vector<bool> request_measurement(Bob &bob, std::span<const size_t> qubits);

    /// As request_measurement, but returns every possible report with its
    /// probability and the machine state that follows it.
    std::vector<AliceBranch> request_measurement_branches(Bob &bob, std::span<const size_t> qubits) const;

    /// Copy of this machine drawing future key bits from `keys`.
    AliceMachine with_keys(KeySource keys) const;

   private:
    GateRequest open_round(RequestKind kind, const std::string &label, std::span<const size_t> qubits);
    void check_live(std::span<const size_t> qubits) const;
    void log(Primitive kind, std::string detail);

    StateVector reg_;
    size_t data_wires_;
    KeySource keys_;
    std::vector<bool> keys_used_;
    std::vector<OpRecord> log_;
    Transcript transcript_;
    std::vector<bool> measured_;
    uint32_t next_qubit_id_ = 0;
};

struct AliceBranch {
    double probability;
    std::vector<bool> reported;
    AliceMachine machine;
};

}  // namespace blindgate

#endif
