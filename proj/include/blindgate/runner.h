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

#ifndef BLINDGATE_RUNNER_H
#define BLINDGATE_RUNNER_H

#include <optional>
#include <vector>

#include "blindgate/circuit.h"
#include "blindgate/errors.h"
#include "blindgate/two_party.h"

namespace blindgate {

enum class RunMode { kPlain, kBlind };

/// Slot kinds of the blind-mode request cycle, in cycle order.
inline constexpr GateKind kBlindCycle[3] = {GateKind::kH, GateKind::kCnot, GateKind::kT};

struct RunOptions {
    RunMode mode = RunMode::kPlain;
    /// Seed for Alice's key bits.
    uint64_t seed = 0;
    /// Blind mode: pad to this many cycles (0 = as few as possible).
    size_t cycles = 0;
    /// Also compute the exact distribution of the assisted measurements.
    bool exact_measurements = false;
    /// Defaults to |0...0> on circuit.num_qubits() wires.
    std::optional<StateVector> initial_state;
};

/// One blind-mode slot: which circuit operation (if any) it carries.
struct BlindSlot {
    GateKind kind;
    std::optional<size_t> op_index;  // into Circuit::unitary_ops()
};

struct RunResult {
    /// Register over the data wires after the run. Measured wires hold the
    /// post-measurement state Bob kept.
    StateVector final_state;
    std::vector<size_t> measured_wires;
    std::vector<bool> measurements;
    /// Set when RunOptions::exact_measurements is; bit k = measured_wires[k].
    std::optional<std::vector<double>> distribution;
    Transcript transcript;
    std::vector<OpRecord> op_log;
    size_t cycles = 0;
    /// Gate requests issued for circuit operations and padding (a T request counts once).
    size_t gate_requests = 0;
};

/// Bob stopped answering. Carries the transcript up to the failed round.
struct CircuitAbort : ProtocolAbort {
    CircuitAbort(const std::string &what, Transcript partial) : ProtocolAbort(what), partial(std::move(partial)) {
    }
    Transcript partial;
};

/// Greedy assignment of the circuit's gates to H, CNOT, T cycle slots.
std::vector<BlindSlot> blind_schedule(const Circuit &circuit, size_t cycles = 0);
size_t minimal_cycles(const Circuit &circuit);

struct ExecutionRecord {
    std::vector<size_t> measured_wires;
    std::vector<bool> measurements;
    std::optional<std::vector<double>> distribution;
    size_t cycles = 0;
    size_t gate_requests = 0;
};

/// Runs the protocols for `circuit` on an existing machine (no abort wrapping).
ExecutionRecord execute_circuit(
    AliceMachine &alice, const Circuit &circuit, Bob &bob, RunMode mode, size_t cycles = 0,
    bool exact_measurements = false);

/// Executes `circuit` with every gate and measurement delegated to `bob`.
///
/// Plain mode runs the assisted protocol for each operation in order. Blind
/// mode fills the fixed H, CNOT, T cycle, running junk slots on fresh dummy
/// qubits, then measures the measured wires in increasing order.
/// Throws CircuitAbort if Bob drops a request.
RunResult run_circuit(const Circuit &circuit, Bob &bob, const RunOptions &options = {});

}  // namespace blindgate

#endif
