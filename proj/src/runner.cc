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

#include "blindgate/runner.h"

#include <algorithm>

#include "blindgate/assisted.h"

namespace blindgate {

namespace {

void run_gate(AliceMachine &alice, GateKind kind, std::span<const size_t> qubits, Bob &bob) {
    switch (kind) {
        case GateKind::kH:
            assisted_hadamard(alice, qubits[0], bob);
            break;
        case GateKind::kT:
            assisted_t(alice, qubits[0], bob);
            break;
        case GateKind::kCnot:
            assisted_cnot(alice, qubits[0], qubits[1], bob);
            break;
        case GateKind::kMeasure:
            throw std::logic_error("measurement is not a gate slot");
    }
}

void run_junk(AliceMachine &alice, GateKind kind, Bob &bob) {
    size_t arity = kind == GateKind::kCnot ? 2 : 1;
    std::vector<size_t> dummies;
    for (size_t k = 0; k < arity; k++) {
        dummies.push_back(alice.prepare_zero());
    }
    run_gate(alice, kind, dummies, bob);
    std::vector<size_t> order(dummies.rbegin(), dummies.rend());
    alice.release(order);
}

}  // namespace

std::vector<BlindSlot> blind_schedule(const Circuit &circuit, size_t cycles) {
    auto ops = circuit.unitary_ops();
    std::vector<BlindSlot> slots;
    size_t next = 0;
    while (next < ops.size()) {
        for (GateKind kind : kBlindCycle) {
            if (next < ops.size() && ops[next].kind == kind) {
                slots.push_back({kind, next++});
            } else {
                slots.push_back({kind, std::nullopt});
            }
        }
    }
    size_t needed = slots.size() / 3;
    if (cycles != 0 && cycles < needed) {
        throw std::invalid_argument(
            "circuit needs " + std::to_string(needed) + " cycles, more than the " + std::to_string(cycles) +
            " requested");
    }
    for (size_t c = needed; c < cycles; c++) {
        for (GateKind kind : kBlindCycle) {
            slots.push_back({kind, std::nullopt});
        }
    }
    return slots;
}

size_t minimal_cycles(const Circuit &circuit) {
    return blind_schedule(circuit).size() / 3;
}

ExecutionRecord execute_circuit(
    AliceMachine &alice, const Circuit &circuit, Bob &bob, RunMode mode, size_t cycles, bool exact_measurements) {
    ExecutionRecord record;
    if (mode == RunMode::kPlain) {
        for (const auto &op : circuit.ops()) {
            if (op.kind != GateKind::kMeasure) {
                run_gate(alice, op.kind, op.qubits, bob);
                record.gate_requests++;
            }
        }
    } else {
        auto ops = circuit.unitary_ops();
        auto slots = blind_schedule(circuit, cycles);
        for (const auto &slot : slots) {
            if (slot.op_index.has_value()) {
                run_gate(alice, slot.kind, ops[*slot.op_index].qubits, bob);
            } else {
                run_junk(alice, slot.kind, bob);
            }
            record.gate_requests++;
        }
        record.cycles = slots.size() / 3;
    }
    // A measured wire is never touched again, so measuring it last gives the same statistics.
    record.measured_wires = circuit.measured_wires();
    if (exact_measurements) {
        record.distribution = assisted_measure_distribution(alice, record.measured_wires, bob);
    }
    for (size_t w : record.measured_wires) {
        record.measurements.push_back(assisted_measure(alice, w, bob));
    }
    return record;
}

RunResult run_circuit(const Circuit &circuit, Bob &bob, const RunOptions &options) {
    StateVector initial = options.initial_state.value_or(StateVector::zero(std::max<size_t>(circuit.num_qubits(), 1)));
    if (initial.num_qubits() < circuit.num_qubits()) {
        throw DimensionError("initial state has fewer qubits than the circuit");
    }
    AliceMachine alice(std::move(initial), KeySource::random(derive_seed(options.seed, 0)));
    ExecutionRecord record;
    try {
        record = execute_circuit(alice, circuit, bob, options.mode, options.cycles, options.exact_measurements);
    } catch (const ProtocolAbort &e) {
        throw CircuitAbort(e.what(), alice.transcript());
    }
    return RunResult{
        alice.state(),
        std::move(record.measured_wires),
        std::move(record.measurements),
        std::move(record.distribution),
        alice.transcript(),
        alice.op_log(),
        record.cycles,
        record.gate_requests,
    };
}

}  // namespace blindgate
