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

#include "gtest/gtest.h"

#include "blindgate/gates.h"
#include "oracle.h"

using namespace blindgate;

static Circuit bell() {
    return Circuit(2).h(0).cnot(0, 1).measure(0).measure(1);
}

TEST(circuit, parse) {
    auto c = Circuit::parse(
        "# bell pair\n"
        "h 0\n"
        "CX 0 1   # alias\n"
        "\n"
        "M 0\n"
        "m 1\n");
    ASSERT_EQ(c.num_qubits(), 2u);
    ASSERT_EQ(c.ops(), bell().ops());
    ASSERT_EQ(c.gate_count(), 2u);
    ASSERT_EQ(c.measured_wires(), (std::vector<size_t>{0, 1}));
    ASSERT_EQ(Circuit::parse(c.str()).ops(), c.ops());
}

TEST(circuit, parse_errors_name_the_line) {
    auto line_of = [](const char *text) -> std::string {
        try {
            Circuit::parse(text);
        } catch (const ParseError &e) {
            return e.what();
        }
        return "";
    };
    ASSERT_NE(line_of("H 0\nFOO 1\n").find("line 2"), std::string::npos);
    ASSERT_NE(line_of("CNOT 0\n").find("line 1"), std::string::npos);
    ASSERT_NE(line_of("H x\n").find("line 1"), std::string::npos);
    ASSERT_NE(line_of("H -1\n").find("line 1"), std::string::npos);
    ASSERT_NE(line_of("H 12\n").find("line 1"), std::string::npos);
    ASSERT_NE(line_of("CNOT 1 1\n").find("line 1"), std::string::npos);
    ASSERT_NE(line_of("M 0\n\nH 0\n").find("line 3"), std::string::npos);
    ASSERT_NE(line_of("M 0\nM 0\n").find("line 2"), std::string::npos);
}

TEST(circuit, builder_validation) {
    Circuit c(1);
    c.measure(0);
    ASSERT_THROW(c.h(0), std::invalid_argument);
    ASSERT_THROW(Circuit(2).cnot(0, 0), std::invalid_argument);
    ASSERT_TRUE(c.is_measured(0));
    // Wires beyond the declared width grow the register.
    ASSERT_EQ(Circuit(1).t(3).num_qubits(), 4u);
}

TEST(circuit, simulate_matches_oracle) {
    Rng rng(1);
    for (int trial = 0; trial < 20; trial++) {
        auto c = random_circuit(3, 12, rng);
        oracle::M u = oracle::M::Identity(8, 8);
        for (const auto &op : c.unitary_ops()) {
            switch (op.kind) {
                case GateKind::kH:
                    u = oracle::on_qubit(oracle::H(), op.qubits[0], 3) * u;
                    break;
                case GateKind::kT:
                    u = oracle::on_qubit(oracle::T(), op.qubits[0], 3) * u;
                    break;
                case GateKind::kCnot:
                    u = oracle::cnot(op.qubits[0], op.qubits[1], 3) * u;
                    break;
                case GateKind::kMeasure:
                    break;
            }
        }
        auto psi = haar_state(3, rng);
        auto got = simulate_gates(c, psi);
        ASSERT_LT((got.amplitudes() - u * psi.amplitudes()).norm(), 1e-10);
    }
}

TEST(runner, bell_exact_distribution) {
    Bob bob;
    RunOptions options;
    options.exact_measurements = true;
    for (RunMode mode : {RunMode::kPlain, RunMode::kBlind}) {
        options.mode = mode;
        auto r = run_circuit(bell(), bob, options);
        ASSERT_TRUE(r.distribution.has_value());
        auto want = ideal_distribution(bell(), StateVector::zero(2));
        ASSERT_LE(total_variation(*r.distribution, want), 1e-12);
        ASSERT_NEAR((*r.distribution)[0], 0.5, 1e-12);
        ASSERT_NEAR((*r.distribution)[3], 0.5, 1e-12);
    }
}

TEST(runner, bell_samples_agree) {
    Bob bob;
    for (uint64_t seed = 0; seed < 50; seed++) {
        RunOptions options;
        options.seed = seed;
        auto r = run_circuit(bell(), bob, options);
        ASSERT_EQ(r.measurements.size(), 2u);
        ASSERT_EQ(r.measurements[0], r.measurements[1]);
    }
}

TEST(runner, fidelity_with_direct_simulation) {
    Rng rng(2);
    Bob bob;
    for (int trial = 0; trial < 30; trial++) {
        auto c = random_circuit(3, 10, rng);
        auto psi = haar_state(3, rng);
        for (RunMode mode : {RunMode::kPlain, RunMode::kBlind}) {
            RunOptions options;
            options.mode = mode;
            options.seed = rng.next_u64();
            options.initial_state = psi;
            auto r = run_circuit(c, bob, options);
            ASSERT_GE(fidelity(r.final_state, simulate_gates(c, psi)), 1 - 1e-9);
            ASSERT_TRUE(respects_resource_model(r.op_log));
        }
    }
}

TEST(runner, empty_circuit) {
    Bob bob;
    auto r = run_circuit(Circuit(2), bob);
    ASSERT_TRUE(r.transcript.rounds.empty());
    ASSERT_EQ(r.gate_requests, 0u);
    ASSERT_NEAR(std::abs(r.final_state.amplitude(0)), 1.0, 1e-15);
}

TEST(runner, blind_labels_hide_the_circuit) {
    Bob bob;
    RunOptions options;
    options.mode = RunMode::kBlind;
    options.cycles = 1;
    auto h = run_circuit(Circuit(1).h(0), bob, options);
    auto t = run_circuit(Circuit(1).t(0), bob, options);
    ASSERT_EQ(h.transcript.labels(), t.transcript.labels());
    ASSERT_EQ(h.transcript.structure(), t.transcript.structure());
    ASSERT_EQ(h.transcript.labels(), (std::vector<std::string>{"H", "CNOT", "T", "S"}));
    options.mode = RunMode::kPlain;
    ASSERT_NE(run_circuit(Circuit(1).h(0), bob, options).transcript.labels(),
              run_circuit(Circuit(1).t(0), bob, options).transcript.labels());
}

TEST(runner, blind_request_bound) {
    Rng rng(3);
    for (int trial = 0; trial < 50; trial++) {
        auto c = random_circuit(3, 1 + rng.below(20), rng);
        auto slots = blind_schedule(c);
        ASSERT_EQ(slots.size() % 3, 0u);
        ASSERT_LE(slots.size(), 3 * c.gate_count() + 2);
        size_t real = 0;
        for (const auto &s : slots) {
            if (s.op_index) {
                ASSERT_EQ(c.unitary_ops()[*s.op_index].kind, s.kind);
                ASSERT_EQ(*s.op_index, real);
                real++;
            }
        }
        ASSERT_EQ(real, c.gate_count());
        ASSERT_EQ(minimal_cycles(c), slots.size() / 3);
    }
}

TEST(runner, blind_schedule_worst_case) {
    // Three T gates need three full cycles.
    auto c = Circuit(1).t(0).t(0).t(0);
    ASSERT_EQ(minimal_cycles(c), 3u);
    ASSERT_EQ(blind_schedule(c, 5).size(), 15u);
    ASSERT_THROW(blind_schedule(c, 2), std::invalid_argument);
}

TEST(runner, blind_junk_slots_do_not_disturb_data) {
    Bob bob;
    RunOptions options;
    options.mode = RunMode::kBlind;
    options.cycles = 4;
    Rng rng(4);
    auto c = random_circuit(2, 5, rng);
    auto psi = haar_state(2, rng);
    options.initial_state = psi;
    auto r = run_circuit(c, bob, options);
    ASSERT_EQ(r.cycles, 4u);
    ASSERT_EQ(r.final_state.num_qubits(), 2u);
    ASSERT_GE(fidelity(r.final_state, simulate_gates(c, psi)), 1 - 1e-9);
}

TEST(runner, abort_keeps_partial_transcript) {
    Bob drop(Drop{});
    try {
        run_circuit(bell(), drop);
        FAIL();
    } catch (const CircuitAbort &e) {
        ASSERT_EQ(e.partial.rounds.size(), 1u);
        ASSERT_EQ(e.partial.rounds[0].label, "H");
        ASSERT_FALSE(e.partial.rounds[0].completed);
    }
}

TEST(runner, same_seed_same_run) {
    Bob a(Scramble{}, 9), b(Scramble{}, 9);
    RunOptions options;
    options.seed = 11;
    auto c = Circuit(2).h(0).t(1).cnot(1, 0).measure(0).measure(1);
    auto x = run_circuit(c, a, options);
    auto y = run_circuit(c, b, options);
    ASSERT_EQ(x.measurements, y.measurements);
    ASSERT_EQ(x.transcript.export_log(), y.transcript.export_log());
}

TEST(runner, wrong_gate_changes_output) {
    Bob bad(WrongGate{gates::x()});
    RunOptions options;
    options.exact_measurements = true;
    auto r = run_circuit(Circuit(1).h(0).measure(0), bad, options);
    auto want = ideal_distribution(Circuit(1).h(0).measure(0), StateVector::zero(1));
    ASSERT_GT(total_variation(*r.distribution, want), 0.1);
}

TEST(runner, initial_state_too_small) {
    Bob bob;
    RunOptions options;
    options.initial_state = StateVector::zero(1);
    ASSERT_THROW(run_circuit(bell(), bob, options), DimensionError);
}
