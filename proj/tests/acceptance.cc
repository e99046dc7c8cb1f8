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

// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "blindgate/assisted.h"
#include "blindgate/classical.h"
#include "blindgate/compiler.h"
#include "blindgate/gates.h"
#include "blindgate/hierarchy.h"
#include "blindgate/honesty.h"
#include "blindgate/runner.h"
#include "blindgate/security.h"
#include "oracle.h"

using namespace blindgate;

namespace {

using Body = std::function<void(AliceMachine &, Bob &)>;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt_double(const char *format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, value);
    return buf;
}

std::vector<bool> bits_of(uint64_t value, size_t count) {
    std::vector<bool> out;
    for (size_t k = 0; k < count; k++) {
        out.push_back((value >> k) & 1);
    }
    return out;
}

oracle::M composite(const Body &body, size_t n, const std::vector<bool> &keys) {
    oracle::M out(1 << n, 1 << n);
    for (uint64_t col = 0; col < (uint64_t{1} << n); col++) {
        AliceMachine alice(StateVector::basis(n, col), KeySource::scripted(keys));
        Bob bob;
        body(alice, bob);
        out.col((Eigen::Index)col) = alice.state().amplitudes();
    }
    return out;
}

oracle::M toffoli_oracle() {
    oracle::M m = oracle::M::Identity(8, 8);
    m(3, 3) = m(7, 7) = 0;
    m(3, 7) = m(7, 3) = 1;
    return m;
}

Outcome one_time_pad() {
    const double tol = 1e-10;
    Rng rng(101);
    double worst = 0;
    for (size_t n : {1, 2}) {
        size_t dim = size_t{1} << n;
        for (int trial = 0; trial < 20; trial++) {
            oracle::V psi = haar_state(n, rng).amplitudes();
            oracle::M avg = oracle::M::Zero(dim, dim);
            for (uint64_t x = 0; x < dim; x++) {
                for (uint64_t z = 0; z < dim; z++) {
                    oracle::M p = oracle::pauli(x, z, 0, n);
                    avg += p * psi * psi.adjoint() * p.adjoint();
                }
            }
            avg /= (double)(dim * dim);
            worst = std::max(worst, oracle::trace_distance(avg, oracle::M::Identity(dim, dim) / (double)dim));
        }
    }
    // The same identity as seen through the protocols' own view computation.
    for (const char *name : {"hadamard", "cnot"}) {
        auto p = *named_protocol(name);
        for (const auto &psi : security_inputs(p.num_wires, 20, 102)) {
            auto rho = bob_view_density(p, psi, 0);
            size_t dim = rho.dim();
            worst = std::max(worst, oracle::trace_distance(rho.matrix(), oracle::M::Identity(dim, dim) / (double)dim));
        }
    }
    return {worst <= tol, "max trace distance to I/d " + fmt_double("%.2e", worst) + " (tol 1e-10)"};
}

Outcome gate_correctness() {
    const double tol = 1e-10;
    double worst = 0;
    size_t checked = 0;
    auto check = [&](const Body &body, size_t n, const std::vector<bool> &keys, const oracle::M &ideal) {
        worst = std::max(worst, oracle::phase_distance(composite(body, n, keys), ideal));
        checked++;
    };
    for (uint64_t key = 0; key < 4; key++) {
        check([](AliceMachine &a, Bob &b) { assisted_hadamard(a, 0, b); }, 1, bits_of(key, 2), oracle::H());
    }
    for (uint64_t key = 0; key < 16; key++) {
        check([](AliceMachine &a, Bob &b) { assisted_cnot(a, 0, 1, b); }, 2, bits_of(key, 4), oracle::cnot(0, 1, 2));
        // Key bit 0 (j) selects whether the data or the dummy is routed through the S round.
        check([](AliceMachine &a, Bob &b) { assisted_t(a, 0, b); }, 1, bits_of(key, 4), oracle::T());
    }
    auto toffoli = compile_two_round(*gates::by_name("TOFFOLI"));
    Rng rng(201);
    for (uint64_t key = 0; key < 64; key++) {
        auto keys = bits_of(key, 6);
        while (keys.size() < toffoli.key_bits()) {
            keys.push_back(rng.coin());
        }
        check([&](AliceMachine &a, Bob &b) { toffoli.run(a, {0, 1, 2}, b); }, 3, keys, toffoli_oracle());
    }
    return {
        worst <= tol,
        std::to_string(checked) + " key assignments, max phase-aligned error " + fmt_double("%.2e", worst) +
            " (tol 1e-10)"};
}

Outcome measurement() {
    const double tol = 1e-12;
    bool bitwise = true;
    for (uint64_t basis = 0; basis < 2; basis++) {
        for (uint64_t key = 0; key < 4; key++) {
            AliceMachine alice(StateVector::basis(1, basis), KeySource::scripted(bits_of(key, 2)));
            Bob bob;
            bitwise &= assisted_measure(alice, 0, bob) == (basis == 1);
        }
    }
    double worst = 0;
    std::vector<StateVector> probes{
        StateVector::basis(1, 0), StateVector::basis(1, 1), apply(StateVector::zero(1), gates::h(), std::vector<size_t>{0})};
    std::vector<size_t> wire{0};
    for (const auto &psi : probes) {
        AliceMachine alice(psi, KeySource::random(0));
        auto got = assisted_measure_distribution(alice, wire, Bob());
        oracle::V amp = psi.amplitudes();
        std::vector<double> ideal{std::norm(amp(0)), std::norm(amp(1))};
        worst = std::max(worst, total_variation(got, ideal));
    }
    return {
        bitwise && worst <= tol,
        std::string("basis probes ") + (bitwise ? "bitwise exact" : "MISMATCH") + ", max TV " +
            fmt_double("%.2e", worst) + " (tol 1e-12)"};
}

Outcome classification() {
    std::string bad;
    auto expect = [&](const std::string &name, const UnitaryMatrix &u, int level) {
        if (!is_in_level(u, level) || (level > 1 && is_in_level(u, level - 1))) {
            bad += " " + name;
        }
    };
    expect("X", gates::x(), 1);
    expect("Z", gates::z(), 1);
    expect("XZ", gates::x() * gates::z(), 1);
    expect("H", gates::h(), 2);
    expect("S", gates::s(), 2);
    expect("CNOT", gates::cnot(), 2);
    expect("T", gates::t(), 3);
    expect("TOFFOLI", gates::toffoli(), 3);
    expect("FREDKIN", gates::fredkin(), 3);
    auto classical = [&](const char *name, int level) {
        auto g = *ReversibleGate::by_name(name);
        if (!is_in_tilde_level(g, level) || is_in_tilde_level(g, level - 1)) {
            bad += std::string(" classical ") + name;
        }
    };
    classical("CNOT", 2);
    classical("TOFFOLI", 3);
    classical("FREDKIN", 3);
    return {bad.empty(), bad.empty() ? "9 quantum and 3 classical gates at their expected levels" : "wrong:" + bad};
}

Outcome end_to_end() {
    double worst_infidelity = 0, worst_tv = 0;
    Rng rng(501);
    Bob bob;
    for (int trial = 0; trial < 50; trial++) {
        Circuit c = random_circuit(3, 20, rng);
        RunOptions options;
        options.seed = derive_seed(501, trial);
        auto r = run_circuit(c, bob, options);
        worst_infidelity =
            std::max(worst_infidelity, 1 - fidelity(r.final_state, simulate_gates(c, StateVector::zero(3))));

        Circuit measured = c;
        measured.measure(0).measure(1).measure(2);
        options.exact_measurements = true;
        auto m = run_circuit(measured, bob, options);
        worst_tv = std::max(worst_tv, total_variation(*m.distribution, ideal_distribution(measured, StateVector::zero(3))));
    }
    return {
        worst_infidelity <= 1e-9 && worst_tv <= 1e-9,
        "50 circuits, max infidelity " + fmt_double("%.2e", worst_infidelity) + ", max TV " +
            fmt_double("%.2e", worst_tv) + " (tol 1e-9)"};
}

Outcome blindness() {
    Rng rng(601);
    std::vector<std::pair<Circuit, Circuit>> pairs{{Circuit(1).h(0), Circuit(1).t(0)}};
    for (int trial = 0; trial < 10; trial++) {
        Circuit a = random_circuit(2, 1 + rng.below(4), rng);
        Circuit b = random_circuit(2, 1 + rng.below(4), rng);
        pairs.emplace_back(a, b);
    }
    bool labels = true, bound = true;
    double worst = 0;
    for (const auto &[a, b] : pairs) {
        size_t cycles = std::max(minimal_cycles(a), minimal_cycles(b));
        auto report = transcript_blindness(a, b, cycles);
        labels &= report.labels_equal();
        worst = std::max(worst, report.max_distance_to_mixed);
        Bob bob;
        RunOptions options;
        options.mode = RunMode::kBlind;
        options.cycles = cycles;
        size_t allowed = 3 * std::max(a.gate_count(), b.gate_count()) + 2;
        bound &= run_circuit(a, bob, options).gate_requests <= allowed;
        bound &= run_circuit(b, bob, options).gate_requests <= allowed;
    }
    return {
        labels && bound && worst <= 1e-9,
        std::to_string(pairs.size()) + " circuit pairs, labels " + (labels ? "identical" : "DIFFER") +
            ", request bound " + (bound ? "holds" : "VIOLATED") + ", max view distance " +
            fmt_double("%.2e", worst) + " (tol 1e-9)"};
}

Outcome bob_gate_reduction() {
    const double tol = 1e-10;
    Rng rng(701);
    double worst = 0;
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 1 + trial % 2;
        uint64_t count = uint64_t{1} << (2 * n);
        UnitaryMatrix u = haar_unitary(n, rng);
        auto e0 = PauliOperator::from_index({rng.below(count)}, n);
        auto d0 = PauliOperator::from_index({rng.below(count)}, n);
        // Bob's gate v satisfies d0 v e0 = u.
        UnitaryMatrix v = d0.to_matrix().adjoint() * u * e0.to_matrix().adjoint();
        auto r = normalize_bob_gate(u, v, e0, d0);
        for (size_t j = 0; j < r.reduced_encodings.size(); j++) {
            oracle::M got = r.reduced_decodings[j].matrix() * u.matrix() * r.reduced_encodings[j].matrix();
            worst = std::max(worst, oracle::phase_distance(got, u.matrix()));
        }
    }
    return {worst <= tol, "20 fixtures, max phase-aligned error " + fmt_double("%.2e", worst) + " (tol 1e-10)"};
}

Outcome sat_blinding() {
    Rng rng(801);
    size_t verified = 0;
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 3 + rng.below(10);
        auto f = random_planted_3cnf(n, 4 * n, rng);
        auto blinded = blind_sat(f, rng);
        auto witness = brute_force_solve(blinded.formula);
        if (witness && verify_np_answer(f, unblind_assignment(*witness, blinded.mask)) == NpVerdict::kVerified) {
            verified++;
        }
    }
    return {verified == 100, std::to_string(verified) + "/100 unblinded witnesses verify"};
}

Outcome honesty() {
    const ProbeGate gates_cycle[] = {ProbeGate::kH, ProbeGate::kCnot, ProbeGate::kT, ProbeGate::kMeasure};
    size_t false_positives = 0;
    for (uint64_t rep = 0; rep < 200; rep++) {
        SpotCheckOptions options;
        options.seed = derive_seed(901, rep);
        false_positives += !spot_check(Honest{}, gates_cycle[rep % 4], options).passed();
    }
    size_t detected = 0;
    for (uint64_t rep = 0; rep < 100; rep++) {
        SpotCheckOptions options;
        options.trials = 1000;
        options.seed = derive_seed(902, rep);
        detected += !spot_check(Scramble{}, gates_cycle[rep % 3], options).passed();
    }
    bool np_exact = verify_np_answer(FactoringInstance{15}, std::vector<uint64_t>{3, 5}) == NpVerdict::kVerified;
    for (uint64_t a = 0; a <= 16; a++) {
        for (uint64_t b = 0; b <= 16; b++) {
            bool witness = a > 1 && b > 1 && a * b == 15;
            auto verdict = verify_np_answer(FactoringInstance{15}, std::vector<uint64_t>{a, b});
            np_exact &= (verdict == NpVerdict::kVerified) == witness;
        }
    }
    double fp_rate = false_positives / 200.0, detection = detected / 100.0;
    return {
        fp_rate <= 0.01 && detection >= 0.99 && np_exact,
        "honest false positives " + fmt_double("%.3f", fp_rate) + " (max 0.01), scramble detection " +
            fmt_double("%.2f", detection) + " (min 0.99), factoring check " + (np_exact ? "exact" : "WRONG")};
}

Outcome negative_controls() {
    auto reuse = *named_protocol("key-reuse");
    auto inputs = security_inputs(1, 20, 1001);
    double leak = 0;
    for (size_t i = 0; i < inputs.size(); i++) {
        for (size_t k = i + 1; k < inputs.size(); k++) {
            leak = std::max(leak, view_independence(reuse, inputs[i], inputs[k]));
        }
    }
    double worst = 0;
    for (uint64_t key = 0; key < 16; key++) {
        Body body = [](AliceMachine &a, Bob &b) { fixtures::assisted_cnot_without_control_fix(a, 0, 1, b); };
        worst = std::max(worst, oracle::phase_distance(composite(body, 2, bits_of(key, 4)), oracle::cnot(0, 1, 2)));
    }
    return {
        leak > 0.1 && worst > 1e-10,
        "key-reuse view distance " + fmt_double("%.3f", leak) + " (must exceed 0.1), CNOT without control fix error " +
            fmt_double("%.3f", worst) + " (must exceed 1e-10)"};
}

}  // namespace

int main() {
    const std::pair<const char *, Outcome (*)()> criteria[] = {
        {"one-time pad", one_time_pad},
        {"gate protocols", gate_correctness},
        {"measurement", measurement},
        {"hierarchy", classification},
        {"end-to-end circuits", end_to_end},
        {"blindness", blindness},
        {"Bob gate reduction", bob_gate_reduction},
        {"SAT blinding", sat_blinding},
        {"honesty", honesty},
        {"negative controls", negative_controls},
    };
    int failures = 0;
    for (size_t i = 0; i < std::size(criteria); i++) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf(
            "criterion %2zu %s  %-20s %s [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str(),
            seconds);
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
