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

#include "blindgate/honesty.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "blindgate/assisted.h"
#include "blindgate/runner.h"

namespace blindgate {

namespace {

const PauliOperator kX = PauliOperator::x(1, 0);
const PauliOperator kZ = PauliOperator::z(1, 0);

std::string bit_string(const std::vector<bool> &bits) {
    std::string s;
    for (bool b : bits) {
        s += b ? '1' : '0';
    }
    return s;
}

Probe one_wire(std::string label, bool b, bool flips, std::function<void(AliceMachine &, Bob &)> body) {
    return {std::move(label) + "|" + std::to_string(b) + ">", {b}, {b != flips}, std::move(body)};
}

}  // namespace

const char *np_verdict_name(NpVerdict verdict) {
    switch (verdict) {
        case NpVerdict::kVerified:
            return "verified";
        case NpVerdict::kRejected:
            return "rejected";
        case NpVerdict::kMalformed:
            return "malformed";
    }
    return "?";
}

NpVerdict verify_np_answer(const NpInstance &instance, const NpAnswer &answer) {
    if (const auto *f = std::get_if<FactoringInstance>(&instance)) {
        const auto *factors = std::get_if<std::vector<uint64_t>>(&answer);
        if (factors == nullptr || factors->empty()) {
            return NpVerdict::kMalformed;
        }
        if (std::find(factors->begin(), factors->end(), 0) != factors->end()) {
            return NpVerdict::kMalformed;
        }
        if (factors->size() < 2) {
            return NpVerdict::kRejected;
        }
        uint64_t product = 1;
        for (uint64_t p : *factors) {
            if (p <= 1 || __builtin_mul_overflow(product, p, &product)) {
                return NpVerdict::kRejected;
            }
        }
        return product == f->n ? NpVerdict::kVerified : NpVerdict::kRejected;
    }
    const auto &formula = std::get<CnfFormula>(instance);
    const auto *assignment = std::get_if<std::vector<bool>>(&answer);
    if (assignment == nullptr || assignment->size() != formula.num_vars) {
        return NpVerdict::kMalformed;
    }
    return evaluate(formula, *assignment) ? NpVerdict::kVerified : NpVerdict::kRejected;
}

std::optional<ProbeGate> probe_gate_from_name(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) {
        return (char)std::toupper(c);
    });
    if (upper == "H") {
        return ProbeGate::kH;
    }
    if (upper == "CNOT" || upper == "CX") {
        return ProbeGate::kCnot;
    }
    if (upper == "T") {
        return ProbeGate::kT;
    }
    if (upper == "M" || upper == "MEASURE") {
        return ProbeGate::kMeasure;
    }
    return std::nullopt;
}

const char *probe_gate_name(ProbeGate gate) {
    switch (gate) {
        case ProbeGate::kH:
            return "H";
        case ProbeGate::kCnot:
            return "CNOT";
        case ProbeGate::kT:
            return "T";
        case ProbeGate::kMeasure:
            return "MEASURE";
    }
    return "?";
}

std::vector<Probe> probes_for(ProbeGate gate) {
    std::vector<Probe> out;
    switch (gate) {
        case ProbeGate::kH:
            for (bool b : {false, true}) {
                out.push_back(one_wire("H.H", b, false, [](AliceMachine &a, Bob &bob) {
                    assisted_hadamard(a, 0, bob);
                    assisted_hadamard(a, 0, bob);
                }));
                out.push_back(one_wire("H.Z.H", b, true, [](AliceMachine &a, Bob &bob) {
                    assisted_hadamard(a, 0, bob);
                    a.apply_pauli(kZ, {0});
                    assisted_hadamard(a, 0, bob);
                }));
            }
            break;
        case ProbeGate::kCnot:
            for (int in = 0; in < 4; in++) {
                bool c = in & 1, t = in >> 1;
                std::string suffix = "|" + std::to_string(c) + std::to_string(t) + ">";
                out.push_back({"CNOT" + suffix, {c, t}, {c, t != c}, [](AliceMachine &a, Bob &bob) {
                                   assisted_cnot(a, 0, 1, bob);
                               }});
                // Conjugating by H on both wires swaps control and target.
                out.push_back({"HH.CNOT.HH" + suffix, {c, t}, {c != t, t}, [](AliceMachine &a, Bob &bob) {
                                   assisted_hadamard(a, 0, bob);
                                   assisted_hadamard(a, 1, bob);
                                   assisted_cnot(a, 0, 1, bob);
                                   assisted_hadamard(a, 0, bob);
                                   assisted_hadamard(a, 1, bob);
                               }});
            }
            break;
        case ProbeGate::kT:
            for (bool b : {false, true}) {
                out.push_back(one_wire("T", b, false, [](AliceMachine &a, Bob &bob) {
                    assisted_t(a, 0, bob);
                }));
                // T^4 = Z, so H T^4 H = X.
                out.push_back(one_wire("H.T4.H", b, true, [](AliceMachine &a, Bob &bob) {
                    assisted_hadamard(a, 0, bob);
                    for (int k = 0; k < 4; k++) {
                        assisted_t(a, 0, bob);
                    }
                    assisted_hadamard(a, 0, bob);
                }));
            }
            break;
        case ProbeGate::kMeasure:
            for (bool b : {false, true}) {
                out.push_back(one_wire("M", b, false, [](AliceMachine &, Bob &) {}));
            }
            break;
    }
    return out;
}

SpotCheckResult spot_check(const BobStrategy &strategy, ProbeGate gate, const SpotCheckOptions &options) {
    if (options.trials == 0) {
        throw std::invalid_argument("spot_check needs at least one trial");
    }
    auto probes = probes_for(gate);
    SpotCheckResult result;
    result.threshold = options.threshold;
    std::map<std::string, std::pair<size_t, size_t>> per_probe;

    for (size_t i = 0; i < options.trials; i++) {
        if (options.data_circuit.has_value()) {
            Bob data_bob(strategy, derive_seed(options.seed, 5 * i + 3));
            AliceMachine data_alice(
                StateVector::zero(std::max<size_t>(options.data_circuit->num_qubits(), 1)),
                KeySource::random(derive_seed(options.seed, 5 * i + 4)));
            try {
                execute_circuit(data_alice, *options.data_circuit, data_bob, RunMode::kPlain);
            } catch (const ProtocolAbort &) {
            }
            result.data_runs++;
        }

        Rng choose(derive_seed(options.seed, 5 * i));
        const Probe &probe = probes[choose.below(probes.size())];
        size_t wires = probe.input.size();
        AliceMachine alice(StateVector::zero(wires), KeySource::random(derive_seed(options.seed, 5 * i + 1)));
        Bob bob(strategy, derive_seed(options.seed, 5 * i + 2));
        TrialRecord record{i, probe.label, {}, probe.expected, false};
        try {
            for (size_t w = 0; w < wires; w++) {
                alice.apply_pauli_if(probe.input[w], kX, {w});
            }
            probe.body(alice, bob);
            for (size_t w = 0; w < wires; w++) {
                record.outcome.push_back(assisted_measure(alice, w, bob));
            }
        } catch (const ProtocolAbort &) {
            record.dropped = true;
            result.drops++;
        }
        bool bad = record.mismatch();
        result.mismatches += bad;
        auto &tally = per_probe[probe.label];
        tally.first += bad;
        tally.second++;
        result.records.push_back(std::move(record));
    }
    result.deviation = (double)result.mismatches / (double)options.trials;
    for (const auto &[label, tally] : per_probe) {
        result.deviation_by_probe[label] = (double)tally.first / (double)tally.second;
    }
    return result;
}

std::string spot_check_records(const SpotCheckResult &result) {
    std::string out;
    for (const auto &r : result.records) {
        out += "trial=" + std::to_string(r.trial) + " probe=" + r.probe +
               " outcome=" + (r.dropped ? std::string("none") : bit_string(r.outcome)) +
               " expected=" + bit_string(r.expected) + ":1\n";
    }
    return out;
}

}  // namespace blindgate
