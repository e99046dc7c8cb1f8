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

#ifndef BLINDGATE_HONESTY_H
#define BLINDGATE_HONESTY_H

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "blindgate/circuit.h"
#include "blindgate/classical.h"
#include "blindgate/two_party.h"

namespace blindgate {

enum class NpVerdict { kVerified, kRejected, kMalformed };

const char *np_verdict_name(NpVerdict verdict);

struct FactoringInstance {
    uint64_t n;
};

using NpInstance = std::variant<FactoringInstance, CnfFormula>;
/// Factors for a factoring instance, an assignment for a formula.
using NpAnswer = std::variant<std::vector<uint64_t>, std::vector<bool>>;

/// Exact witness check. Factoring needs at least two factors, each > 1,
/// whose product is n. An answer of the wrong shape is kMalformed.
NpVerdict verify_np_answer(const NpInstance &instance, const NpAnswer &answer);

enum class ProbeGate { kH, kCnot, kT, kMeasure };

std::optional<ProbeGate> probe_gate_from_name(std::string_view name);
const char *probe_gate_name(ProbeGate gate);

/// A test computation with a deterministic honest outcome. Alice prepares
/// the basis state `input` with X gates, runs `body`, and measures every wire.
struct Probe {
    std::string label;
    std::vector<bool> input;
    std::vector<bool> expected;
    std::function<void(AliceMachine &, Bob &)> body;
};

/// Probes for `gate` on every basis input.
std::vector<Probe> probes_for(ProbeGate gate);

struct SpotCheckOptions {
    size_t trials = 400;
    double threshold = 0.05;
    uint64_t seed = 0;
    /// When set, a run of this circuit precedes every test trial. Bob cannot
    /// tell them apart, and they do not enter the statistics.
    std::optional<Circuit> data_circuit;
};

struct TrialRecord {
    size_t trial;
    std::string probe;
    std::vector<bool> outcome;
    std::vector<bool> expected;
    bool dropped = false;

    bool mismatch() const {
        return dropped || outcome != expected;
    }
};

struct SpotCheckResult {
    std::vector<TrialRecord> records;
    /// Total-variation distance between observed and honest outcome
    /// frequencies. With deterministic probes this is the mismatch rate.
    double deviation = 0;
    double threshold = 0;
    size_t mismatches = 0;
    size_t drops = 0;
    size_t data_runs = 0;
    /// Mismatch rate per probe label.
    std::map<std::string, double> deviation_by_probe;

    bool passed() const {
        return deviation <= threshold;
    }
};

/// Runs randomly chosen probes through `strategy`. Each trial uses seeds
/// derived from options.seed and the trial index, for Alice's choices and
/// for a fresh Bob alike, so a memoryless Bob sees no history.
SpotCheckResult spot_check(const BobStrategy &strategy, ProbeGate gate, const SpotCheckOptions &options = {});

/// `trial=<i> probe=<label> outcome=<bits> expected=<dist>` per trial.
std::string spot_check_records(const SpotCheckResult &result);

}  // namespace blindgate

#endif
