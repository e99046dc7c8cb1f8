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

#ifndef BLINDGATE_SECURITY_H
#define BLINDGATE_SECURITY_H

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blindgate/circuit.h"
#include "blindgate/two_party.h"

namespace blindgate {

inline constexpr double kSecurityTolerance = 1e-9;

/// A protocol body run on a machine whose data register holds the input.
struct ProtocolUnderTest {
    std::string name;
    size_t num_wires;
    std::function<void(AliceMachine &, Bob &)> body;
};

/// hadamard, cnot, t-gate, measure, toffoli, key-reuse, cnot-no-fix.
std::optional<ProtocolUnderTest> named_protocol(std::string_view name);
std::vector<std::string> named_protocol_names();

/// The blind-mode execution of `circuit`, padded to `cycles` (0 = minimal).
ProtocolUnderTest blind_circuit_protocol(const Circuit &circuit, size_t cycles = 0);
/// The plain-mode execution of `circuit`.
ProtocolUnderTest plain_circuit_protocol(const Circuit &circuit);

struct ViewOptions {
    /// Enumerate every joint key assignment up to this many key bits.
    size_t max_joint_bits = 16;
    /// Beyond that, each round is averaged over the bits drawn since the
    /// previous send, for this many seeded draws of the earlier bits.
    size_t prior_samples = 4;
    uint64_t seed = 0;
    /// Creates the Bob for each simulated branch.
    std::function<Bob()> make_bob = [] {
        return Bob();
    };
};

struct RoundView {
    std::string label;
    size_t payload_qubits = 0;
    /// Conditional views, one per sample of earlier key bits (a single
    /// entry when every key assignment was enumerated jointly).
    std::vector<Matrix> densities;

    /// Largest trace distance of any conditional view from I/2^m.
    double distance_to_mixed() const;
};

/// Bob's key-averaged view of the payload at every round.
std::vector<RoundView> bob_views(const ProtocolUnderTest &protocol, const StateVector &input, const ViewOptions &options = {});

/// Key-averaged payload density at one round. Throws std::out_of_range for
/// a missing round and std::invalid_argument for a round without qubits.
DensityMatrix bob_view_density(
    const ProtocolUnderTest &protocol, const StateVector &input, size_t round_index, const ViewOptions &options = {});

/// Largest trace distance between Bob's views for inputs `a` and `b`, over
/// all rounds. Throws std::invalid_argument if the round structures differ.
double view_independence(
    const ProtocolUnderTest &protocol, const StateVector &a, const StateVector &b, const ViewOptions &options = {});

struct BlindnessReport {
    std::vector<std::string> labels_a;
    std::vector<std::string> labels_b;
    double max_distance_to_mixed = 0;
    size_t cycles = 0;

    bool labels_equal() const {
        return labels_a == labels_b;
    }
    bool blind() const {
        return labels_equal() && max_distance_to_mixed <= kSecurityTolerance;
    }
};

/// Runs both circuits in blind mode padded to `cycles` (0 = the smaller
/// common length) and compares what Bob sees. Throws std::invalid_argument if
/// `cycles` is too short for either circuit or the measured-wire counts differ.
BlindnessReport transcript_blindness(
    const Circuit &a, const Circuit &b, size_t cycles = 0, const ViewOptions &options = {});

struct SecurityReport {
    std::string protocol;
    std::vector<std::string> labels;
    /// Per round, the worst distance to maximally mixed over all inputs.
    std::vector<double> distance_to_mixed;
    /// Worst view_independence over all input pairs.
    double max_view_distance = 0;

    bool passed(double tol = kSecurityTolerance) const;
};

/// Checks every round of `protocol` on every input.
SecurityReport security_report(
    const ProtocolUnderTest &protocol, std::span<const StateVector> inputs, const ViewOptions &options = {});

/// Basis states plus `random_count` seeded Haar-random states on `num_qubits`.
std::vector<StateVector> security_inputs(size_t num_qubits, size_t random_count, uint64_t seed);

}  // namespace blindgate

#endif
