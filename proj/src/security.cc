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

#include "blindgate/security.h"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "blindgate/assisted.h"
#include "blindgate/compiler.h"
#include "blindgate/errors.h"
#include "blindgate/runner.h"

namespace blindgate {

namespace {

constexpr size_t kMaxWindowBits = 20;

struct Branch {
    Transcript transcript;
    size_t keys_consumed;
};

Branch run_branch(
    const ProtocolUnderTest &protocol, const StateVector &input, std::vector<bool> bits, const ViewOptions &options) {
    AliceMachine alice(input, KeySource::scripted(std::move(bits)));
    Bob bob = options.make_bob();
    try {
        protocol.body(alice, bob);
    } catch (const ProtocolAbort &) {
        // The views recorded before the abort are still Bob's views.
    }
    return {alice.transcript(), alice.keys_consumed()};
}

void check_same_structure(const Transcript &expected, const Transcript &actual) {
    if (expected.structure() != actual.structure()) {
        throw std::logic_error("round structure depends on the key bits");
    }
}

Matrix maximally_mixed_matrix(size_t dim) {
    return Matrix::Identity((Eigen::Index)dim, (Eigen::Index)dim) / (double)dim;
}

}  // namespace

std::optional<ProtocolUnderTest> named_protocol(std::string_view name) {
    if (name == "hadamard") {
        return ProtocolUnderTest{"hadamard", 1, [](AliceMachine &a, Bob &b) {
                                     assisted_hadamard(a, 0, b);
                                 }};
    }
    if (name == "cnot") {
        return ProtocolUnderTest{"cnot", 2, [](AliceMachine &a, Bob &b) {
                                     assisted_cnot(a, 0, 1, b);
                                 }};
    }
    if (name == "t-gate") {
        return ProtocolUnderTest{"t-gate", 1, [](AliceMachine &a, Bob &b) {
                                     assisted_t(a, 0, b);
                                 }};
    }
    if (name == "measure") {
        return ProtocolUnderTest{"measure", 1, [](AliceMachine &a, Bob &b) {
                                     assisted_measure(a, 0, b);
                                 }};
    }
    if (name == "toffoli") {
        auto compiled = std::make_shared<CompiledProtocol>(compile_two_round(*gates::by_name("TOFFOLI")));
        return ProtocolUnderTest{"toffoli", 3, [compiled](AliceMachine &a, Bob &b) {
                                     compiled->run(a, {0, 1, 2}, b);
                                 }};
    }
    if (name == "key-reuse") {
        return ProtocolUnderTest{"key-reuse", 1, [](AliceMachine &a, Bob &b) {
                                     fixtures::assisted_t_reusing_keys(a, 0, b);
                                 }};
    }
    if (name == "cnot-no-fix") {
        return ProtocolUnderTest{"cnot-no-fix", 2, [](AliceMachine &a, Bob &b) {
                                     fixtures::assisted_cnot_without_control_fix(a, 0, 1, b);
                                 }};
    }
    return std::nullopt;
}

std::vector<std::string> named_protocol_names() {
    return {"hadamard", "cnot", "t-gate", "measure", "toffoli", "key-reuse", "cnot-no-fix"};
}

ProtocolUnderTest blind_circuit_protocol(const Circuit &circuit, size_t cycles) {
    return {"blind circuit", std::max<size_t>(circuit.num_qubits(), 1), [circuit, cycles](AliceMachine &a, Bob &b) {
                execute_circuit(a, circuit, b, RunMode::kBlind, cycles);
            }};
}

ProtocolUnderTest plain_circuit_protocol(const Circuit &circuit) {
    return {"plain circuit", std::max<size_t>(circuit.num_qubits(), 1), [circuit](AliceMachine &a, Bob &b) {
                execute_circuit(a, circuit, b, RunMode::kPlain);
            }};
}

double RoundView::distance_to_mixed() const {
    double worst = 0;
    for (const auto &d : densities) {
        worst = std::max(worst, distance_trace(d, maximally_mixed_matrix((size_t)d.rows())));
    }
    return worst;
}

std::vector<RoundView> bob_views(const ProtocolUnderTest &protocol, const StateVector &input, const ViewOptions &options) {
    if (input.num_qubits() < protocol.num_wires) {
        throw DimensionError(protocol.name + " needs " + std::to_string(protocol.num_wires) + " input qubits");
    }
    Branch dry = run_branch(protocol, input, {}, options);
    const auto &rounds = dry.transcript.rounds;
    std::vector<RoundView> views;
    for (const auto &round : rounds) {
        views.push_back({round.label, round.qubits_sent, {}});
    }

    size_t total = dry.keys_consumed;
    if (total <= options.max_joint_bits) {
        for (auto &v : views) {
            v.densities.push_back(Matrix::Zero(1 << v.payload_qubits, 1 << v.payload_qubits));
        }
        double weight = 1.0 / (double)(uint64_t{1} << total);
        for (uint64_t assignment = 0; assignment < (uint64_t{1} << total); assignment++) {
            std::vector<bool> bits(total);
            for (size_t b = 0; b < total; b++) {
                bits[b] = (assignment >> b) & 1;
            }
            Branch branch = run_branch(protocol, input, std::move(bits), options);
            check_same_structure(dry.transcript, branch.transcript);
            for (size_t r = 0; r < views.size(); r++) {
                views[r].densities[0] += weight * branch.transcript.payload_views[r];
            }
        }
        return views;
    }

    for (size_t r = 0; r < views.size(); r++) {
        size_t lo = r == 0 ? 0 : rounds[r - 1].keys_consumed_at_send;
        size_t hi = rounds[r].keys_consumed_at_send;
        size_t width = hi - lo;
        if (width > kMaxWindowBits) {
            throw CapacityError("round " + std::to_string(r) + " draws too many key bits to enumerate");
        }
        size_t samples = lo == 0 ? 1 : std::max<size_t>(options.prior_samples, 1);
        Rng rng(derive_seed(options.seed, r));
        double weight = 1.0 / (double)(uint64_t{1} << width);
        for (size_t s = 0; s < samples; s++) {
            std::vector<bool> prior(lo);
            for (size_t b = 0; b < lo; b++) {
                prior[b] = rng.coin();
            }
            Matrix acc = Matrix::Zero(1 << views[r].payload_qubits, 1 << views[r].payload_qubits);
            for (uint64_t assignment = 0; assignment < (uint64_t{1} << width); assignment++) {
                std::vector<bool> bits = prior;
                for (size_t b = 0; b < width; b++) {
                    bits.push_back((assignment >> b) & 1);
                }
                Branch branch = run_branch(protocol, input, std::move(bits), options);
                check_same_structure(dry.transcript, branch.transcript);
                acc += weight * branch.transcript.payload_views[r];
            }
            views[r].densities.push_back(std::move(acc));
        }
    }
    return views;
}

DensityMatrix bob_view_density(
    const ProtocolUnderTest &protocol, const StateVector &input, size_t round_index, const ViewOptions &options) {
    auto views = bob_views(protocol, input, options);
    if (round_index >= views.size()) {
        throw std::out_of_range("protocol has only " + std::to_string(views.size()) + " rounds");
    }
    const auto &v = views[round_index];
    if (v.payload_qubits == 0) {
        throw std::invalid_argument("round " + std::to_string(round_index) + " carries no qubits");
    }
    Matrix avg = Matrix::Zero(v.densities[0].rows(), v.densities[0].cols());
    for (const auto &d : v.densities) {
        avg += d / (double)v.densities.size();
    }
    return DensityMatrix(avg);
}

namespace {

double max_view_distance(const std::vector<RoundView> &a, const std::vector<RoundView> &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("protocol runs have different numbers of rounds");
    }
    double worst = 0;
    for (size_t r = 0; r < a.size(); r++) {
        if (a[r].label != b[r].label || a[r].payload_qubits != b[r].payload_qubits ||
            a[r].densities.size() != b[r].densities.size()) {
            throw std::invalid_argument("protocol runs differ at round " + std::to_string(r));
        }
        for (size_t s = 0; s < a[r].densities.size(); s++) {
            worst = std::max(worst, distance_trace(a[r].densities[s], b[r].densities[s]));
        }
    }
    return worst;
}

}  // namespace

double view_independence(
    const ProtocolUnderTest &protocol, const StateVector &a, const StateVector &b, const ViewOptions &options) {
    return max_view_distance(bob_views(protocol, a, options), bob_views(protocol, b, options));
}

BlindnessReport transcript_blindness(const Circuit &a, const Circuit &b, size_t cycles, const ViewOptions &options) {
    if (a.measured_wires().size() != b.measured_wires().size()) {
        throw std::invalid_argument("circuits measure different numbers of wires");
    }
    size_t needed = std::max(minimal_cycles(a), minimal_cycles(b));
    if (cycles == 0) {
        cycles = needed;
    }
    if (cycles < needed) {
        throw std::invalid_argument(
            "circuits need " + std::to_string(needed) + " cycles; cannot pad to " + std::to_string(cycles));
    }
    BlindnessReport report;
    report.cycles = cycles;
    for (const Circuit *c : {&a, &b}) {
        auto protocol = blind_circuit_protocol(*c, cycles);
        StateVector input = StateVector::zero(protocol.num_wires);
        auto views = bob_views(protocol, input, options);
        std::vector<std::string> labels;
        for (const auto &v : views) {
            labels.push_back(v.label);
            report.max_distance_to_mixed = std::max(report.max_distance_to_mixed, v.distance_to_mixed());
        }
        (c == &a ? report.labels_a : report.labels_b) = std::move(labels);
    }
    return report;
}

bool SecurityReport::passed(double tol) const {
    for (double d : distance_to_mixed) {
        if (!(d <= tol)) {
            return false;
        }
    }
    return max_view_distance <= tol;
}

SecurityReport security_report(
    const ProtocolUnderTest &protocol, std::span<const StateVector> inputs, const ViewOptions &options) {
    SecurityReport report;
    report.protocol = protocol.name;
    std::vector<std::vector<RoundView>> all;
    for (const auto &input : inputs) {
        all.push_back(bob_views(protocol, input, options));
    }
    if (all.empty()) {
        return report;
    }
    for (const auto &v : all[0]) {
        report.labels.push_back(v.label);
    }
    report.distance_to_mixed.assign(report.labels.size(), 0.0);
    for (size_t i = 0; i < all.size(); i++) {
        for (size_t r = 0; r < all[i].size() && r < report.distance_to_mixed.size(); r++) {
            report.distance_to_mixed[r] = std::max(report.distance_to_mixed[r], all[i][r].distance_to_mixed());
        }
        for (size_t j = i + 1; j < all.size(); j++) {
            report.max_view_distance = std::max(report.max_view_distance, max_view_distance(all[i], all[j]));
        }
    }
    return report;
}

std::vector<StateVector> security_inputs(size_t num_qubits, size_t random_count, uint64_t seed) {
    std::vector<StateVector> out;
    for (uint64_t k = 0; k < (uint64_t{1} << num_qubits); k++) {
        out.push_back(StateVector::basis(num_qubits, k));
    }
    Rng rng(seed);
    for (size_t k = 0; k < random_count; k++) {
        out.push_back(haar_state(num_qubits, rng));
    }
    return out;
}

}  // namespace blindgate
