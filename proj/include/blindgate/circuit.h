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

#ifndef BLINDGATE_CIRCUIT_H
#define BLINDGATE_CIRCUIT_H

#include <string>
#include <string_view>
#include <vector>

#include "blindgate/simulator.h"

namespace blindgate {

enum class GateKind { kH, kT, kCnot, kMeasure };

const char *gate_kind_name(GateKind kind);

struct CircuitOp {
    GateKind kind;
    std::vector<size_t> qubits;
    bool operator==(const CircuitOp &) const = default;
};

/// A sequence of H, T, CNOT and M operations on numbered wires.
///
/// A measured wire may not be used again, so every measurement can be
/// deferred to the end of the circuit without changing its statistics.
class Circuit {
   public:
    explicit Circuit(size_t num_qubits = 0) : num_qubits_(num_qubits) {
    }

    /// Parses the line format `H <q>`, `T <q>`, `CNOT <qc> <qt>`, `M <q>`,
    /// with `#` comments. Throws ParseError carrying the 1-based line number.
    static Circuit parse(std::string_view text);
    static Circuit from_file(const std::string &path);

    Circuit &h(size_t q);
    Circuit &t(size_t q);
    Circuit &cnot(size_t control, size_t target);
    Circuit &measure(size_t q);
    Circuit &append(const CircuitOp &op);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<CircuitOp> &ops() const {
        return ops_;
    }
    /// Number of H, T and CNOT operations.
    size_t gate_count() const;
    /// The H, T and CNOT operations in order.
    std::vector<CircuitOp> unitary_ops() const;
    /// Measured wires in increasing order.
    std::vector<size_t> measured_wires() const;
    bool is_measured(size_t q) const;
    std::string str() const;

   private:
    size_t num_qubits_;
    std::vector<CircuitOp> ops_;
};

/// Directly applies the circuit's gates to `initial` (measurements skipped).
StateVector simulate_gates(const Circuit &circuit, StateVector initial);

/// Ideal distribution of the measured wires (bit k = measured_wires()[k]).
std::vector<double> ideal_distribution(const Circuit &circuit, const StateVector &initial);

/// Uniformly random circuit over {H, T, CNOT}.
Circuit random_circuit(size_t num_qubits, size_t num_gates, Rng &rng);

}  // namespace blindgate

#endif
