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

#ifndef BLINDGATE_PAULI_H
#define BLINDGATE_PAULI_H

#include <cstdint>
#include <span>
#include <iosfwd>
#include <string>
#include <string_view>

#include "blindgate/matrix.h"

namespace blindgate {

/// Index of a phaseless n-qubit Pauli in [0, 4^n).
///
/// Qubit i occupies base-4 digit i (little endian). Digit values enumerate the
/// single-qubit Paulis in the fixed order I, X, Z, XZ; i.e. the low bit of the
/// digit is the X flag and the high bit is the Z flag.
struct PauliIndex {
    uint64_t value = 0;
    bool operator==(const PauliIndex &) const = default;
};

/// Number of phaseless Paulis on n qubits.
uint64_t pauli_count(size_t num_qubits);

/// A phase-tracked n-qubit Pauli operator in symplectic form:
///
///     i^phase_exp * prod_i X_i^{x_i} Z_i^{z_i}
///
/// where each per-qubit factor is written X first, then Z (so XZ = -iY).
/// Qubit 0 is bit 0 of both masks.
class PauliOperator {
   public:
    static constexpr size_t kMaxMaskQubits = 32;

    explicit PauliOperator(size_t num_qubits = 1, uint64_t x_mask = 0, uint64_t z_mask = 0, uint8_t phase_exp = 0);

    static PauliOperator identity(size_t num_qubits);
    static PauliOperator x(size_t num_qubits, size_t qubit);
    static PauliOperator z(size_t num_qubits, size_t qubit);
    static PauliOperator from_index(PauliIndex index, size_t num_qubits);
    /// Parses the output of `str()`, e.g. "i^2 · X0 Z0 X1" or "I".
    static PauliOperator parse(std::string_view text, size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }
    uint64_t x_mask() const {
        return x_;
    }
    uint64_t z_mask() const {
        return z_;
    }
    uint8_t phase_exp() const {
        return phase_;
    }
    bool x_bit(size_t qubit) const {
        return (x_ >> qubit) & 1;
    }
    bool z_bit(size_t qubit) const {
        return (z_ >> qubit) & 1;
    }
    bool is_identity_up_to_phase() const {
        return x_ == 0 && z_ == 0;
    }

    PauliIndex to_index() const;
    PauliOperator with_phase(uint8_t phase_exp) const;
    PauliOperator phaseless() const {
        return with_phase(0);
    }
    PauliOperator inverse() const;

    /// Dense 2^n x 2^n matrix. Throws CapacityError above `max_qubits`.
    UnitaryMatrix to_matrix(size_t max_qubits = kMaxQubits) const;

    /// Pauli restricted to the listed qubits, in list order, as an operator on |qubits| qubits.
    PauliOperator restricted(std::span<const size_t> qubits) const;

    std::string str() const;

    bool operator==(const PauliOperator &other) const = default;
    bool equal_up_to_phase(const PauliOperator &other) const;

   private:
    size_t n_;
    uint64_t x_;
    uint64_t z_;
    uint8_t phase_;
};

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);
inline PauliOperator operator*(const PauliOperator &a, const PauliOperator &b) {
    return multiply(a, b);
}

/// Parity of the symplectic inner product; true iff the matrices commute.
bool commutes(const PauliOperator &a, const PauliOperator &b);

std::ostream &operator<<(std::ostream &out, const PauliOperator &p);

}  // namespace blindgate

#endif
