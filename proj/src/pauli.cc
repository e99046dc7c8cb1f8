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

#include "blindgate/pauli.h"

#include <bit>
#include <cctype>
#include <ostream>
#include <sstream>

#include "blindgate/errors.h"

namespace blindgate {

namespace {

uint64_t low_bits(size_t n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

}  // namespace

uint64_t pauli_count(size_t num_qubits) {
    if (2 * num_qubits >= 64) {
        throw CapacityError("4^" + std::to_string(num_qubits) + " does not fit in a 64-bit index");
    }
    return uint64_t{1} << (2 * num_qubits);
}

PauliOperator::PauliOperator(size_t num_qubits, uint64_t x_mask, uint64_t z_mask, uint8_t phase_exp)
    : n_(num_qubits), x_(x_mask), z_(z_mask), phase_(phase_exp & 3) {
    if (num_qubits > kMaxMaskQubits) {
        throw CapacityError("Pauli operators are limited to " + std::to_string(kMaxMaskQubits) + " qubits");
    }
    if ((x_mask | z_mask) & ~low_bits(num_qubits)) {
        throw DimensionError("Pauli mask has bits beyond qubit count " + std::to_string(num_qubits));
    }
}

PauliOperator PauliOperator::identity(size_t num_qubits) {
    return PauliOperator(num_qubits);
}

PauliOperator PauliOperator::x(size_t num_qubits, size_t qubit) {
    return PauliOperator(num_qubits, uint64_t{1} << qubit, 0);
}

PauliOperator PauliOperator::z(size_t num_qubits, size_t qubit) {
    return PauliOperator(num_qubits, 0, uint64_t{1} << qubit);
}

PauliOperator PauliOperator::from_index(PauliIndex index, size_t num_qubits) {
    if (index.value >= pauli_count(num_qubits)) {
        throw std::out_of_range("Pauli index " + std::to_string(index.value) + " out of range");
    }
    uint64_t x = 0, z = 0;
    for (size_t q = 0; q < num_qubits; q++) {
        uint64_t digit = (index.value >> (2 * q)) & 3;
        x |= (digit & 1) << q;
        z |= (digit >> 1) << q;
    }
    return PauliOperator(num_qubits, x, z);
}

PauliIndex PauliOperator::to_index() const {
    pauli_count(n_);
    uint64_t v = 0;
    for (size_t q = 0; q < n_; q++) {
        uint64_t digit = (uint64_t)x_bit(q) | ((uint64_t)z_bit(q) << 1);
        v |= digit << (2 * q);
    }
    return {v};
}

PauliOperator PauliOperator::with_phase(uint8_t phase_exp) const {
    return PauliOperator(n_, x_, z_, phase_exp);
}

PauliOperator PauliOperator::inverse() const {
    // (i^p X^x Z^z)^-1 = i^-p Z^z X^x = i^-p (-1)^{x.z} X^x Z^z.
    int sign_flips = std::popcount(x_ & z_);
    return PauliOperator(n_, x_, z_, (uint8_t)((4 - phase_ + 2 * sign_flips) & 3));
}

bool PauliOperator::equal_up_to_phase(const PauliOperator &other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

UnitaryMatrix PauliOperator::to_matrix(size_t max_qubits) const {
    if (n_ > max_qubits) {
        throw CapacityError("Pauli on " + std::to_string(n_) + " qubits exceeds the matrix cap of " +
                            std::to_string(max_qubits));
    }
    static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    auto d = (Eigen::Index)(size_t{1} << n_);
    Matrix m = Matrix::Zero(d, d);
    for (uint64_t col = 0; col < (uint64_t)d; col++) {
        // X^x Z^z |c> = (-1)^{z.c} |c xor x>
        int sign = std::popcount(z_ & col) & 1;
        m((Eigen::Index)(col ^ x_), (Eigen::Index)col) = kPhases[(phase_ + 2 * sign) & 3];
    }
    return UnitaryMatrix::assume_unitary(std::move(m));
}

PauliOperator PauliOperator::restricted(std::span<const size_t> qubits) const {
    uint64_t x = 0, z = 0;
    for (size_t k = 0; k < qubits.size(); k++) {
        if (qubits[k] >= n_) {
            throw std::out_of_range("qubit " + std::to_string(qubits[k]) + " out of range");
        }
        x |= (uint64_t)x_bit(qubits[k]) << k;
        z |= (uint64_t)z_bit(qubits[k]) << k;
    }
    return PauliOperator(qubits.size(), x, z, phase_);
}

std::string PauliOperator::str() const {
    std::ostringstream out;
    if (phase_ != 0) {
        out << "i^" << (int)phase_ << " · ";
    }
    bool any = false;
    for (size_t q = 0; q < n_; q++) {
        if (x_bit(q)) {
            out << (any ? " " : "") << "X" << q;
            any = true;
        }
        if (z_bit(q)) {
            out << (any ? " " : "") << "Z" << q;
            any = true;
        }
    }
    if (!any) {
        out << "I";
    }
    return out.str();
}

PauliOperator PauliOperator::parse(std::string_view text, size_t num_qubits) {
    std::string s(text);
    uint8_t phase = 0;
    size_t pos = 0;
    auto skip_space = [&]() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) {
            pos++;
        }
    };
    skip_space();
    if (s.compare(pos, 2, "i^") == 0) {
        pos += 2;
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) {
            throw ParseError(0, "expected phase exponent in '" + s + "'");
        }
        phase = (uint8_t)((s[pos] - '0') & 3);
        pos++;
        skip_space();
        if (s.compare(pos, 2, "·") == 0) {
            pos += 2;
        } else if (pos < s.size() && s[pos] == '*') {
            pos += 1;
        } else {
            throw ParseError(0, "expected '·' after phase in '" + s + "'");
        }
    }
    uint64_t x = 0, z = 0;
    bool any = false;
    while (true) {
        skip_space();
        if (pos >= s.size()) {
            break;
        }
        char c = s[pos++];
        if (c == 'I' && !any) {
            any = true;
            continue;
        }
        if (c != 'X' && c != 'Z') {
            throw ParseError(0, std::string("unexpected character '") + c + "' in Pauli '" + s + "'");
        }
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            pos++;
        }
        if (start == pos) {
            throw ParseError(0, "missing qubit index in '" + s + "'");
        }
        size_t q = std::stoul(s.substr(start, pos - start));
        if (q >= num_qubits) {
            throw ParseError(0, "qubit " + std::to_string(q) + " out of range in '" + s + "'");
        }
        uint64_t bit = uint64_t{1} << q;
        if (c == 'X') {
            // X after Z on the same qubit reorders as -X Z.
            if (z & bit) {
                phase = (uint8_t)((phase + 2) & 3);
            }
            x ^= bit;
        } else {
            z ^= bit;
        }
        any = true;
    }
    if (!any) {
        throw ParseError(0, "empty Pauli string");
    }
    return PauliOperator(num_qubits, x, z, phase);
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("cannot multiply Paulis on " + std::to_string(a.num_qubits()) + " and " +
                             std::to_string(b.num_qubits()) + " qubits");
    }
    // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{z1.x2} X^{x1+x2} Z^{z1+z2}
    int flips = std::popcount(a.z_mask() & b.x_mask());
    return PauliOperator(
        a.num_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask(),
        (uint8_t)((a.phase_exp() + b.phase_exp() + 2 * flips) & 3));
}

bool commutes(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("cannot compare Paulis of different sizes");
    }
    int s = std::popcount(a.x_mask() & b.z_mask()) + std::popcount(a.z_mask() & b.x_mask());
    return (s & 1) == 0;
}

std::ostream &operator<<(std::ostream &out, const PauliOperator &p) {
    return out << p.str();
}

}  // namespace blindgate
