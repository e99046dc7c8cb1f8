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

#include "blindgate/hierarchy.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "blindgate/errors.h"

namespace blindgate {

std::optional<PauliOperator> recognize_pauli(const UnitaryMatrix &u, double tol) {
    size_t n = u.num_qubits();
    if (n > kMaxQubits) {
        throw CapacityError("cannot recognize a Pauli on " + std::to_string(n) + " qubits");
    }
    // A Pauli has one nonzero per column, at row (column xor x_mask), so the
    // only candidate is read off column 0 and the z bits off the unit columns.
    const Matrix &m = u.matrix();
    Eigen::Index row0 = 0;
    m.col(0).cwiseAbs().maxCoeff(&row0);
    uint64_t x = (uint64_t)row0;
    Complex anchor = m(row0, 0);
    if (std::abs(anchor) < 0.5) {
        return std::nullopt;
    }
    uint64_t z = 0;
    for (size_t q = 0; q < n; q++) {
        uint64_t c = uint64_t{1} << q;
        Complex ratio = m((Eigen::Index)(c ^ x), (Eigen::Index)c) / anchor;
        if (ratio.real() < 0) {
            z |= c;
        }
    }
    PauliOperator candidate(n, x, z);
    if (equal_up_to_global_phase(m, candidate.to_matrix().matrix(), tol)) {
        return candidate;
    }
    return std::nullopt;
}

std::vector<PauliOperator> pauli_generators(size_t num_qubits) {
    std::vector<PauliOperator> out;
    for (size_t q = 0; q < num_qubits; q++) {
        out.push_back(PauliOperator::x(num_qubits, q));
        out.push_back(PauliOperator::z(num_qubits, q));
    }
    return out;
}

namespace {

UnitaryMatrix conjugate(const UnitaryMatrix &u, const PauliOperator &p) {
    return u * p.to_matrix() * u.adjoint();
}

bool all_images_in_level(const UnitaryMatrix &u, const std::vector<PauliOperator> &paulis, int k, double tol,
                         bool (*member)(const UnitaryMatrix &, int, double)) {
    for (const auto &p : paulis) {
        if (!member(conjugate(u, p), k, tol)) {
            return false;
        }
    }
    return true;
}

std::vector<PauliOperator> all_paulis(size_t n) {
    std::vector<PauliOperator> out;
    uint64_t count = pauli_count(n);
    out.reserve(count);
    for (uint64_t i = 0; i < count; i++) {
        out.push_back(PauliOperator::from_index({i}, n));
    }
    return out;
}

void check_level(int k) {
    if (k < 1) {
        throw std::invalid_argument("hierarchy levels start at 1");
    }
}

}  // namespace

CliffordCheck is_clifford(const UnitaryMatrix &u, double tol) {
    CliffordCheck out;
    out.is_clifford = true;
    for (const auto &g : pauli_generators(u.num_qubits())) {
        auto image = conjugate(u, g);
        auto p = recognize_pauli(image, tol);
        out.is_clifford &= p.has_value();
        out.table.push_back(ConjugationImage{g, std::move(image), p});
    }
    return out;
}

bool is_in_level(const UnitaryMatrix &u, int k, double tol) {
    check_level(k);
    if (k == 1) {
        return recognize_pauli(u, tol).has_value();
    }
    if (k == 2) {
        return is_clifford(u, tol).is_clifford;
    }
    size_t n = u.num_qubits();
    // C_2 is a group, so generator images decide C_3 membership.
    const auto paulis = k == 3 ? pauli_generators(n) : all_paulis(n);
    return all_images_in_level(u, paulis, k - 1, tol, is_in_level);
}

bool is_in_level_by_enumeration(const UnitaryMatrix &u, int k, double tol) {
    check_level(k);
    if (k == 1) {
        return recognize_pauli(u, tol).has_value();
    }
    return all_images_in_level(u, all_paulis(u.num_qubits()), k - 1, tol, is_in_level_by_enumeration);
}

HierarchyVerdict classify(const UnitaryMatrix &u, int max_k, double tol) {
    check_level(max_k);
    if (max_k > kMaxHierarchyLevel) {
        throw std::invalid_argument("levels above " + std::to_string(kMaxHierarchyLevel) + " are not supported");
    }
    HierarchyVerdict verdict;
    verdict.max_k = max_k;
    for (int k = 1; k <= max_k; k++) {
        if (is_in_level(u, k, tol)) {
            verdict.level = k;
            break;
        }
    }
    for (const auto &g : pauli_generators(u.num_qubits())) {
        GeneratorWitness w{g, conjugate(u, g), std::nullopt};
        for (int k = 1; k < max_k; k++) {
            if (is_in_level(w.image, k, tol)) {
                w.image_level = k;
                break;
            }
        }
        verdict.witnesses.push_back(std::move(w));
    }
    return verdict;
}

UnitaryMatrix decode_for(const UnitaryMatrix &u, const PauliOperator &e) {
    if (u.num_qubits() != e.num_qubits()) {
        throw DimensionError("decode_for: gate acts on " + std::to_string(u.num_qubits()) + " qubits but key on " +
                             std::to_string(e.num_qubits()));
    }
    return u * e.to_matrix().adjoint() * u.adjoint();
}

BobGateReduction normalize_bob_gate(
    const UnitaryMatrix &u, const UnitaryMatrix &v, const PauliOperator &e0, const PauliOperator &d0, double tol) {
    size_t n = u.num_qubits();
    if (v.num_qubits() != n || e0.num_qubits() != n || d0.num_qubits() != n) {
        throw DimensionError("normalize_bob_gate: operands act on different qubit counts");
    }
    UnitaryMatrix e0m = e0.to_matrix();
    UnitaryMatrix d0m = d0.to_matrix();
    if (!equal_up_to_global_phase(d0m * v * e0m, u, tol)) {
        throw std::invalid_argument("normalize_bob_gate: d0 * v * e0 differs from u");
    }
    BobGateReduction out;
    uint64_t count = pauli_count(n);
    for (uint64_t j = 0; j < count; j++) {
        UnitaryMatrix e = PauliOperator::from_index({j}, n).to_matrix() * e0m;
        UnitaryMatrix d = u * e.adjoint() * v.adjoint();
        if (!equal_up_to_global_phase(d * v * e, u, tol)) {
            throw std::logic_error("normalize_bob_gate: original family fails for key " + std::to_string(j));
        }
        out.encodings.push_back(e);
        out.decodings.push_back(d);
    }
    const UnitaryMatrix e0_inv = out.encodings[0].adjoint();
    const UnitaryMatrix d0_inv = out.decodings[0].adjoint();
    for (uint64_t j = 0; j < count; j++) {
        UnitaryMatrix e = e0_inv * out.encodings[j];
        UnitaryMatrix d = out.decodings[j] * d0_inv;
        if (!equal_up_to_global_phase(d * u * e, u, tol)) {
            throw std::logic_error("normalize_bob_gate: reduced family fails for key " + std::to_string(j));
        }
        out.reduced_encodings.push_back(std::move(e));
        out.reduced_decodings.push_back(std::move(d));
    }
    return out;
}

}  // namespace blindgate
