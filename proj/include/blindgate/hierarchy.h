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

#ifndef BLINDGATE_HIERARCHY_H
#define BLINDGATE_HIERARCHY_H

#include <optional>
#include <vector>

#include "blindgate/matrix.h"
#include "blindgate/pauli.h"

namespace blindgate {

/// Residual tolerance for hierarchy membership tests.
inline constexpr double kHierarchyTolerance = 1e-8;

/// Highest level the classifier will test.
inline constexpr int kMaxHierarchyLevel = 5;

/// The phaseless Pauli equal to `u` up to global phase, if any.
std::optional<PauliOperator> recognize_pauli(const UnitaryMatrix &u, double tol = kHierarchyTolerance);

struct ConjugationImage {
    PauliOperator generator;
    UnitaryMatrix image;                 // u * generator * u^dagger
    std::optional<PauliOperator> pauli;  // recognized image, if Pauli
};

struct CliffordCheck {
    bool is_clifford = false;
    /// One entry per generator X_0, Z_0, X_1, Z_1, ...
    std::vector<ConjugationImage> table;
};

/// The generators X_i, Z_i of the n-qubit Pauli group, in the order X_0, Z_0, X_1, Z_1, ...
std::vector<PauliOperator> pauli_generators(size_t num_qubits);

CliffordCheck is_clifford(const UnitaryMatrix &u, double tol = kHierarchyTolerance);

/// Membership in C_k. Levels 1..3 use generator images; levels 4 and up
/// conjugate every phaseless Pauli because those sets are not closed under products.
bool is_in_level(const UnitaryMatrix &u, int k, double tol = kHierarchyTolerance);

/// Membership in C_k by conjugating all 4^n phaseless Paulis at every level >= 2.
bool is_in_level_by_enumeration(const UnitaryMatrix &u, int k, double tol = kHierarchyTolerance);

struct GeneratorWitness {
    PauliOperator generator;
    UnitaryMatrix image;
    /// Smallest level of the image up to max_k - 1, if found.
    std::optional<int> image_level;
};

struct HierarchyVerdict {
    /// Smallest k <= max_k with u in C_k; empty means "beyond max_k".
    std::optional<int> level;
    int max_k = 0;
    std::vector<GeneratorWitness> witnesses;
};

HierarchyVerdict classify(const UnitaryMatrix &u, int max_k = 4, double tol = kHierarchyTolerance);

/// u * e^dagger * u^dagger: the correction that undoes encoding e around u.
UnitaryMatrix decode_for(const UnitaryMatrix &u, const PauliOperator &e);

/// Encoding/decoding families of a protocol in which Bob applies v != u, and
/// the equivalent family in which Bob applies u. Entry j of every vector
/// belongs to the key with PauliIndex j.
struct BobGateReduction {
    std::vector<UnitaryMatrix> encodings;          // E_j = P_j e0
    std::vector<UnitaryMatrix> decodings;          // D_j = u E_j^dagger v^dagger, so D_j v E_j = u
    std::vector<UnitaryMatrix> reduced_encodings;  // E_0^dagger E_j
    std::vector<UnitaryMatrix> reduced_decodings;  // D_j D_0^dagger
};

/// Rewrites a protocol for target `u` that asks Bob for `v` (with d0 v e0 = u
/// up to phase) into one that asks Bob for `u` itself. Every key of both
/// families is checked before returning.
BobGateReduction normalize_bob_gate(
    const UnitaryMatrix &u,
    const UnitaryMatrix &v,
    const PauliOperator &e0,
    const PauliOperator &d0,
    double tol = kTolerance);

}  // namespace blindgate

#endif
