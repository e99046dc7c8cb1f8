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

#ifndef BLINDGATE_SIMULATOR_H
#define BLINDGATE_SIMULATOR_H

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "blindgate/matrix.h"

namespace blindgate {

/// Deterministic 64-bit generator. Identical seeds give identical streams on
/// every platform (no std distributions are involved).
class Rng {
   public:
    explicit Rng(uint64_t seed = 0) : engine_(seed), seed_(seed) {
    }
    uint64_t seed() const {
        return seed_;
    }
    uint64_t next_u64() {
        return engine_();
    }
    bool coin() {
        return (engine_() >> 63) != 0;
    }
    /// Uniform in [0, 1).
    double uniform() {
        return (double)(engine_() >> 11) * 0x1.0p-53;
    }
    /// Uniform integer in [0, bound).
    uint64_t below(uint64_t bound);
    double normal();

   private:
    std::mt19937_64 engine_;
    uint64_t seed_;
};

/// SplitMix64 finalizer applied to (seed, stream); used to derive per-trial seeds.
uint64_t derive_seed(uint64_t seed, uint64_t stream);

/// Dense pure state. Qubit 0 is the least significant bit of the basis index.
class StateVector {
   public:
    /// Throws unless the amplitudes have unit norm within tolerance.
    explicit StateVector(Vector amps, double tol = kTolerance);

    static StateVector zero(size_t num_qubits);
    static StateVector basis(size_t num_qubits, uint64_t index);

    size_t num_qubits() const {
        return n_;
    }
    size_t dim() const {
        return (size_t)amps_.size();
    }
    const Vector &amplitudes() const {
        return amps_;
    }
    Complex amplitude(uint64_t index) const {
        return amps_((Eigen::Index)index);
    }
    double norm() const {
        return amps_.norm();
    }

    /// Applies `gate` with local qubit k of the gate on register qubit targets[k].
    void apply(const UnitaryMatrix &gate, std::span<const size_t> targets);
    void apply(const UnitaryMatrix &gate, std::initializer_list<size_t> targets) {
        apply(gate, std::span<const size_t>(targets.begin(), targets.size()));
    }
    void swap_qubits(size_t a, size_t b);

    /// Adds a fresh |0> qubit at index num_qubits(); returns its index.
    size_t append_zero_qubit();

    /// Removes qubits whose joint state is a product with the rest of the
    /// register. Throws std::logic_error if they are entangled with it.
    void discard(std::span<const size_t> qubits, double tol = 1e-8);

    /// Projects onto `bit` for the given qubit and renormalizes; returns the
    /// probability of that outcome before projection.
    double collapse(size_t qubit, bool bit);

   private:
    size_t n_;
    Vector amps_;
};

/// Dense mixed state.
class DensityMatrix {
   public:
    /// Throws unless Hermitian, unit trace and positive semidefinite within tolerances.
    explicit DensityMatrix(Matrix entries, double tol = 1e-10, double positivity_tol = 1e-9);

    static DensityMatrix pure(const StateVector &state);
    static DensityMatrix maximally_mixed(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }
    size_t dim() const {
        return (size_t)m_.rows();
    }
    const Matrix &matrix() const {
        return m_;
    }

   private:
    size_t n_;
    Matrix m_;
};

StateVector prepare_zero(size_t num_qubits);

StateVector apply(StateVector state, const UnitaryMatrix &gate, std::span<const size_t> targets);

/// Born-rule sample of one qubit; the returned state is collapsed and renormalized.
std::pair<bool, StateVector> measure(StateVector state, size_t qubit, Rng &rng);

/// Entry k is |amplitude k|^2.
std::vector<double> exact_distribution(const StateVector &state);

/// Distribution over outcomes of the listed qubits; bit k of an outcome is qubits[k].
std::vector<double> marginal_distribution(const StateVector &state, std::span<const size_t> qubits);

DensityMatrix density_from_ensemble(std::span<const std::pair<double, StateVector>> members, double tol = 1e-10);

/// Reduced density matrix of the listed qubits; local qubit k is qubits[k].
Matrix reduced_density(const StateVector &state, std::span<const size_t> qubits);

/// Half the trace norm of a - b.
double distance_trace(const DensityMatrix &a, const DensityMatrix &b);
double distance_trace(const Matrix &a, const Matrix &b);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

double total_variation(std::span<const double> p, std::span<const double> q);

/// Haar-distributed unitary on `num_qubits` qubits (QR of a Ginibre matrix with phase fix).
UnitaryMatrix haar_unitary(size_t num_qubits, Rng &rng);

/// Haar-distributed pure state.
StateVector haar_state(size_t num_qubits, Rng &rng);

}  // namespace blindgate

#endif
