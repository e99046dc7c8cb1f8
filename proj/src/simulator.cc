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

#include "blindgate/simulator.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "blindgate/errors.h"

namespace blindgate {

namespace {

void check_capacity(size_t n) {
    if (n > kMaxQubits) {
        throw CapacityError(std::to_string(n) + " qubits exceeds the cap of " + std::to_string(kMaxQubits));
    }
}

void check_targets(std::span<const size_t> targets, size_t num_qubits) {
    for (size_t i = 0; i < targets.size(); i++) {
        if (targets[i] >= num_qubits) {
            throw std::out_of_range("qubit " + std::to_string(targets[i]) + " out of range");
        }
        for (size_t j = 0; j < i; j++) {
            if (targets[i] == targets[j]) {
                throw std::invalid_argument("duplicate target qubit " + std::to_string(targets[i]));
            }
        }
    }
}

/// Splits basis indices into (rest, local) parts around a list of qubits.
struct Embedding {
    std::vector<uint64_t> local_offsets;
    std::vector<uint64_t> rest_offsets;

    Embedding(size_t num_qubits, std::span<const size_t> qubits) {
        std::vector<size_t> rest;
        for (size_t q = 0; q < num_qubits; q++) {
            if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) {
                rest.push_back(q);
            }
        }
        local_offsets = offsets(qubits);
        rest_offsets = offsets(rest);
    }

    static std::vector<uint64_t> offsets(std::span<const size_t> qubits) {
        std::vector<uint64_t> out(size_t{1} << qubits.size(), 0);
        for (uint64_t l = 0; l < out.size(); l++) {
            for (size_t k = 0; k < qubits.size(); k++) {
                if ((l >> k) & 1) {
                    out[l] |= uint64_t{1} << qubits[k];
                }
            }
        }
        return out;
    }
};

}  // namespace

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("Rng::below(0)");
    }
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    while (true) {
        uint64_t v = engine_();
        if (v < limit) {
            return v % bound;
        }
    }
}

double Rng::normal() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * M_PI * u2);
}

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

StateVector::StateVector(Vector amps, double tol) : n_(qubits_for_dimension((size_t)amps.size())), amps_(std::move(amps)) {
    check_capacity(n_);
    if (std::abs(amps_.squaredNorm() - 1.0) > tol) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

StateVector StateVector::zero(size_t num_qubits) {
    return basis(num_qubits, 0);
}

StateVector StateVector::basis(size_t num_qubits, uint64_t index) {
    check_capacity(num_qubits);
    Vector v = Vector::Zero((Eigen::Index)(size_t{1} << num_qubits));
    if (index >= (uint64_t)v.size()) {
        throw std::out_of_range("basis index out of range");
    }
    v((Eigen::Index)index) = 1;
    return StateVector(std::move(v));
}

void StateVector::apply(const UnitaryMatrix &gate, std::span<const size_t> targets) {
    if (gate.dim() != (size_t{1} << targets.size())) {
        throw DimensionError("gate of dimension " + std::to_string(gate.dim()) + " applied to " +
                             std::to_string(targets.size()) + " targets");
    }
    check_targets(targets, n_);
    Embedding e(n_, targets);
    const Matrix &g = gate.matrix();
    auto k = (Eigen::Index)e.local_offsets.size();
    Vector in(k);
    for (uint64_t base : e.rest_offsets) {
        for (Eigen::Index l = 0; l < k; l++) {
            in(l) = amps_((Eigen::Index)(base | e.local_offsets[(size_t)l]));
        }
        Vector out = g * in;
        for (Eigen::Index l = 0; l < k; l++) {
            amps_((Eigen::Index)(base | e.local_offsets[(size_t)l])) = out(l);
        }
    }
}

void StateVector::swap_qubits(size_t a, size_t b) {
    size_t t[2] = {a, b};
    check_targets(t, n_);
    uint64_t ma = uint64_t{1} << a, mb = uint64_t{1} << b;
    for (uint64_t i = 0; i < dim(); i++) {
        if ((i & ma) && !(i & mb)) {
            std::swap(amps_((Eigen::Index)i), amps_((Eigen::Index)(i ^ ma ^ mb)));
        }
    }
}

size_t StateVector::append_zero_qubit() {
    check_capacity(n_ + 1);
    Vector v = Vector::Zero(amps_.size() * 2);
    v.head(amps_.size()) = amps_;
    amps_ = std::move(v);
    return n_++;
}

void StateVector::discard(std::span<const size_t> qubits, double tol) {
    check_targets(qubits, n_);
    if (qubits.empty()) {
        return;
    }
    Matrix rho = reduced_density(*this, qubits);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
    auto top = solver.eigenvalues().size() - 1;
    if (solver.eigenvalues()(top) < 1 - tol) {
        throw std::logic_error("discarded qubits are entangled with the register");
    }
    Vector phi = solver.eigenvectors().col(top);
    Embedding e(n_, qubits);
    Vector kept(e.rest_offsets.size());
    for (size_t r = 0; r < e.rest_offsets.size(); r++) {
        Complex acc = 0;
        for (size_t l = 0; l < e.local_offsets.size(); l++) {
            acc += std::conj(phi((Eigen::Index)l)) * amps_((Eigen::Index)(e.rest_offsets[r] | e.local_offsets[l]));
        }
        kept((Eigen::Index)r) = acc;
    }
    kept /= kept.norm();
    n_ -= qubits.size();
    amps_ = std::move(kept);
}

double StateVector::collapse(size_t qubit, bool bit) {
    size_t t[1] = {qubit};
    check_targets(t, n_);
    uint64_t m = uint64_t{1} << qubit;
    double p = 0;
    for (uint64_t i = 0; i < dim(); i++) {
        if (((i & m) != 0) == bit) {
            p += std::norm(amps_((Eigen::Index)i));
        } else {
            amps_((Eigen::Index)i) = 0;
        }
    }
    if (p <= 0) {
        throw std::logic_error("collapse onto an outcome of probability zero");
    }
    amps_ /= std::sqrt(p);
    return p;
}

DensityMatrix::DensityMatrix(Matrix entries, double tol, double positivity_tol)
    : n_(qubits_for_dimension((size_t)entries.rows())), m_(std::move(entries)) {
    if (m_.rows() != m_.cols()) {
        throw DimensionError("density matrix is not square");
    }
    check_capacity(n_);
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1, 0)) > tol) {
        throw std::invalid_argument("density matrix does not have unit trace");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -positivity_tol) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &state) {
    return DensityMatrix(state.amplitudes() * state.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(size_t num_qubits) {
    check_capacity(num_qubits);
    auto d = (Eigen::Index)(size_t{1} << num_qubits);
    return DensityMatrix(Matrix::Identity(d, d) / (double)d);
}

StateVector prepare_zero(size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("prepare_zero needs at least one qubit");
    }
    return StateVector::zero(num_qubits);
}

StateVector apply(StateVector state, const UnitaryMatrix &gate, std::span<const size_t> targets) {
    state.apply(gate, targets);
    return state;
}

std::pair<bool, StateVector> measure(StateVector state, size_t qubit, Rng &rng) {
    size_t t[1] = {qubit};
    double p1 = marginal_distribution(state, t)[1];
    bool bit = rng.uniform() < p1;
    state.collapse(qubit, bit);
    return {bit, std::move(state)};
}

std::vector<double> exact_distribution(const StateVector &state) {
    std::vector<double> out(state.dim());
    for (size_t i = 0; i < out.size(); i++) {
        out[i] = std::norm(state.amplitude(i));
    }
    return out;
}

std::vector<double> marginal_distribution(const StateVector &state, std::span<const size_t> qubits) {
    check_targets(qubits, state.num_qubits());
    std::vector<double> out(size_t{1} << qubits.size(), 0.0);
    for (uint64_t i = 0; i < state.dim(); i++) {
        uint64_t k = 0;
        for (size_t j = 0; j < qubits.size(); j++) {
            k |= ((i >> qubits[j]) & 1) << j;
        }
        out[k] += std::norm(state.amplitude(i));
    }
    return out;
}

DensityMatrix density_from_ensemble(std::span<const std::pair<double, StateVector>> members, double tol) {
    if (members.empty()) {
        throw std::invalid_argument("empty ensemble");
    }
    size_t n = members[0].second.num_qubits();
    auto d = (Eigen::Index)members[0].second.dim();
    Matrix rho = Matrix::Zero(d, d);
    double total = 0;
    for (const auto &[p, psi] : members) {
        if (p < 0) {
            throw std::invalid_argument("negative ensemble probability");
        }
        if (psi.num_qubits() != n) {
            throw DimensionError("ensemble members have different qubit counts");
        }
        total += p;
        rho += p * psi.amplitudes() * psi.amplitudes().adjoint();
    }
    if (std::abs(total - 1) > tol) {
        throw std::invalid_argument("ensemble probabilities sum to " + std::to_string(total));
    }
    return DensityMatrix(std::move(rho), tol);
}

Matrix reduced_density(const StateVector &state, std::span<const size_t> qubits) {
    check_targets(qubits, state.num_qubits());
    Embedding e(state.num_qubits(), qubits);
    auto k = (Eigen::Index)e.local_offsets.size();
    Matrix rho = Matrix::Zero(k, k);
    Vector slice(k);
    for (uint64_t base : e.rest_offsets) {
        for (Eigen::Index l = 0; l < k; l++) {
            slice(l) = state.amplitude(base | e.local_offsets[(size_t)l]);
        }
        rho += slice * slice.adjoint();
    }
    return rho;
}

double distance_trace(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("trace distance between matrices of different size");
    }
    Matrix diff = a - b;
    diff = (diff + diff.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(diff, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum() / 2.0;
}

double distance_trace(const DensityMatrix &a, const DensityMatrix &b) {
    return distance_trace(a.matrix(), b.matrix());
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("fidelity between states of different size");
    }
    return std::norm(a.amplitudes().dot(b.amplitudes()));
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw DimensionError("distributions have different support sizes");
    }
    double s = 0;
    for (size_t i = 0; i < p.size(); i++) {
        s += std::abs(p[i] - q[i]);
    }
    return s / 2;
}

UnitaryMatrix haar_unitary(size_t num_qubits, Rng &rng) {
    check_capacity(num_qubits);
    auto d = (Eigen::Index)(size_t{1} << num_qubits);
    Matrix g(d, d);
    for (Eigen::Index r = 0; r < d; r++) {
        for (Eigen::Index c = 0; c < d; c++) {
            double re = rng.normal();
            double im = rng.normal();
            g(r, c) = Complex(re, im) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < d; i++) {
        Complex diag = r(i, i);
        q.col(i) *= diag / std::abs(diag);
    }
    return UnitaryMatrix::assume_unitary(std::move(q));
}

StateVector haar_state(size_t num_qubits, Rng &rng) {
    check_capacity(num_qubits);
    Vector v((Eigen::Index)(size_t{1} << num_qubits));
    for (Eigen::Index i = 0; i < v.size(); i++) {
        double re = rng.normal();
        double im = rng.normal();
        v(i) = Complex(re, im);
    }
    v /= v.norm();
    return StateVector(std::move(v));
}

}  // namespace blindgate
