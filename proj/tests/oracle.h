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

#ifndef BLINDGATE_TESTS_ORACLE_H
#define BLINDGATE_TESTS_ORACLE_H

// Test-only reference math built from Kronecker products and literal
// matrices. Nothing here calls into the library's simulation code.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;
using V = Eigen::VectorXcd;

inline M kron(const M &a, const M &b) {
    M out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline M mat2(C a, C b, C c, C d) {
    M m(2, 2);
    m << a, b, c, d;
    return m;
}

inline M I2() {
    return M::Identity(2, 2);
}
inline M X() {
    return mat2(0, 1, 1, 0);
}
inline M Z() {
    return mat2(1, 0, 0, -1);
}
inline M H() {
    return mat2(1, 1, 1, -1) / std::sqrt(2.0);
}
inline M T() {
    return mat2(1, 0, 0, std::polar(1.0, M_PI / 4));
}
inline M S() {
    return mat2(1, 0, 0, C(0, 1));
}

/// Controlled-NOT as printed with the control as the most significant bit.
inline M C_msb_first() {
    M m = M::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
    return m;
}

/// ops[q] acts on qubit q; qubit 0 is the least significant index bit.
inline M tensor_lsb(const std::vector<M> &ops) {
    M out = M::Identity(1, 1);
    for (const auto &op : ops) {
        out = kron(op, out);
    }
    return out;
}

/// Full 2^n matrix of a single-qubit gate on qubit q.
inline M on_qubit(const M &g, size_t q, size_t n) {
    std::vector<M> ops(n, I2());
    ops[q] = g;
    return tensor_lsb(ops);
}

/// CNOT with the given control and target, built from projectors.
inline M cnot(size_t control, size_t target, size_t n) {
    M p0 = mat2(1, 0, 0, 0), p1 = mat2(0, 0, 0, 1);
    std::vector<M> a(n, I2()), b(n, I2());
    a[control] = p0;
    b[control] = p1;
    b[target] = X();
    return tensor_lsb(a) + tensor_lsb(b);
}

/// i^phase * prod_q X^x_q Z^z_q.
inline M pauli(uint64_t x, uint64_t z, int phase, size_t n) {
    std::vector<M> ops;
    for (size_t q = 0; q < n; q++) {
        M op = I2();
        if ((x >> q) & 1) {
            op = op * X();
        }
        if ((z >> q) & 1) {
            op = op * Z();
        }
        ops.push_back(op);
    }
    C ph = std::pow(C(0, 1), phase);
    return ph * tensor_lsb(ops);
}

inline V basis(size_t index, size_t n) {
    V v = V::Zero(1 << n);
    v(index) = 1;
    return v;
}

/// Largest entrywise gap between a and b after aligning their global phase.
inline double phase_distance(const M &a, const M &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    C inner = (b.adjoint() * a).trace();
    C phase = std::abs(inner) < 1e-12 ? C(1) : inner / std::abs(inner);
    return (a - phase * b).cwiseAbs().maxCoeff();
}

inline bool same_up_to_phase(const M &a, const M &b, double tol = 1e-10) {
    return phase_distance(a, b) <= tol;
}

inline double trace_distance(const M &a, const M &b) {
    Eigen::SelfAdjointEigenSolver<M> es(a - b);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace oracle

#endif
