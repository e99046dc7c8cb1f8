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

#include "blindgate/matrix.h"

#include <cmath>
#include <string>

#include "blindgate/errors.h"

namespace blindgate {

size_t qubits_for_dimension(size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw DimensionError("matrix dimension " + std::to_string(dim) + " is not a power of two");
    }
    size_t n = 0;
    while ((size_t{1} << n) < dim) {
        n++;
    }
    return n;
}

double unitarity_error(const Matrix &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    Matrix r = m * m.adjoint() - Matrix::Identity(m.rows(), m.cols());
    return r.cwiseAbs().maxCoeff();
}

UnitaryMatrix UnitaryMatrix::from_matrix(Matrix m, double tol) {
    if (m.rows() != m.cols()) {
        throw DimensionError("matrix is not square");
    }
    qubits_for_dimension((size_t)m.rows());
    if (unitarity_error(m) > tol) {
        throw std::invalid_argument("matrix is not unitary");
    }
    return UnitaryMatrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::identity(size_t num_qubits) {
    if (num_qubits > kMaxQubits) {
        throw CapacityError("identity on " + std::to_string(num_qubits) + " qubits exceeds the cap");
    }
    auto d = (Eigen::Index)(size_t{1} << num_qubits);
    return UnitaryMatrix(Matrix::Identity(d, d));
}

UnitaryMatrix UnitaryMatrix::assume_unitary(Matrix m) {
    return UnitaryMatrix(std::move(m));
}

size_t UnitaryMatrix::num_qubits() const {
    return qubits_for_dimension(dim());
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    return UnitaryMatrix(m_.adjoint());
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix &other) const {
    if (dim() != other.dim()) {
        throw DimensionError("cannot multiply unitaries of different dimension");
    }
    return UnitaryMatrix(m_ * other.m_);
}

UnitaryMatrix UnitaryMatrix::scaled(Complex phase) const {
    return UnitaryMatrix(m_ * phase);
}

UnitaryMatrix UnitaryMatrix::tensor(const UnitaryMatrix &high) const {
    auto dl = m_.rows();
    auto dh = high.m_.rows();
    Matrix out(dl * dh, dl * dh);
    for (Eigen::Index r = 0; r < dh; r++) {
        for (Eigen::Index c = 0; c < dh; c++) {
            out.block(r * dl, c * dl, dl, dl) = high.m_(r, c) * m_;
        }
    }
    return UnitaryMatrix(std::move(out));
}

bool equal_up_to_global_phase(const Matrix &a, const Matrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    Eigen::Index br = 0, bc = 0;
    double best = b.cwiseAbs().maxCoeff(&br, &bc);
    if (best <= tol) {
        return a.cwiseAbs().maxCoeff() <= tol;
    }
    Complex c = a(br, bc) / b(br, bc);
    if (std::abs(std::abs(c) - 1) > tol) {
        return false;
    }
    c /= std::abs(c);
    return (a - c * b).cwiseAbs().maxCoeff() <= tol;
}

bool equal_up_to_global_phase(const UnitaryMatrix &a, const UnitaryMatrix &b, double tol) {
    return equal_up_to_global_phase(a.matrix(), b.matrix(), tol);
}

}  // namespace blindgate
