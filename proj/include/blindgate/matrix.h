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

#ifndef BLINDGATE_MATRIX_H
#define BLINDGATE_MATRIX_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

namespace blindgate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default cap on qubits for any dense object.
inline constexpr size_t kMaxQubits = 12;

/// Default equality tolerance for unitary and state comparisons.
inline constexpr double kTolerance = 1e-10;

/// Returns log2(dim) or throws DimensionError when dim is not a power of two.
size_t qubits_for_dimension(size_t dim);

/// A square matrix known to satisfy U U^dagger = I.
///
/// Construction through `from_matrix` validates unitarity; products, adjoints
/// and tensor products of unitaries are unitary and skip re-validation.
class UnitaryMatrix {
   public:
    static UnitaryMatrix from_matrix(Matrix m, double tol = kTolerance);
    static UnitaryMatrix identity(size_t num_qubits);
    /// Wraps a matrix that is unitary by construction (no check).
    static UnitaryMatrix assume_unitary(Matrix m);

    size_t dim() const {
        return (size_t)m_.rows();
    }
    size_t num_qubits() const;
    const Matrix &matrix() const {
        return m_;
    }
    Complex operator()(size_t row, size_t col) const {
        return m_((Eigen::Index)row, (Eigen::Index)col);
    }

    UnitaryMatrix adjoint() const;
    UnitaryMatrix operator*(const UnitaryMatrix &other) const;
    UnitaryMatrix scaled(Complex phase) const;

    /// Tensor product with `high` acting on the more significant qubits.
    UnitaryMatrix tensor(const UnitaryMatrix &high) const;

   private:
    explicit UnitaryMatrix(Matrix m) : m_(std::move(m)) {
    }
    Matrix m_;
};

/// True iff a = c * b for some unit-modulus c, entrywise within tol.
///
/// The phase c is anchored on the largest-magnitude entry of b.
bool equal_up_to_global_phase(const Matrix &a, const Matrix &b, double tol = kTolerance);
bool equal_up_to_global_phase(const UnitaryMatrix &a, const UnitaryMatrix &b, double tol = kTolerance);

/// Max-norm of U U^dagger - I.
double unitarity_error(const Matrix &m);

}  // namespace blindgate

#endif
