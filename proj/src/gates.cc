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

#include "blindgate/gates.h"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace blindgate {

GateSpec GateSpec::make(std::string name, UnitaryMatrix unitary) {
    size_t arity = unitary.num_qubits();
    return GateSpec{std::move(name), arity, std::move(unitary)};
}

namespace gates {

namespace {

UnitaryMatrix permutation(const std::vector<uint64_t> &image) {
    auto d = (Eigen::Index)image.size();
    Matrix m = Matrix::Zero(d, d);
    for (size_t c = 0; c < image.size(); c++) {
        m((Eigen::Index)image[c], (Eigen::Index)c) = 1;
    }
    return UnitaryMatrix::from_matrix(std::move(m));
}

UnitaryMatrix diagonal(std::initializer_list<Complex> entries) {
    Vector v(entries.size());
    Eigen::Index i = 0;
    for (auto e : entries) {
        v(i++) = e;
    }
    return UnitaryMatrix::from_matrix(v.asDiagonal().toDenseMatrix());
}

}  // namespace

UnitaryMatrix x() {
    return permutation({1, 0});
}

UnitaryMatrix z() {
    return diagonal({1, -1});
}

UnitaryMatrix h() {
    Matrix m(2, 2);
    m << 1, 1, 1, -1;
    return UnitaryMatrix::from_matrix(m / std::sqrt(2.0));
}

UnitaryMatrix s() {
    return diagonal({1, Complex(0, 1)});
}

UnitaryMatrix t() {
    return diagonal({1, std::polar(1.0, M_PI / 4)});
}

UnitaryMatrix cnot() {
    // Index = control + 2 * target.
    return permutation({0, 3, 2, 1});
}

UnitaryMatrix cz() {
    return diagonal({1, 1, 1, -1});
}

UnitaryMatrix swap() {
    return permutation({0, 2, 1, 3});
}

UnitaryMatrix toffoli() {
    std::vector<uint64_t> image(8);
    for (uint64_t i = 0; i < 8; i++) {
        image[i] = (i & 3) == 3 ? i ^ 4 : i;
    }
    return permutation(image);
}

UnitaryMatrix fredkin() {
    std::vector<uint64_t> image(8);
    for (uint64_t i = 0; i < 8; i++) {
        bool b1 = (i >> 1) & 1, b2 = (i >> 2) & 1;
        image[i] = (i & 1) ? (i & 1) | ((uint64_t)b2 << 1) | ((uint64_t)b1 << 2) : i;
    }
    return permutation(image);
}

std::vector<std::string> names() {
    return {"I", "X", "Z", "XZ", "Y", "H", "S", "SDG", "T", "TDG", "CNOT", "CZ", "SWAP", "TOFFOLI", "FREDKIN"};
}

std::optional<GateSpec> by_name(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return (char)std::toupper(c); });
    if (key == "CX") key = "CNOT";
    if (key == "CCX") key = "TOFFOLI";
    if (key == "CSWAP") key = "FREDKIN";
    if (key == "I") return GateSpec::make(key, UnitaryMatrix::identity(1));
    if (key == "X") return GateSpec::make(key, x());
    if (key == "Z") return GateSpec::make(key, z());
    if (key == "XZ") return GateSpec::make(key, x() * z());
    if (key == "Y") return GateSpec::make(key, (x() * z()).scaled(Complex(0, 1)));
    if (key == "H") return GateSpec::make(key, h());
    if (key == "S") return GateSpec::make(key, s());
    if (key == "SDG") return GateSpec::make(key, s().adjoint());
    if (key == "T") return GateSpec::make(key, t());
    if (key == "TDG") return GateSpec::make(key, t().adjoint());
    if (key == "CNOT") return GateSpec::make(key, cnot());
    if (key == "CZ") return GateSpec::make(key, cz());
    if (key == "SWAP") return GateSpec::make(key, swap());
    if (key == "TOFFOLI") return GateSpec::make(key, toffoli());
    if (key == "FREDKIN") return GateSpec::make(key, fredkin());
    return std::nullopt;
}

}  // namespace gates

}  // namespace blindgate
