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

#include "gtest/gtest.h"

#include "blindgate/errors.h"
#include "blindgate/simulator.h"
#include "oracle.h"

using namespace blindgate;

static PauliOperator random_pauli(size_t n, Rng &rng) {
    uint64_t mask = (uint64_t{1} << n) - 1;
    return PauliOperator(n, rng.next_u64() & mask, rng.next_u64() & mask, (uint8_t)rng.below(4));
}

TEST(pauli, multiply_basics) {
    auto x = PauliOperator::x(1, 0);
    auto z = PauliOperator::z(1, 0);
    ASSERT_EQ(x * x, PauliOperator::identity(1));

    auto xz = x * z;
    auto zx = z * x;
    ASSERT_EQ(xz.x_mask(), zx.x_mask());
    ASSERT_EQ(xz.z_mask(), zx.z_mask());
    ASSERT_EQ((xz.phase_exp() + 4 - zx.phase_exp()) % 4, 2);

    auto xi = PauliOperator::x(2, 0);
    auto iz = PauliOperator::z(2, 1);
    ASSERT_EQ(xi * iz, PauliOperator(2, 0b01, 0b10, 0));

    ASSERT_THROW(x * PauliOperator::x(2, 0), DimensionError);
}

TEST(pauli, multiply_matches_matrix_product) {
    Rng rng(5);
    for (size_t n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 40; trial++) {
            auto a = random_pauli(n, rng);
            auto b = random_pauli(n, rng);
            oracle::M ma = oracle::pauli(a.x_mask(), a.z_mask(), a.phase_exp(), n);
            oracle::M mb = oracle::pauli(b.x_mask(), b.z_mask(), b.phase_exp(), n);
            auto ab = a * b;
            ASSERT_LT((oracle::pauli(ab.x_mask(), ab.z_mask(), ab.phase_exp(), n) - ma * mb).norm(), 1e-12);
            ASSERT_LT((ab.to_matrix().matrix() - ma * mb).norm(), 1e-12);
        }
    }
}

TEST(pauli, group_axioms) {
    Rng rng(6);
    for (size_t n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 30; trial++) {
            auto a = random_pauli(n, rng);
            auto b = random_pauli(n, rng);
            auto c = random_pauli(n, rng);
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_EQ(a * PauliOperator::identity(n), a);
            ASSERT_EQ(PauliOperator::identity(n) * a, a);
            ASSERT_EQ(a * a.inverse(), PauliOperator::identity(n));
            ASSERT_EQ(a.inverse() * a, PauliOperator::identity(n));
            ASSERT_LT(((a * b * c).to_matrix().matrix() - a.to_matrix().matrix() * b.to_matrix().matrix() *
                                                              c.to_matrix().matrix())
                          .norm(),
                      1e-12);
        }
    }
}

TEST(pauli, commutation_is_sign) {
    Rng rng(7);
    for (size_t n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 40; trial++) {
            auto a = random_pauli(n, rng).phaseless();
            auto b = random_pauli(n, rng).phaseless();
            auto ab = a * b;
            auto ba = b * a;
            ASSERT_EQ(ab.x_mask(), ba.x_mask());
            ASSERT_EQ(ab.z_mask(), ba.z_mask());
            int diff = (ab.phase_exp() + 4 - ba.phase_exp()) % 4;
            ASSERT_EQ(diff, commutes(a, b) ? 0 : 2);
            oracle::M ma = a.to_matrix().matrix(), mb = b.to_matrix().matrix();
            ASSERT_EQ(commutes(a, b), (ma * mb - mb * ma).norm() < 1e-12);
        }
    }
}

TEST(pauli, commutes) {
    auto x = PauliOperator::x(1, 0);
    auto z = PauliOperator::z(1, 0);
    ASSERT_FALSE(commutes(x, z));
    ASSERT_TRUE(commutes(z, z));
    // X0 Z1 against Z0 X1; the 4x4 commutator is zero.
    ASSERT_TRUE(commutes(PauliOperator(2, 0b01, 0b10), PauliOperator(2, 0b10, 0b01)));
    ASSERT_THROW(commutes(x, PauliOperator::x(2, 0)), DimensionError);
}

TEST(pauli, to_matrix) {
    ASSERT_LT((PauliOperator::identity(2).to_matrix().matrix() - oracle::M::Identity(4, 4)).norm(), 1e-15);
    ASSERT_LT((PauliOperator::x(1, 0).to_matrix().matrix() - oracle::X()).norm(), 1e-15);
    ASSERT_LT((PauliOperator(1, 0, 1, 2).to_matrix().matrix() - oracle::mat2(-1, 0, 0, 1)).norm(), 1e-15);
    // X is written before Z on each qubit.
    ASSERT_LT((PauliOperator(1, 1, 1).to_matrix().matrix() - oracle::X() * oracle::Z()).norm(), 1e-15);
    ASSERT_THROW(PauliOperator::identity(13).to_matrix(), CapacityError);

    Rng rng(8);
    for (int trial = 0; trial < 20; trial++) {
        auto p = random_pauli(3, rng);
        oracle::M m = p.to_matrix().matrix();
        ASSERT_LT((m * m.adjoint() - oracle::M::Identity(8, 8)).norm(), 1e-12);
        // With X written before Z, (XZ)^2 = -I, so a phase-0 Pauli squares to +-I.
        oracle::M q = p.phaseless().to_matrix().matrix();
        double sign = std::popcount(p.x_mask() & p.z_mask()) % 2 ? -1.0 : 1.0;
        ASSERT_LT((q * q - sign * oracle::M::Identity(8, 8)).norm(), 1e-12);
    }
}

TEST(pauli, index_round_trip) {
    const char *order[4] = {"I", "X0", "Z0", "X0 Z0"};
    for (uint64_t k = 0; k < 4; k++) {
        ASSERT_EQ(PauliOperator::from_index({k}, 1).str(), order[k]);
    }
    for (uint64_t k = 0; k < 16; k++) {
        ASSERT_EQ(PauliOperator::from_index({k}, 2).to_index().value, k);
    }
    ASSERT_THROW(PauliOperator::from_index({16}, 2), std::out_of_range);
}

TEST(pauli, distinct_paulis_differ_up_to_phase) {
    for (uint64_t a = 0; a < 16; a++) {
        for (uint64_t b = a + 1; b < 16; b++) {
            ASSERT_FALSE(oracle::same_up_to_phase(
                PauliOperator::from_index({a}, 2).to_matrix().matrix(),
                PauliOperator::from_index({b}, 2).to_matrix().matrix()));
        }
    }
}

TEST(pauli, one_time_pad_average) {
    // (1/4) sum_P P rho P^dagger over I, X, Z, XZ is I/2.
    Rng rng(9);
    for (int trial = 0; trial < 5; trial++) {
        auto psi = haar_state(1, rng);
        oracle::M rho = psi.amplitudes() * psi.amplitudes().adjoint();
        oracle::M avg = oracle::M::Zero(2, 2);
        for (uint64_t k = 0; k < 4; k++) {
            oracle::M p = PauliOperator::from_index({k}, 1).to_matrix().matrix();
            avg += p * rho * p.adjoint() / 4.0;
        }
        ASSERT_LT((avg - oracle::I2() / 2.0).norm(), 1e-12);
    }
}

TEST(pauli, str_and_parse) {
    auto p = PauliOperator(2, 0b11, 0b01, 2);
    ASSERT_EQ(p.str(), "i^2 · X0 Z0 X1");
    ASSERT_EQ(PauliOperator::parse(p.str(), 2), p);
    ASSERT_EQ(PauliOperator::parse("i^3 * Z1", 2), PauliOperator(2, 0, 0b10, 3));
    ASSERT_EQ(PauliOperator::parse("I", 3), PauliOperator::identity(3));
    Rng rng(10);
    for (int trial = 0; trial < 50; trial++) {
        auto q = random_pauli(4, rng);
        ASSERT_EQ(PauliOperator::parse(q.str(), 4), q);
    }
    ASSERT_THROW(PauliOperator::parse("Y0", 1), ParseError);
    ASSERT_THROW(PauliOperator::parse("X3", 2), ParseError);
}

TEST(pauli, restricted) {
    auto p = PauliOperator(3, 0b101, 0b110, 1);
    size_t qs[2] = {2, 1};
    auto r = p.restricted(qs);
    ASSERT_EQ(r, PauliOperator(2, 0b01, 0b11, 1));
}
