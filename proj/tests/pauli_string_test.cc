// Copyright 2026 The cliffinit Authors
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

#include "cliffinit/pauli_string.h"

#include <complex>

#include "cliffinit/error.h"
#include "cliffinit/rng.h"
#include "gtest/gtest.h"
#include "support/dense_oracle.h"
#include "support/test_util.h"

using namespace cliffinit;

namespace {

// i^phase * matrix(label)
oracle::Mat signed_matrix(const PauliString &p) {
    static const std::complex<double> kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPowers[p.phase_exp()] * oracle::pauli_string(p.label());
}

std::string bits(std::span<const uint64_t> words, size_t n) {
    std::string out;
    for (size_t q = 0; q < n; q++) {
        out.push_back(((words[q / 64] >> (q % 64)) & 1) ? '1' : '0');
    }
    return out;
}

}  // namespace

TEST(pauli_string, parse_encodes_x_and_z_bits) {
    auto p = PauliString::parse("IZZI", 4);
    EXPECT_EQ(bits(p.x_words(), 4), "0000");
    EXPECT_EQ(bits(p.z_words(), 4), "0110");
    EXPECT_EQ(p.phase_exp(), 0);

    auto y = PauliString::parse("Y", 1);
    EXPECT_TRUE(y.x(0));
    EXPECT_TRUE(y.z(0));
    EXPECT_EQ(y.phase_exp(), 0);

    auto xyxy = PauliString::parse("XYXY", 4);
    EXPECT_EQ(bits(xyxy.x_words(), 4), "1111");
    EXPECT_EQ(bits(xyxy.z_words(), 4), "0101");
}

TEST(pauli_string, parse_errors) {
    try {
        PauliString::parse("XYZ", 4);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kBadLength);
    }
    try {
        PauliString::parse("XQ", 2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kBadChar);
    }
    try {
        PauliString::parse("xz", 2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kBadChar);
    }
}

TEST(pauli_string, parse_label_round_trip) {
    Rng rng(11);
    for (size_t n : {1, 5, 63, 64, 65, 130}) {
        for (int k = 0; k < 20; k++) {
            auto label = testing_util::random_label(n, rng);
            EXPECT_EQ(PauliString::parse(label).label(), label);
        }
    }
}

TEST(pauli_string, single_qubit_products) {
    auto x = PauliString::parse("X"), y = PauliString::parse("Y"), z = PauliString::parse("Z");
    auto xy = mul(x, y);
    EXPECT_EQ(xy.label(), "Z");
    EXPECT_EQ(xy.phase_exp(), 1);
    auto zz = mul(z, z);
    EXPECT_TRUE(zz.is_identity());
    EXPECT_EQ(zz.phase_exp(), 0);
    EXPECT_EQ(mul(y, x).str(), "-iZ");
    EXPECT_EQ(mul(z, x).str(), "+iY");
    EXPECT_EQ(mul(x, z).str(), "-iY");
}

TEST(pauli_string, two_qubit_product_matches_matrix_oracle) {
    auto a = PauliString::parse("XZ");
    auto b = PauliString::parse("ZX");
    auto c = mul(a, b);
    // XZ = -iY and ZX = iY, so the product is +YY.
    EXPECT_EQ(c.label(), "YY");
    EXPECT_EQ(c.phase_exp(), 0);
    EXPECT_TRUE(signed_matrix(c).isApprox(oracle::pauli_string("XZ") * oracle::pauli_string("ZX")));
}

TEST(pauli_string, product_matches_dense_matrices) {
    Rng rng(3);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + rng.uniform_index(4);
        auto a = PauliString::parse(testing_util::random_label(n, rng));
        auto b = PauliString::parse(testing_util::random_label(n, rng));
        a.set_phase_exp(static_cast<int>(rng.uniform_index(4)));
        auto c = mul(a, b);
        EXPECT_TRUE(signed_matrix(c).isApprox(signed_matrix(a) * signed_matrix(b), 1e-12)) << a.str() << b.str();
    }
}

TEST(pauli_string, multiplication_is_associative_with_identity) {
    Rng rng(5);
    for (int trial = 0; trial < 500; trial++) {
        size_t n = 1 + rng.uniform_index(6);
        auto a = PauliString::parse(testing_util::random_label(n, rng));
        auto b = PauliString::parse(testing_util::random_label(n, rng));
        auto c = PauliString::parse(testing_util::random_label(n, rng));
        a.set_phase_exp(static_cast<int>(rng.uniform_index(4)));
        EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
        EXPECT_EQ(mul(a, PauliString(n)), a);
        EXPECT_EQ(mul(PauliString(n), a), a);
        if (n <= 4) {
            EXPECT_TRUE(signed_matrix(mul(mul(a, b), c)).isApprox(signed_matrix(a) * signed_matrix(b) * signed_matrix(c)));
        }
    }
}

TEST(pauli_string, products_across_word_boundaries) {
    Rng rng(8);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 100;
        auto a = PauliString::parse(testing_util::random_label(n, rng));
        auto b = PauliString::parse(testing_util::random_label(n, rng));
        // Phase of a product is the sum of per-qubit phases; check against a per-qubit fold.
        int expected = 0;
        for (size_t q = 0; q < n; q++) {
            auto pa = PauliString::parse(std::string(1, a.pauli_char(q)));
            auto pb = PauliString::parse(std::string(1, b.pauli_char(q)));
            expected += mul(pa, pb).phase_exp();
        }
        EXPECT_EQ(mul(a, b).phase_exp(), expected % 4);
    }
}

TEST(pauli_string, commutation_examples) {
    EXPECT_TRUE(commutes(PauliString::parse("XX"), PauliString::parse("ZZ")));
    EXPECT_FALSE(commutes(PauliString::parse("XI"), PauliString::parse("ZI")));

    auto a = PauliString::parse("IZZI");
    auto b = PauliString::parse("XYXY");
    oracle::Mat ma = oracle::pauli_string("IZZI"), mb = oracle::pauli_string("XYXY");
    bool oracle_commutes = (ma * mb - mb * ma).norm() < 1e-12;
    EXPECT_TRUE(oracle_commutes);
    EXPECT_EQ(commutes(a, b), oracle_commutes);
}

TEST(pauli_string, commutation_matches_dense_commutator_exhaustively) {
    for (size_t n = 1; n <= 3; n++) {
        uint64_t count = uint64_t{1} << (2 * n);
        std::vector<oracle::Mat> mats;
        for (uint64_t i = 0; i < count; i++) {
            mats.push_back(oracle::pauli_string(testing_util::label_from_index(i, n)));
        }
        for (uint64_t i = 0; i < count; i++) {
            auto a = PauliString::parse(testing_util::label_from_index(i, n));
            for (uint64_t j = 0; j < count; j++) {
                auto b = PauliString::parse(testing_util::label_from_index(j, n));
                bool dense = (mats[i] * mats[j] - mats[j] * mats[i]).norm() < 1e-12;
                ASSERT_EQ(commutes(a, b), dense) << a.label() << " " << b.label();
            }
        }
    }
}

TEST(pauli_string, commutation_matches_dense_commutator_at_four_qubits) {
    // All 256 x 256 pairs at n = 4 through the matrix oracle.
    const size_t n = 4;
    std::vector<oracle::Mat> mats;
    std::vector<PauliString> paulis;
    for (uint64_t i = 0; i < 256; i++) {
        auto label = testing_util::label_from_index(i, n);
        mats.push_back(oracle::pauli_string(label));
        paulis.push_back(PauliString::parse(label));
    }
    for (size_t i = 0; i < 256; i++) {
        for (size_t j = i; j < 256; j++) {
            bool dense = (mats[i] * mats[j] - mats[j] * mats[i]).norm() < 1e-12;
            ASSERT_EQ(commutes(paulis[i], paulis[j]), dense);
        }
    }
}

TEST(pauli_string, size_mismatch) {
    auto a = PauliString::parse("XX");
    auto b = PauliString::parse("X");
    try {
        mul(a, b);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kSizeMismatch);
    }
    try {
        commutes(a, b);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kSizeMismatch);
    }
}

TEST(pauli_string, diagonal_and_identity) {
    EXPECT_TRUE(PauliString::parse("IIII").is_identity());
    EXPECT_TRUE(PauliString::parse("IZZI").is_diagonal());
    EXPECT_FALSE(PauliString::parse("IZYI").is_diagonal());
    EXPECT_EQ(PauliString::parse("IZYI").weight(), 2u);
}
