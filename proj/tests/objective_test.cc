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

#include "cliffinit/objective.h"

#include <atomic>

#include "cliffinit/baselines.h"
#include "cliffinit/rng.h"
#include "cliffinit/search_space.h"
#include "gtest/gtest.h"
#include "support/dense_oracle.h"
#include "support/test_util.h"

using namespace cliffinit;

namespace {

ParameterAssignment random_assignment(const AnsatzTemplate &t, Rng &rng) {
    ParameterAssignment a{std::vector<uint8_t>(t.num_slots())};
    for (auto &v : a.indices) {
        v = static_cast<uint8_t>(rng.uniform_index(4));
    }
    return a;
}

Hamiltonian xx() {
    return Hamiltonian::from_labels(2, {{"XX", 1.0}});
}

}  // namespace

TEST(objective, xx_examples) {
    auto t = build_su2(2, 1);
    ParameterAssignment bell{std::vector<uint8_t>(8, 0)};
    bell.indices[0] = 3;
    auto r = evaluate(xx(), t, bell);
    EXPECT_EQ(r.raw_energy, -1.0);
    EXPECT_EQ(r.penalty, 0.0);
    EXPECT_EQ(r.total, -1.0);
    for (int b = 0; b < 4; b++) {
        auto a = bitstring_assignment(t, {bool(b & 1), bool(b & 2)});
        EXPECT_EQ(evaluate(xx(), t, a).raw_energy, 0.0);
    }
}

TEST(objective, identity_hamiltonian_is_constant) {
    auto t = build_su2(3, 1);
    auto h = Hamiltonian::from_labels(3, {{"III", -2.5}});
    Rng rng(4);
    for (int i = 0; i < 50; i++) {
        EXPECT_EQ(evaluate(h, t, random_assignment(t, rng)).raw_energy, -2.5);
    }
}

TEST(objective, empty_hamiltonian) {
    auto t = build_su2(2, 1);
    Hamiltonian h(2, {}, {}, "empty");
    auto a = ParameterAssignment{std::vector<uint8_t>(8, 1)};
    EXPECT_TRUE(term_breakdown(h, t, a).empty());
    EXPECT_EQ(evaluate(h, t, a).raw_energy, 0.0);
}

TEST(objective, matches_dense_oracle) {
    Rng rng(9);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng.uniform_index(4);
        auto t = build_su2(n, 1 + rng.uniform_index(2));
        auto terms = testing_util::random_terms(n, std::min<size_t>(6, (size_t{1} << (2 * n)) - 1), rng);
        auto h = Hamiltonian::from_labels(n, terms);
        auto a = random_assignment(t, rng);
        auto psi = oracle::run(n, testing_util::to_oracle(bind(t, a)));
        double dense = 0;
        for (const auto &[label, c] : terms) {
            dense += c * oracle::expectation(psi, label).real();
        }
        EXPECT_NEAR(evaluate(h, t, a).raw_energy, dense, 1e-10);
    }
}

TEST(objective, term_breakdown_sums_to_raw_energy) {
    Rng rng(10);
    auto t = build_su2(4, 1);
    auto h = Hamiltonian::from_labels(4, testing_util::random_terms(4, 30, rng));
    for (int i = 0; i < 20; i++) {
        auto a = random_assignment(t, rng);
        auto breakdown = term_breakdown(h, t, a);
        ASSERT_EQ(breakdown.size(), h.terms().size());
        double sum = 0;
        for (const auto &e : breakdown) {
            EXPECT_TRUE(e.expectation >= -1 && e.expectation <= 1);
            sum += e.term.coeff * e.expectation;
        }
        EXPECT_EQ(sum, evaluate(h, t, a).raw_energy);
    }
}

TEST(objective, bitstring_breakdown_zeroes_off_diagonal_terms) {
    Rng rng(11);
    auto t = build_su2(4, 1);
    auto h = Hamiltonian::from_labels(4, testing_util::random_terms(4, 40, rng));
    auto a = bitstring_assignment(t, {true, false, true, true});
    for (const auto &e : term_breakdown(h, t, a)) {
        if (e.term.pauli.is_diagonal()) {
            EXPECT_NE(e.expectation, 0);
        } else {
            EXPECT_EQ(e.expectation, 0);
        }
    }
    // A Bell pair gives a non-diagonal term a nonzero value.
    auto h2 = Hamiltonian::from_labels(2, {{"XX", 0.3}, {"ZZ", 0.2}});
    auto t2 = build_su2(2, 1);
    ParameterAssignment bell{std::vector<uint8_t>(8, 0)};
    bell.indices[0] = 1;
    for (const auto &e : term_breakdown(h2, t2, bell)) {
        EXPECT_EQ(std::abs(e.expectation), 1);
    }
}

TEST(objective, linearity_and_scaling) {
    Rng rng(12);
    auto t = build_su2(3, 1);
    auto terms1 = testing_util::random_terms(3, 10, rng);
    auto terms2 = testing_util::random_terms(3, 10, rng);
    auto both = terms1;
    both.insert(both.end(), terms2.begin(), terms2.end());
    auto h1 = Hamiltonian::from_labels(3, terms1);
    auto h2 = Hamiltonian::from_labels(3, terms2);
    auto h12 = Hamiltonian::from_labels(3, both);
    auto scaled = terms1;
    for (auto &[label, c] : scaled) {
        c *= 4.0;
    }
    auto h4 = Hamiltonian::from_labels(3, scaled);
    for (int i = 0; i < 30; i++) {
        auto a = random_assignment(t, rng);
        EXPECT_NEAR(evaluate(h12, t, a).raw_energy, evaluate(h1, t, a).raw_energy + evaluate(h2, t, a).raw_energy,
                    1e-12);
        EXPECT_NEAR(evaluate(h4, t, a).raw_energy, 4.0 * evaluate(h1, t, a).raw_energy, 1e-12);
    }
}

TEST(objective, identity_shift) {
    Rng rng(13);
    auto t = build_su2(2, 1).with_active_slots({0, 1, 2, 3, 6});
    auto terms = testing_util::random_terms(2, 8, rng);
    auto shifted_terms = terms;
    shifted_terms.emplace_back("II", 1.75);
    auto h = Hamiltonian::from_labels(2, terms);
    auto hs = Hamiltonian::from_labels(2, shifted_terms);
    std::vector<double> plain, shifted;
    auto space = SearchSpace::quarter_turn(t);
    auto idx = space.first();
    do {
        ParameterAssignment a{idx};
        double e = evaluate(h, t, a).raw_energy;
        double es = evaluate(hs, t, a).raw_energy;
        EXPECT_NEAR(es - e, 1.75, 1e-12);
        plain.push_back(e);
        shifted.push_back(es);
    } while (space.next(idx));
    auto argmin = [](const std::vector<double> &v) {
        double best = *std::min_element(v.begin(), v.end());
        std::vector<size_t> out;
        for (size_t i = 0; i < v.size(); i++) {
            if (v[i] <= best + 1e-12) {
                out.push_back(i);
            }
        }
        return out;
    };
    EXPECT_EQ(argmin(plain), argmin(shifted));
}

TEST(objective, variational_bound) {
    Rng rng(14);
    for (size_t n : {2, 4, 7, 10, 12}) {
        auto t = build_su2(n, 1);
        auto h = Hamiltonian::from_labels(n, testing_util::random_terms(n, 3 * n, rng));
        double ground = exact_ground(h).energy;
        for (int i = 0; i < 200; i++) {
            EXPECT_GE(evaluate(h, t, random_assignment(t, rng)).raw_energy, ground - 1e-9) << n;
        }
    }
}

TEST(objective, constraint_penalty) {
    ConstraintSpec number{"n", {{PauliString::parse("II"), 1.0}, {PauliString::parse("ZI"), -0.5},
                                {PauliString::parse("IZ"), -0.5}}, 1.0, 10.0};
    Hamiltonian h(2, {{PauliString::parse("ZZ"), 0.5}}, {number}, "c");
    auto t = build_su2(2, 1);
    auto zero = evaluate(h, t, bitstring_assignment(t, {false, false}));
    EXPECT_EQ(zero.constraint_values, std::vector<double>{0.0});
    EXPECT_EQ(zero.penalty, 10.0);
    EXPECT_EQ(zero.total, zero.raw_energy + zero.penalty);
    auto one = evaluate(h, t, bitstring_assignment(t, {true, false}));
    EXPECT_EQ(one.constraint_values, std::vector<double>{1.0});
    EXPECT_EQ(one.penalty, 0.0);
    EXPECT_EQ(one.total, one.raw_energy);
    EXPECT_EQ(one.raw_energy, -0.5);
}

TEST(objective, threads_do_not_change_results) {
    Rng rng(15);
    auto t = build_su2(6, 1);
    auto h = Hamiltonian::from_labels(6, testing_util::random_terms(6, 300, rng));
    for (int i = 0; i < 10; i++) {
        auto a = random_assignment(t, rng);
        EXPECT_EQ(evaluate(h, t, a, {.threads = 1}), evaluate(h, t, a, {.threads = 4}));
    }
}

TEST(objective, parallel_for_visits_each_index_once) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), 3, [&](size_t i) { hits[i]++; });
    for (auto &h : hits) {
        EXPECT_EQ(h.load(), 1);
    }
}

TEST(objective, size_mismatch) {
    EXPECT_THROW(evaluate(xx(), build_su2(3, 1), ParameterAssignment{std::vector<uint8_t>(12, 0)}), Error);
}
