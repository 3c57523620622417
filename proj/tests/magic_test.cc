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

#include "cliffinit/magic.h"

#include <cmath>
#include <numbers>

#include "cliffinit/error.h"
#include "cliffinit/rng.h"
#include "cliffinit/search.h"
#include "cliffinit/search_space.h"
#include "cliffinit/statevector.h"
#include "gtest/gtest.h"
#include "support/dense_oracle.h"
#include "support/test_util.h"

using namespace cliffinit;

namespace {

// Dense energy of an eighth-turn assignment using the test oracle only.
double oracle_energy(const AnsatzTemplate &t, const std::vector<uint8_t> &indices,
                     const std::vector<std::pair<std::string, double>> &terms) {
    const size_t n = t.num_qubits();
    std::vector<oracle::Gate> gates;
    const size_t per_layer = 2 * n;
    for (size_t layer = 0; layer <= t.reps(); layer++) {
        for (size_t s = layer * per_layer; s < (layer + 1) * per_layer; s++) {
            const auto &slot = t.slots()[s];
            gates.push_back({slot.kind == GateKind::kRY ? "RY" : "RZ", slot.qubit, 0,
                             indices[s] * std::numbers::pi / 4});
        }
        if (layer < t.reps()) {
            for (size_t q = 0; q + 1 < n; q++) {
                gates.push_back({"CX", q, q + 1, 0});
            }
        }
    }
    auto psi = oracle::run(n, gates);
    double e = 0;
    for (const auto &[label, c] : terms) {
        e += c * oracle::expectation(psi, label).real();
    }
    return e;
}

}  // namespace

TEST(statevector, gates_match_oracle) {
    Rng rng(1);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng.uniform_index(4);
        auto gates = testing_util::random_circuit(n, 25, rng);
        StateVector sv(n);
        for (const auto &g : gates) {
            sv.apply(g);
        }
        auto psi = oracle::run(n, testing_util::to_oracle(gates));
        for (size_t i = 0; i < psi.size(); i++) {
            EXPECT_NEAR(std::abs(sv.amplitudes()[i] - psi(i)), 0.0, 1e-12);
        }
        for (int k = 0; k < 10; k++) {
            auto label = testing_util::random_label(n, rng);
            EXPECT_NEAR(std::abs(sv.expectation(PauliString::parse(label)) - oracle::expectation(psi, label)), 0.0,
                        1e-12);
        }
    }
}

TEST(statevector, qubit_cap) {
    EXPECT_THROW(StateVector(27), Error);
}

TEST(magic, single_eighth_turn_ry_on_z) {
    auto t = build_su2(1, 1);
    auto h = Hamiltonian::from_labels(1, {{"Z", 1.0}});
    ExtendedAssignment a{{1, 0, 0, 0}, 1};
    auto r = dense_eval(t, a, h);
    EXPECT_NEAR(r.raw_energy, std::cos(std::numbers::pi / 4), 1e-12);
    // 2x2 check: RY(pi/4)|0> = (cos(pi/8), sin(pi/8)), <Z> = cos^2 - sin^2.
    double c = std::cos(std::numbers::pi / 8), s = std::sin(std::numbers::pi / 8);
    EXPECT_NEAR(r.raw_energy, c * c - s * s, 1e-12);
    EXPECT_NEAR(r.raw_energy, 0.7071067811865476, 1e-12);
}

TEST(magic, extend_and_reduce) {
    ParameterAssignment a{{0, 1, 2, 3}};
    auto e = extend(a, 2);
    EXPECT_EQ(e.indices, (std::vector<uint8_t>{0, 2, 4, 6}));
    EXPECT_EQ(e.odd_count(), 0u);
    EXPECT_EQ(to_quarter_turn(e), a);
    e.indices[0] = 1;
    EXPECT_FALSE(to_quarter_turn(e).has_value());
}

TEST(magic, validation) {
    auto t = build_su2(1, 1);
    EXPECT_THROW(validate_extended(t, {{1, 1, 0, 0}, 1}), Error);
    EXPECT_THROW(validate_extended(t, {{8, 0, 0, 0}, 1}), Error);
    EXPECT_THROW(validate_extended(t, {{0, 0, 0}, 1}), Error);
    EXPECT_NO_THROW(validate_extended(t, {{1, 1, 7, 0}, 3}));
    auto big = build_su2(17, 1);
    auto h = Hamiltonian::from_labels(17, {{std::string(17, 'Z'), 1.0}});
    try {
        dense_eval(big, {std::vector<uint8_t>(big.num_slots(), 0), 0}, h);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kTooManyQubits);
    }
}

TEST(magic, dense_eval_matches_oracle) {
    Rng rng(2);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 1 + rng.uniform_index(4);
        auto t = build_su2(n, 1);
        auto terms = testing_util::random_terms(n, std::min<size_t>(8, (size_t{1} << (2 * n)) - 1), rng);
        auto h = Hamiltonian::from_labels(n, terms);
        ExtendedAssignment a{std::vector<uint8_t>(t.num_slots()), t.num_slots()};
        for (auto &v : a.indices) {
            v = static_cast<uint8_t>(rng.uniform_index(8));
        }
        EXPECT_NEAR(dense_eval(t, a, h).raw_energy, oracle_energy(t, a.indices, terms), 1e-10);
    }
}

TEST(magic, even_assignments_match_stabilizer_path) {
    Rng rng(3);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 1 + rng.uniform_index(5);
        auto t = build_su2(n, 1 + rng.uniform_index(2));
        auto h = Hamiltonian::from_labels(n, testing_util::random_terms(n, std::min<size_t>(10, (size_t{1} << (2 * n)) - 1), rng));
        ParameterAssignment a{std::vector<uint8_t>(t.num_slots())};
        for (auto &v : a.indices) {
            v = static_cast<uint8_t>(rng.uniform_index(4));
        }
        EXPECT_NEAR(dense_eval(t, extend(a), h).raw_energy, evaluate(h, t, a).raw_energy, 1e-10);
    }
}

TEST(magic, xx_minimum_unchanged_with_one_t) {
    auto t = build_su2(2, 1).with_active_slots({0, 1, 2, 3});
    auto h = Hamiltonian::from_labels(2, {{"XX", 1.0}});
    auto k0 = kt_exhaustive(t, h, 0);
    auto k1 = kt_exhaustive(t, h, 1);
    EXPECT_NEAR(k0.best.total, -1.0, 1e-12);
    EXPECT_NEAR(k1.best.total, -1.0, 1e-10);
    EXPECT_EQ(k1.evaluations_used, 256u * 5u);
}

TEST(magic, nesting_and_variational_bound) {
    Rng rng(4);
    for (int trial = 0; trial < 3; trial++) {
        auto t = build_su2(3, 1).with_active_slots({0, 2, 4, 7});
        auto h = Hamiltonian::from_labels(3, testing_util::random_terms(3, 12, rng));
        double previous = std::numeric_limits<double>::infinity();
        double ground = exact_ground(h).energy;
        for (size_t k = 0; k <= 2; k++) {
            auto trace = kt_exhaustive(t, h, k);
            EXPECT_LE(trace.best.total, previous + 1e-12);
            EXPECT_GE(trace.best.total, ground - 1e-9);
            previous = trace.best.total;
        }
    }
}

TEST(magic, k_zero_search_equals_quarter_turn_search) {
    Rng rng(5);
    auto t = build_su2(3, 1);
    auto h = Hamiltonian::from_labels(3, testing_util::random_terms(3, 15, rng));
    SearchConfig config{.warmup = 25, .budget = 70, .pool_size = 40, .trees = 6, .seed = 13};
    auto bo = bo_search(t, h, config);
    auto kt = kt_search(t, h, 0, config);
    ASSERT_EQ(bo.entries.size(), kt.entries.size());
    for (size_t i = 0; i < bo.entries.size(); i++) {
        auto doubled = bo.entries[i].assignment;
        for (auto &v : doubled) {
            v *= 2;
        }
        EXPECT_EQ(kt.entries[i].assignment, doubled);
        EXPECT_EQ(kt.entries[i].record, bo.entries[i].record);
    }
    EXPECT_EQ(kt.k_budget, size_t{0});
    EXPECT_EQ(kt.alphabet, 8);

    auto rs = random_search(t, h, config);
    auto krs = kt_random_search(t, h, 0, config);
    ASSERT_EQ(rs.entries.size(), krs.entries.size());
    EXPECT_EQ(rs.best.total, krs.best.total);
}

TEST(magic, kt_search_respects_budget) {
    Rng rng(6);
    auto t = build_su2(2, 1);
    auto h = Hamiltonian::from_labels(2, testing_util::random_terms(2, 8, rng));
    auto trace = kt_search(t, h, 2, {.warmup = 20, .budget = 60, .pool_size = 30, .trees = 4, .seed = 3});
    size_t with_odd = 0;
    for (const auto &e : trace.entries) {
        size_t odd = 0;
        for (uint8_t v : e.assignment) {
            odd += v & 1;
        }
        EXPECT_LE(odd, 2u);
        with_odd += odd > 0;
    }
    EXPECT_GT(with_odd, 0u);
}
