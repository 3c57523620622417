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

#include "cliffinit/ansatz.h"

#include <set>

#include "cliffinit/baselines.h"
#include "cliffinit/error.h"
#include "cliffinit/rng.h"
#include "cliffinit/search_space.h"
#include "gtest/gtest.h"
#include "support/dense_oracle.h"
#include "support/test_util.h"

using namespace cliffinit;

TEST(ansatz, slot_and_cx_counts) {
    auto t2 = build_su2(2, 1);
    EXPECT_EQ(t2.num_slots(), 8u);
    EXPECT_EQ(t2.num_cx(), 1u);
    auto t10 = build_su2(10, 1);
    EXPECT_EQ(t10.num_slots(), 40u);
    EXPECT_EQ(t10.num_cx(), 9u);
    EXPECT_EQ(build_su2(34, 1).num_slots(), 136u);
    EXPECT_EQ(build_su2(3, 2).num_slots(), 18u);
    EXPECT_EQ(build_su2(3, 2).num_cx(), 4u);
    EXPECT_EQ(t10.active_slots().size(), 40u);
}

TEST(ansatz, slot_layout) {
    auto t = build_su2(3, 1);
    EXPECT_EQ(t.slot_index(0, 0, GateKind::kRY), 0u);
    EXPECT_EQ(t.slot_index(0, 0, GateKind::kRZ), 1u);
    EXPECT_EQ(t.slot_index(0, 2, GateKind::kRZ), 5u);
    EXPECT_EQ(t.slot_index(1, 1, GateKind::kRY), 8u);
    const auto &s = t.slots()[8];
    EXPECT_EQ(s.kind, GateKind::kRY);
    EXPECT_EQ(s.qubit, 1u);
    EXPECT_EQ(s.layer, 1u);
    auto ladder = t.entangling_layer();
    ASSERT_EQ(ladder.size(), 2u);
    EXPECT_EQ(ladder[0], CliffordGate::cx(0, 1));
    EXPECT_EQ(ladder[1], CliffordGate::cx(1, 2));
}

TEST(ansatz, bind_skips_zero_slots) {
    auto t = build_su2(3, 2);
    ParameterAssignment zero{std::vector<uint8_t>(t.num_slots(), 0)};
    auto gates = bind(t, zero);
    ASSERT_EQ(gates.size(), t.num_cx());
    for (const auto &g : gates) {
        EXPECT_EQ(g.kind, GateKind::kCX);
    }
    auto state = prepare_state(t, zero);
    for (std::string label : {"ZII", "IZI", "IIZ"}) {
        EXPECT_EQ(state.expectation(PauliString::parse(label)), 1);
    }
}

TEST(ansatz, bind_is_deterministic_and_ordered) {
    auto t = build_su2(2, 1);
    ParameterAssignment a{{1, 2, 3, 0, 0, 1, 2, 3}};
    auto gates = bind(t, a);
    EXPECT_EQ(gates, bind(t, a));
    std::vector<CliffordGate> expected = {CliffordGate::ry(0, 1), CliffordGate::rz(0, 2), CliffordGate::ry(1, 3),
                                          CliffordGate::cx(0, 1), CliffordGate::rz(0, 1), CliffordGate::ry(1, 2),
                                          CliffordGate::rz(1, 3)};
    EXPECT_EQ(gates, expected);
}

TEST(ansatz, single_ry_slot_gives_bell_state) {
    auto t = build_su2(2, 1);
    ParameterAssignment a{std::vector<uint8_t>(8, 0)};
    a.indices[t.slot_index(0, 0, GateKind::kRY)] = 1;
    auto state = prepare_state(t, a);
    auto psi = oracle::run(2, testing_util::to_oracle(bind(t, a)));
    for (std::string label : {"XX", "ZZ", "YY", "XI", "IZ"}) {
        EXPECT_EQ(state.expectation(PauliString::parse(label)), std::lround(oracle::expectation(psi, label).real()));
    }
    EXPECT_EQ(state.expectation(PauliString::parse("XX")), 1);
    EXPECT_EQ(state.expectation(PauliString::parse("ZZ")), 1);

    a.indices[0] = 3;
    EXPECT_EQ(prepare_state(t, a).expectation(PauliString::parse("XX")), -1);
}

TEST(ansatz, assignment_validation) {
    auto t = build_su2(2, 1);
    try {
        bind(t, ParameterAssignment{{0, 1}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
    }
    try {
        bind(t, ParameterAssignment{{0, 1, 2, 3, 4, 0, 0, 0}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfAlphabet);
    }
    try {
        bitstring_assignment(t, {true});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
    }
}

TEST(ansatz, bitstring_assignment_prepares_basis_states) {
    for (size_t n : {1, 2, 3}) {
        for (size_t reps : {1, 2}) {
            auto t = build_su2(n, reps);
            for (uint64_t b = 0; b < (uint64_t{1} << n); b++) {
                std::vector<bool> bits(n);
                for (size_t q = 0; q < n; q++) {
                    bits[q] = (b >> q) & 1;
                }
                auto a = bitstring_assignment(t, bits);
                if (b == 0) {
                    EXPECT_EQ(a.indices, std::vector<uint8_t>(t.num_slots(), 0));
                }
                auto state = prepare_state(t, a);
                auto psi = oracle::run(n, testing_util::to_oracle(bind(t, a)));
                for (uint64_t i = 0; i < (uint64_t{1} << (2 * n)); i++) {
                    auto label = testing_util::label_from_index(i, n);
                    auto p = PauliString::parse(label);
                    int got = state.expectation(p);
                    EXPECT_EQ(got, std::lround(oracle::expectation(psi, label).real()));
                    if (p.is_diagonal()) {
                        EXPECT_EQ(got, diagonal_expectation(p, bits)) << label;
                    } else {
                        EXPECT_EQ(got, 0) << label;
                    }
                }
            }
        }
    }
}

TEST(ansatz, bitstring_01_example) {
    auto t = build_su2(2, 1);
    auto state = prepare_state(t, bitstring_assignment(t, {false, true}));
    EXPECT_EQ(state.expectation(PauliString::parse("IZ")), -1);
    EXPECT_EQ(state.expectation(PauliString::parse("ZI")), 1);
}

TEST(ansatz, enumeration_covers_four_to_the_p) {
    auto t = build_su2(1, 1).with_active_slots({0, 1, 3});
    auto space = SearchSpace::quarter_turn(t);
    ASSERT_EQ(space.size(), uint64_t{64});
    std::set<std::vector<uint8_t>> seen;
    auto a = space.first();
    do {
        EXPECT_EQ(a[2], 0);
        seen.insert(a);
    } while (space.next(a));
    EXPECT_EQ(seen.size(), 64u);

    auto full = SearchSpace::quarter_turn(build_su2(2, 1));
    EXPECT_EQ(full.size(), uint64_t{65536});
    uint64_t count = 0;
    auto b = full.first();
    do {
        count++;
    } while (full.next(b));
    EXPECT_EQ(count, 65536u);
}

TEST(ansatz, active_slot_validation) {
    auto t = build_su2(2, 1);
    EXPECT_THROW(t.with_active_slots({8}), Error);
    EXPECT_THROW(t.with_active_slots({1, 1}), Error);
    auto r = t.with_active_slots({5, 2});
    EXPECT_EQ(r.active_slots(), (std::vector<size_t>{2, 5}));
}
