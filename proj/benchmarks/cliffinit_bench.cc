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

#include <benchmark/benchmark.h>

#include <string>
#include <utility>
#include <vector>

#include "cliffinit/cliffinit.h"

namespace {

using namespace cliffinit;

std::string random_label(size_t n, Rng &rng) {
    static constexpr char kAlphabet[] = "IXYZ";
    std::string label(n, 'I');
    for (auto &c : label) {
        c = kAlphabet[rng.uniform_index(4)];
    }
    return label;
}

ParameterAssignment random_assignment(const AnsatzTemplate &t, Rng &rng) {
    ParameterAssignment a{std::vector<uint8_t>(t.num_slots(), 0)};
    for (auto s : t.active_slots()) {
        a.indices[s] = static_cast<uint8_t>(rng.uniform_index(4));
    }
    return a;
}

Hamiltonian random_hamiltonian(size_t n, size_t count, Rng &rng) {
    std::vector<std::pair<std::string, double>> terms;
    for (size_t i = 0; i < count; i++) {
        terms.emplace_back(random_label(n, rng), rng.uniform_real() - 0.5);
    }
    return Hamiltonian::from_labels(n, terms);
}

void BM_pauli_multiply(benchmark::State &state) {
    Rng rng(1);
    auto n = static_cast<size_t>(state.range(0));
    auto a = PauliString::parse(random_label(n, rng));
    auto b = PauliString::parse(random_label(n, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(a, b));
    }
}
BENCHMARK(BM_pauli_multiply)->Arg(8)->Arg(34)->Arg(256);

void BM_tableau_gate(benchmark::State &state) {
    auto n = static_cast<size_t>(state.range(0));
    auto tableau = StabilizerTableau::zero_state(n);
    uint32_t q = 0;
    for (auto _ : state) {
        tableau.apply(CliffordGate::h(q));
        tableau.apply(CliffordGate::cx(q, (q + 1) % n));
        q = (q + 1) % n;
    }
    state.SetItemsProcessed(2 * state.iterations());
}
BENCHMARK(BM_tableau_gate)->Arg(8)->Arg(34)->Arg(128);

void BM_tableau_expectation(benchmark::State &state) {
    auto n = static_cast<size_t>(state.range(0));
    Rng rng(2);
    auto t = build_su2(n, 2);
    auto tableau = prepare_state(t, random_assignment(t, rng));
    std::vector<PauliString> paulis;
    for (int i = 0; i < 64; i++) {
        paulis.push_back(PauliString::parse(random_label(n, rng)));
    }
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tableau.expectation(paulis[i++ % paulis.size()]));
    }
}
BENCHMARK(BM_tableau_expectation)->Arg(8)->Arg(34);

void BM_evaluate(benchmark::State &state) {
    constexpr size_t n = 34;
    Rng rng(3);
    auto h = random_hamiltonian(n, static_cast<size_t>(state.range(0)), rng);
    auto t = build_su2(n, 1);
    auto a = random_assignment(t, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(h, t, a));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_evaluate)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_forest_fit(benchmark::State &state) {
    auto rows_count = static_cast<size_t>(state.range(0));
    Rng rng(4);
    std::vector<std::vector<uint8_t>> rows;
    std::vector<double> targets;
    for (size_t i = 0; i < rows_count; i++) {
        std::vector<uint8_t> row(16);
        double y = 0;
        for (auto &v : row) {
            v = static_cast<uint8_t>(rng.uniform_index(4));
            y += v == 2 ? 1.0 : 0.0;
        }
        rows.push_back(std::move(row));
        targets.push_back(y);
    }
    for (auto _ : state) {
        SurrogateForest forest;
        Rng fit_rng(5);
        forest.fit(rows, targets, fit_rng);
        benchmark::DoNotOptimize(forest.num_trees());
    }
}
BENCHMARK(BM_forest_fit)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_dense_eval(benchmark::State &state) {
    auto n = static_cast<size_t>(state.range(0));
    Rng rng(6);
    auto h = random_hamiltonian(n, 50, rng);
    auto t = build_su2(n, 1);
    auto a = extend(random_assignment(t, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dense_eval(t, a, h));
    }
}
BENCHMARK(BM_dense_eval)->Arg(6)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
