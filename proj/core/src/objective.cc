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

#include <algorithm>
#include <thread>

#include "cliffinit/error.h"

namespace cliffinit {

namespace {

// Below this many items, thread start-up costs more than the work.
constexpr size_t kMinParallelItems = 64;

std::vector<double> term_values(
    const std::vector<PauliTerm> &terms, const std::function<double(const PauliString &)> &expect, size_t threads) {
    std::vector<double> values(terms.size());
    parallel_for(terms.size(), threads, [&](size_t i) { values[i] = expect(terms[i].pauli); });
    return values;
}

}  // namespace

void parallel_for(size_t count, size_t threads, const std::function<void(size_t)> &fn) {
    if (threads <= 1 || count < kMinParallelItems) {
        for (size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    size_t workers = std::min(threads, count);
    size_t chunk = (count + workers - 1) / workers;
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&, w] {
            try {
                for (size_t i = w * chunk; i < std::min(count, (w + 1) * chunk); i++) {
                    fn(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    pool.clear();
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

EnergyRecord assemble_energy(
    const Hamiltonian &h, const std::function<double(const PauliString &)> &expect, const EvalOptions &options) {
    EnergyRecord record;
    auto values = term_values(h.terms(), expect, options.threads);
    for (size_t i = 0; i < values.size(); i++) {
        record.raw_energy += h.terms()[i].coeff * values[i];
    }
    for (const auto &c : h.constraints()) {
        auto cv = term_values(c.observable, expect, options.threads);
        double measured = 0.0;
        for (size_t i = 0; i < cv.size(); i++) {
            measured += c.observable[i].coeff * cv[i];
        }
        double deviation = measured - c.target;
        record.penalty += c.weight * deviation * deviation;
        record.constraint_values.push_back(measured);
    }
    record.total = record.raw_energy + record.penalty;
    return record;
}

EnergyRecord evaluate_state(const Hamiltonian &h, const StabilizerTableau &state, const EvalOptions &options) {
    if (h.num_qubits() != state.num_qubits()) {
        throw Error(
            ErrorCode::kSizeMismatch,
            std::to_string(h.num_qubits()) + "-qubit Hamiltonian on a " + std::to_string(state.num_qubits()) +
                "-qubit state");
    }
    return assemble_energy(
        h, [&state](const PauliString &p) { return static_cast<double>(state.expectation(p)); }, options);
}

EnergyRecord evaluate(
    const Hamiltonian &h, const AnsatzTemplate &t, const ParameterAssignment &a, const EvalOptions &options) {
    if (h.num_qubits() != t.num_qubits()) {
        throw Error(
            ErrorCode::kSizeMismatch,
            std::to_string(h.num_qubits()) + "-qubit Hamiltonian with a " + std::to_string(t.num_qubits()) +
                "-qubit template");
    }
    return evaluate_state(h, prepare_state(t, a), options);
}

std::vector<TermExpectation> term_breakdown(
    const Hamiltonian &h, const AnsatzTemplate &t, const ParameterAssignment &a) {
    if (h.num_qubits() != t.num_qubits()) {
        throw Error(ErrorCode::kSizeMismatch, "Hamiltonian and template disagree on qubit count");
    }
    auto state = prepare_state(t, a);
    std::vector<TermExpectation> out;
    out.reserve(h.terms().size());
    for (const auto &term : h.terms()) {
        out.push_back({term, state.expectation(term.pauli)});
    }
    return out;
}

}  // namespace cliffinit
