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

#ifndef CLIFFINIT_OBJECTIVE_H
#define CLIFFINIT_OBJECTIVE_H

#include <cstddef>
#include <functional>
#include <vector>

#include "cliffinit/ansatz.h"
#include "cliffinit/hamiltonian.h"
#include "cliffinit/tableau.h"

namespace cliffinit {

/// Objective value of one assignment. total == raw_energy + penalty.
struct EnergyRecord {
    double raw_energy = 0.0;
    double penalty = 0.0;
    double total = 0.0;
    std::vector<double> constraint_values;

    friend bool operator==(const EnergyRecord &, const EnergyRecord &) = default;
};

struct EvalOptions {
    /// Worker threads for per-term expectations. Results are reduced in term order, so the value
    /// does not depend on the thread count.
    size_t threads = 1;
};

/// Sum_i c_i <P_i> plus sum_j w_j (<C_j> - t_j)^2, with <P> supplied by `expect`.
EnergyRecord assemble_energy(
    const Hamiltonian &h, const std::function<double(const PauliString &)> &expect, const EvalOptions &options = {});

/// Energy of a stabilizer state: one exact tableau expectation per Pauli term, no sampling.
EnergyRecord evaluate_state(const Hamiltonian &h, const StabilizerTableau &state, const EvalOptions &options = {});

/// Binds `a` onto |0...0> and evaluates. Throws SizeMismatch when h and t disagree on qubit count.
EnergyRecord evaluate(
    const Hamiltonian &h, const AnsatzTemplate &t, const ParameterAssignment &a, const EvalOptions &options = {});

struct TermExpectation {
    PauliTerm term;
    int expectation = 0;
};

/// Per-term expectations in Hamiltonian order; sum of coeff * expectation equals evaluate().raw_energy.
std::vector<TermExpectation> term_breakdown(const Hamiltonian &h, const AnsatzTemplate &t, const ParameterAssignment &a);

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(size_t count, size_t threads, const std::function<void(size_t)> &fn);

}  // namespace cliffinit

#endif
