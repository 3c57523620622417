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

#ifndef CLIFFINIT_MAGIC_H
#define CLIFFINIT_MAGIC_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cliffinit/ansatz.h"
#include "cliffinit/hamiltonian.h"
#include "cliffinit/objective.h"
#include "cliffinit/search.h"

namespace cliffinit {

inline constexpr size_t kMaxMagicQubits = 16;
inline constexpr double kImaginaryResidueTolerance = 1e-10;

/// Eighth-turn assignment: slot angle = indices[s] * pi/4. Odd entries are the T-type
/// (non-Clifford) rotations and at most k_budget of them are allowed.
struct ExtendedAssignment {
    std::vector<uint8_t> indices;
    size_t k_budget = 0;

    size_t odd_count() const;

    friend bool operator==(const ExtendedAssignment &, const ExtendedAssignment &) = default;
};

/// Doubles every index; the result has no odd entries.
ExtendedAssignment extend(const ParameterAssignment &a, size_t k_budget = 0);
/// Halves every index when all are even.
std::optional<ParameterAssignment> to_quarter_turn(const ExtendedAssignment &a);

/// Throws LengthMismatch, IndexOutOfAlphabet, or InvalidArgument when the odd count exceeds k_budget.
void validate_extended(const AnsatzTemplate &t, const ExtendedAssignment &a);

/// Full statevector simulation of the bound circuit. Throws TooManyQubits above kMaxMagicQubits and
/// ImaginaryResidue if a term expectation has an imaginary part above kImaginaryResidueTolerance.
EnergyRecord dense_eval(const AnsatzTemplate &t, const ExtendedAssignment &a, const Hamiltonian &h);

/// Eighth-turn objective: all-even assignments go through the tableau (exact, and identical to the
/// quarter-turn path), the rest through dense_eval.
Objective extended_objective(const Hamiltonian &h, const AnsatzTemplate &t, size_t threads = 1);

/// bo_search over the eighth-turn alphabet with at most k odd slots. With k = 0 the trace equals
/// bo_search's under the same seed, with every index doubled.
SearchTrace kt_search(const AnsatzTemplate &t, const Hamiltonian &h, size_t k, const SearchConfig &config);
SearchTrace kt_random_search(const AnsatzTemplate &t, const Hamiltonian &h, size_t k, const SearchConfig &config);
SearchTrace kt_exhaustive(const AnsatzTemplate &t, const Hamiltonian &h, size_t k,
                          uint64_t cap = kDefaultExhaustiveCap);

}  // namespace cliffinit

#endif
