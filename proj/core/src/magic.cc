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
#include "cliffinit/statevector.h"

namespace cliffinit {

size_t ExtendedAssignment::odd_count() const {
    size_t odd = 0;
    for (uint8_t v : indices) {
        odd += v & 1;
    }
    return odd;
}

ExtendedAssignment extend(const ParameterAssignment &a, size_t k_budget) {
    ExtendedAssignment out{a.indices, k_budget};
    for (auto &v : out.indices) {
        v = static_cast<uint8_t>(2 * v);
    }
    return out;
}

std::optional<ParameterAssignment> to_quarter_turn(const ExtendedAssignment &a) {
    ParameterAssignment out{a.indices};
    for (auto &v : out.indices) {
        if (v & 1) {
            return std::nullopt;
        }
        v /= 2;
    }
    return out;
}

void validate_extended(const AnsatzTemplate &t, const ExtendedAssignment &a) {
    validate_assignment(t, a.indices, 8);
    if (a.odd_count() > a.k_budget) {
        throw Error(
            ErrorCode::kInvalidArgument,
            std::to_string(a.odd_count()) + " non-Clifford slots exceed the budget of " + std::to_string(a.k_budget));
    }
}

EnergyRecord dense_eval(const AnsatzTemplate &t, const ExtendedAssignment &a, const Hamiltonian &h) {
    if (h.num_qubits() > kMaxMagicQubits || t.num_qubits() > kMaxMagicQubits) {
        throw Error(
            ErrorCode::kTooManyQubits,
            "dense evaluation is capped at " + std::to_string(kMaxMagicQubits) + " qubits");
    }
    if (h.num_qubits() != t.num_qubits()) {
        throw Error(ErrorCode::kSizeMismatch, "Hamiltonian and template disagree on qubit count");
    }
    validate_extended(t, a);

    StateVector state(t.num_qubits());
    const auto ladder = t.entangling_layer();
    const size_t per_layer = 2 * t.num_qubits();
    for (size_t layer = 0; layer <= t.reps(); layer++) {
        for (size_t s = layer * per_layer; s < (layer + 1) * per_layer; s++) {
            uint8_t k = a.indices[s];
            if (k == 0) {
                continue;
            }
            const auto &slot = t.slots()[s];
            double theta = k * std::numbers::pi / 4;
            if (slot.kind == GateKind::kRY) {
                state.apply_ry(slot.qubit, theta);
            } else {
                state.apply_rz(slot.qubit, theta);
            }
        }
        if (layer < t.reps()) {
            for (const auto &g : ladder) {
                state.apply(g);
            }
        }
    }

    return assemble_energy(h, [&state](const PauliString &p) {
        auto value = state.expectation(p);
        if (std::abs(value.imag()) > kImaginaryResidueTolerance) {
            throw Error(
                ErrorCode::kImaginaryResidue,
                "<" + p.label() + "> has imaginary part " + std::to_string(value.imag()));
        }
        return value.real();
    });
}

Objective extended_objective(const Hamiltonian &h, const AnsatzTemplate &t, size_t threads) {
    if (h.num_qubits() != t.num_qubits()) {
        throw Error(ErrorCode::kSizeMismatch, "Hamiltonian and template disagree on qubit count");
    }
    return [&h, &t, threads](std::span<const uint8_t> indices) {
        ExtendedAssignment a{std::vector<uint8_t>(indices.begin(), indices.end()), 0};
        a.k_budget = a.odd_count();
        if (auto clifford = to_quarter_turn(a)) {
            return evaluate(h, t, *clifford, EvalOptions{threads});
        }
        return dense_eval(t, a, h);
    };
}

namespace {

void check_magic_size(const Hamiltonian &h) {
    if (h.num_qubits() > kMaxMagicQubits) {
        throw Error(
            ErrorCode::kTooManyQubits,
            "T-extended search is capped at " + std::to_string(kMaxMagicQubits) + " qubits");
    }
}

}  // namespace

SearchTrace kt_search(const AnsatzTemplate &t, const Hamiltonian &h, size_t k, const SearchConfig &config) {
    check_magic_size(h);
    return run_bo(SearchSpace::eighth_turn(t, k), extended_objective(h, t, config.threads), config);
}

SearchTrace kt_random_search(const AnsatzTemplate &t, const Hamiltonian &h, size_t k, const SearchConfig &config) {
    check_magic_size(h);
    return run_random(SearchSpace::eighth_turn(t, k), extended_objective(h, t, config.threads), config);
}

SearchTrace kt_exhaustive(const AnsatzTemplate &t, const Hamiltonian &h, size_t k, uint64_t cap) {
    check_magic_size(h);
    return run_exhaustive(SearchSpace::eighth_turn(t, k), extended_objective(h, t), ExhaustiveOptions{cap, true});
}

}  // namespace cliffinit
