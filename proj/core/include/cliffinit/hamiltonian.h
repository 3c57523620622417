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

#ifndef CLIFFINIT_HAMILTONIAN_H
#define CLIFFINIT_HAMILTONIAN_H

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffinit/pauli_string.h"

namespace cliffinit {

/// Coefficients whose magnitude falls below this after duplicate merging are dropped.
inline constexpr double kCoefficientPruneThreshold = 1e-12;
inline constexpr double kDefaultConstraintWeight = 10.0;

struct PauliTerm {
    PauliString pauli;
    double coeff = 0.0;
};

/// A Pauli-sum observable whose expectation is pulled towards `target` by a quadratic penalty.
struct ConstraintSpec {
    std::string name;
    std::vector<PauliTerm> observable;
    double target = 0.0;
    double weight = kDefaultConstraintWeight;
};

/// Merges duplicate Pauli strings (first-appearance order) and prunes near-zero coefficients.
/// Throws InconsistentQubitCount, NonFiniteCoefficient, InvalidArgument (non-Hermitian phase).
std::vector<PauliTerm> normalize_terms(std::vector<PauliTerm> terms, size_t num_qubits);

/// Weighted Pauli sum H = sum_i c_i P_i plus optional constraint observables.
class Hamiltonian {
   public:
    Hamiltonian() = default;
    Hamiltonian(size_t num_qubits, std::vector<PauliTerm> terms, std::vector<ConstraintSpec> constraints = {},
                std::string name = {});

    /// Convenience constructor from (label, coeff) pairs.
    static Hamiltonian from_labels(size_t num_qubits, const std::vector<std::pair<std::string, double>> &terms,
                                   std::string name = {});

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<PauliTerm> &terms() const {
        return terms_;
    }
    const std::vector<ConstraintSpec> &constraints() const {
        return constraints_;
    }
    const std::string &name() const {
        return name_;
    }

    /// Raw JSON text of each metadata value, keyed by metadata field name.
    const std::map<std::string, std::string> &metadata() const {
        return metadata_;
    }
    void set_metadata(std::map<std::string, std::string> metadata) {
        metadata_ = std::move(metadata);
    }
    std::optional<double> bond_length() const;

    /// Copy with every constraint weight replaced.
    Hamiltonian with_constraint_weight(double weight) const;

   private:
    size_t num_qubits_ = 0;
    std::vector<PauliTerm> terms_;
    std::vector<ConstraintSpec> constraints_;
    std::string name_;
    std::map<std::string, std::string> metadata_;
};

/// Parses the Hamiltonian JSON document:
///   { "name", "num_qubits", "terms": [{"pauli", "coeff"}],
///     "constraints": [{"name", "terms", "target", "weight"}], "metadata": {...} }
/// Throws SchemaError, InconsistentQubitCount, NonFiniteCoefficient, BadChar.
Hamiltonian load_hamiltonian(std::string_view document);
Hamiltonian load_hamiltonian_file(const std::filesystem::path &path);

std::string dump_hamiltonian(const Hamiltonian &h);

}  // namespace cliffinit

#endif
