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

#ifndef CLIFFINIT_BASELINES_H
#define CLIFFINIT_BASELINES_H

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cliffinit/hamiltonian.h"

namespace cliffinit {

inline constexpr size_t kMaxHartreeFockQubits = 24;
inline constexpr size_t kMaxExactQubits = 14;
inline constexpr size_t kMaxDenseEigenQubits = 10;
inline constexpr double kChemicalAccuracy = 1.6e-3;  // Hartree
inline constexpr double kFeasibilityTolerance = 1e-9;

enum class BaselineKind { kHartreeFock, kExact };

struct BaselineResult {
    BaselineKind kind = BaselineKind::kHartreeFock;
    double energy = 0.0;
    /// Best computational basis state (HF only); witness[q] is qubit q.
    std::vector<bool> witness;
    size_t qubits = 0;
    /// Ground state amplitudes, index bit q = qubit q (EXACT with want_state only).
    std::vector<std::complex<double>> ground_state;
};

/// <b|P|b> for a computational basis state: 0 unless P is diagonal, else (-1)^(# Z on set bits).
int diagonal_expectation(const PauliString &p, const std::vector<bool> &bits);

std::string bitstring_label(const std::vector<bool> &bits);

/// Lowest diagonal-only energy over all 2^n bitstrings that satisfy every constraint to
/// kFeasibilityTolerance. Ties keep the lexicographically smallest label.
/// Throws TooManyQubits, NoFeasibleBitstring.
BaselineResult hf_search(const Hamiltonian &h);

enum class ExactMethod { kAuto, kDense, kLanczos };

struct ExactOptions {
    ExactMethod method = ExactMethod::kAuto;
    bool want_state = false;
};

/// Smallest eigenvalue of sum_i c_i P_i (constraints are ignored). Dense Hermitian
/// eigendecomposition up to kMaxDenseEigenQubits, Lanczos on an implicit matvec above.
/// Throws TooManyQubits past kMaxExactQubits.
BaselineResult exact_ground(const Hamiltonian &h, const ExactOptions &options = {});

/// 100 * (e_hf - e_method) / (e_hf - e_exact). Throws DegenerateDenominator when
/// e_hf - e_exact < 1e-12.
double recovered_correlation(double e_method, double e_hf, double e_exact);

/// |e_method - e_exact| < 1.6e-3 Hartree (strict).
bool chem_accurate(double e_method, double e_exact);

/// |e_hf - e_exact| / |e_method - e_exact|; infinity when the method is exact.
double relative_accuracy(double e_method, double e_hf, double e_exact);

}  // namespace cliffinit

#endif
