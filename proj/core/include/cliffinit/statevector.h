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

#ifndef CLIFFINIT_STATEVECTOR_H
#define CLIFFINIT_STATEVECTOR_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cliffinit/pauli_string.h"
#include "cliffinit/tableau.h"

namespace cliffinit {

using Amplitude = std::complex<double>;
using Matrix2 = std::array<Amplitude, 4>;  // row-major

/// P|b> = phase * (-1)^popcount(b & z_mask) |b ^ x_mask>, with bit q of b holding qubit q.
struct PauliAction {
    uint64_t x_mask = 0;
    uint64_t z_mask = 0;
    Amplitude phase{1.0, 0.0};
};

/// Throws TooManyQubits above 63 qubits.
PauliAction pauli_action(const PauliString &p);

/// Dense 2^n amplitude vector. Basis index bit q is qubit q.
class StateVector {
   public:
    /// |0...0>. Throws TooManyQubits above kMaxQubits.
    explicit StateVector(size_t num_qubits);

    static constexpr size_t kMaxQubits = 26;

    size_t num_qubits() const {
        return num_qubits_;
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }

    void apply_1q(uint32_t q, const Matrix2 &m);
    void apply_cx(uint32_t control, uint32_t target);
    void apply_rx(uint32_t q, double theta);
    void apply_ry(uint32_t q, double theta);
    void apply_rz(uint32_t q, double theta);
    /// Rotations use angle quarter_turns * pi/2.
    void apply(const CliffordGate &gate);

    /// <psi|P|psi> (complex in general; real for Hermitian P).
    Amplitude expectation(const PauliString &p) const;

   private:
    void check_qubit(uint32_t q) const;

    size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// <psi|P|psi> over raw amplitudes (index bit q = qubit q). Throws SizeMismatch.
Amplitude pauli_expectation(std::span<const Amplitude> amplitudes, const PauliString &p);

}  // namespace cliffinit

#endif
