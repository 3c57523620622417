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

#ifndef CLIFFINIT_TABLEAU_H
#define CLIFFINIT_TABLEAU_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cliffinit/pauli_string.h"

namespace cliffinit {

enum class GateKind : uint8_t { kH, kS, kSdg, kX, kY, kZ, kCX, kRX, kRY, kRZ };

std::string gate_kind_name(GateKind kind);
bool is_rotation(GateKind kind);

/// A Clifford gate. Rotations carry an angle of quarter_turns * pi/2, which keeps them Clifford.
struct CliffordGate {
    GateKind kind = GateKind::kH;
    std::array<uint32_t, 2> qubits{0, 0};
    uint8_t quarter_turns = 0;

    static CliffordGate h(uint32_t q) {
        return {GateKind::kH, {q, 0}, 0};
    }
    static CliffordGate s(uint32_t q) {
        return {GateKind::kS, {q, 0}, 0};
    }
    static CliffordGate sdg(uint32_t q) {
        return {GateKind::kSdg, {q, 0}, 0};
    }
    static CliffordGate x(uint32_t q) {
        return {GateKind::kX, {q, 0}, 0};
    }
    static CliffordGate y(uint32_t q) {
        return {GateKind::kY, {q, 0}, 0};
    }
    static CliffordGate z(uint32_t q) {
        return {GateKind::kZ, {q, 0}, 0};
    }
    static CliffordGate cx(uint32_t control, uint32_t target) {
        return {GateKind::kCX, {control, target}, 0};
    }
    static CliffordGate rx(uint32_t q, uint8_t k) {
        return {GateKind::kRX, {q, 0}, k};
    }
    static CliffordGate ry(uint32_t q, uint8_t k) {
        return {GateKind::kRY, {q, 0}, k};
    }
    static CliffordGate rz(uint32_t q, uint8_t k) {
        return {GateKind::kRZ, {q, 0}, k};
    }

    size_t arity() const {
        return kind == GateKind::kCX ? 2 : 1;
    }
    std::string str() const;

    friend bool operator==(const CliffordGate &, const CliffordGate &) = default;
};

/// Rewrites a rotation gate as the equivalent (up to global phase) sequence of H/S/Sdg/Pauli gates.
/// Non-rotation gates come back unchanged; quarter_turns == 0 gives an empty sequence.
std::vector<CliffordGate> decompose_rotation(const CliffordGate &gate);

/// Stabilizer state held as n destabilizer and n stabilizer generators with sign bits.
///
/// Rows are bit-packed into 64-bit words. Row i (i < n) is destabilizer i and row n + i is
/// stabilizer i. Global phase is not tracked.
class StabilizerTableau {
   public:
    /// |0...0>: stabilizers +Z_j, destabilizers +X_j.
    static StabilizerTableau zero_state(size_t num_qubits);

    size_t num_qubits() const {
        return num_qubits_;
    }

    /// Conjugates every generator by the gate. Throws QubitOutOfRange or InvalidArgument.
    void apply(const CliffordGate &gate);
    void apply_all(std::span<const CliffordGate> gates);

    /// <psi|P|psi> for a Hermitian Pauli (phase_exp 0). Always -1, 0 or +1.
    /// Throws SizeMismatch, InvalidArgument for a non-Hermitian P, InternalPhaseError on corruption.
    int expectation(const PauliString &p) const;

    /// Generator pairing invariants: stabilizers pairwise commute, destabilizer i anticommutes with
    /// stabilizer i only. Together these imply all 2n rows are independent.
    bool check_symplectic() const;

    /// Signed generators (phase_exp 0 or 2).
    PauliString destabilizer(size_t i) const;
    PauliString stabilizer(size_t i) const;
    void set_destabilizer(size_t i, const PauliString &p);
    void set_stabilizer(size_t i, const PauliString &p);

    friend bool operator==(const StabilizerTableau &, const StabilizerTableau &) = default;

   private:
    explicit StabilizerTableau(size_t num_qubits);

    std::span<uint64_t> row_x(size_t r) {
        return {xs_.data() + r * words_, words_};
    }
    std::span<uint64_t> row_z(size_t r) {
        return {zs_.data() + r * words_, words_};
    }
    std::span<const uint64_t> row_x(size_t r) const {
        return {xs_.data() + r * words_, words_};
    }
    std::span<const uint64_t> row_z(size_t r) const {
        return {zs_.data() + r * words_, words_};
    }
    PauliString row(size_t r) const;
    void set_row(size_t r, const PauliString &p);

    void check_qubit(uint32_t q) const;
    void apply_primitive(const CliffordGate &gate);

    size_t num_qubits_ = 0;
    size_t words_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> signs_;
};

StabilizerTableau zero_state(size_t num_qubits);
StabilizerTableau apply_gate(StabilizerTableau t, const CliffordGate &gate);
int expectation(const StabilizerTableau &t, const PauliString &p);
bool check_symplectic(const StabilizerTableau &t);

}  // namespace cliffinit

#endif
