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

#ifndef CLIFFINIT_PAULI_STRING_H
#define CLIFFINIT_PAULI_STRING_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cliffinit {

namespace detail {

constexpr size_t words_for(size_t num_qubits) {
    return (num_qubits + 63) / 64;
}

/// Power of i picked up when multiplying the phase-free Pauli (x1, z1) by (x2, z2), mod 4.
/// Per qubit: X*Y = iZ, Y*Z = iX, Z*X = iY and the reversed orders give -i.
inline int product_phase(
    std::span<const uint64_t> x1,
    std::span<const uint64_t> z1,
    std::span<const uint64_t> x2,
    std::span<const uint64_t> z2) {
    int plus = 0;
    int minus = 0;
    for (size_t w = 0; w < x1.size(); w++) {
        uint64_t a = x1[w], b = z1[w], c = x2[w], d = z2[w];
        uint64_t p = (a & b & d & ~c) | (a & ~b & c & d) | (~a & b & c & ~d);
        uint64_t m = (a & b & c & ~d) | (a & ~b & d & ~c) | (~a & b & c & d);
        plus += std::popcount(p);
        minus += std::popcount(m);
    }
    return ((plus - minus) % 4 + 4) % 4;
}

inline bool anticommute_words(
    std::span<const uint64_t> x1,
    std::span<const uint64_t> z1,
    std::span<const uint64_t> x2,
    std::span<const uint64_t> z2) {
    uint64_t acc = 0;
    for (size_t w = 0; w < x1.size(); w++) {
        acc ^= (x1[w] & z2[w]) ^ (z1[w] & x2[w]);
    }
    return std::popcount(acc) & 1;
}

}  // namespace detail

/// An n-qubit Pauli operator i^phase_exp * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// Each qubit is stored as an (x, z) bit pair: I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
/// Y is stored as itself, not as XZ, so a Hermitian Pauli always has phase_exp 0.
/// Label position j acts on qubit j (leftmost character is qubit 0).
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Parses a label over {I, X, Y, Z}. Throws BadLength or BadChar.
    static PauliString parse(std::string_view label, size_t num_qubits);
    static PauliString parse(std::string_view label);

    size_t num_qubits() const {
        return num_qubits_;
    }
    uint8_t phase_exp() const {
        return phase_exp_;
    }
    void set_phase_exp(int phase_exp) {
        phase_exp_ = static_cast<uint8_t>(((phase_exp % 4) + 4) % 4);
    }

    bool x(size_t q) const {
        return (xs_[q / 64] >> (q % 64)) & 1;
    }
    bool z(size_t q) const {
        return (zs_[q / 64] >> (q % 64)) & 1;
    }
    void set(size_t q, bool x, bool z);
    char pauli_char(size_t q) const;

    std::span<const uint64_t> x_words() const {
        return xs_;
    }
    std::span<const uint64_t> z_words() const {
        return zs_;
    }
    std::span<uint64_t> x_words() {
        return xs_;
    }
    std::span<uint64_t> z_words() {
        return zs_;
    }

    bool is_identity() const;
    /// True iff only I and Z factors appear (the operator is diagonal in the computational basis).
    bool is_diagonal() const;
    size_t weight() const;

    /// Label without phase, e.g. "IXYZ".
    std::string label() const;
    /// Label with a phase prefix: "+", "-", "+i", "-i".
    std::string str() const;

    /// In-place right multiplication: *this = *this * rhs. Throws SizeMismatch.
    PauliString &operator*=(const PauliString &rhs);

    friend bool operator==(const PauliString &a, const PauliString &b) = default;

   private:
    size_t num_qubits_ = 0;
    uint8_t phase_exp_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

/// Operator product a * b with the phase tracked mod 4. Throws SizeMismatch.
PauliString mul(const PauliString &a, const PauliString &b);

/// Symplectic commutation test. Throws SizeMismatch.
bool commutes(const PauliString &a, const PauliString &b);

}  // namespace cliffinit

#endif
