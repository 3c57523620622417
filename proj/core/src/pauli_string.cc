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

#include "cliffinit/pauli_string.h"

#include "cliffinit/error.h"

namespace cliffinit {

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_(detail::words_for(num_qubits), 0), zs_(detail::words_for(num_qubits), 0) {
}

PauliString PauliString::parse(std::string_view label, size_t num_qubits) {
    if (label.size() != num_qubits) {
        throw Error(
            ErrorCode::kBadLength,
            "Pauli label '" + std::string(label) + "' has length " + std::to_string(label.size()) + ", expected " +
                std::to_string(num_qubits));
    }
    PauliString result(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        switch (label[q]) {
            case 'I':
                break;
            case 'X':
                result.set(q, true, false);
                break;
            case 'Y':
                result.set(q, true, true);
                break;
            case 'Z':
                result.set(q, false, true);
                break;
            default:
                throw Error(
                    ErrorCode::kBadChar,
                    "Pauli label '" + std::string(label) + "' contains '" + std::string(1, label[q]) + "' at position " +
                        std::to_string(q));
        }
    }
    return result;
}

PauliString PauliString::parse(std::string_view label) {
    return parse(label, label.size());
}

void PauliString::set(size_t q, bool x, bool z) {
    uint64_t mask = uint64_t{1} << (q % 64);
    size_t w = q / 64;
    xs_[w] = x ? (xs_[w] | mask) : (xs_[w] & ~mask);
    zs_[w] = z ? (zs_[w] | mask) : (zs_[w] & ~mask);
}

char PauliString::pauli_char(size_t q) const {
    return "IXZY"[x(q) + 2 * z(q)];
}

bool PauliString::is_identity() const {
    for (size_t w = 0; w < xs_.size(); w++) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

bool PauliString::is_diagonal() const {
    for (uint64_t w : xs_) {
        if (w) {
            return false;
        }
    }
    return true;
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        total += std::popcount(xs_[w] | zs_[w]);
    }
    return total;
}

std::string PauliString::label() const {
    std::string out(num_qubits_, 'I');
    for (size_t q = 0; q < num_qubits_; q++) {
        out[q] = pauli_char(q);
    }
    return out;
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    return kPrefix[phase_exp_] + label();
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.num_qubits_ != num_qubits_) {
        throw Error(
            ErrorCode::kSizeMismatch,
            "cannot multiply " + std::to_string(num_qubits_) + "-qubit and " + std::to_string(rhs.num_qubits_) +
                "-qubit Paulis");
    }
    int phase = phase_exp_ + rhs.phase_exp_ + detail::product_phase(xs_, zs_, rhs.xs_, rhs.zs_);
    for (size_t w = 0; w < xs_.size(); w++) {
        xs_[w] ^= rhs.xs_[w];
        zs_[w] ^= rhs.zs_[w];
    }
    set_phase_exp(phase);
    return *this;
}

PauliString mul(const PauliString &a, const PauliString &b) {
    PauliString result = a;
    result *= b;
    return result;
}

bool commutes(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(
            ErrorCode::kSizeMismatch,
            "cannot compare " + std::to_string(a.num_qubits()) + "-qubit and " + std::to_string(b.num_qubits()) +
                "-qubit Paulis");
    }
    return !detail::anticommute_words(a.x_words(), a.z_words(), b.x_words(), b.z_words());
}

}  // namespace cliffinit
