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

#include "cliffinit/statevector.h"

#include <bit>
#include <cmath>
#include <numbers>

#include "cliffinit/error.h"

namespace cliffinit {

PauliAction pauli_action(const PauliString &p) {
    if (p.num_qubits() > 63) {
        throw Error(ErrorCode::kTooManyQubits, "dense Pauli action supports at most 63 qubits");
    }
    PauliAction action;
    action.x_mask = p.num_qubits() ? p.x_words()[0] : 0;
    action.z_mask = p.num_qubits() ? p.z_words()[0] : 0;
    // Y = i X Z, so each Y contributes a factor i on top of the X and Z actions.
    int power = p.phase_exp() + std::popcount(action.x_mask & action.z_mask);
    static constexpr Amplitude kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    action.phase = kPowers[power % 4];
    return action;
}

StateVector::StateVector(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > kMaxQubits) {
        throw Error(
            ErrorCode::kTooManyQubits,
            std::to_string(num_qubits) + " qubits exceeds the dense limit of " + std::to_string(kMaxQubits));
    }
    amps_.assign(size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

void StateVector::check_qubit(uint32_t q) const {
    if (q >= num_qubits_) {
        throw Error(ErrorCode::kQubitOutOfRange, "qubit " + std::to_string(q));
    }
}

void StateVector::apply_1q(uint32_t q, const Matrix2 &m) {
    check_qubit(q);
    const size_t bit = size_t{1} << q;
    for (size_t b = 0; b < amps_.size(); b++) {
        if (b & bit) {
            continue;
        }
        Amplitude a0 = amps_[b];
        Amplitude a1 = amps_[b | bit];
        amps_[b] = m[0] * a0 + m[1] * a1;
        amps_[b | bit] = m[2] * a0 + m[3] * a1;
    }
}

void StateVector::apply_cx(uint32_t control, uint32_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw Error(ErrorCode::kInvalidArgument, "CX needs distinct qubits");
    }
    const size_t c = size_t{1} << control;
    const size_t t = size_t{1} << target;
    for (size_t b = 0; b < amps_.size(); b++) {
        if ((b & c) && !(b & t)) {
            std::swap(amps_[b], amps_[b | t]);
        }
    }
}

void StateVector::apply_rx(uint32_t q, double theta) {
    double c = std::cos(theta / 2), s = std::sin(theta / 2);
    apply_1q(q, {Amplitude{c, 0}, Amplitude{0, -s}, Amplitude{0, -s}, Amplitude{c, 0}});
}

void StateVector::apply_ry(uint32_t q, double theta) {
    double c = std::cos(theta / 2), s = std::sin(theta / 2);
    apply_1q(q, {Amplitude{c, 0}, Amplitude{-s, 0}, Amplitude{s, 0}, Amplitude{c, 0}});
}

void StateVector::apply_rz(uint32_t q, double theta) {
    Amplitude lo = std::polar(1.0, -theta / 2);
    Amplitude hi = std::polar(1.0, theta / 2);
    apply_1q(q, {lo, Amplitude{0, 0}, Amplitude{0, 0}, hi});
}

void StateVector::apply(const CliffordGate &gate) {
    const uint32_t q = gate.qubits[0];
    const double r = std::numbers::sqrt2 / 2;
    const Amplitude i{0, 1};
    switch (gate.kind) {
        case GateKind::kH:
            apply_1q(q, {Amplitude{r, 0}, Amplitude{r, 0}, Amplitude{r, 0}, Amplitude{-r, 0}});
            break;
        case GateKind::kS:
            apply_1q(q, {1.0, 0.0, 0.0, i});
            break;
        case GateKind::kSdg:
            apply_1q(q, {1.0, 0.0, 0.0, -i});
            break;
        case GateKind::kX:
            apply_1q(q, {0.0, 1.0, 1.0, 0.0});
            break;
        case GateKind::kY:
            apply_1q(q, {0.0, -i, i, 0.0});
            break;
        case GateKind::kZ:
            apply_1q(q, {1.0, 0.0, 0.0, -1.0});
            break;
        case GateKind::kCX:
            apply_cx(gate.qubits[0], gate.qubits[1]);
            break;
        case GateKind::kRX:
            apply_rx(q, gate.quarter_turns * std::numbers::pi / 2);
            break;
        case GateKind::kRY:
            apply_ry(q, gate.quarter_turns * std::numbers::pi / 2);
            break;
        case GateKind::kRZ:
            apply_rz(q, gate.quarter_turns * std::numbers::pi / 2);
            break;
    }
}

Amplitude StateVector::expectation(const PauliString &p) const {
    return pauli_expectation(amps_, p);
}

Amplitude pauli_expectation(std::span<const Amplitude> amplitudes, const PauliString &p) {
    if (p.num_qubits() >= 64 || amplitudes.size() != (size_t{1} << p.num_qubits())) {
        throw Error(ErrorCode::kSizeMismatch, "Pauli and state disagree on qubit count");
    }
    const auto action = pauli_action(p);
    Amplitude total{0.0, 0.0};
    for (size_t b = 0; b < amplitudes.size(); b++) {
        double sign = (std::popcount(b & action.z_mask) & 1) ? -1.0 : 1.0;
        total += std::conj(amplitudes[b ^ action.x_mask]) * amplitudes[b] * sign;
    }
    return total * action.phase;
}

}  // namespace cliffinit
