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

#include "cliffinit/ansatz.h"

#include <algorithm>
#include <numeric>

#include "cliffinit/error.h"

namespace cliffinit {

AnsatzTemplate AnsatzTemplate::su2(size_t num_qubits, size_t reps) {
    if (num_qubits < 1 || reps < 1) {
        throw Error(ErrorCode::kInvalidArgument, "su2 template needs num_qubits >= 1 and reps >= 1");
    }
    AnsatzTemplate t;
    t.num_qubits_ = num_qubits;
    t.reps_ = reps;
    t.slots_.reserve(2 * num_qubits * (reps + 1));
    for (uint32_t layer = 0; layer <= reps; layer++) {
        for (uint32_t q = 0; q < num_qubits; q++) {
            t.slots_.push_back({GateKind::kRY, q, layer});
            t.slots_.push_back({GateKind::kRZ, q, layer});
        }
    }
    t.active_.resize(t.slots_.size());
    std::iota(t.active_.begin(), t.active_.end(), size_t{0});
    return t;
}

size_t AnsatzTemplate::slot_index(uint32_t layer, uint32_t qubit, GateKind kind) const {
    if (layer > reps_ || qubit >= num_qubits_ || (kind != GateKind::kRY && kind != GateKind::kRZ)) {
        throw Error(ErrorCode::kInvalidArgument, "no such slot");
    }
    return layer * 2 * num_qubits_ + 2 * qubit + (kind == GateKind::kRZ ? 1 : 0);
}

AnsatzTemplate AnsatzTemplate::with_active_slots(std::vector<size_t> active) const {
    std::sort(active.begin(), active.end());
    if (std::adjacent_find(active.begin(), active.end()) != active.end()) {
        throw Error(ErrorCode::kInvalidArgument, "active slot listed twice");
    }
    if (!active.empty() && active.back() >= slots_.size()) {
        throw Error(
            ErrorCode::kInvalidArgument,
            "active slot " + std::to_string(active.back()) + " out of range (" + std::to_string(slots_.size()) +
                " slots)");
    }
    AnsatzTemplate copy = *this;
    copy.active_ = std::move(active);
    return copy;
}

std::vector<CliffordGate> AnsatzTemplate::entangling_layer() const {
    std::vector<CliffordGate> gates;
    for (uint32_t q = 0; q + 1 < num_qubits_; q++) {
        gates.push_back(CliffordGate::cx(q, q + 1));
    }
    return gates;
}

AnsatzTemplate build_su2(size_t num_qubits, size_t reps) {
    return AnsatzTemplate::su2(num_qubits, reps);
}

void validate_assignment(const AnsatzTemplate &t, std::span<const uint8_t> indices, uint8_t alphabet_size) {
    if (indices.size() != t.num_slots()) {
        throw Error(
            ErrorCode::kLengthMismatch,
            "assignment has " + std::to_string(indices.size()) + " entries, template has " +
                std::to_string(t.num_slots()) + " slots");
    }
    for (size_t s = 0; s < indices.size(); s++) {
        if (indices[s] >= alphabet_size) {
            throw Error(
                ErrorCode::kIndexOutOfAlphabet,
                "slot " + std::to_string(s) + " has index " + std::to_string(indices[s]) + ", alphabet size is " +
                    std::to_string(alphabet_size));
        }
    }
}

std::vector<CliffordGate> bind(const AnsatzTemplate &t, const ParameterAssignment &a) {
    validate_assignment(t, a.indices);
    const auto ladder = t.entangling_layer();
    std::vector<CliffordGate> gates;
    gates.reserve(t.num_slots() + t.num_cx());
    const size_t per_layer = 2 * t.num_qubits();
    for (size_t layer = 0; layer <= t.reps(); layer++) {
        for (size_t s = layer * per_layer; s < (layer + 1) * per_layer; s++) {
            uint8_t k = a.indices[s];
            if (k == 0) {
                continue;
            }
            const auto &slot = t.slots()[s];
            gates.push_back({slot.kind, {slot.qubit, 0}, k});
        }
        if (layer < t.reps()) {
            gates.insert(gates.end(), ladder.begin(), ladder.end());
        }
    }
    return gates;
}

ParameterAssignment bitstring_assignment(const AnsatzTemplate &t, const std::vector<bool> &bits) {
    if (bits.size() != t.num_qubits()) {
        throw Error(
            ErrorCode::kLengthMismatch,
            "bitstring has " + std::to_string(bits.size()) + " bits, template has " + std::to_string(t.num_qubits()) +
                " qubits");
    }
    ParameterAssignment a{std::vector<uint8_t>(t.num_slots(), 0)};
    for (uint32_t q = 0; q < bits.size(); q++) {
        if (bits[q]) {
            a.indices[t.slot_index(static_cast<uint32_t>(t.reps()), q, GateKind::kRY)] = 2;
        }
    }
    return a;
}

StabilizerTableau prepare_state(const AnsatzTemplate &t, const ParameterAssignment &a) {
    auto state = StabilizerTableau::zero_state(t.num_qubits());
    state.apply_all(bind(t, a));
    return state;
}

}  // namespace cliffinit
