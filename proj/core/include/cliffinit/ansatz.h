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

#ifndef CLIFFINIT_ANSATZ_H
#define CLIFFINIT_ANSATZ_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cliffinit/tableau.h"

namespace cliffinit {

/// One tunable rotation in a template.
struct AnsatzSlot {
    GateKind kind;  // kRY or kRZ
    uint32_t qubit;
    uint32_t layer;

    friend bool operator==(const AnsatzSlot &, const AnsatzSlot &) = default;
};

/// A vector of angle indices, one per template slot. For the quarter-turn alphabet the angle of
/// slot s is indices[s] * pi/2 and every entry lies in {0, 1, 2, 3}.
struct ParameterAssignment {
    std::vector<uint8_t> indices;

    friend bool operator==(const ParameterAssignment &, const ParameterAssignment &) = default;
};

/// Hardware-efficient circuit: (RY, RZ) rotations on every qubit, then a CX(0,1), CX(1,2), ...
/// ladder, repeated `reps` times, closed by a final rotation layer.
///
/// Slot s of rotation layer L on qubit q is s = L * 2n + 2q (RY) or s = L * 2n + 2q + 1 (RZ).
/// A template can mark a subset of slots active; inactive slots are frozen at index 0 and are
/// never varied by a search.
class AnsatzTemplate {
   public:
    AnsatzTemplate() = default;

    static AnsatzTemplate su2(size_t num_qubits, size_t reps);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t reps() const {
        return reps_;
    }
    size_t num_slots() const {
        return slots_.size();
    }
    const std::vector<AnsatzSlot> &slots() const {
        return slots_;
    }
    size_t slot_index(uint32_t layer, uint32_t qubit, GateKind kind) const;

    /// Slots a search may vary, ascending.
    const std::vector<size_t> &active_slots() const {
        return active_;
    }
    /// Copy with only the listed slots active. Throws InvalidArgument on bad or repeated slots.
    AnsatzTemplate with_active_slots(std::vector<size_t> active) const;

    /// CX gates of one entangling layer.
    std::vector<CliffordGate> entangling_layer() const;
    size_t num_cx() const {
        return num_qubits_ > 0 ? reps_ * (num_qubits_ - 1) : 0;
    }

    friend bool operator==(const AnsatzTemplate &, const AnsatzTemplate &) = default;

   private:
    size_t num_qubits_ = 0;
    size_t reps_ = 0;
    std::vector<AnsatzSlot> slots_;
    std::vector<size_t> active_;
};

AnsatzTemplate build_su2(size_t num_qubits, size_t reps);

/// Throws LengthMismatch or IndexOutOfAlphabet when `a` does not fit the template and alphabet.
void validate_assignment(const AnsatzTemplate &t, std::span<const uint8_t> indices, uint8_t alphabet_size = 4);

/// Gate list in execution order. Slots with index 0 are skipped.
std::vector<CliffordGate> bind(const AnsatzTemplate &t, const ParameterAssignment &a);

/// Assignment whose bound circuit prepares the computational basis state |bits>: everything zero
/// except the final-layer RY slots, set to 2 (angle pi) where bits[q] is set.
ParameterAssignment bitstring_assignment(const AnsatzTemplate &t, const std::vector<bool> &bits);

/// Tableau after binding `a` onto |0...0>.
StabilizerTableau prepare_state(const AnsatzTemplate &t, const ParameterAssignment &a);

}  // namespace cliffinit

#endif
