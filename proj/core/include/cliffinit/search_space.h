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

#ifndef CLIFFINIT_SEARCH_SPACE_H
#define CLIFFINIT_SEARCH_SPACE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cliffinit/ansatz.h"
#include "cliffinit/rng.h"

namespace cliffinit {

/// The discrete domain a search walks: full-length index vectors whose inactive slots stay 0.
///
/// Quarter-turn spaces use levels {0,1,2,3} (angle k*pi/2). Eighth-turn spaces use {0..7}
/// (angle k*pi/4) with at most `max_odd` odd entries, the odd ones being the non-Clifford slots.
/// With max_odd == 0 an eighth-turn space consumes random numbers exactly like the quarter-turn
/// space and yields the doubled indices, so searches over the two are trace-identical.
class SearchSpace {
   public:
    static SearchSpace quarter_turn(const AnsatzTemplate &t);
    static SearchSpace eighth_turn(const AnsatzTemplate &t, size_t max_odd);

    size_t num_slots() const {
        return num_slots_;
    }
    const std::vector<size_t> &active() const {
        return active_;
    }
    uint8_t levels() const {
        return levels_;
    }
    std::optional<size_t> max_odd() const {
        return max_odd_;
    }

    /// Number of feasible assignments, or nullopt if it exceeds 2^63.
    std::optional<uint64_t> size() const;
    /// log2 of the number of feasible assignments (always defined).
    double log2_size() const;

    bool feasible(std::span<const uint8_t> indices) const;
    size_t odd_count(std::span<const uint8_t> indices) const;

    /// Uniform draw over the feasible set.
    std::vector<uint8_t> sample(Rng &rng) const;
    /// Copy of `parent` with exactly one active slot changed, staying feasible. Returns the parent
    /// unchanged when no such neighbour exists.
    std::vector<uint8_t> mutate(std::span<const uint8_t> parent, Rng &rng) const;

    std::vector<uint8_t> first() const;
    /// Advances to the next feasible assignment in lexicographic order over the active slots
    /// (first active slot most significant). Returns false after the last one.
    bool next(std::vector<uint8_t> &indices) const;

    /// Active-slot values, the surrogate's feature vector.
    std::vector<uint8_t> features(std::span<const uint8_t> indices) const;

   private:
    size_t num_slots_ = 0;
    std::vector<size_t> active_;
    uint8_t levels_ = 4;
    std::optional<size_t> max_odd_;
};

}  // namespace cliffinit

#endif
