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

#include "cliffinit/search_space.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cliffinit/error.h"

namespace cliffinit {

namespace {

constexpr unsigned __int128 kSizeLimit = static_cast<unsigned __int128>(1) << 63;

// C(p, j) for j = 0..jmax as doubles.
std::vector<double> binomials(size_t p, size_t jmax) {
    std::vector<double> out(jmax + 1, 1.0);
    for (size_t j = 1; j <= jmax; j++) {
        out[j] = out[j - 1] * static_cast<double>(p - j + 1) / static_cast<double>(j);
    }
    return out;
}

}  // namespace

SearchSpace SearchSpace::quarter_turn(const AnsatzTemplate &t) {
    SearchSpace s;
    s.num_slots_ = t.num_slots();
    s.active_ = t.active_slots();
    s.levels_ = 4;
    return s;
}

SearchSpace SearchSpace::eighth_turn(const AnsatzTemplate &t, size_t max_odd) {
    SearchSpace s;
    s.num_slots_ = t.num_slots();
    s.active_ = t.active_slots();
    s.levels_ = 8;
    s.max_odd_ = max_odd;
    return s;
}

std::optional<uint64_t> SearchSpace::size() const {
    const size_t p = active_.size();
    if (2 * p >= 64) {
        return std::nullopt;
    }
    unsigned __int128 base = static_cast<unsigned __int128>(1) << (2 * p);
    unsigned __int128 multiplier = 1;
    if (max_odd_) {
        // sum_{j <= k} C(p, j): each slot contributes 4 even and 4 odd levels.
        multiplier = 0;
        unsigned __int128 c = 1;
        for (size_t j = 0; j <= std::min(*max_odd_, p); j++) {
            if (j > 0) {
                c = c * (p - j + 1) / j;
            }
            multiplier += c;
            if (multiplier >= kSizeLimit) {
                return std::nullopt;
            }
        }
    }
    unsigned __int128 total = base * multiplier;
    if (total >= kSizeLimit) {
        return std::nullopt;
    }
    return static_cast<uint64_t>(total);
}

double SearchSpace::log2_size() const {
    const size_t p = active_.size();
    double bits = 2.0 * static_cast<double>(p);
    if (max_odd_) {
        auto c = binomials(p, std::min(*max_odd_, p));
        bits += std::log2(std::accumulate(c.begin(), c.end(), 0.0));
    }
    return bits;
}

size_t SearchSpace::odd_count(std::span<const uint8_t> indices) const {
    if (!max_odd_) {
        return 0;
    }
    size_t odd = 0;
    for (uint8_t v : indices) {
        odd += v & 1;
    }
    return odd;
}

bool SearchSpace::feasible(std::span<const uint8_t> indices) const {
    if (indices.size() != num_slots_) {
        return false;
    }
    std::vector<bool> is_active(num_slots_, false);
    for (size_t s : active_) {
        is_active[s] = true;
    }
    for (size_t s = 0; s < num_slots_; s++) {
        if (indices[s] >= levels_ || (!is_active[s] && indices[s] != 0)) {
            return false;
        }
    }
    return !max_odd_ || odd_count(indices) <= *max_odd_;
}

std::vector<uint8_t> SearchSpace::sample(Rng &rng) const {
    std::vector<uint8_t> out(num_slots_, 0);
    const size_t p = active_.size();
    if (!max_odd_) {
        for (size_t s : active_) {
            out[s] = static_cast<uint8_t>(rng.uniform_index(4));
        }
        return out;
    }
    // Feasible assignments with exactly j odd slots number C(p, j) * 4^p, so draw j with weight C(p, j).
    size_t kmax = std::min(*max_odd_, p);
    size_t odd = 0;
    if (kmax > 0) {
        auto weights = binomials(p, kmax);
        double total = std::accumulate(weights.begin(), weights.end(), 0.0);
        double u = rng.uniform_real() * total;
        odd = kmax;
        for (size_t j = 0; j <= kmax; j++) {
            if (u < weights[j]) {
                odd = j;
                break;
            }
            u -= weights[j];
        }
    }
    std::vector<size_t> order(p);
    std::iota(order.begin(), order.end(), size_t{0});
    std::vector<uint8_t> is_odd(p, 0);
    for (size_t i = 0; i < odd; i++) {
        size_t r = i + rng.uniform_index(p - i);
        std::swap(order[i], order[r]);
        is_odd[order[i]] = 1;
    }
    for (size_t i = 0; i < p; i++) {
        out[active_[i]] = static_cast<uint8_t>(2 * rng.uniform_index(4) + is_odd[i]);
    }
    return out;
}

std::vector<uint8_t> SearchSpace::mutate(std::span<const uint8_t> parent, Rng &rng) const {
    std::vector<uint8_t> child(parent.begin(), parent.end());
    if (active_.empty()) {
        return child;
    }
    size_t slot = active_[rng.uniform_index(active_.size())];
    uint8_t current = child[slot];
    std::vector<uint8_t> options;
    if (!max_odd_) {
        for (uint8_t v = 0; v < 4; v++) {
            if (v != current) {
                options.push_back(v);
            }
        }
    } else {
        size_t odd_elsewhere = odd_count(parent) - (current & 1);
        for (uint8_t v = 0; v < 8; v++) {
            if (v != current && odd_elsewhere + (v & 1) <= *max_odd_) {
                options.push_back(v);
            }
        }
    }
    if (options.empty()) {
        return child;
    }
    child[slot] = options[rng.uniform_index(options.size())];
    return child;
}

std::vector<uint8_t> SearchSpace::first() const {
    return std::vector<uint8_t>(num_slots_, 0);
}

bool SearchSpace::next(std::vector<uint8_t> &indices) const {
    while (true) {
        size_t i = active_.size();
        while (true) {
            if (i == 0) {
                return false;
            }
            i--;
            uint8_t &v = indices[active_[i]];
            if (v + 1 < levels_) {
                v++;
                break;
            }
            v = 0;
        }
        if (!max_odd_ || odd_count(indices) <= *max_odd_) {
            return true;
        }
    }
}

std::vector<uint8_t> SearchSpace::features(std::span<const uint8_t> indices) const {
    std::vector<uint8_t> out;
    out.reserve(active_.size());
    for (size_t s : active_) {
        out.push_back(indices[s]);
    }
    return out;
}

}  // namespace cliffinit
