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

#include "cliffinit/forest.h"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "cliffinit/error.h"

namespace cliffinit {

SurrogateForest::SurrogateForest(ForestOptions options) : options_(options) {
    if (options_.trees < 1) {
        throw Error(ErrorCode::kInvalidArgument, "forest needs at least one tree");
    }
    options_.min_split = std::max<size_t>(options_.min_split, 2);
}

void SurrogateForest::fit(const std::vector<std::vector<uint8_t>> &rows, const std::vector<double> &targets, Rng &rng) {
    if (rows.size() != targets.size() || rows.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "forest needs a non-empty training set with one target per row");
    }
    trees_.clear();
    trees_.reserve(options_.trees);
    const auto n = static_cast<uint32_t>(rows.size());
    for (size_t t = 0; t < options_.trees; t++) {
        std::vector<uint32_t> sample(n);
        for (auto &s : sample) {
            s = static_cast<uint32_t>(rng.uniform_index(n));
        }
        trees_.push_back(grow(rows, targets, std::move(sample)));
    }
}

SurrogateForest::Tree SurrogateForest::grow(
    const std::vector<std::vector<uint8_t>> &rows, const std::vector<double> &targets,
    std::vector<uint32_t> sample) const {
    const size_t num_features = rows.front().size();
    Tree tree;
    tree.emplace_back();

    struct Pending {
        uint32_t node;
        size_t begin;
        size_t end;
    };
    std::vector<Pending> stack{{0, 0, sample.size()}};

    while (!stack.empty()) {
        auto [node, begin, end] = stack.back();
        stack.pop_back();
        const size_t count = end - begin;

        double sum = 0.0, lo = targets[sample[begin]], hi = lo;
        for (size_t i = begin; i < end; i++) {
            double y = targets[sample[i]];
            sum += y;
            lo = std::min(lo, y);
            hi = std::max(hi, y);
        }
        tree[node].value = sum / static_cast<double>(count);
        if (count < options_.min_split || lo == hi) {
            continue;
        }
        double sq = 0.0;
        for (size_t i = begin; i < end; i++) {
            double d = targets[sample[i]] - tree[node].value;
            sq += d * d;
        }
        const double parent_score = sum * sum / static_cast<double>(count);

        int32_t best_feature = -1;
        uint8_t best_mask = 0;
        double best_gain = 1e-10 * sq;
        for (size_t f = 0; f < num_features; f++) {
            std::array<double, 8> level_sum{};
            std::array<size_t, 8> level_count{};
            for (size_t i = begin; i < end; i++) {
                uint8_t level = rows[sample[i]][f];
                level_sum[level] += targets[sample[i]];
                level_count[level]++;
            }
            std::array<uint8_t, 8> present{};
            size_t num_present = 0;
            for (uint8_t l = 0; l < 8; l++) {
                if (level_count[l] > 0) {
                    present[num_present++] = l;
                }
            }
            if (num_present < 2) {
                continue;
            }
            std::stable_sort(present.begin(), present.begin() + num_present, [&](uint8_t a, uint8_t b) {
                return level_sum[a] / level_count[a] < level_sum[b] / level_count[b];
            });
            double left_sum = 0.0;
            size_t left_count = 0;
            uint8_t mask = 0;
            for (size_t k = 0; k + 1 < num_present; k++) {
                uint8_t l = present[k];
                left_sum += level_sum[l];
                left_count += level_count[l];
                mask |= static_cast<uint8_t>(1u << l);
                double right_sum = sum - left_sum;
                size_t right_count = count - left_count;
                double gain = left_sum * left_sum / static_cast<double>(left_count) +
                              right_sum * right_sum / static_cast<double>(right_count) - parent_score;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_feature = static_cast<int32_t>(f);
                    best_mask = mask;
                }
            }
        }
        if (best_feature < 0) {
            continue;
        }

        auto mid = std::stable_partition(sample.begin() + begin, sample.begin() + end, [&](uint32_t r) {
            return (best_mask >> rows[r][best_feature]) & 1;
        });
        size_t split = static_cast<size_t>(mid - sample.begin());
        auto left = static_cast<uint32_t>(tree.size());
        tree.emplace_back();
        auto right = static_cast<uint32_t>(tree.size());
        tree.emplace_back();
        tree[node].feature = best_feature;
        tree[node].left_levels = best_mask;
        tree[node].left = left;
        tree[node].right = right;
        stack.push_back({right, split, end});
        stack.push_back({left, begin, split});
    }
    return tree;
}

double SurrogateForest::predict(std::span<const uint8_t> row) const {
    if (trees_.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "forest is not trained");
    }
    double total = 0.0;
    for (const auto &tree : trees_) {
        uint32_t node = 0;
        while (tree[node].feature >= 0) {
            const auto &n = tree[node];
            uint8_t level = row[static_cast<size_t>(n.feature)];
            node = (level < 8 && ((n.left_levels >> level) & 1)) ? n.left : n.right;
        }
        total += tree[node].value;
    }
    return total / static_cast<double>(trees_.size());
}

}  // namespace cliffinit
