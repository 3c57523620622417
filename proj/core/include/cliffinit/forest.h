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

#ifndef CLIFFINIT_FOREST_H
#define CLIFFINIT_FOREST_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cliffinit/rng.h"

namespace cliffinit {

struct ForestOptions {
    size_t trees = 20;
    size_t min_split = 2;
};

/// Bagged regression trees over categorical features.
///
/// Every feature is a categorical with at most 8 levels. A split sends a subset of levels left;
/// the subset is chosen by ordering the node's levels by mean target and taking the best prefix,
/// which is the optimal level partition under squared error. Trees grow until nodes are pure,
/// smaller than min_split, or cannot be split.
class SurrogateForest {
   public:
    explicit SurrogateForest(ForestOptions options = {});

    /// Trains on rows[i] -> targets[i]. Each tree sees a bootstrap resample drawn from `rng`.
    void fit(const std::vector<std::vector<uint8_t>> &rows, const std::vector<double> &targets, Rng &rng);

    /// Mean of the tree predictions. Levels never seen at a split fall to the right child.
    double predict(std::span<const uint8_t> row) const;

    size_t num_trees() const {
        return trees_.size();
    }
    bool trained() const {
        return !trees_.empty();
    }

   private:
    struct Node {
        int32_t feature = -1;  // -1 marks a leaf
        uint8_t left_levels = 0;
        uint32_t left = 0;
        uint32_t right = 0;
        double value = 0.0;
    };
    using Tree = std::vector<Node>;

    Tree grow(const std::vector<std::vector<uint8_t>> &rows, const std::vector<double> &targets,
              std::vector<uint32_t> sample) const;

    ForestOptions options_;
    std::vector<Tree> trees_;
};

}  // namespace cliffinit

#endif
