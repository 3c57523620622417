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

#ifndef CLIFFINIT_SEARCH_H
#define CLIFFINIT_SEARCH_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliffinit/ansatz.h"
#include "cliffinit/hamiltonian.h"
#include "cliffinit/objective.h"
#include "cliffinit/search_space.h"

namespace cliffinit {

inline constexpr uint64_t kDefaultExhaustiveCap = uint64_t{1} << 24;

struct StagnationStop {
    size_t window = 500;
    double tolerance = 1e-9;
};

struct SearchConfig {
    size_t warmup = 1000;
    size_t budget = 2000;
    size_t pool_size = 500;
    size_t trees = 20;
    uint64_t seed = 0;
    std::optional<StagnationStop> stop_on_stagnation;
    /// Mutation parents for the candidate pool: the best `parents` assignments seen so far.
    size_t parents = 5;
    /// Evaluation and pool-prediction threads. Never changes which candidate is chosen.
    size_t threads = 1;
};

/// min(1000, |space| / 4), at least 1.
size_t default_warmup(const SearchSpace &space);

struct TraceEntry {
    size_t iteration = 0;  // 1-based
    std::vector<uint8_t> assignment;
    EnergyRecord record;
    double best_so_far = 0.0;
    bool guided = false;  // chosen by the surrogate rather than sampled
};

struct SearchTrace {
    std::string strategy;
    uint8_t alphabet = 4;
    std::optional<size_t> k_budget;
    SearchConfig config;
    std::vector<TraceEntry> entries;
    /// False when only improving entries were kept (large exhaustive runs).
    bool complete = true;
    size_t evaluations_used = 0;
    size_t warmup_used = 0;

    std::vector<uint8_t> best_assignment;
    EnergyRecord best;
    size_t best_iteration = 0;
};

/// First iteration whose best-so-far total is <= value + tolerance, if any.
std::optional<size_t> iterations_to_reach(const SearchTrace &trace, double value, double tolerance = 1e-9);

/// Objective over full-length index vectors.
using Objective = std::function<EnergyRecord(std::span<const uint8_t>)>;

struct ExhaustiveOptions {
    uint64_t cap = kDefaultExhaustiveCap;
    /// Keep every evaluation in the trace; otherwise only improvements.
    bool record_all = true;
};

/// Every feasible assignment once, in lexicographic order; ties keep the earliest.
/// Throws SpaceTooLarge when the space exceeds the cap.
SearchTrace run_exhaustive(const SearchSpace &space, const Objective &objective, const ExhaustiveOptions &options = {});

/// `budget` distinct uniform draws (collisions are redrawn). Throws SpaceExhausted.
SearchTrace run_random(const SearchSpace &space, const Objective &objective, const SearchConfig &config);

/// Random warmup, then per iteration: refit the forest on all evaluations, build a candidate pool
/// (half uniform draws, half single-slot mutations of the best assignments, none seen before),
/// and evaluate the candidate with the lowest predicted total. Throws SpaceExhausted.
SearchTrace run_bo(const SearchSpace &space, const Objective &objective, const SearchConfig &config);

/// Quarter-turn objective on the stabilizer path.
Objective stabilizer_objective(const Hamiltonian &h, const AnsatzTemplate &t, size_t threads = 1);

SearchTrace exhaustive(const AnsatzTemplate &t, const Hamiltonian &h, uint64_t cap = kDefaultExhaustiveCap);
SearchTrace exhaustive(const AnsatzTemplate &t, const Hamiltonian &h, const ExhaustiveOptions &options);
SearchTrace random_search(const AnsatzTemplate &t, const Hamiltonian &h, const SearchConfig &config);
SearchTrace bo_search(const AnsatzTemplate &t, const Hamiltonian &h, const SearchConfig &config);

}  // namespace cliffinit

#endif
