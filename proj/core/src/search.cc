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

#include "cliffinit/search.h"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "cliffinit/error.h"
#include "cliffinit/forest.h"

namespace cliffinit {

namespace {

std::string key_of(std::span<const uint8_t> a) {
    return std::string(a.begin(), a.end());
}

class Recorder {
   public:
    Recorder(SearchTrace &trace, bool record_all) : trace_(trace), record_all_(record_all) {
        trace_.complete = record_all;
    }

    void add(std::vector<uint8_t> assignment, EnergyRecord record, bool guided) {
        size_t iteration = ++trace_.evaluations_used;
        bool improved = iteration == 1 || record.total < trace_.best.total;
        if (improved) {
            trace_.best_assignment = assignment;
            trace_.best = record;
            trace_.best_iteration = iteration;
        }
        best_history_.push_back(trace_.best.total);
        if (record_all_ || improved) {
            trace_.entries.push_back({iteration, std::move(assignment), std::move(record), trace_.best.total, guided});
        }
    }

    bool stagnated(const std::optional<StagnationStop> &stop, size_t warmup) const {
        if (!stop) {
            return false;
        }
        size_t n = best_history_.size();
        if (n < warmup + stop->window || n <= stop->window) {
            return false;
        }
        return best_history_[n - 1 - stop->window] - best_history_[n - 1] <= stop->tolerance;
    }

   private:
    SearchTrace &trace_;
    bool record_all_;
    std::vector<double> best_history_;
};

void validate_config(const SearchConfig &config, bool needs_warmup) {
    if (config.budget < 1) {
        throw Error(ErrorCode::kInvalidArgument, "budget must be >= 1");
    }
    if (needs_warmup && (config.warmup < 1 || config.warmup > config.budget)) {
        throw Error(ErrorCode::kInvalidArgument, "need 1 <= warmup <= budget");
    }
    if (config.pool_size < 1 || config.trees < 1) {
        throw Error(ErrorCode::kInvalidArgument, "pool_size and trees must be >= 1");
    }
    if (config.stop_on_stagnation && config.stop_on_stagnation->window < 1) {
        throw Error(ErrorCode::kInvalidArgument, "stagnation window must be >= 1");
    }
}

void check_capacity(const SearchSpace &space, size_t budget) {
    auto size = space.size();
    if (size && budget > *size) {
        throw Error(
            ErrorCode::kSpaceExhausted,
            "budget " + std::to_string(budget) + " exceeds the " + std::to_string(*size) + " distinct assignments");
    }
}

SearchTrace new_trace(const std::string &strategy, const SearchSpace &space, const SearchConfig &config) {
    SearchTrace trace;
    trace.strategy = strategy;
    trace.alphabet = space.levels();
    trace.k_budget = space.max_odd();
    trace.config = config;
    return trace;
}

std::vector<uint8_t> draw_unseen(const SearchSpace &space, const std::unordered_set<std::string> &seen, Rng &rng) {
    while (true) {
        auto candidate = space.sample(rng);
        if (!seen.contains(key_of(candidate))) {
            return candidate;
        }
    }
}

}  // namespace

size_t default_warmup(const SearchSpace &space) {
    auto size = space.size();
    uint64_t quarter = size ? *size / 4 : uint64_t{1000};
    return static_cast<size_t>(std::max<uint64_t>(1, std::min<uint64_t>(1000, quarter)));
}

std::optional<size_t> iterations_to_reach(const SearchTrace &trace, double value, double tolerance) {
    for (const auto &e : trace.entries) {
        if (e.best_so_far <= value + tolerance) {
            return e.iteration;
        }
    }
    return std::nullopt;
}

SearchTrace run_exhaustive(const SearchSpace &space, const Objective &objective, const ExhaustiveOptions &options) {
    auto size = space.size();
    if (!size || *size > options.cap) {
        throw Error(
            ErrorCode::kSpaceTooLarge,
            "space has " + (size ? std::to_string(*size) : "2^" + std::to_string(space.log2_size())) +
                " assignments, cap is " + std::to_string(options.cap));
    }
    SearchConfig echo;
    echo.budget = static_cast<size_t>(*size);
    echo.warmup = 0;
    auto trace = new_trace("exhaustive", space, echo);
    Recorder recorder(trace, options.record_all);
    auto current = space.first();
    do {
        auto record = objective(current);
        recorder.add(current, std::move(record), false);
    } while (space.next(current));
    return trace;
}

SearchTrace run_random(const SearchSpace &space, const Objective &objective, const SearchConfig &config) {
    validate_config(config, false);
    check_capacity(space, config.budget);
    auto trace = new_trace("random", space, config);
    Recorder recorder(trace, true);
    Rng rng(config.seed);
    std::unordered_set<std::string> seen;
    while (trace.evaluations_used < config.budget) {
        auto candidate = draw_unseen(space, seen, rng);
        seen.insert(key_of(candidate));
        auto record = objective(candidate);
        recorder.add(std::move(candidate), std::move(record), false);
        if (recorder.stagnated(config.stop_on_stagnation, 0)) {
            break;
        }
    }
    return trace;
}

SearchTrace run_bo(const SearchSpace &space, const Objective &objective, const SearchConfig &config) {
    validate_config(config, true);
    check_capacity(space, config.budget);
    auto trace = new_trace("bo", space, config);
    Recorder recorder(trace, true);
    Rng rng(config.seed);
    std::unordered_set<std::string> seen;
    std::vector<std::vector<uint8_t>> evaluated;
    std::vector<std::vector<uint8_t>> features;
    std::vector<double> totals;

    auto consume = [&](std::vector<uint8_t> candidate, bool guided) {
        seen.insert(key_of(candidate));
        auto record = objective(candidate);
        features.push_back(space.features(candidate));
        totals.push_back(record.total);
        evaluated.push_back(candidate);
        recorder.add(std::move(candidate), std::move(record), guided);
    };

    while (trace.evaluations_used < config.warmup) {
        consume(draw_unseen(space, seen, rng), false);
    }
    trace.warmup_used = trace.evaluations_used;

    SurrogateForest forest(ForestOptions{config.trees, 2});
    const size_t random_share = config.pool_size - config.pool_size / 2;
    const size_t mutation_share = config.pool_size / 2;
    const auto space_size = space.size();

    while (trace.evaluations_used < config.budget) {
        if (recorder.stagnated(config.stop_on_stagnation, config.warmup)) {
            break;
        }
        forest.fit(features, totals, rng);

        std::vector<size_t> order(totals.size());
        std::iota(order.begin(), order.end(), size_t{0});
        size_t num_parents = std::min(config.parents, order.size());
        std::partial_sort(order.begin(), order.begin() + num_parents, order.end(), [&](size_t a, size_t b) {
            return totals[a] < totals[b] || (totals[a] == totals[b] && a < b);
        });

        std::vector<std::vector<uint8_t>> pool;
        std::unordered_set<std::string> in_pool;
        auto offer = [&](std::vector<uint8_t> c) {
            auto key = key_of(c);
            if (!seen.contains(key) && in_pool.insert(key).second) {
                pool.push_back(std::move(c));
            }
        };
        for (size_t i = 0; i < random_share; i++) {
            offer(space.sample(rng));
        }
        for (size_t i = 0; num_parents > 0 && i < mutation_share; i++) {
            offer(space.mutate(evaluated[order[i % num_parents]], rng));
        }
        if (pool.empty()) {
            // Nearly exhausted space: fall back to the unevaluated assignments themselves.
            if (space_size && *space_size <= (uint64_t{1} << 22)) {
                auto current = space.first();
                do {
                    offer(current);
                } while (pool.size() < config.pool_size && space.next(current));
            } else {
                offer(draw_unseen(space, seen, rng));
            }
        }
        if (pool.empty()) {
            throw Error(ErrorCode::kSpaceExhausted, "no unevaluated assignments left");
        }

        std::vector<double> predicted(pool.size());
        parallel_for(pool.size(), config.threads, [&](size_t i) {
            predicted[i] = forest.predict(space.features(pool[i]));
        });
        double lowest = *std::min_element(predicted.begin(), predicted.end());
        std::vector<size_t> ties;
        for (size_t i = 0; i < predicted.size(); i++) {
            if (predicted[i] == lowest) {
                ties.push_back(i);
            }
        }
        size_t pick = ties.size() == 1 ? ties[0] : ties[rng.uniform_index(ties.size())];
        consume(std::move(pool[pick]), true);
    }
    return trace;
}

Objective stabilizer_objective(const Hamiltonian &h, const AnsatzTemplate &t, size_t threads) {
    if (h.num_qubits() != t.num_qubits()) {
        throw Error(ErrorCode::kSizeMismatch, "Hamiltonian and template disagree on qubit count");
    }
    return [&h, &t, threads](std::span<const uint8_t> indices) {
        ParameterAssignment a{std::vector<uint8_t>(indices.begin(), indices.end())};
        return evaluate(h, t, a, EvalOptions{threads});
    };
}

SearchTrace exhaustive(const AnsatzTemplate &t, const Hamiltonian &h, uint64_t cap) {
    return exhaustive(t, h, ExhaustiveOptions{cap, true});
}

SearchTrace exhaustive(const AnsatzTemplate &t, const Hamiltonian &h, const ExhaustiveOptions &options) {
    return run_exhaustive(SearchSpace::quarter_turn(t), stabilizer_objective(h, t), options);
}

SearchTrace random_search(const AnsatzTemplate &t, const Hamiltonian &h, const SearchConfig &config) {
    return run_random(SearchSpace::quarter_turn(t), stabilizer_objective(h, t, config.threads), config);
}

SearchTrace bo_search(const AnsatzTemplate &t, const Hamiltonian &h, const SearchConfig &config) {
    return run_bo(SearchSpace::quarter_turn(t), stabilizer_objective(h, t, config.threads), config);
}

}  // namespace cliffinit
