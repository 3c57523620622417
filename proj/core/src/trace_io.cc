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

#include "cliffinit/trace_io.h"

#include <charconv>
#include <cmath>
#include <sstream>

#include "cliffinit/error.h"
#include "json.hpp"

#ifndef CLIFFINIT_VERSION
#define CLIFFINIT_VERSION "0.0.0"
#endif

namespace cliffinit {

using nlohmann::ordered_json;

std::string tool_version() {
    return CLIFFINIT_VERSION;
}

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, end);
}

namespace {

ordered_json config_json(const SearchConfig &c) {
    ordered_json j;
    j["warmup"] = c.warmup;
    j["budget"] = c.budget;
    j["pool_size"] = c.pool_size;
    j["trees"] = c.trees;
    j["seed"] = c.seed;
    j["parents"] = c.parents;
    j["threads"] = c.threads;
    if (c.stop_on_stagnation) {
        j["stop_on_stagnation"] = {{"window", c.stop_on_stagnation->window},
                                   {"tolerance", c.stop_on_stagnation->tolerance}};
    } else {
        j["stop_on_stagnation"] = nullptr;
    }
    return j;
}

ordered_json manifest_object(const RunManifest &m) {
    ordered_json j;
    j["command"] = m.command;
    j["hamiltonians"] = m.hamiltonian_paths;
    j["num_qubits"] = m.num_qubits;
    j["reps"] = m.reps;
    j["active_slots"] = m.active_slots;
    j["strategy"] = m.strategy;
    j["config"] = config_json(m.config);
    j["k"] = m.k ? ordered_json(*m.k) : ordered_json(nullptr);
    j["constraint_weight"] = m.constraint_weight ? ordered_json(*m.constraint_weight) : ordered_json(nullptr);
    j["outputs"] = m.outputs;
    j["tool_version"] = m.tool_version;
    return j;
}

size_t odd_slots(const std::vector<uint8_t> &a) {
    size_t odd = 0;
    for (uint8_t v : a) {
        odd += v & 1;
    }
    return odd;
}

ordered_json record_json(const EnergyRecord &r) {
    ordered_json j;
    j["raw_energy"] = r.raw_energy;
    j["penalty"] = r.penalty;
    j["total"] = r.total;
    j["constraint_values"] = r.constraint_values;
    return j;
}

}  // namespace

std::string manifest_json(const RunManifest &manifest) {
    return manifest_object(manifest).dump();
}

std::string trace_csv(const SearchTrace &trace, const RunManifest &manifest) {
    std::ostringstream out;
    const bool kt = trace.k_budget.has_value();
    out << "# manifest: " << manifest_json(manifest) << "\n";
    out << "iteration,total,best_so_far,raw_energy,penalty,guided";
    if (kt) {
        out << ",odd_slots";
    }
    out << "\n";
    for (const auto &e : trace.entries) {
        out << e.iteration << ',' << format_double(e.record.total) << ',' << format_double(e.best_so_far) << ','
            << format_double(e.record.raw_energy) << ',' << format_double(e.record.penalty) << ','
            << (e.guided ? 1 : 0);
        if (kt) {
            out << ',' << odd_slots(e.assignment);
        }
        out << "\n";
    }
    return out.str();
}

std::string trace_json(const SearchTrace &trace, const RunManifest &manifest) {
    ordered_json j;
    j["manifest"] = manifest_object(manifest);
    j["strategy"] = trace.strategy;
    j["alphabet"] = trace.alphabet;
    j["k"] = trace.k_budget ? ordered_json(*trace.k_budget) : ordered_json(nullptr);
    j["seed"] = trace.config.seed;
    j["evaluations_used"] = trace.evaluations_used;
    j["warmup_used"] = trace.warmup_used;
    j["guided_iterations"] = trace.evaluations_used - trace.warmup_used;
    j["complete"] = trace.complete;
    ordered_json best = record_json(trace.best);
    best["iteration"] = trace.best_iteration;
    best["assignment"] = trace.best_assignment;
    j["best"] = best;
    ordered_json entries = ordered_json::array();
    for (const auto &e : trace.entries) {
        ordered_json row;
        row["iteration"] = e.iteration;
        row["assignment"] = e.assignment;
        row["raw_energy"] = e.record.raw_energy;
        row["penalty"] = e.record.penalty;
        row["total"] = e.record.total;
        row["best_so_far"] = e.best_so_far;
        row["guided"] = e.guided;
        if (trace.k_budget) {
            row["odd_slots"] = odd_slots(e.assignment);
        }
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j.dump(1) + "\n";
}

std::vector<uint8_t> parse_assignment_json(std::string_view document) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(document);
    } catch (const ordered_json::parse_error &e) {
        throw Error(ErrorCode::kSchemaError, std::string("invalid assignment JSON: ") + e.what());
    }
    const ordered_json *array = &doc;
    if (doc.is_object()) {
        if (doc.contains("assignment")) {
            array = &doc["assignment"];
        } else if (doc.contains("best") && doc["best"].is_object() && doc["best"].contains("assignment")) {
            array = &doc["best"]["assignment"];
        } else {
            throw Error(ErrorCode::kSchemaError, "assignment object needs 'assignment' or 'best.assignment'");
        }
    }
    if (!array->is_array()) {
        throw Error(ErrorCode::kSchemaError, "assignment must be a JSON array of integers");
    }
    std::vector<uint8_t> out;
    for (const auto &v : *array) {
        if (!v.is_number_integer() || v.get<int64_t>() < 0 || v.get<int64_t>() > 255) {
            throw Error(ErrorCode::kSchemaError, "assignment entries must be small non-negative integers");
        }
        out.push_back(static_cast<uint8_t>(v.get<int64_t>()));
    }
    return out;
}

}  // namespace cliffinit
