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

#ifndef CLIFFINIT_TRACE_IO_H
#define CLIFFINIT_TRACE_IO_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliffinit/search.h"

namespace cliffinit {

/// Everything needed to rerun a search. Serialized into the header of every output file.
struct RunManifest {
    std::string command;
    std::vector<std::string> hamiltonian_paths;
    size_t num_qubits = 0;
    size_t reps = 1;
    std::vector<size_t> active_slots;
    std::string strategy;
    SearchConfig config;
    std::optional<size_t> k;
    std::optional<double> constraint_weight;
    std::map<std::string, std::string> outputs;
    std::string tool_version;
};

std::string tool_version();

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Compact single-line JSON.
std::string manifest_json(const RunManifest &manifest);

/// "# manifest: {...}" line, then iteration,total,best_so_far,raw_energy,penalty,guided[,odd_slots].
std::string trace_csv(const SearchTrace &trace, const RunManifest &manifest);

/// Manifest, search summary, best entry and every recorded entry with its full assignment.
std::string trace_json(const SearchTrace &trace, const RunManifest &manifest);

/// Accepts a bare JSON integer array or a trace JSON document (its best assignment).
/// Throws SchemaError.
std::vector<uint8_t> parse_assignment_json(std::string_view document);

}  // namespace cliffinit

#endif
