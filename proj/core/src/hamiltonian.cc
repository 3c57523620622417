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

#include "cliffinit/hamiltonian.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "cliffinit/error.h"
#include "json.hpp"

namespace cliffinit {

using nlohmann::json;

std::vector<PauliTerm> normalize_terms(std::vector<PauliTerm> terms, size_t num_qubits) {
    std::vector<PauliTerm> merged;
    std::unordered_map<std::string, size_t> position;
    for (auto &term : terms) {
        if (term.pauli.num_qubits() != num_qubits) {
            throw Error(
                ErrorCode::kInconsistentQubitCount,
                "term " + term.pauli.label() + " has " + std::to_string(term.pauli.num_qubits()) +
                    " qubits, expected " + std::to_string(num_qubits));
        }
        if (!std::isfinite(term.coeff)) {
            throw Error(ErrorCode::kNonFiniteCoefficient, "term " + term.pauli.label() + " has a non-finite coefficient");
        }
        if (term.pauli.phase_exp() != 0) {
            throw Error(ErrorCode::kInvalidArgument, "term " + term.pauli.str() + " must carry phase_exp 0");
        }
        auto key = term.pauli.label();
        auto it = position.find(key);
        if (it == position.end()) {
            position.emplace(std::move(key), merged.size());
            merged.push_back(std::move(term));
        } else {
            merged[it->second].coeff += term.coeff;
        }
    }
    std::erase_if(merged, [](const PauliTerm &t) { return std::abs(t.coeff) < kCoefficientPruneThreshold; });
    return merged;
}

Hamiltonian::Hamiltonian(
    size_t num_qubits, std::vector<PauliTerm> terms, std::vector<ConstraintSpec> constraints, std::string name)
    : num_qubits_(num_qubits),
      terms_(normalize_terms(std::move(terms), num_qubits)),
      constraints_(std::move(constraints)),
      name_(std::move(name)) {
    for (auto &c : constraints_) {
        if (!(c.weight >= 0.0) || !std::isfinite(c.weight)) {
            throw Error(ErrorCode::kInvalidArgument, "constraint '" + c.name + "' needs a finite weight >= 0");
        }
        if (!std::isfinite(c.target)) {
            throw Error(ErrorCode::kNonFiniteCoefficient, "constraint '" + c.name + "' has a non-finite target");
        }
        c.observable = normalize_terms(std::move(c.observable), num_qubits);
    }
}

Hamiltonian Hamiltonian::from_labels(
    size_t num_qubits, const std::vector<std::pair<std::string, double>> &terms, std::string name) {
    std::vector<PauliTerm> parsed;
    parsed.reserve(terms.size());
    for (const auto &[label, coeff] : terms) {
        parsed.push_back({PauliString::parse(label, num_qubits), coeff});
    }
    return Hamiltonian(num_qubits, std::move(parsed), {}, std::move(name));
}

std::optional<double> Hamiltonian::bond_length() const {
    auto it = metadata_.find("bond_length");
    if (it == metadata_.end()) {
        return std::nullopt;
    }
    auto value = json::parse(it->second, nullptr, false);
    if (value.is_number()) {
        return value.get<double>();
    }
    return std::nullopt;
}

Hamiltonian Hamiltonian::with_constraint_weight(double weight) const {
    Hamiltonian copy = *this;
    for (auto &c : copy.constraints_) {
        c.weight = weight;
    }
    if (!(weight >= 0.0) || !std::isfinite(weight)) {
        throw Error(ErrorCode::kInvalidArgument, "constraint weight must be finite and >= 0");
    }
    return copy;
}

namespace {

[[noreturn]] void schema_error(const std::string &message) {
    throw Error(ErrorCode::kSchemaError, message);
}

std::vector<PauliTerm> parse_terms(const json &array, size_t num_qubits, const std::string &where) {
    if (!array.is_array()) {
        schema_error(where + " must be an array");
    }
    std::vector<PauliTerm> terms;
    terms.reserve(array.size());
    for (const auto &entry : array) {
        if (!entry.is_object() || !entry.contains("pauli") || !entry.contains("coeff")) {
            schema_error(where + " entries need 'pauli' and 'coeff'");
        }
        if (!entry["pauli"].is_string()) {
            schema_error(where + ": 'pauli' must be a string");
        }
        if (!entry["coeff"].is_number()) {
            // JSON cannot carry NaN/Infinity literals, but accept them spelled as strings to report them properly.
            if (entry["coeff"].is_string()) {
                auto s = entry["coeff"].get<std::string>();
                if (s == "NaN" || s == "nan" || s == "Infinity" || s == "-Infinity" || s == "inf" || s == "-inf") {
                    throw Error(ErrorCode::kNonFiniteCoefficient, where + ": coefficient '" + s + "'");
                }
            }
            schema_error(where + ": 'coeff' must be a number");
        }
        auto label = entry["pauli"].get<std::string>();
        if (label.size() != num_qubits) {
            throw Error(
                ErrorCode::kInconsistentQubitCount,
                where + ": term '" + label + "' has " + std::to_string(label.size()) + " qubits, num_qubits is " +
                    std::to_string(num_qubits));
        }
        terms.push_back({PauliString::parse(label, num_qubits), entry["coeff"].get<double>()});
    }
    return terms;
}

}  // namespace

Hamiltonian load_hamiltonian(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error &e) {
        schema_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        schema_error("document must be a JSON object");
    }
    if (!doc.contains("num_qubits") || !doc["num_qubits"].is_number_integer()) {
        schema_error("'num_qubits' must be an integer");
    }
    auto n = doc["num_qubits"].get<int64_t>();
    if (n < 1) {
        schema_error("'num_qubits' must be >= 1");
    }
    auto num_qubits = static_cast<size_t>(n);
    if (!doc.contains("terms")) {
        schema_error("missing 'terms'");
    }
    auto terms = parse_terms(doc["terms"], num_qubits, "terms");

    std::vector<ConstraintSpec> constraints;
    if (doc.contains("constraints")) {
        const auto &list = doc["constraints"];
        if (!list.is_array()) {
            schema_error("'constraints' must be an array");
        }
        for (const auto &c : list) {
            if (!c.is_object() || !c.contains("terms") || !c.contains("target")) {
                schema_error("constraints need 'terms' and 'target'");
            }
            ConstraintSpec spec;
            spec.name = c.value("name", std::string("constraint") + std::to_string(constraints.size()));
            if (!c["target"].is_number()) {
                schema_error("constraint 'target' must be a number");
            }
            spec.target = c["target"].get<double>();
            if (c.contains("weight")) {
                if (!c["weight"].is_number()) {
                    schema_error("constraint 'weight' must be a number");
                }
                spec.weight = c["weight"].get<double>();
            }
            spec.observable = parse_terms(c["terms"], num_qubits, "constraint '" + spec.name + "'");
            constraints.push_back(std::move(spec));
        }
    }

    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            schema_error("'name' must be a string");
        }
        name = doc["name"].get<std::string>();
    }

    Hamiltonian h(num_qubits, std::move(terms), std::move(constraints), std::move(name));
    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object()) {
            schema_error("'metadata' must be an object");
        }
        std::map<std::string, std::string> metadata;
        for (const auto &[key, value] : doc["metadata"].items()) {
            metadata[key] = value.dump();
        }
        h.set_metadata(std::move(metadata));
    }
    return h;
}

Hamiltonian load_hamiltonian_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::kIoError, "cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_hamiltonian(buffer.str());
}

std::string dump_hamiltonian(const Hamiltonian &h) {
    auto terms_json = [](const std::vector<PauliTerm> &terms) {
        json out = json::array();
        for (const auto &t : terms) {
            out.push_back({{"pauli", t.pauli.label()}, {"coeff", t.coeff}});
        }
        return out;
    };
    json doc;
    doc["name"] = h.name();
    doc["num_qubits"] = h.num_qubits();
    doc["terms"] = terms_json(h.terms());
    json constraints = json::array();
    for (const auto &c : h.constraints()) {
        constraints.push_back(
            {{"name", c.name}, {"terms", terms_json(c.observable)}, {"target", c.target}, {"weight", c.weight}});
    }
    doc["constraints"] = constraints;
    json metadata = json::object();
    for (const auto &[key, value] : h.metadata()) {
        metadata[key] = json::parse(value);
    }
    doc["metadata"] = metadata;
    return doc.dump(2);
}

}  // namespace cliffinit
