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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliffinit/cliffinit.h"
#include "json.hpp"

namespace cliffinit::cli {

namespace {

using Clock = std::chrono::steady_clock;

bool is_input_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::kBadLength:
        case ErrorCode::kBadChar:
        case ErrorCode::kSchemaError:
        case ErrorCode::kInconsistentQubitCount:
        case ErrorCode::kNonFiniteCoefficient:
        case ErrorCode::kLengthMismatch:
        case ErrorCode::kIndexOutOfAlphabet:
        case ErrorCode::kIoError:
        case ErrorCode::kInvalidArgument:
            return true;
        default:
            return false;
    }
}

int exit_code_for(const Error &e) {
    return is_input_error(e.code()) ? kExitInputError : kExitRuntimeError;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::kIoError, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::kIoError, "cannot write " + path);
    }
    out << text;
    if (!out) {
        throw Error(ErrorCode::kIoError, "failed writing " + path);
    }
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Options shared by the three subcommands.
struct Common {
    size_t reps = 1;
    std::vector<size_t> active;
    std::optional<double> constraint_weight;
    size_t threads = 1;
};

void add_common(CLI::App *cmd, Common &c) {
    cmd->add_option("--reps", c.reps, "Entangling layers of the SU2 template")->check(CLI::PositiveNumber);
    cmd->add_option("--active", c.active, "Slot indices the search may vary (default: all)")->delimiter(',');
    cmd->add_option("--constraint-weight", c.constraint_weight, "Override every constraint penalty weight");
    cmd->add_option("--threads", c.threads, "Evaluation threads (1 is bit-reproducible)")->check(CLI::PositiveNumber);
}

Hamiltonian load(const std::string &path, const Common &c) {
    auto h = load_hamiltonian_file(path);
    if (c.constraint_weight) {
        h = h.with_constraint_weight(*c.constraint_weight);
    }
    return h;
}

AnsatzTemplate make_template(const Hamiltonian &h, const Common &c) {
    auto t = build_su2(h.num_qubits(), c.reps);
    if (!c.active.empty()) {
        t = t.with_active_slots(c.active);
    }
    return t;
}

RunManifest base_manifest(const std::string &command, const std::vector<std::string> &paths, const AnsatzTemplate &t,
                          const Common &c) {
    RunManifest m;
    m.command = command;
    m.hamiltonian_paths = paths;
    m.num_qubits = t.num_qubits();
    m.reps = t.reps();
    m.active_slots = t.active_slots();
    m.constraint_weight = c.constraint_weight;
    m.tool_version = tool_version();
    return m;
}

// ---------------------------------------------------------------------------------------------
// search

struct SearchArgs {
    Common common;
    std::string ham;
    std::string strategy = "bo";
    std::optional<size_t> budget;
    std::optional<size_t> warmup;
    size_t pool = 500;
    size_t trees = 20;
    uint64_t seed = 0;
    std::optional<size_t> k;
    std::string out;
    uint64_t cap = kDefaultExhaustiveCap;
    std::optional<size_t> stop_window;
};

constexpr uint64_t kFullTraceLimit = uint64_t{1} << 20;

SearchConfig search_config(const SearchArgs &a, const SearchSpace &space) {
    SearchConfig config;
    auto size = space.size();
    config.budget = a.budget.value_or(size ? static_cast<size_t>(std::min<uint64_t>(2000, *size)) : 2000);
    config.warmup = a.warmup.value_or(std::min(default_warmup(space), config.budget));
    config.pool_size = a.pool;
    config.trees = a.trees;
    config.seed = a.seed;
    config.threads = a.common.threads;
    if (a.stop_window) {
        config.stop_on_stagnation = StagnationStop{.window = *a.stop_window};
    }
    return config;
}

int cmd_search(const SearchArgs &a, std::ostream &out) {
    const auto start = Clock::now();
    auto h = load(a.ham, a.common);
    auto t = make_template(h, a.common);
    auto space = a.k ? SearchSpace::eighth_turn(t, *a.k) : SearchSpace::quarter_turn(t);

    SearchTrace trace;
    if (a.strategy == "exhaustive") {
        auto size = space.size();
        ExhaustiveOptions options{.cap = a.cap, .record_all = size && *size <= kFullTraceLimit};
        if (a.k) {
            trace = run_exhaustive(space, extended_objective(h, t, a.common.threads), options);
        } else {
            trace = exhaustive(t, h, options);
        }
    } else {
        auto config = search_config(a, space);
        if (a.strategy == "bo") {
            trace = a.k ? kt_search(t, h, *a.k, config) : bo_search(t, h, config);
        } else {
            trace = a.k ? kt_random_search(t, h, *a.k, config) : random_search(t, h, config);
        }
    }
    const double wall_ms = elapsed_ms(start);
    const auto guided = std::count_if(trace.entries.begin(), trace.entries.end(), [](const TraceEntry &e) { return e.guided; });

    auto manifest = base_manifest("search", {a.ham}, t, a.common);
    manifest.strategy = trace.strategy;
    manifest.config = trace.config;
    manifest.k = a.k;
    if (!a.out.empty()) {
        manifest.outputs = {{"csv", a.out + ".csv"}, {"json", a.out + ".json"}, {"summary", a.out + ".summary.json"}};
        write_file(a.out + ".csv", trace_csv(trace, manifest));
        write_file(a.out + ".json", trace_json(trace, manifest));
        nlohmann::ordered_json summary;
        summary["best_energy"] = trace.best.total;
        summary["iterations"] = trace.evaluations_used;
        summary["best_iteration"] = trace.best_iteration;
        summary["guided_iterations"] = guided;
        summary["wall_ms"] = wall_ms;
        summary["manifest"] = nlohmann::ordered_json::parse(manifest_json(manifest));
        write_file(a.out + ".summary.json", summary.dump(1) + "\n");
    }
    out << "best_energy=" << format_double(trace.best.total) << " iterations=" << trace.evaluations_used
        << " best_iteration=" << trace.best_iteration
        << " guided_iterations=" << guided << " wall_ms=" << format_double(wall_ms)
        << "\n";
    out << "best_assignment=" << nlohmann::json(trace.best_assignment).dump() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------------------------
// terms

struct TermsArgs {
    Common common;
    std::string ham;
    std::string assignment;
    bool hf = false;
    bool exact = false;
    std::string out;
};

struct TermRow {
    const PauliTerm *term;
    std::optional<int> cafqa;
    std::optional<int> hf;
    std::optional<double> exact;
};

// Diagonal terms, then non-diagonal terms with a nonzero CAFQA value, then the rest by exact value.
void order_rows(std::vector<TermRow> &rows) {
    auto group = [](const TermRow &r) {
        if (r.term->pauli.is_diagonal()) {
            return 0;
        }
        return r.cafqa && *r.cafqa != 0 ? 1 : 2;
    };
    std::stable_sort(rows.begin(), rows.end(), [&](const TermRow &a, const TermRow &b) {
        int ga = group(a), gb = group(b);
        if (ga != gb) {
            return ga < gb;
        }
        if (ga == 2 && a.exact && b.exact) {
            return *a.exact < *b.exact;
        }
        return false;
    });
}

int cmd_terms(const TermsArgs &a, std::ostream &out) {
    if (a.assignment.empty() && !a.hf && !a.exact) {
        throw Error(ErrorCode::kInvalidArgument, "terms needs --assignment, --hf or --exact");
    }
    auto h = load(a.ham, a.common);
    auto t = make_template(h, a.common);
    std::vector<TermRow> rows;
    for (const auto &term : h.terms()) {
        rows.push_back({&term, std::nullopt, std::nullopt, std::nullopt});
    }
    if (!a.assignment.empty()) {
        ParameterAssignment assignment{parse_assignment_json(read_file(a.assignment))};
        auto state = prepare_state(t, assignment);
        for (auto &r : rows) {
            r.cafqa = state.expectation(r.term->pauli);
        }
    }
    if (a.hf) {
        auto witness = hf_search(h).witness;
        for (auto &r : rows) {
            r.hf = diagonal_expectation(r.term->pauli, witness);
        }
    }
    if (a.exact) {
        auto ground = exact_ground(h, {.want_state = true});
        for (auto &r : rows) {
            r.exact = pauli_expectation(ground.ground_state, r.term->pauli).real();
        }
    }
    order_rows(rows);

    auto manifest = base_manifest("terms", {a.ham}, t, a.common);
    if (!a.out.empty()) {
        manifest.outputs = {{"csv", a.out}};
    }
    std::ostringstream csv;
    csv << "# manifest: " << manifest_json(manifest) << "\n";
    csv << "term_label,coeff";
    if (!a.assignment.empty()) {
        csv << ",expectation_cafqa";
    }
    if (a.hf) {
        csv << ",expectation_hf";
    }
    if (a.exact) {
        csv << ",expectation_exact";
    }
    csv << "\n";
    for (const auto &r : rows) {
        csv << r.term->pauli.label() << ',' << format_double(r.term->coeff);
        if (r.cafqa) {
            csv << ',' << *r.cafqa;
        }
        if (r.hf) {
            csv << ',' << *r.hf;
        }
        if (r.exact) {
            // Round-off below 1e-12 is printed as 0.
            csv << ',' << format_double(std::abs(*r.exact) < 1e-12 ? 0.0 : *r.exact);
        }
        csv << "\n";
    }
    if (a.out.empty()) {
        out << csv.str();
    } else {
        write_file(a.out, csv.str());
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------------------------
// compare

struct CompareArgs {
    Common common;
    std::vector<std::string> hams;
    std::vector<std::string> positional;
    std::string strategy = "auto";
    std::optional<size_t> budget;
    std::optional<size_t> warmup;
    size_t pool = 500;
    size_t trees = 20;
    uint64_t seed = 0;
    std::string out;
};

constexpr uint64_t kAutoExhaustiveLimit = uint64_t{1} << 16;

double cafqa_energy(const CompareArgs &a, const Hamiltonian &h, const AnsatzTemplate &t) {
    auto space = SearchSpace::quarter_turn(t);
    auto size = space.size();
    std::string strategy = a.strategy;
    if (strategy == "auto") {
        strategy = size && *size <= kAutoExhaustiveLimit ? "exhaustive" : "bo";
    }
    if (strategy == "exhaustive") {
        return exhaustive(t, h, ExhaustiveOptions{.record_all = false}).best.total;
    }
    SearchArgs s;
    s.common = a.common;
    s.budget = a.budget;
    s.warmup = a.warmup;
    s.pool = a.pool;
    s.trees = a.trees;
    s.seed = a.seed;
    auto config = search_config(s, space);
    return (strategy == "bo" ? bo_search(t, h, config) : random_search(t, h, config)).best.total;
}

int cmd_compare(const CompareArgs &a, std::ostream &out) {
    std::vector<std::string> files = a.hams;
    files.insert(files.end(), a.positional.begin(), a.positional.end());
    if (files.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "compare needs at least one Hamiltonian file");
    }
    RunManifest manifest;
    manifest.command = "compare";
    manifest.hamiltonian_paths = files;
    manifest.reps = a.common.reps;
    manifest.active_slots = a.common.active;
    manifest.strategy = a.strategy;
    manifest.config.seed = a.seed;
    manifest.config.pool_size = a.pool;
    manifest.config.trees = a.trees;
    manifest.config.threads = a.common.threads;
    if (a.budget) {
        manifest.config.budget = *a.budget;
    }
    if (a.warmup) {
        manifest.config.warmup = *a.warmup;
    }
    manifest.constraint_weight = a.common.constraint_weight;
    manifest.tool_version = tool_version();
    if (!a.out.empty()) {
        manifest.outputs = {{"csv", a.out}};
    }

    std::ostringstream csv;
    csv << "# manifest: " << manifest_json(manifest) << "\n";
    csv << "name,bond_length,E_exact,E_hf,E_cafqa,abs_error,recovered_%,chem_accurate,relative_accuracy,error\n";
    size_t succeeded = 0;
    bool any_runtime_failure = false;
    for (const auto &path : files) {
        std::string name = std::filesystem::path(path).stem().string();
        std::string bond, e_exact, e_hf, e_cafqa, abs_error, recovered, accurate, relative, error;
        try {
            auto h = load(path, a.common);
            if (!h.name().empty()) {
                name = h.name();
            }
            if (auto b = h.bond_length()) {
                bond = format_double(*b);
            }
            auto t = make_template(h, a.common);
            double hf = hf_search(h).energy;
            double cafqa = cafqa_energy(a, h, t);
            e_hf = format_double(hf);
            e_cafqa = format_double(cafqa);
            succeeded++;
            if (h.num_qubits() <= kMaxExactQubits) {
                double exact = exact_ground(h).energy;
                e_exact = format_double(exact);
                abs_error = format_double(std::abs(cafqa - exact));
                accurate = chem_accurate(cafqa, exact) ? "true" : "false";
                auto metric = [&](std::string &field, auto fn) {
                    try {
                        field = format_double(fn(cafqa, hf, exact));
                    } catch (const Error &e) {
                        if (error.empty()) {
                            error = e.what();
                        }
                    }
                };
                metric(recovered, recovered_correlation);
                metric(relative, relative_accuracy);
            } else {
                error = "TooManyQubits: exact energy skipped above " + std::to_string(kMaxExactQubits) + " qubits";
            }
        } catch (const Error &e) {
            error = e.what();
            any_runtime_failure |= !is_input_error(e.code());
        }
        csv << csv_field(name) << ',' << bond << ',' << e_exact << ',' << e_hf << ',' << e_cafqa << ',' << abs_error
            << ',' << recovered << ',' << accurate << ',' << relative << ',' << csv_field(error) << "\n";
    }
    if (a.out.empty()) {
        out << csv.str();
    } else {
        write_file(a.out, csv.str());
    }
    if (succeeded > 0) {
        return kExitOk;
    }
    return any_runtime_failure ? kExitRuntimeError : kExitInputError;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Clifford-space initialization search for variational quantum eigensolvers", "cliffinit"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    SearchArgs search;
    auto *search_cmd = app.add_subcommand("search", "Search the discrete Clifford parameter space");
    search_cmd->add_option("--ham", search.ham, "Hamiltonian JSON file")->required();
    add_common(search_cmd, search.common);
    search_cmd->add_option("--strategy", search.strategy, "bo, random or exhaustive")
        ->check(CLI::IsMember({"bo", "random", "exhaustive"}));
    search_cmd->add_option("--budget", search.budget, "Total evaluations (default: min(2000, space size))");
    search_cmd->add_option("--warmup", search.warmup, "Random evaluations before the surrogate takes over");
    search_cmd->add_option("--pool", search.pool, "Candidate pool size per iteration")->check(CLI::PositiveNumber);
    search_cmd->add_option("--trees", search.trees, "Random forest size")->check(CLI::PositiveNumber);
    search_cmd->add_option("--seed", search.seed, "RNG seed")->capture_default_str();
    search_cmd->add_option("--k", search.k, "Allow up to k odd eighth-turn (T-type) slots");
    search_cmd->add_option("--out", search.out, "Output prefix for <out>.csv, <out>.json, <out>.summary.json");
    search_cmd->add_option("--cap", search.cap, "Exhaustive enumeration cap")->capture_default_str();
    search_cmd->add_option("--stop-window", search.stop_window, "Stop after this many iterations without improvement");

    TermsArgs terms;
    auto *terms_cmd = app.add_subcommand("terms", "Per-term expectation breakdown");
    terms_cmd->add_option("--ham", terms.ham, "Hamiltonian JSON file")->required();
    add_common(terms_cmd, terms.common);
    terms_cmd->add_option("--assignment", terms.assignment, "Assignment JSON (array or search trace JSON)");
    terms_cmd->add_flag("--hf", terms.hf, "Add the best-bitstring column");
    terms_cmd->add_flag("--exact", terms.exact, "Add the exact ground-state column");
    terms_cmd->add_option("--out", terms.out, "CSV output path (default: stdout)");

    CompareArgs compare;
    auto *compare_cmd = app.add_subcommand("compare", "Exact, best-bitstring and Clifford-search energies per file");
    compare_cmd->add_option("--ham", compare.hams, "Hamiltonian JSON file (repeatable)");
    compare_cmd->add_option("files", compare.positional, "More Hamiltonian JSON files");
    add_common(compare_cmd, compare.common);
    compare_cmd->add_option("--strategy", compare.strategy, "auto, bo, random or exhaustive")
        ->check(CLI::IsMember({"auto", "bo", "random", "exhaustive"}));
    compare_cmd->add_option("--budget", compare.budget, "Search budget for bo/random");
    compare_cmd->add_option("--warmup", compare.warmup, "Warmup for bo");
    compare_cmd->add_option("--pool", compare.pool, "Candidate pool size")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--trees", compare.trees, "Random forest size")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--seed", compare.seed, "RNG seed")->capture_default_str();
    compare_cmd->add_option("--out", compare.out, "CSV output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*search_cmd) {
            return cmd_search(search, out);
        }
        if (*terms_cmd) {
            return cmd_terms(terms, out);
        }
        return cmd_compare(compare, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
}

}  // namespace cliffinit::cli
