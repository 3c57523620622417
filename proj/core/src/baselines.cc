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

#include "cliffinit/baselines.h"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <limits>

#include "cliffinit/error.h"
#include "cliffinit/rng.h"
#include "cliffinit/statevector.h"

namespace cliffinit {

namespace {

// Diagonal term as a Z mask over the lexicographic index (qubit 0 is the most significant bit).
struct DiagonalTerm {
    uint64_t z_mask;
    double coeff;
};

std::vector<DiagonalTerm> diagonal_terms(const std::vector<PauliTerm> &terms, size_t n) {
    std::vector<DiagonalTerm> out;
    for (const auto &t : terms) {
        if (!t.pauli.is_diagonal()) {
            continue;
        }
        uint64_t mask = 0;
        for (size_t q = 0; q < n; q++) {
            if (t.pauli.z(q)) {
                mask |= uint64_t{1} << (n - 1 - q);
            }
        }
        out.push_back({mask, t.coeff});
    }
    return out;
}

double diagonal_value(const std::vector<DiagonalTerm> &terms, uint64_t index) {
    double total = 0.0;
    for (const auto &t : terms) {
        total += (std::popcount(index & t.z_mask) & 1) ? -t.coeff : t.coeff;
    }
    return total;
}

void check_exact_size(const Hamiltonian &h) {
    if (h.num_qubits() > kMaxExactQubits) {
        throw Error(
            ErrorCode::kTooManyQubits,
            std::to_string(h.num_qubits()) + " qubits exceeds the exact-diagonalization cap of " +
                std::to_string(kMaxExactQubits));
    }
}

Eigen::MatrixXcd dense_matrix(const Hamiltonian &h) {
    const size_t dim = size_t{1} << h.num_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &term : h.terms()) {
        auto action = pauli_action(term.pauli);
        for (size_t b = 0; b < dim; b++) {
            double sign = (std::popcount(b & action.z_mask) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(b ^ action.x_mask), static_cast<Eigen::Index>(b)) +=
                term.coeff * sign * action.phase;
        }
    }
    return m;
}

class PauliSumOperator {
   public:
    explicit PauliSumOperator(const Hamiltonian &h) : dim_(size_t{1} << h.num_qubits()) {
        for (const auto &t : h.terms()) {
            auto action = pauli_action(t.pauli);
            action.phase *= t.coeff;
            actions_.push_back(action);
        }
    }

    size_t dim() const {
        return dim_;
    }

    const std::vector<PauliAction> &actions() const {
        return actions_;
    }

    void apply(const Eigen::VectorXcd &in, Eigen::VectorXcd &out) const {
        out.setZero(static_cast<Eigen::Index>(dim_));
        for (const auto &a : actions_) {
            for (size_t b = 0; b < dim_; b++) {
                double sign = (std::popcount(b & a.z_mask) & 1) ? -1.0 : 1.0;
                out(static_cast<Eigen::Index>(b ^ a.x_mask)) += a.phase * sign * in(static_cast<Eigen::Index>(b));
            }
        }
    }

   private:
    size_t dim_;
    std::vector<PauliAction> actions_;
};

// <v|H|v> / <v|v> accumulated in extended precision. Second-order accurate in the eigenvector
// error, so an eigenpair from a double-precision solver comes back with its eigenvalue rounded
// correctly (-1 rather than -0.9999999999999998 for XX).
double rayleigh_quotient(const PauliSumOperator &op, const Eigen::VectorXcd &v) {
    using Wide = std::complex<long double>;
    Wide numerator = 0;
    long double norm = 0;
    for (Eigen::Index b = 0; b < v.size(); b++) {
        norm += static_cast<long double>(std::norm(v(b)));
    }
    for (const auto &a : op.actions()) {
        const Wide phase(a.phase.real(), a.phase.imag());
        for (size_t b = 0; b < op.dim(); b++) {
            Wide in(v(static_cast<Eigen::Index>(b)).real(), v(static_cast<Eigen::Index>(b)).imag());
            Wide out(v(static_cast<Eigen::Index>(b ^ a.x_mask)).real(), v(static_cast<Eigen::Index>(b ^ a.x_mask)).imag());
            Wide term = std::conj(out) * phase * in;
            numerator += (std::popcount(b & a.z_mask) & 1) ? -term : term;
        }
    }
    return static_cast<double>(numerator.real() / norm);
}

double polish(const PauliSumOperator &op, const Eigen::VectorXcd &v, double eigenvalue) {
    double refined = rayleigh_quotient(op, v);
    return std::abs(refined - eigenvalue) <= 1e-8 * std::max(1.0, std::abs(eigenvalue)) ? refined : eigenvalue;
}

BaselineResult exact_dense(const Hamiltonian &h, bool want_state) {
    const PauliSumOperator op(h);
    auto m = dense_matrix(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::ComputeEigenvectors);
    Eigen::VectorXcd v = solver.eigenvectors().col(0);
    BaselineResult result;
    result.kind = BaselineKind::kExact;
    result.qubits = h.num_qubits();
    result.energy = polish(op, v, solver.eigenvalues()(0));
    if (want_state) {
        result.ground_state.assign(v.data(), v.data() + v.size());
    }
    return result;
}

// Lanczos with full reorthogonalisation; stops when the Ritz residual bound drops below tolerance.
BaselineResult exact_lanczos(const Hamiltonian &h, bool want_state) {
    const PauliSumOperator op(h);
    const size_t dim = op.dim();
    const size_t max_steps = std::min<size_t>(dim, 400);
    constexpr double kTolerance = 1e-10;

    Rng rng(0x5eed);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
    for (auto &x : v) {
        x = {rng.uniform_real() - 0.5, rng.uniform_real() - 0.5};
    }
    v.normalize();

    std::vector<Eigen::VectorXcd> basis{v};
    std::vector<double> alpha;
    std::vector<double> beta;
    Eigen::VectorXcd w;
    double theta = 0.0;
    Eigen::VectorXd ritz;

    for (size_t j = 0; j < max_steps; j++) {
        op.apply(basis[j], w);
        alpha.push_back(basis[j].dot(w).real());
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &u : basis) {
                w -= u * u.dot(w);
            }
        }
        double b = w.norm();

        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), static_cast<Eigen::Index>(alpha.size()));
        Eigen::VectorXd sub = Eigen::Map<Eigen::VectorXd>(beta.data(), static_cast<Eigen::Index>(beta.size()));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        theta = tri.eigenvalues()(0);
        ritz = tri.eigenvectors().col(0);
        double residual = b * std::abs(ritz(ritz.size() - 1));
        if (residual < kTolerance * std::max(1.0, std::abs(theta)) || b < 1e-14 || j + 1 == max_steps) {
            break;
        }
        beta.push_back(b);
        basis.push_back(w / b);
    }

    Eigen::VectorXcd state = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    for (Eigen::Index k = 0; k < ritz.size(); k++) {
        state += ritz(k) * basis[static_cast<size_t>(k)];
    }
    state.normalize();
    BaselineResult result;
    result.kind = BaselineKind::kExact;
    result.qubits = h.num_qubits();
    result.energy = polish(op, state, theta);
    if (want_state) {
        result.ground_state.assign(state.data(), state.data() + state.size());
    }
    return result;
}

}  // namespace

int diagonal_expectation(const PauliString &p, const std::vector<bool> &bits) {
    if (p.num_qubits() != bits.size()) {
        throw Error(ErrorCode::kSizeMismatch, "bitstring and Pauli disagree on qubit count");
    }
    if (!p.is_diagonal()) {
        return 0;
    }
    int sign = 1;
    for (size_t q = 0; q < bits.size(); q++) {
        if (p.z(q) && bits[q]) {
            sign = -sign;
        }
    }
    return sign;
}

std::string bitstring_label(const std::vector<bool> &bits) {
    std::string out;
    out.reserve(bits.size());
    for (bool b : bits) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

BaselineResult hf_search(const Hamiltonian &h) {
    const size_t n = h.num_qubits();
    if (n > kMaxHartreeFockQubits) {
        throw Error(
            ErrorCode::kTooManyQubits,
            std::to_string(n) + " qubits exceeds the bitstring-scan cap of " + std::to_string(kMaxHartreeFockQubits));
    }
    const auto energy_terms = diagonal_terms(h.terms(), n);
    struct DiagonalConstraint {
        std::vector<DiagonalTerm> terms;
        double target;
    };
    std::vector<DiagonalConstraint> constraints;
    for (const auto &c : h.constraints()) {
        constraints.push_back({diagonal_terms(c.observable, n), c.target});
    }

    const uint64_t count = uint64_t{1} << n;
    bool found = false;
    double best = std::numeric_limits<double>::infinity();
    uint64_t witness = 0;
    for (uint64_t index = 0; index < count; index++) {
        bool feasible = true;
        for (const auto &c : constraints) {
            if (std::abs(diagonal_value(c.terms, index) - c.target) > kFeasibilityTolerance) {
                feasible = false;
                break;
            }
        }
        if (!feasible) {
            continue;
        }
        double e = diagonal_value(energy_terms, index);
        if (!found || e < best) {
            found = true;
            best = e;
            witness = index;
        }
    }
    if (!found) {
        throw Error(ErrorCode::kNoFeasibleBitstring, "no bitstring satisfies the constraints");
    }
    BaselineResult result;
    result.kind = BaselineKind::kHartreeFock;
    result.energy = best;
    result.qubits = n;
    result.witness.resize(n);
    for (size_t q = 0; q < n; q++) {
        result.witness[q] = (witness >> (n - 1 - q)) & 1;
    }
    return result;
}

BaselineResult exact_ground(const Hamiltonian &h, const ExactOptions &options) {
    check_exact_size(h);
    ExactMethod method = options.method;
    if (method == ExactMethod::kAuto) {
        method = h.num_qubits() <= kMaxDenseEigenQubits ? ExactMethod::kDense : ExactMethod::kLanczos;
    }
    return method == ExactMethod::kDense ? exact_dense(h, options.want_state) : exact_lanczos(h, options.want_state);
}

double recovered_correlation(double e_method, double e_hf, double e_exact) {
    double denominator = e_hf - e_exact;
    if (!(denominator >= 1e-12)) {
        throw Error(
            ErrorCode::kDegenerateDenominator,
            "correlation energy e_hf - e_exact = " + std::to_string(denominator) + " is below 1e-12");
    }
    return 100.0 * (e_hf - e_method) / denominator;
}

bool chem_accurate(double e_method, double e_exact) {
    return std::abs(e_method - e_exact) < kChemicalAccuracy;
}

double relative_accuracy(double e_method, double e_hf, double e_exact) {
    double method_error = std::abs(e_method - e_exact);
    double hf_error = std::abs(e_hf - e_exact);
    if (method_error == 0.0) {
        return hf_error == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    }
    return hf_error / method_error;
}

}  // namespace cliffinit
