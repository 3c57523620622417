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

#include "cliffinit/tableau.h"

#include "cliffinit/error.h"

namespace cliffinit {

std::string gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::kH:
            return "H";
        case GateKind::kS:
            return "S";
        case GateKind::kSdg:
            return "SDG";
        case GateKind::kX:
            return "X";
        case GateKind::kY:
            return "Y";
        case GateKind::kZ:
            return "Z";
        case GateKind::kCX:
            return "CX";
        case GateKind::kRX:
            return "RX";
        case GateKind::kRY:
            return "RY";
        case GateKind::kRZ:
            return "RZ";
    }
    return "?";
}

bool is_rotation(GateKind kind) {
    return kind == GateKind::kRX || kind == GateKind::kRY || kind == GateKind::kRZ;
}

std::string CliffordGate::str() const {
    std::string out = gate_kind_name(kind);
    if (is_rotation(kind)) {
        out += "(" + std::to_string(quarter_turns) + "*pi/2)";
    }
    out += " " + std::to_string(qubits[0]);
    if (kind == GateKind::kCX) {
        out += " " + std::to_string(qubits[1]);
    }
    return out;
}

std::vector<CliffordGate> decompose_rotation(const CliffordGate &gate) {
    if (!is_rotation(gate.kind)) {
        return {gate};
    }
    if (gate.quarter_turns > 3) {
        throw Error(ErrorCode::kInvalidArgument, "quarter_turns must be in {0,1,2,3}, got " + gate.str());
    }
    uint32_t q = gate.qubits[0];
    switch (gate.kind) {
        case GateKind::kRZ:
            switch (gate.quarter_turns) {
                case 1:
                    return {CliffordGate::s(q)};
                case 2:
                    return {CliffordGate::z(q)};
                case 3:
                    return {CliffordGate::sdg(q)};
            }
            break;
        case GateKind::kRX:
            switch (gate.quarter_turns) {
                case 1:
                    return {CliffordGate::h(q), CliffordGate::s(q), CliffordGate::h(q)};
                case 2:
                    return {CliffordGate::x(q)};
                case 3:
                    return {CliffordGate::h(q), CliffordGate::sdg(q), CliffordGate::h(q)};
            }
            break;
        case GateKind::kRY:
            // RY(pi/2) ~ H.Z and RY(-pi/2) ~ H.X, applied right to left.
            switch (gate.quarter_turns) {
                case 1:
                    return {CliffordGate::z(q), CliffordGate::h(q)};
                case 2:
                    return {CliffordGate::y(q)};
                case 3:
                    return {CliffordGate::x(q), CliffordGate::h(q)};
            }
            break;
        default:
            break;
    }
    return {};
}

StabilizerTableau::StabilizerTableau(size_t num_qubits)
    : num_qubits_(num_qubits),
      words_(detail::words_for(num_qubits)),
      xs_(2 * num_qubits * words_, 0),
      zs_(2 * num_qubits * words_, 0),
      signs_(2 * num_qubits, 0) {
}

StabilizerTableau StabilizerTableau::zero_state(size_t num_qubits) {
    if (num_qubits == 0) {
        throw Error(ErrorCode::kInvalidArgument, "a tableau needs at least one qubit");
    }
    StabilizerTableau t(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        t.row_x(q)[q / 64] |= uint64_t{1} << (q % 64);
        t.row_z(num_qubits + q)[q / 64] |= uint64_t{1} << (q % 64);
    }
    return t;
}

void StabilizerTableau::check_qubit(uint32_t q) const {
    if (q >= num_qubits_) {
        throw Error(
            ErrorCode::kQubitOutOfRange,
            "qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) + " qubits");
    }
}

void StabilizerTableau::apply(const CliffordGate &gate) {
    check_qubit(gate.qubits[0]);
    if (gate.kind == GateKind::kCX) {
        check_qubit(gate.qubits[1]);
        if (gate.qubits[0] == gate.qubits[1]) {
            throw Error(ErrorCode::kInvalidArgument, "CX needs distinct qubits: " + gate.str());
        }
    }
    if (is_rotation(gate.kind)) {
        for (const auto &g : decompose_rotation(gate)) {
            apply_primitive(g);
        }
    } else {
        apply_primitive(gate);
    }
}

void StabilizerTableau::apply_all(std::span<const CliffordGate> gates) {
    for (const auto &g : gates) {
        apply(g);
    }
}

void StabilizerTableau::apply_primitive(const CliffordGate &gate) {
    const size_t rows = 2 * num_qubits_;
    const uint32_t q = gate.qubits[0];
    const size_t w = q / 64;
    const uint64_t m = uint64_t{1} << (q % 64);

    auto for_each_row = [&](auto &&body) {
        for (size_t r = 0; r < rows; r++) {
            uint64_t &x = xs_[r * words_ + w];
            uint64_t &z = zs_[r * words_ + w];
            body(x, z, signs_[r]);
        }
    };

    switch (gate.kind) {
        case GateKind::kH:
            // X <-> Z, Y -> -Y
            for_each_row([m](uint64_t &x, uint64_t &z, uint8_t &sign) {
                bool xb = x & m, zb = z & m;
                sign ^= xb & zb;
                if (xb != zb) {
                    x ^= m;
                    z ^= m;
                }
            });
            break;
        case GateKind::kS:
            // X -> Y, Y -> -X
            for_each_row([m](uint64_t &x, uint64_t &z, uint8_t &sign) {
                bool xb = x & m, zb = z & m;
                sign ^= xb & zb;
                if (xb) {
                    z ^= m;
                }
            });
            break;
        case GateKind::kSdg:
            // X -> -Y, Y -> X
            for_each_row([m](uint64_t &x, uint64_t &z, uint8_t &sign) {
                bool xb = x & m, zb = z & m;
                sign ^= xb & !zb;
                if (xb) {
                    z ^= m;
                }
            });
            break;
        case GateKind::kX:
            for_each_row([m](uint64_t &, uint64_t &z, uint8_t &sign) { sign ^= (z & m) != 0; });
            break;
        case GateKind::kZ:
            for_each_row([m](uint64_t &x, uint64_t &, uint8_t &sign) { sign ^= (x & m) != 0; });
            break;
        case GateKind::kY:
            for_each_row([m](uint64_t &x, uint64_t &z, uint8_t &sign) { sign ^= ((x & m) != 0) ^ ((z & m) != 0); });
            break;
        case GateKind::kCX: {
            const uint32_t t = gate.qubits[1];
            const size_t wt = t / 64;
            const uint64_t mt = uint64_t{1} << (t % 64);
            for (size_t r = 0; r < rows; r++) {
                uint64_t *x = &xs_[r * words_];
                uint64_t *z = &zs_[r * words_];
                bool xc = x[w] & m, zc = z[w] & m;
                bool xt = x[wt] & mt, zt = z[wt] & mt;
                signs_[r] ^= xc & zt & (xt == zc);
                if (xc) {
                    x[wt] ^= mt;
                }
                if (zt) {
                    z[w] ^= m;
                }
            }
            break;
        }
        default:
            throw Error(ErrorCode::kInvalidArgument, "not a primitive gate: " + gate.str());
    }
}

int StabilizerTableau::expectation(const PauliString &p) const {
    if (p.num_qubits() != num_qubits_) {
        throw Error(
            ErrorCode::kSizeMismatch,
            std::to_string(p.num_qubits()) + "-qubit Pauli on a " + std::to_string(num_qubits_) + "-qubit state");
    }
    if (p.phase_exp() != 0) {
        throw Error(ErrorCode::kInvalidArgument, "expectation needs a Hermitian Pauli, got " + p.str());
    }
    const auto px = p.x_words();
    const auto pz = p.z_words();
    for (size_t i = 0; i < num_qubits_; i++) {
        if (detail::anticommute_words(row_x(num_qubits_ + i), row_z(num_qubits_ + i), px, pz)) {
            return 0;
        }
    }
    // P commutes with the stabilizer group, so P = +-prod{ S_i : D_i anticommutes with P }.
    std::vector<uint64_t> acc_x(words_, 0);
    std::vector<uint64_t> acc_z(words_, 0);
    int phase = 0;
    for (size_t i = 0; i < num_qubits_; i++) {
        if (!detail::anticommute_words(row_x(i), row_z(i), px, pz)) {
            continue;
        }
        auto sx = row_x(num_qubits_ + i);
        auto sz = row_z(num_qubits_ + i);
        phase += 2 * signs_[num_qubits_ + i] + detail::product_phase(acc_x, acc_z, sx, sz);
        for (size_t w = 0; w < words_; w++) {
            acc_x[w] ^= sx[w];
            acc_z[w] ^= sz[w];
        }
    }
    for (size_t w = 0; w < words_; w++) {
        if (acc_x[w] != px[w] || acc_z[w] != pz[w]) {
            throw Error(ErrorCode::kInternalPhaseError, "stabilizer product does not reproduce " + p.label());
        }
    }
    phase %= 4;
    if (phase == 0) {
        return 1;
    }
    if (phase == 2) {
        return -1;
    }
    throw Error(ErrorCode::kInternalPhaseError, "stabilizer product for " + p.label() + " carries a factor of i");
}

bool StabilizerTableau::check_symplectic() const {
    const size_t n = num_qubits_;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            bool anti = detail::anticommute_words(row_x(i), row_z(i), row_x(n + j), row_z(n + j));
            if (anti != (i == j)) {
                return false;
            }
            if (j > i && detail::anticommute_words(row_x(n + i), row_z(n + i), row_x(n + j), row_z(n + j))) {
                return false;
            }
        }
    }
    return true;
}

PauliString StabilizerTableau::row(size_t r) const {
    PauliString p(num_qubits_);
    auto x = row_x(r);
    auto z = row_z(r);
    std::copy(x.begin(), x.end(), p.x_words().begin());
    std::copy(z.begin(), z.end(), p.z_words().begin());
    p.set_phase_exp(2 * signs_[r]);
    return p;
}

void StabilizerTableau::set_row(size_t r, const PauliString &p) {
    if (p.num_qubits() != num_qubits_) {
        throw Error(ErrorCode::kSizeMismatch, "row has the wrong qubit count");
    }
    if (p.phase_exp() % 2 != 0) {
        throw Error(ErrorCode::kInvalidArgument, "generator rows must be Hermitian (+-P)");
    }
    auto px = p.x_words();
    auto pz = p.z_words();
    std::copy(px.begin(), px.end(), row_x(r).begin());
    std::copy(pz.begin(), pz.end(), row_z(r).begin());
    signs_[r] = p.phase_exp() == 2;
}

PauliString StabilizerTableau::destabilizer(size_t i) const {
    return row(i);
}

PauliString StabilizerTableau::stabilizer(size_t i) const {
    return row(num_qubits_ + i);
}

void StabilizerTableau::set_destabilizer(size_t i, const PauliString &p) {
    set_row(i, p);
}

void StabilizerTableau::set_stabilizer(size_t i, const PauliString &p) {
    set_row(num_qubits_ + i, p);
}

StabilizerTableau zero_state(size_t num_qubits) {
    return StabilizerTableau::zero_state(num_qubits);
}

StabilizerTableau apply_gate(StabilizerTableau t, const CliffordGate &gate) {
    t.apply(gate);
    return t;
}

int expectation(const StabilizerTableau &t, const PauliString &p) {
    return t.expectation(p);
}

bool check_symplectic(const StabilizerTableau &t) {
    return t.check_symplectic();
}

}  // namespace cliffinit
