// Copyright 2026 The vncdr Authors
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

#include "vncdr/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "vncdr/causal_cone.hpp"
#include "vncdr/errors.hpp"
#include "vncdr/rng.hpp"

namespace vncdr {

double reduce_angle(double angle) {
    if (!std::isfinite(angle)) {
        throw ParameterError("angle must be finite");
    }
    double r = std::fmod(angle, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r = 0.0;
    }
    return r;
}

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::RZ:
            return "RZ";
        case GateKind::SX:
            return "SX";
        case GateKind::CNOT:
            return "CNOT";
    }
    return "?";
}

Circuit::Circuit(uint32_t qubit_count, std::string label) : qubit_count_(qubit_count), label_(std::move(label)) {
    if (qubit_count == 0) {
        throw ParameterError("circuit needs at least one qubit");
    }
}

Circuit &Circuit::append(const Gate &gate) {
    if (gate.q0 >= qubit_count_ || (gate.kind == GateKind::CNOT && gate.q1 >= qubit_count_)) {
        throw ParameterError("gate qubit index out of range");
    }
    if (gate.kind == GateKind::CNOT && gate.q0 == gate.q1) {
        throw ParameterError("CNOT control equals target");
    }
    Gate g = gate;
    if (g.kind == GateKind::RZ) {
        g.angle = reduce_angle(g.angle);
    } else {
        g.angle = 0.0;
        if (g.kind == GateKind::SX) {
            g.q1 = 0;
        }
    }
    gates_.push_back(g);
    return *this;
}

void Circuit::set_rz_angle(size_t k, double angle) {
    if (k >= gates_.size() || gates_[k].kind != GateKind::RZ) {
        throw ParameterError("set_rz_angle: gate is not an RZ");
    }
    gates_[k].angle = reduce_angle(angle);
}

Circuit Circuit::with_rz_angle(size_t k, double angle) const {
    Circuit copy = *this;
    copy.set_rz_angle(k, angle);
    return copy;
}

size_t Circuit::cnot_count() const {
    return static_cast<size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate &g) { return g.kind == GateKind::CNOT; }));
}

size_t Circuit::cnot_depth() const {
    std::vector<size_t> next_column(qubit_count_, 0);
    size_t depth = 0;
    for (const Gate &g : gates_) {
        if (g.kind != GateKind::CNOT) {
            continue;
        }
        size_t column = std::max(next_column[g.q0], next_column[g.q1]);
        next_column[g.q0] = next_column[g.q1] = column + 1;
        depth = std::max(depth, column + 1);
    }
    return depth;
}

PauliObservable::PauliObservable(std::map<uint32_t, Pauli> terms) {
    for (auto [q, p] : terms) {
        if (p != Pauli::I) {
            terms_.emplace(q, p);
        }
    }
}

PauliObservable PauliObservable::single(uint32_t qubit, Pauli p) {
    return PauliObservable({{qubit, p}});
}

PauliObservable PauliObservable::pair(uint32_t qa, Pauli pa, uint32_t qb, Pauli pb) {
    if (qa == qb) {
        throw ParameterError("two-qubit observable needs distinct qubits");
    }
    return PauliObservable({{qa, pa}, {qb, pb}});
}

PauliObservable PauliObservable::parse(std::string_view label) {
    std::map<uint32_t, Pauli> terms;
    size_t k = 0;
    while (k < label.size()) {
        char c = label[k];
        if (c == ' ' || c == '*') {
            ++k;
            continue;
        }
        Pauli p;
        switch (c) {
            case 'X':
                p = Pauli::X;
                break;
            case 'Y':
                p = Pauli::Y;
                break;
            case 'Z':
                p = Pauli::Z;
                break;
            case 'I':
                p = Pauli::I;
                break;
            default:
                throw FormatError("bad Pauli letter in observable '" + std::string(label) + "'");
        }
        ++k;
        uint32_t q = 0;
        auto [end, ec] = std::from_chars(label.data() + k, label.data() + label.size(), q);
        if (ec != std::errc() || end == label.data() + k) {
            throw FormatError("missing qubit index in observable '" + std::string(label) + "'");
        }
        k = static_cast<size_t>(end - label.data());
        if (!terms.emplace(q, p).second) {
            throw FormatError("repeated qubit in observable '" + std::string(label) + "'");
        }
    }
    return PauliObservable(std::move(terms));
}

std::vector<uint32_t> PauliObservable::support() const {
    std::vector<uint32_t> out;
    for (auto [q, p] : terms_) {
        out.push_back(q);
    }
    return out;
}

Pauli PauliObservable::at(uint32_t qubit) const {
    auto it = terms_.find(qubit);
    return it == terms_.end() ? Pauli::I : it->second;
}

uint32_t PauliObservable::max_qubit() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

std::string PauliObservable::label() const {
    if (terms_.empty()) {
        return "I";
    }
    std::string out;
    for (auto [q, p] : terms_) {
        out += "IXYZ"[static_cast<int>(p)];
        out += std::to_string(q);
    }
    return out;
}

void append_u(Circuit &circuit, uint32_t qubit, double theta, double phi, double lambda) {
    circuit.append(Gate::rz(qubit, lambda));
    circuit.append(Gate::sx(qubit));
    circuit.append(Gate::rz(qubit, theta + std::numbers::pi));
    circuit.append(Gate::sx(qubit));
    circuit.append(Gate::rz(qubit, phi + std::numbers::pi));
}

Circuit build_qaoa_ising(const QaoaParams &params) {
    if (params.qubits < 2) {
        throw ParameterError("QAOA needs at least two qubits");
    }
    if (params.gamma.size() != params.beta.size()) {
        throw ParameterError("QAOA gamma and beta must have equal length");
    }
    const uint32_t q = params.qubits;
    Circuit c(q, "qaoa-ising-Q" + std::to_string(q) + "-p" + std::to_string(params.layers()));
    // Hadamard = RZ(pi/2) SX RZ(pi/2) up to global phase.
    for (uint32_t j = 0; j < q; ++j) {
        c.append(Gate::rz(j, kHalfPi));
        c.append(Gate::sx(j));
        c.append(Gate::rz(j, kHalfPi));
    }
    for (size_t layer = 0; layer < params.layers(); ++layer) {
        const double gamma = params.gamma[layer];
        const double beta = params.beta[layer];
        for (uint32_t parity = 0; parity < 2; ++parity) {
            for (uint32_t j = parity; j + 1 < q; j += 2) {
                c.append(Gate::cnot(j, j + 1));
                c.append(Gate::rz(j + 1, 2.0 * gamma));
                c.append(Gate::cnot(j, j + 1));
            }
        }
        // RX(2 beta) = RZ(pi/2) SX RZ(2 beta + pi) SX RZ(pi/2) up to phase.
        for (uint32_t j = 0; j < q; ++j) {
            append_u(c, j, 2.0 * beta, -kHalfPi, kHalfPi);
        }
    }
    return c;
}

Circuit build_random_hea(uint32_t qubits, uint32_t layers, uint64_t seed) {
    if (qubits < 2) {
        throw ParameterError("hardware-efficient ansatz needs at least two qubits");
    }
    if (layers < 1) {
        throw ParameterError("hardware-efficient ansatz needs at least one layer");
    }
    Rng rng(derive_seed(seed, {qubits, layers}));
    auto angle = [&] { return kTwoPi * uniform01(rng); };
    auto random_u = [&](Circuit &c, uint32_t q) {
        double theta = angle();
        double phi = angle();
        double lambda = angle();
        append_u(c, q, theta, phi, lambda);
    };

    Circuit c(qubits, "hea-Q" + std::to_string(qubits) + "-p" + std::to_string(layers) + "-s" + std::to_string(seed));
    for (uint32_t q = 0; q < qubits; ++q) {
        random_u(c, q);
    }
    for (uint32_t layer = 1; layer <= layers; ++layer) {
        uint32_t first = (layer % 2 == 1) ? 0 : 1;
        for (uint32_t a = first; a + 1 < qubits; a += 2) {
            c.append(Gate::cnot(a, a + 1));
            random_u(c, a);
            random_u(c, a + 1);
        }
    }
    return c;
}

bool is_clifford(const Gate &gate, double tol) {
    if (gate.kind != GateKind::RZ) {
        return true;
    }
    double quarter_turns = gate.angle / kHalfPi;
    return std::abs(quarter_turns - std::round(quarter_turns)) * kHalfPi <= tol;
}

size_t count_non_clifford(const Circuit &circuit, const CausalCone *cone, double tol) {
    size_t count = 0;
    for (size_t k = 0; k < circuit.size(); ++k) {
        if (cone != nullptr && !cone->contains(k)) {
            continue;
        }
        if (!is_clifford(circuit[k], tol)) {
            ++count;
        }
    }
    return count;
}

std::string to_text(const Circuit &circuit) {
    std::string out = "QUBITS " + std::to_string(circuit.qubit_count()) + "\n";
    if (!circuit.label().empty()) {
        out += "LABEL " + circuit.label() + "\n";
    }
    char buf[64];
    for (const Gate &g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::RZ:
                std::snprintf(buf, sizeof(buf), "RZ %u %.17g\n", g.q0, g.angle);
                break;
            case GateKind::SX:
                std::snprintf(buf, sizeof(buf), "SX %u\n", g.q0);
                break;
            case GateKind::CNOT:
                std::snprintf(buf, sizeof(buf), "CNOT %u %u\n", g.q0, g.q1);
                break;
        }
        out += buf;
    }
    return out;
}

Circuit circuit_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Circuit> circuit;
    size_t line_no = 0;
    auto fail = [&](const std::string &what) {
        throw FormatError("circuit text line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string op;
        fields >> op;
        if (op == "QUBITS") {
            uint32_t q = 0;
            if (circuit || !(fields >> q)) {
                fail("bad QUBITS header");
            }
            circuit.emplace(q);
            continue;
        }
        if (!circuit) {
            fail("missing QUBITS header");
        }
        if (op == "LABEL") {
            std::string rest;
            std::getline(fields >> std::ws, rest);
            circuit->set_label(rest);
        } else if (op == "RZ") {
            uint32_t q;
            std::string angle_text;
            if (!(fields >> q >> angle_text)) {
                fail("bad RZ");
            }
            // strtod, not operator>>, so that 17-digit values round-trip exactly.
            circuit->append(Gate::rz(q, std::strtod(angle_text.c_str(), nullptr)));
        } else if (op == "SX") {
            uint32_t q;
            if (!(fields >> q)) {
                fail("bad SX");
            }
            circuit->append(Gate::sx(q));
        } else if (op == "CNOT") {
            uint32_t c, t;
            if (!(fields >> c >> t)) {
                fail("bad CNOT");
            }
            circuit->append(Gate::cnot(c, t));
        } else {
            fail("unknown gate '" + op + "'");
        }
    }
    if (!circuit) {
        throw FormatError("circuit text has no QUBITS header");
    }
    return *std::move(circuit);
}

}  // namespace vncdr
