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

#pragma once

#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vncdr {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

/// Reduces an angle to the half-open interval [0, 2pi).
double reduce_angle(double angle);

/// Native gate set: RZ(angle), SX = RX(pi/2), CNOT(control, target).
enum class GateKind : uint8_t { RZ, SX, CNOT };

std::string_view gate_kind_name(GateKind kind);

struct Gate {
    GateKind kind = GateKind::SX;
    uint32_t q0 = 0;  // the qubit, or the CNOT control
    uint32_t q1 = 0;  // CNOT target; unused otherwise
    double angle = 0;  // RZ only, always in [0, 2pi)

    static Gate rz(uint32_t qubit, double angle) {
        return Gate{GateKind::RZ, qubit, 0, reduce_angle(angle)};
    }
    static Gate sx(uint32_t qubit) {
        return Gate{GateKind::SX, qubit, 0, 0.0};
    }
    static Gate cnot(uint32_t control, uint32_t target) {
        return Gate{GateKind::CNOT, control, target, 0.0};
    }

    int arity() const {
        return kind == GateKind::CNOT ? 2 : 1;
    }
    bool touches(uint32_t q) const {
        return q0 == q || (kind == GateKind::CNOT && q1 == q);
    }

    bool operator==(const Gate &) const = default;
};

/// Ordered list of native gates applied to |0...0>.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(uint32_t qubit_count, std::string label = {});

    /// Appends a gate after checking qubit indices and CNOT distinctness.
    Circuit &append(const Gate &gate);

    uint32_t qubit_count() const {
        return qubit_count_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    size_t size() const {
        return gates_.size();
    }
    const Gate &operator[](size_t k) const {
        return gates_[k];
    }
    const std::string &label() const {
        return label_;
    }
    void set_label(std::string label) {
        label_ = std::move(label);
    }

    /// Returns a copy with gate k replaced by RZ(angle). Gate k must be an RZ.
    Circuit with_rz_angle(size_t k, double angle) const;
    /// In-place variant used by the substitution routines.
    void set_rz_angle(size_t k, double angle);

    size_t cnot_count() const;

    /// Number of CNOT sub-layers: CNOTs are packed greedily into the earliest
    /// column not blocked by an earlier CNOT sharing a qubit.
    size_t cnot_depth() const;

    bool operator==(const Circuit &) const = default;

   private:
    uint32_t qubit_count_ = 0;
    std::vector<Gate> gates_;
    std::string label_;
};

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Pauli string with unit coefficient; identity on unlisted qubits.
class PauliObservable {
   public:
    PauliObservable() = default;
    explicit PauliObservable(std::map<uint32_t, Pauli> terms);

    static PauliObservable single(uint32_t qubit, Pauli p);
    static PauliObservable pair(uint32_t qa, Pauli pa, uint32_t qb, Pauli pb);
    /// Parses labels such as "X0", "Z3Z4", "X0Y2" (0-based qubit indices).
    static PauliObservable parse(std::string_view label);

    const std::map<uint32_t, Pauli> &terms() const {
        return terms_;
    }
    size_t weight() const {
        return terms_.size();
    }
    std::vector<uint32_t> support() const;
    Pauli at(uint32_t qubit) const;
    uint32_t max_qubit() const;
    std::string label() const;

    bool operator==(const PauliObservable &) const = default;

   private:
    std::map<uint32_t, Pauli> terms_;
};

struct QaoaParams {
    uint32_t qubits = 0;
    std::vector<double> gamma;
    std::vector<double> beta;
    double field = 2.0;

    size_t layers() const {
        return gamma.size();
    }
};

/// Native-gate circuit for the transverse-field Ising QAOA ansatz on an open
/// chain: Hadamards, then per layer exp(-i gamma ZZ) on every edge (even
/// edges first, then odd) followed by exp(-i beta X) on every qubit.
Circuit build_qaoa_ising(const QaoaParams &params);

/// Hardware-efficient ansatz with random single-qubit unitaries.
Circuit build_random_hea(uint32_t qubits, uint32_t layers, uint64_t seed);

/// Appends U(theta, phi, lambda) = RZ(phi+pi) SX RZ(theta+pi) SX RZ(lambda)
/// (matrix product order; RZ(lambda) is applied first).
void append_u(Circuit &circuit, uint32_t qubit, double theta, double phi, double lambda);

bool is_clifford(const Gate &gate, double tol = 1e-12);

struct CausalCone;
size_t count_non_clifford(const Circuit &circuit, const CausalCone *cone = nullptr, double tol = 1e-12);

/// Text form: header `QUBITS Q`, optional `LABEL text`, then one gate per
/// line (`RZ q angle`, `SX q`, `CNOT c t`). Angles use 17 significant digits.
std::string to_text(const Circuit &circuit);
Circuit circuit_from_text(std::string_view text);

}  // namespace vncdr
