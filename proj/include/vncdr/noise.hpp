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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vncdr/circuit.hpp"

namespace vncdr {

using cdouble = std::complex<double>;

/// Completely positive map given by Kraus operators of size 2^arity.
/// Two-qubit operators use the basis index 2*bit(first) + bit(second).
struct KrausChannel {
    int arity = 1;
    std::vector<Eigen::MatrixXcd> ops;

    int dim() const {
        return 1 << arity;
    }
};

KrausChannel identity_channel(int arity);

/// rho -> (1 - eps) rho + eps I/d, as {sqrt(1 - eps (d^2-1)/d^2) I} plus
/// sqrt(eps/d^2) times every non-identity Pauli product.
KrausChannel depolarizing_channel(double eps, int arity);

KrausChannel amplitude_damping_channel(double gamma);

/// Channel that applies `first`, then `second` (same arity).
KrausChannel compose(const KrausChannel &first, const KrausChannel &second);

/// Independent channels on two qubits: `a` on the first, `b` on the second.
KrausChannel tensor(const KrausChannel &a, const KrausChannel &b);

/// Drops Kraus operators with negligible Frobenius norm.
KrausChannel pruned(KrausChannel channel, double tol = 1e-15);

/// True iff sum_k K_k^dagger K_k = I to within `tol` (max-abs entry).
bool validate_channel(const KrausChannel &channel, double tol = 1e-12);

/// 2x2 Pauli matrix.
Eigen::Matrix2cd pauli_matrix(Pauli p);

/// Ordered noise-amplification factors 1 = c_0 < c_1 < ... , all odd.
class NoiseLevelSet {
   public:
    NoiseLevelSet() : levels_{1} {
    }
    explicit NoiseLevelSet(std::vector<uint32_t> levels);

    static NoiseLevelSet odd(size_t count);  // {1, 3, ..., 2 count - 1}

    const std::vector<uint32_t> &levels() const {
        return levels_;
    }
    size_t size() const {
        return levels_.size();
    }
    uint32_t operator[](size_t j) const {
        return levels_[j];
    }
    bool operator==(const NoiseLevelSet &) const = default;

   private:
    std::vector<uint32_t> levels_;
};

enum class NoiseMode : uint8_t { PerGate, GlobalDepolarizing };

/// User-facing description of a noise model. Keys mirror the config block.
struct NoiseSpec {
    NoiseMode mode = NoiseMode::PerGate;
    double eps_1q = 0.001;
    double eps_2q = 0.01;
    double amplitude_damping = 0.0;
    bool noiseless_rz = false;
    double global_eps = 0.0;
    std::vector<GateKind> global_triggers{GateKind::CNOT};

    static NoiseSpec noiseless();
    static NoiseSpec global(double eps, std::vector<GateKind> triggers = {GateKind::CNOT});
};

/// Channel applied after each gate of a class, or a global depolarizing
/// channel on the whole register after each trigger gate.
class NoiseModel {
   public:
    NoiseModel() = default;  // noiseless
    explicit NoiseModel(const NoiseSpec &spec);

    static NoiseModel noiseless() {
        return NoiseModel();
    }

    /// Installs a channel for a gate class; arity must match.
    NoiseModel &set_channel(GateKind kind, KrausChannel channel);
    NoiseModel &set_global(double eps, std::vector<GateKind> triggers);

    /// nullptr when the gate class is noiseless.
    const KrausChannel *channel_for(GateKind kind) const;

    NoiseMode mode() const {
        return mode_;
    }
    double global_eps() const {
        return global_eps_;
    }
    bool triggers_global(GateKind kind) const;

    /// True when every channel acts only on its gate's qubits, which is what
    /// makes causal-cone restriction sound for noisy evaluation.
    bool is_gate_local() const {
        return mode_ == NoiseMode::PerGate;
    }
    bool is_noiseless() const;

   private:
    std::optional<KrausChannel> channels_[3];
    NoiseMode mode_ = NoiseMode::PerGate;
    double global_eps_ = 0.0;
    std::vector<GateKind> global_triggers_;
};

/// (1-eps)^times mu + (1 - (1-eps)^times) Tr(X)/d.
double apply_global_depolarizing(double mu, double trace_over_dim, double eps, int times);

/// Fixed identity insertion: every CNOT becomes `level` consecutive copies.
Circuit amplify_fiim(const Circuit &circuit, uint32_t level);

}  // namespace vncdr
