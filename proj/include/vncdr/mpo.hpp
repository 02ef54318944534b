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
#include <array>
#include <cstdint>
#include <vector>

#include "vncdr/circuit.hpp"
#include "vncdr/noise.hpp"

namespace vncdr {

struct TruncationPolicy {
    double cutoff = 1e-12;
    /// false: discard singular values below cutoff * (largest on that bond).
    /// true: discard singular values below cutoff.
    bool absolute = false;
};

/// Density operator of a qubit chain as a matrix product operator. Site q
/// holds four chi_{q-1} x chi_q matrices W[p], one per local operator
/// |i><i'| with p = 2i + i'.
class MpoState {
   public:
    explicit MpoState(uint32_t qubits, TruncationPolicy policy = {});  // |0...0><0...0|

    /// Applies a single-site superoperator (see superoperator()).
    void apply_one(uint32_t q, const Eigen::MatrixXcd &superop);
    /// Applies a 16x16 superoperator to sites (left, left + 1), the first
    /// qubit of the superoperator being `left`, then recompresses the bond.
    void apply_two(uint32_t left, const Eigen::MatrixXcd &superop);
    /// rho -> (1 - eps) rho + eps I/d, followed by a compression sweep.
    void mix_with_identity(double eps);

    /// Contracts site matrices Y_q = sum_{i,i'} W_q[(i,i')] X_q[i',i].
    double expectation(const PauliObservable &obs) const;
    std::complex<double> trace() const;
    Eigen::MatrixXcd to_matrix() const;  // small chains only

    uint32_t qubit_count() const {
        return static_cast<uint32_t>(sites_.size());
    }
    std::vector<size_t> bond_dims() const;
    size_t max_bond() const;
    /// Largest ratio (numerical rank of a two-site update before truncation)
    /// / (bond dimension before the update), over all updates so far.
    double max_growth_factor() const {
        return max_growth_;
    }

   private:
    size_t truncated_rank(const Eigen::VectorXd &singular) const;
    void compress_sweep();

    std::vector<std::array<Eigen::MatrixXcd, 4>> sites_;
    TruncationPolicy policy_;
    double max_growth_ = 1.0;
};

/// Evolves |0..0> through a nearest-neighbour circuit with gate-attached
/// channels. CNOTs must act on adjacent qubits.
MpoState simulate_mpo(const Circuit &circuit, const NoiseModel &noise, TruncationPolicy policy = {});

}  // namespace vncdr
