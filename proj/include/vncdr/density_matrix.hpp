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
#include <functional>

#include "vncdr/circuit.hpp"
#include "vncdr/noise.hpp"

namespace vncdr {

/// Complex 2^Q x 2^Q density matrix evolved by explicit Kraus summation.
/// This is the reference route; the production dense backend works in the
/// Pauli basis (see PauliSimulator).
class DensityMatrix {
   public:
    explicit DensityMatrix(uint32_t qubits);  // |0...0><0...0|
    explicit DensityMatrix(Eigen::MatrixXcd rho);

    /// rho -> sum_k K rho K^dagger with K acting on `qubits` (1 or 2 entries,
    /// first entry is the most significant local bit).
    void apply_channel(const KrausChannel &channel, std::span<const uint32_t> qubits);
    void apply_unitary(const Eigen::MatrixXcd &u, std::span<const uint32_t> qubits);
    /// rho -> (1 - eps) rho + eps I/d.
    void apply_global_depolarizing(double eps);

    double expectation(const PauliObservable &obs) const;
    std::complex<double> trace() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;

    uint32_t qubit_count() const {
        return qubits_;
    }
    const Eigen::MatrixXcd &matrix() const {
        return rho_;
    }

   private:
    uint32_t qubits_;
    Eigen::MatrixXcd rho_;
};

/// Evolves |0..0> through the circuit gate by gate, applying each gate's
/// channel by Kraus summation. `after_gate(k, rho)` is invoked after gate k
/// and its noise.
DensityMatrix simulate_density_matrix(const Circuit &circuit, const NoiseModel &noise,
                                      const std::function<void(size_t, const DensityMatrix &)> &after_gate = {});

}  // namespace vncdr
