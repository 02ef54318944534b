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

#include "vncdr/circuit.hpp"
#include "vncdr/noise.hpp"

namespace vncdr {

/// Unitary of a native gate: 2x2, or 4x4 in the basis 2*bit(control)+bit(target).
Eigen::MatrixXcd gate_unitary(const Gate &gate);

/// Kraus operators of "apply U, then the channel" (channel may be null).
KrausChannel gate_channel(const Eigen::MatrixXcd &unitary, const KrausChannel *noise);

/// Pauli transfer matrix R_ij = Tr(P_i E(P_j)) / d by direct Kraus
/// summation. Pauli index for two qubits is 4*digit(first) + digit(second),
/// digits 0..3 = I, X, Y, Z.
Eigen::MatrixXd pauli_transfer_matrix(const KrausChannel &channel);

/// Superoperator in the site-local operator basis used by the MPO: each qubit
/// carries p = 2i + i' for |i><i'|, two qubits combine as 4 p(first) +
/// p(second). S[(i,i'),(j,j')] = sum_k K_ij conj(K_i'j').
Eigen::MatrixXcd superoperator(const KrausChannel &channel);

/// Conjugates a two-qubit operator by SWAP (exchanges first/second qubit).
Eigen::MatrixXcd swap_qubits(const Eigen::MatrixXcd &op);

}  // namespace vncdr
