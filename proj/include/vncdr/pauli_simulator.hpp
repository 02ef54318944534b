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
#include <cstdint>
#include <vector>

#include "vncdr/circuit.hpp"
#include "vncdr/density_matrix.hpp"
#include "vncdr/noise.hpp"

namespace vncdr {

/// 16x16 real matrix stored row-wise with explicit nonzeros.
struct SparsePtm16 {
    std::vector<uint16_t> row_start;  // 17 entries
    std::vector<uint8_t> cols;
    std::vector<double> vals;

    static SparsePtm16 from_dense(const Eigen::Matrix<double, 16, 16> &m, double drop_tol);
    size_t nonzeros() const {
        return vals.size();
    }
};

/// One step of a compiled noisy circuit in the Pauli basis.
struct PtmOp {
    enum class Kind : uint8_t { One, Two, Global };
    Kind kind = Kind::One;
    uint32_t a = 0;  // qubit (One) or first qubit (Two)
    uint32_t b = 0;  // second qubit (Two)
    Eigen::Matrix4d one;
    Eigen::Matrix<double, 16, 16> two;
    SparsePtm16 two_sparse;
    double eps = 0.0;  // Global
};

/// Gate-plus-noise channels converted to Pauli transfer matrices, with runs
/// of single-qubit ops on one qubit and runs of two-qubit ops on one pair
/// fused into a single matrix.
struct PtmProgram {
    uint32_t qubits = 0;
    std::vector<PtmOp> ops;
};

PtmProgram compile_ptm_program(const Circuit &circuit, const NoiseModel &noise);

/// Density operator rho = 2^-Q sum_P r_P P stored as the real vector of
/// Pauli coefficients r_P = Tr(rho P). Digit q (bits 2q, 2q+1) of the index
/// is the Pauli on qubit q: 0=I, 1=X, 2=Y, 3=Z.
class PauliSimulator {
   public:
    explicit PauliSimulator(uint32_t qubits);  // |0...0><0...0|

    void run(const PtmProgram &program);
    void apply_one(uint32_t q, const Eigen::Matrix4d &ptm);
    void apply_two(uint32_t a, uint32_t b, const SparsePtm16 &ptm);
    void apply_global_depolarizing(double eps);

    double expectation(const PauliObservable &obs) const;
    double trace() const {
        return coeffs_[0];
    }
    DensityMatrix to_density_matrix() const;

    uint32_t qubit_count() const {
        return qubits_;
    }
    const std::vector<double> &coefficients() const {
        return coeffs_;
    }

   private:
    uint32_t qubits_;
    std::vector<double> coeffs_;
};

}  // namespace vncdr
