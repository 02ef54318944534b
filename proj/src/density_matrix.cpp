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

#include "vncdr/density_matrix.hpp"

#include <Eigen/Eigenvalues>

#include "vncdr/channel_algebra.hpp"
#include "vncdr/errors.hpp"
#include "vncdr/statevector.hpp"

namespace vncdr {

namespace {

// Basis indices of the 2^k states that share the bits of `base` outside
// `qubits`, ordered by local index (first qubit most significant).
std::vector<size_t> local_offsets(std::span<const uint32_t> qubits) {
    const size_t k = qubits.size();
    std::vector<size_t> off(size_t{1} << k, 0);
    for (size_t local = 0; local < off.size(); ++local) {
        for (size_t j = 0; j < k; ++j) {
            if (local & (size_t{1} << (k - 1 - j))) {
                off[local] |= size_t{1} << qubits[j];
            }
        }
    }
    return off;
}

// M <- op M, where op acts on the row index's `qubits`.
void left_multiply(Eigen::MatrixXcd &m, const Eigen::MatrixXcd &op, std::span<const uint32_t> qubits) {
    const auto off = local_offsets(qubits);
    size_t mask = 0;
    for (uint32_t q : qubits) {
        mask |= size_t{1} << q;
    }
    const size_t d = off.size();
    std::vector<cdouble> in(d);
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
        for (size_t base = 0; base < static_cast<size_t>(m.rows()); ++base) {
            if (base & mask) {
                continue;
            }
            for (size_t a = 0; a < d; ++a) {
                in[a] = m(base | off[a], col);
            }
            for (size_t a = 0; a < d; ++a) {
                cdouble acc = 0.0;
                for (size_t b = 0; b < d; ++b) {
                    acc += op(a, b) * in[b];
                }
                m(base | off[a], col) = acc;
            }
        }
    }
}

Eigen::MatrixXcd sandwich(const Eigen::MatrixXcd &rho, const Eigen::MatrixXcd &k, std::span<const uint32_t> qubits) {
    Eigen::MatrixXcd t = rho;
    left_multiply(t, k, qubits);
    Eigen::MatrixXcd ta = t.adjoint();
    left_multiply(ta, k, qubits);
    return ta.adjoint();
}

}  // namespace

DensityMatrix::DensityMatrix(uint32_t qubits) : qubits_(qubits) {
    if (qubits == 0 || qubits > 12) {
        throw CapacityError("density matrix supports 1..12 qubits");
    }
    const Eigen::Index d = Eigen::Index{1} << qubits;
    rho_ = Eigen::MatrixXcd::Zero(d, d);
    rho_(0, 0) = 1.0;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd rho) : qubits_(0), rho_(std::move(rho)) {
    while ((Eigen::Index{1} << qubits_) < rho_.rows()) {
        ++qubits_;
    }
    if (rho_.rows() != rho_.cols() || (Eigen::Index{1} << qubits_) != rho_.rows()) {
        throw ParameterError("density matrix must be square with power-of-two size");
    }
}

void DensityMatrix::apply_channel(const KrausChannel &channel, std::span<const uint32_t> qubits) {
    if (static_cast<int>(qubits.size()) != channel.arity) {
        throw ParameterError("channel arity does not match qubit list");
    }
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(rho_.rows(), rho_.cols());
    for (const auto &k : channel.ops) {
        acc += sandwich(rho_, k, qubits);
    }
    rho_ = std::move(acc);
}

void DensityMatrix::apply_unitary(const Eigen::MatrixXcd &u, std::span<const uint32_t> qubits) {
    rho_ = sandwich(rho_, u, qubits);
}

void DensityMatrix::apply_global_depolarizing(double eps) {
    const double d = static_cast<double>(rho_.rows());
    rho_ *= (1.0 - eps);
    rho_.diagonal().array() += eps / d;
}

double DensityMatrix::expectation(const PauliObservable &obs) const {
    if (!obs.terms().empty() && obs.max_qubit() >= qubits_) {
        throw ParameterError("observable qubit out of range");
    }
    const PauliMasks m = PauliMasks::of(obs);
    cdouble acc = 0.0;
    for (size_t x = 0; x < static_cast<size_t>(rho_.rows()); ++x) {
        acc += rho_(x, x ^ m.x_mask) * m.phase(x);
    }
    return acc.real();
}

std::complex<double> DensityMatrix::trace() const {
    return rho_.trace();
}

double DensityMatrix::hermiticity_error() const {
    return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

DensityMatrix simulate_density_matrix(const Circuit &circuit, const NoiseModel &noise,
                                      const std::function<void(size_t, const DensityMatrix &)> &after_gate) {
    DensityMatrix rho(circuit.qubit_count());
    for (size_t k = 0; k < circuit.size(); ++k) {
        const Gate &g = circuit[k];
        std::vector<uint32_t> qubits{g.q0};
        if (g.kind == GateKind::CNOT) {
            qubits.push_back(g.q1);
        }
        rho.apply_channel(gate_channel(gate_unitary(g), noise.channel_for(g.kind)), qubits);
        if (noise.triggers_global(g.kind)) {
            rho.apply_global_depolarizing(noise.global_eps());
        }
        if (after_gate) {
            after_gate(k, rho);
        }
    }
    return rho;
}

}  // namespace vncdr
