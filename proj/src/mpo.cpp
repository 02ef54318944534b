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

#include "vncdr/mpo.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <limits>

#include "vncdr/channel_algebra.hpp"
#include "vncdr/errors.hpp"

namespace vncdr {

namespace {

using Svd = Eigen::BDCSVD<Eigen::MatrixXcd>;

}  // namespace

MpoState::MpoState(uint32_t qubits, TruncationPolicy policy) : policy_(policy) {
    if (qubits == 0) {
        throw ParameterError("MPO needs at least one qubit");
    }
    if (!(policy.cutoff >= 0.0)) {
        throw ParameterError("MPO cutoff must be non-negative");
    }
    sites_.resize(qubits);
    for (auto &site : sites_) {
        for (int p = 0; p < 4; ++p) {
            site[p] = Eigen::MatrixXcd::Zero(1, 1);
        }
        site[0](0, 0) = 1.0;
    }
}

void MpoState::apply_one(uint32_t q, const Eigen::MatrixXcd &s) {
    auto &site = sites_.at(q);
    std::array<Eigen::MatrixXcd, 4> out;
    for (int p = 0; p < 4; ++p) {
        out[p] = s(p, 0) * site[0] + s(p, 1) * site[1] + s(p, 2) * site[2] + s(p, 3) * site[3];
    }
    site = std::move(out);
}

size_t MpoState::truncated_rank(const Eigen::VectorXd &singular) const {
    if (singular.size() == 0) {
        return 0;
    }
    const double threshold = policy_.absolute ? policy_.cutoff : policy_.cutoff * singular(0);
    size_t k = 0;
    while (k < static_cast<size_t>(singular.size()) && singular(k) > threshold) {
        ++k;
    }
    return std::max<size_t>(k, 1);
}

void MpoState::apply_two(uint32_t left, const Eigen::MatrixXcd &s) {
    if (left + 1 >= sites_.size()) {
        throw ParameterError("two-site update past the end of the chain");
    }
    auto &a = sites_[left];
    auto &b = sites_[left + 1];
    const Eigen::Index l = a[0].rows();
    const Eigen::Index old_bond = a[0].cols();
    const Eigen::Index r = b[0].cols();

    Eigen::MatrixXcd theta(l * r, 16);
    for (int sa = 0; sa < 4; ++sa) {
        for (int sb = 0; sb < 4; ++sb) {
            Eigen::MatrixXcd block = a[sa] * b[sb];
            theta.col(4 * sa + sb) = Eigen::Map<Eigen::VectorXcd>(block.data(), l * r);
        }
    }
    const Eigen::MatrixXcd updated = theta * s.transpose();

    Eigen::MatrixXcd big(4 * l, 4 * r);
    for (int pa = 0; pa < 4; ++pa) {
        for (int pb = 0; pb < 4; ++pb) {
            big.block(pa * l, pb * r, l, r) = Eigen::Map<const Eigen::MatrixXcd>(updated.col(4 * pa + pb).data(), l, r);
        }
    }

    Svd svd(big, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd &sing = svd.singularValues();
    const double noise_floor = sing.size() > 0 ? sing(0) * static_cast<double>(std::max(big.rows(), big.cols())) *
                                                     std::numeric_limits<double>::epsilon()
                                               : 0.0;
    const auto numerical_rank = static_cast<double>((sing.array() > noise_floor).count());
    max_growth_ = std::max(max_growth_, numerical_rank / static_cast<double>(old_bond));

    const Eigen::Index k = static_cast<Eigen::Index>(truncated_rank(sing));
    const Eigen::MatrixXcd u = svd.matrixU().leftCols(k);
    const Eigen::MatrixXcd sv = sing.head(k).cast<std::complex<double>>().asDiagonal() * svd.matrixV().leftCols(k).adjoint();
    for (int p = 0; p < 4; ++p) {
        a[p] = u.block(p * l, 0, l, k);
        b[p] = sv.block(0, p * r, k, r);
    }
}

void MpoState::compress_sweep() {
    for (size_t q = 0; q + 1 < sites_.size(); ++q) {
        auto &a = sites_[q];
        auto &b = sites_[q + 1];
        const Eigen::Index l = a[0].rows();
        const Eigen::Index m = a[0].cols();
        Eigen::MatrixXcd stacked(4 * l, m);
        for (int p = 0; p < 4; ++p) {
            stacked.block(p * l, 0, l, m) = a[p];
        }
        Svd svd(stacked, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::Index k = static_cast<Eigen::Index>(truncated_rank(svd.singularValues()));
        const Eigen::MatrixXcd u = svd.matrixU().leftCols(k);
        const Eigen::MatrixXcd carry =
            svd.singularValues().head(k).cast<std::complex<double>>().asDiagonal() * svd.matrixV().leftCols(k).adjoint();
        for (int p = 0; p < 4; ++p) {
            a[p] = u.block(p * l, 0, l, k);
            b[p] = carry * b[p];
        }
    }
}

void MpoState::mix_with_identity(double eps) {
    const size_t n = sites_.size();
    if (n == 1) {
        auto &site = sites_[0];
        for (int p = 0; p < 4; ++p) {
            site[p] *= (1.0 - eps);
        }
        site[0](0, 0) += 0.5 * eps;
        site[3](0, 0) += 0.5 * eps;
        return;
    }
    for (size_t q = 0; q < n; ++q) {
        auto &site = sites_[q];
        const Eigen::Index rows = site[0].rows();
        const Eigen::Index cols = site[0].cols();
        const Eigen::Index new_rows = q == 0 ? 1 : rows + 1;
        const Eigen::Index new_cols = q + 1 == n ? 1 : cols + 1;
        for (int p = 0; p < 4; ++p) {
            Eigen::MatrixXcd grown = Eigen::MatrixXcd::Zero(new_rows, new_cols);
            const double scale = q == 0 ? 1.0 - eps : 1.0;
            grown.block(0, 0, rows, cols) = scale * site[p];
            // Identity/2 per site; the eps weight sits on the first site.
            if (p == 0 || p == 3) {
                const double value = q == 0 ? 0.5 * eps : 0.5;
                grown(new_rows - 1, new_cols - 1) = value;
            }
            site[p] = std::move(grown);
        }
    }
    compress_sweep();
}

double MpoState::expectation(const PauliObservable &obs) const {
    if (!obs.terms().empty() && obs.max_qubit() >= sites_.size()) {
        throw ParameterError("observable qubit out of range");
    }
    Eigen::RowVectorXcd env = Eigen::RowVectorXcd::Ones(1);
    for (uint32_t q = 0; q < sites_.size(); ++q) {
        const Eigen::Matrix2cd x = pauli_matrix(obs.at(q));
        const auto &site = sites_[q];
        Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(site[0].rows(), site[0].cols());
        for (int i = 0; i < 2; ++i) {
            for (int ip = 0; ip < 2; ++ip) {
                if (x(ip, i) != 0.0) {
                    y += x(ip, i) * site[2 * i + ip];
                }
            }
        }
        env = env * y;
    }
    return env(0).real();
}

std::complex<double> MpoState::trace() const {
    Eigen::RowVectorXcd env = Eigen::RowVectorXcd::Ones(1);
    for (const auto &site : sites_) {
        env = env * (site[0] + site[3]);
    }
    return env(0);
}

Eigen::MatrixXcd MpoState::to_matrix() const {
    const size_t n = sites_.size();
    if (n > 8) {
        throw CapacityError("to_matrix is limited to 8 sites");
    }
    const size_t dim = size_t{1} << n;
    Eigen::MatrixXcd out(dim, dim);
    for (size_t x = 0; x < dim; ++x) {
        for (size_t y = 0; y < dim; ++y) {
            Eigen::MatrixXcd acc = Eigen::MatrixXcd::Ones(1, 1);
            for (size_t q = 0; q < n; ++q) {
                const int p = 2 * static_cast<int>((x >> q) & 1) + static_cast<int>((y >> q) & 1);
                acc = acc * sites_[q][p];
            }
            out(x, y) = acc(0, 0);
        }
    }
    return out;
}

std::vector<size_t> MpoState::bond_dims() const {
    std::vector<size_t> out;
    for (size_t q = 0; q + 1 < sites_.size(); ++q) {
        out.push_back(static_cast<size_t>(sites_[q][0].cols()));
    }
    return out;
}

size_t MpoState::max_bond() const {
    size_t m = 1;
    for (size_t b : bond_dims()) {
        m = std::max(m, b);
    }
    return m;
}

MpoState simulate_mpo(const Circuit &circuit, const NoiseModel &noise, TruncationPolicy policy) {
    MpoState state(circuit.qubit_count(), policy);
    const KrausChannel *cnot_noise = noise.channel_for(GateKind::CNOT);
    const KrausChannel cnot = gate_channel(gate_unitary(Gate::cnot(0, 1)), cnot_noise);
    KrausChannel cnot_reversed = cnot;
    for (auto &k : cnot_reversed.ops) {
        k = swap_qubits(k);
    }
    const Eigen::MatrixXcd s_cnot = superoperator(cnot);
    const Eigen::MatrixXcd s_cnot_reversed = superoperator(cnot_reversed);
    const Eigen::MatrixXcd s_sx = superoperator(gate_channel(gate_unitary(Gate::sx(0)), noise.channel_for(GateKind::SX)));

    for (const Gate &g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::RZ:
                state.apply_one(g.q0, superoperator(gate_channel(gate_unitary(g), noise.channel_for(GateKind::RZ))));
                break;
            case GateKind::SX:
                state.apply_one(g.q0, s_sx);
                break;
            case GateKind::CNOT: {
                const uint32_t lo = std::min(g.q0, g.q1);
                if (std::max(g.q0, g.q1) != lo + 1) {
                    throw ParameterError("MPO backend requires nearest-neighbour CNOTs");
                }
                state.apply_two(lo, g.q0 == lo ? s_cnot : s_cnot_reversed);
                break;
            }
        }
        if (noise.triggers_global(g.kind)) {
            state.mix_with_identity(noise.global_eps());
        }
    }
    return state;
}

}  // namespace vncdr
