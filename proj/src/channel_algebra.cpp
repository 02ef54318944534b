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

#include "vncdr/channel_algebra.hpp"

#include <cmath>

namespace vncdr {

namespace {

const Pauli kPaulis[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

Eigen::MatrixXcd pauli_product(int arity, int index) {
    if (arity == 1) {
        return pauli_matrix(kPaulis[index]);
    }
    Eigen::Matrix2cd a = pauli_matrix(kPaulis[index / 4]);
    Eigen::Matrix2cd b = pauli_matrix(kPaulis[index % 4]);
    Eigen::MatrixXcd out(4, 4);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out.block(2 * r, 2 * c, 2, 2) = a(r, c) * b;
        }
    }
    return out;
}

}  // namespace

Eigen::MatrixXcd gate_unitary(const Gate &gate) {
    const cdouble i{0.0, 1.0};
    switch (gate.kind) {
        case GateKind::RZ: {
            Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(2, 2);
            u(0, 0) = std::exp(-0.5 * i * gate.angle);
            u(1, 1) = std::exp(0.5 * i * gate.angle);
            return u;
        }
        case GateKind::SX: {
            Eigen::MatrixXcd u(2, 2);
            const double s = std::sqrt(0.5);
            u << s, -i * s, -i * s, s;
            return u;
        }
        case GateKind::CNOT: {
            Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(4, 4);
            u(0, 0) = u(1, 1) = u(2, 3) = u(3, 2) = 1.0;
            return u;
        }
    }
    return {};
}

KrausChannel gate_channel(const Eigen::MatrixXcd &unitary, const KrausChannel *noise) {
    const int arity = unitary.rows() == 2 ? 1 : 2;
    KrausChannel out{arity, {}};
    if (noise == nullptr) {
        out.ops.push_back(unitary);
        return out;
    }
    for (const auto &k : noise->ops) {
        out.ops.push_back(k * unitary);
    }
    return out;
}

Eigen::MatrixXd pauli_transfer_matrix(const KrausChannel &channel) {
    const int n = channel.arity == 1 ? 4 : 16;
    const double d = channel.dim();
    std::vector<Eigen::MatrixXcd> paulis;
    for (int k = 0; k < n; ++k) {
        paulis.push_back(pauli_product(channel.arity, k));
    }
    Eigen::MatrixXd r(n, n);
    for (int j = 0; j < n; ++j) {
        Eigen::MatrixXcd image = Eigen::MatrixXcd::Zero(channel.dim(), channel.dim());
        for (const auto &k : channel.ops) {
            image += k * paulis[j] * k.adjoint();
        }
        for (int i = 0; i < n; ++i) {
            r(i, j) = (paulis[i] * image).trace().real() / d;
        }
    }
    return r;
}

Eigen::MatrixXcd superoperator(const KrausChannel &channel) {
    const int d = channel.dim();
    const int n = d * d;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
    // Site-local index of the pair (row i, column i') of the full operator.
    auto site_index = [&](int i, int ip) {
        if (channel.arity == 1) {
            return 2 * i + ip;
        }
        const int pa = 2 * (i >> 1) + (ip >> 1);
        const int pb = 2 * (i & 1) + (ip & 1);
        return 4 * pa + pb;
    };
    for (const auto &k : channel.ops) {
        for (int i = 0; i < d; ++i) {
            for (int ip = 0; ip < d; ++ip) {
                const int row = site_index(i, ip);
                for (int j = 0; j < d; ++j) {
                    for (int jp = 0; jp < d; ++jp) {
                        s(row, site_index(j, jp)) += k(i, j) * std::conj(k(ip, jp));
                    }
                }
            }
        }
    }
    return s;
}

Eigen::MatrixXcd swap_qubits(const Eigen::MatrixXcd &op) {
    static const int perm[4] = {0, 2, 1, 3};
    Eigen::MatrixXcd out(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            out(perm[r], perm[c]) = op(r, c);
        }
    }
    return out;
}

}  // namespace vncdr
