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

// Reference computations used by the tests, written independently of the
// library code they check.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

inline Eigen::Matrix2cd rz(double beta) {
    using C = std::complex<double>;
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::exp(C(0, -beta / 2));
    m(1, 1) = std::exp(C(0, beta / 2));
    return m;
}

inline std::array<Eigen::Matrix2cd, 4> paulis() {
    using C = std::complex<double>;
    Eigen::Matrix2cd i = Eigen::Matrix2cd::Identity(), x, y, z;
    x << 0, 1, 1, 0;
    y << 0, C(0, -1), C(0, 1), 0;
    z << 1, 0, 0, -1;
    return {i, x, y, z};
}

// R_ij = Tr(P_i U P_j U^dagger) / 2 for conjugation by U.
inline Eigen::Matrix4d conjugation_ptm(const Eigen::Matrix2cd &u) {
    const auto p = paulis();
    Eigen::Matrix4d r;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            r(i, j) = 0.5 * (p[i] * u * p[j] * u.adjoint()).trace().real();
        }
    }
    return r;
}

// Least-squares weights expressing the RZ(beta) transfer matrix as a
// combination of those of RZ(0), RZ(pi/2), RZ(pi): 16 equations, 3 unknowns.
inline std::array<double, 3> clifford_span_weights(double beta) {
    const double pi = std::acos(-1.0);
    Eigen::Matrix<double, 16, 3> a;
    Eigen::Matrix<double, 16, 1> b;
    const Eigen::Matrix4d target = conjugation_ptm(rz(beta));
    for (int k = 0; k < 3; ++k) {
        const Eigen::Matrix4d basis = conjugation_ptm(rz(k * pi / 2));
        a.col(k) = Eigen::Map<const Eigen::Matrix<double, 16, 1>>(basis.data());
    }
    b = Eigen::Map<const Eigen::Matrix<double, 16, 1>>(target.data());
    const Eigen::Vector3d w = a.colPivHouseholderQr().solve(b);
    return {w(0), w(1), w(2)};
}

// Phase-minimized Frobenius distance by explicit matrices:
// min_phi ||A - e^{i phi} B||^2 = ||A||^2 + ||B||^2 - 2 |Tr(A^dagger B)|.
inline double phase_min_distance(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
    const double d2 = a.squaredNorm() + b.squaredNorm() - 2 * std::abs((a.adjoint() * b).trace());
    return std::sqrt(std::max(0.0, d2));
}

// Value at c = 0 of the polynomial through (c_j, mu_j), by Neville's scheme.
inline double neville_at_zero(const std::vector<double> &c, const std::vector<double> &mu) {
    std::vector<double> p = mu;
    const size_t n = c.size();
    for (size_t k = 1; k < n; ++k) {
        for (size_t i = 0; i + k < n; ++i) {
            p[i] = ((0 - c[i + k]) * p[i] - (0 - c[i]) * p[i + 1]) / (c[i] - c[i + k]);
        }
    }
    return p[0];
}

}  // namespace oracle
