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

#include "vncdr/mitigation.hpp"

#include <cmath>

#include "vncdr/errors.hpp"

namespace vncdr {

std::vector<double> richardson_coefficients(const NoiseLevelSet &levels) {
    const size_t n = levels.size();
    std::vector<double> gamma(n, 1.0);
    for (size_t j = 0; j < n; ++j) {
        const double cj = levels[j];
        for (size_t k = 0; k < n; ++k) {
            if (k != j) {
                const double ck = levels[k];
                gamma[j] *= ck / (ck - cj);
            }
        }
    }
    return gamma;
}

double zne_richardson(std::span<const double> mu, const NoiseLevelSet &levels) {
    if (mu.size() != levels.size()) {
        throw ParameterError("expected " + std::to_string(levels.size()) + " noisy values, got " +
                             std::to_string(mu.size()));
    }
    const auto gamma = richardson_coefficients(levels);
    double acc = 0;
    for (size_t j = 0; j < mu.size(); ++j) {
        acc += gamma[j] * mu[j];
    }
    return acc;
}

LinearFit zne_linear(std::span<const double> mu, const NoiseLevelSet &levels) {
    if (mu.size() != levels.size()) {
        throw ParameterError("expected " + std::to_string(levels.size()) + " noisy values, got " +
                             std::to_string(mu.size()));
    }
    if (mu.size() < 2) {
        throw ParameterError("linear extrapolation needs at least two noise levels");
    }
    const double n = static_cast<double>(mu.size());
    double cbar = 0, mbar = 0;
    for (size_t j = 0; j < mu.size(); ++j) {
        cbar += levels[j];
        mbar += mu[j];
    }
    cbar /= n;
    mbar /= n;
    double scc = 0, scm = 0;
    for (size_t j = 0; j < mu.size(); ++j) {
        scc += (levels[j] - cbar) * (levels[j] - cbar);
        scm += (levels[j] - cbar) * (mu[j] - mbar);
    }
    LinearFit fit;
    fit.b1 = scm / scc;
    fit.b0 = mbar - fit.b1 * cbar;
    return fit;
}

CdrFit cdr_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw ParameterError("CDR needs equally many x and y values");
    }
    if (x.empty()) {
        throw DegenerateDesignError("CDR fit on empty data");
    }
    const double n = static_cast<double>(x.size());
    double xbar = 0, ybar = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        xbar += x[i];
        ybar += y[i];
    }
    xbar /= n;
    ybar /= n;
    double sxx = 0, sxy = 0;
    bool all_equal = true;
    for (size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - xbar) * (x[i] - xbar);
        sxy += (x[i] - xbar) * (y[i] - ybar);
        all_equal = all_equal && x[i] == x[0];
    }
    if (all_equal || sxx == 0.0) {
        throw DegenerateDesignError("CDR design is degenerate: all noisy values coincide");
    }
    CdrFit fit;
    fit.a1 = sxy / sxx;
    fit.a2 = ybar - fit.a1 * xbar;
    return fit;
}

CdrFit cdr_fit_or_identity(std::span<const double> x, std::span<const double> y) {
    try {
        return cdr_fit(x, y);
    } catch (const DegenerateDesignError &) {
        return CdrFit{1.0, 0.0, true};
    }
}

double cdr_predict(const CdrFit &fit, double mu0) {
    return fit.a1 * mu0 + fit.a2;
}

VncdrFit vncdr_fit(const Eigen::MatrixXd &x, const Eigen::VectorXd &y, double ridge) {
    if (x.rows() == 0 || x.cols() == 0) {
        throw ParameterError("vnCDR fit on empty data");
    }
    if (x.rows() != y.size()) {
        throw ParameterError("vnCDR design and target sizes differ");
    }
    if (ridge < 0.0) {
        throw ParameterError("ridge must be non-negative");
    }
    VncdrFit fit;
    fit.ridge = ridge;
    Eigen::VectorXd a;
    if (ridge > 0.0) {
        const Eigen::MatrixXd gram =
            x.transpose() * x + ridge * Eigen::MatrixXd::Identity(x.cols(), x.cols());
        a = gram.ldlt().solve(x.transpose() * y);
        fit.rank = Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(x).rank();
    } else {
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(x);
        a = cod.solve(y);
        fit.rank = cod.rank();
    }
    fit.a.assign(a.data(), a.data() + a.size());
    fit.rss = (x * a - y).squaredNorm();
    return fit;
}

VncdrFit vncdr_fit(const TrainingData &data, double ridge) {
    if (data.rows() == 0) {
        throw ParameterError("vnCDR fit on empty data");
    }
    const auto cols = static_cast<Eigen::Index>(data.levels.size());
    Eigen::MatrixXd x(static_cast<Eigen::Index>(data.rows()), cols);
    Eigen::VectorXd y(static_cast<Eigen::Index>(data.rows()));
    for (size_t i = 0; i < data.rows(); ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            x(static_cast<Eigen::Index>(i), j) = data.x[i][static_cast<size_t>(j)];
        }
        y(static_cast<Eigen::Index>(i)) = data.y[i];
    }
    return vncdr_fit(x, y, ridge);
}

double vncdr_predict(const VncdrFit &fit, std::span<const double> mu) {
    if (mu.size() != fit.a.size()) {
        throw ParameterError("vnCDR prediction needs " + std::to_string(fit.a.size()) + " noisy values");
    }
    double acc = 0;
    for (size_t j = 0; j < mu.size(); ++j) {
        acc += fit.a[j] * mu[j];
    }
    return acc;
}

}  // namespace vncdr
