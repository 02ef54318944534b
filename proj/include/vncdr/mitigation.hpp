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
#include <span>
#include <vector>

#include "vncdr/noise.hpp"
#include "vncdr/training_data.hpp"

namespace vncdr {

/// Weights gamma_j with sum gamma_j = 1 and sum gamma_j c_j^k = 0 for
/// k = 1..n, from the Lagrange form gamma_j = prod_{k != j} c_k / (c_k - c_j).
std::vector<double> richardson_coefficients(const NoiseLevelSet &levels);

double zne_richardson(std::span<const double> mu, const NoiseLevelSet &levels);

/// Ordinary least squares of mu on (1, c). The mitigated value is b0.
struct LinearFit {
    double b0 = 0;
    double b1 = 0;
};
LinearFit zne_linear(std::span<const double> mu, const NoiseLevelSet &levels);

struct CdrFit {
    double a1 = 1;
    double a2 = 0;
    bool degenerate = false;  // identity fallback was used
};

/// Least squares y ~ a1 x + a2. Throws DegenerateDesignError when every x is
/// the same.
CdrFit cdr_fit(std::span<const double> x, std::span<const double> y);
/// As cdr_fit, but returns the flagged identity map for a degenerate design.
CdrFit cdr_fit_or_identity(std::span<const double> x, std::span<const double> y);
double cdr_predict(const CdrFit &fit, double mu0);

struct VncdrFit {
    std::vector<double> a;
    double rss = 0;   // residual sum of squares on the training rows
    Eigen::Index rank = 0;
    double ridge = 0;
};

/// Minimal-norm least squares for y ~ a . x (no intercept). A positive ridge
/// solves (X^T X + ridge I) a = X^T y instead.
VncdrFit vncdr_fit(const Eigen::MatrixXd &x, const Eigen::VectorXd &y, double ridge = 0.0);
VncdrFit vncdr_fit(const TrainingData &data, double ridge = 0.0);
double vncdr_predict(const VncdrFit &fit, std::span<const double> mu);

}  // namespace vncdr
