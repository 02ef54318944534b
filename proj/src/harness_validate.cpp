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

#include <cmath>
#include <cstdio>

#include "vncdr/causal_cone.hpp"
#include "vncdr/harness.hpp"
#include "vncdr/rng.hpp"

namespace vncdr {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

CheckResult check_richardson() {
    double worst = 0;
    for (size_t n = 1; n <= 5; ++n) {
        const NoiseLevelSet levels = NoiseLevelSet::odd(n);
        const auto g = richardson_coefficients(levels);
        for (size_t k = 0; k < n; ++k) {
            double acc = 0;
            for (size_t j = 0; j < n; ++j) {
                acc += g[j] * std::pow(static_cast<double>(levels[j]), static_cast<double>(k));
            }
            worst = std::max(worst, std::abs(acc - (k == 0 ? 1.0 : 0.0)));
        }
    }
    return {"richardson constraints", worst < 1e-10, "max residual " + fmt(worst)};
}

CheckResult check_channels() {
    const bool ok = validate_channel(depolarizing_channel(0.3, 1)) && validate_channel(depolarizing_channel(0.3, 2)) &&
                    validate_channel(amplitude_damping_channel(0.2)) &&
                    !validate_channel(KrausChannel{1, {0.5 * Eigen::MatrixXcd::Identity(2, 2)}});
    return {"kraus completeness", ok, ok ? "ok" : "a channel failed completeness"};
}

CheckResult check_cone(uint64_t seed) {
    double worst = 0;
    const NoiseModel noise{NoiseSpec{}};
    for (uint64_t t = 0; t < 5; ++t) {
        Rng rng(derive_seed(seed, {10, t}));
        const Circuit c = build_random_hea(6, 3, rng());
        const auto obs = PauliObservable::single(static_cast<uint32_t>(uniform_index(rng, 6)), Pauli::X);
        const CausalCone cone = causal_cone(c, obs);
        Circuit scrambled = c;
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k].kind == GateKind::RZ && !cone.contains(k)) {
                scrambled.set_rz_angle(k, kTwoPi * uniform01(rng));
            }
        }
        SimulationOptions full;
        full.restrict_to_cone = false;
        worst = std::max(worst, std::abs(exact_expectation(c, obs) - exact_expectation(scrambled, obs)));
        worst = std::max(worst, std::abs(noisy_expectation(c, noise, obs, full) -
                                         noisy_expectation(scrambled, noise, obs, full)));
    }
    return {"causal cone soundness", worst < 1e-12, "max change " + fmt(worst)};
}

CheckResult check_backends(uint64_t seed) {
    double worst = 0;
    const NoiseModel noise{NoiseSpec{}};
    for (uint64_t t = 0; t < 3; ++t) {
        const Circuit c = build_random_hea(4, 3, derive_seed(seed, {11, t}));
        for (const char *label : {"X0", "X1", "Z0Z1", "Z1Z2"}) {
            const auto obs = PauliObservable::parse(label);
            const double kraus = noisy_expectation_kraus(c, noise, obs);
            worst = std::max(worst, std::abs(kraus - noisy_expectation_dense(c, noise, obs)));
            worst = std::max(worst, std::abs(kraus - noisy_expectation_mpo(c, noise, obs)));
        }
    }
    return {"backend agreement (kraus, pauli, mpo)", worst < 1e-8, "max difference " + fmt(worst)};
}

CheckResult check_fiim(uint64_t seed) {
    const Circuit c = build_random_hea(5, 4, derive_seed(seed, {12}));
    const auto obs = PauliObservable::parse("Z1Z2");
    const double base = exact_expectation(c, obs);
    bool counts = true;
    double worst = 0;
    for (uint32_t k : {1u, 3u, 5u, 7u}) {
        const Circuit a = amplify_fiim(c, k);
        counts = counts && a.cnot_count() == k * c.cnot_count();
        worst = std::max(worst, std::abs(exact_expectation(a, obs) - base));
    }
    return {"identity insertion", counts && worst < 1e-12, "max change " + fmt(worst)};
}

CheckResult check_shot_cost() {
    const uint64_t ns = 1000;
    const bool ok = shot_cost(CostMethod::Zne, 100, 5, ns) == 5 * ns &&
                    shot_cost(CostMethod::Cdr, 100, 5, ns) == 101 * ns &&
                    shot_cost(CostMethod::Vncdr, 100, 5, ns) == 505 * ns;
    return {"shot-cost formulas", ok, ok ? "5, 101, 505 x N_s" : "mismatch"};
}

CheckResult check_depolarizing_exactness() {
    // Synthetic rows obeying x_j = f_j y + (1 - f_j) t with f_j = (1 - eps)^c_j.
    const double eps = 0.2, t = 0.5;
    const NoiseLevelSet levels({1, 3});
    TrainingData data{levels, {}, {}, {}};
    auto row = [&](double y) {
        std::vector<double> x;
        for (uint32_t c : levels.levels()) {
            const double f = std::pow(1 - eps, c);
            x.push_back(f * y + (1 - f) * t);
        }
        return x;
    };
    for (double y : {1.0, 0.0, -0.4}) {
        data.add_row(row(y), y);
    }
    const VncdrFit fit = vncdr_fit(data);
    const double err = std::abs(vncdr_predict(fit, row(0.6)) - 0.6);
    return {"vncdr global-depolarizing exactness", err < 1e-8, "held-out error " + fmt(err)};
}

}  // namespace

std::vector<CheckResult> run_validation_suite(uint64_t seed) {
    return {check_richardson(),  check_channels(),   check_cone(seed),
            check_backends(seed), check_fiim(seed),   check_shot_cost(),
            check_depolarizing_exactness()};
}

}  // namespace vncdr
