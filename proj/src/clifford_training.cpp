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

#include "vncdr/clifford_training.hpp"

#include <algorithm>
#include <cmath>

#include "vncdr/causal_cone.hpp"
#include "vncdr/errors.hpp"
#include "vncdr/rng.hpp"

namespace vncdr {

namespace {

void check_n(int n) {
    if (n < 0 || n > 3) {
        throw ParameterError("quarter-turn index must be in {0,1,2,3}");
    }
}

std::vector<size_t> non_clifford_indices(const Circuit &circuit, const CausalCone *cone, bool inside) {
    std::vector<size_t> out;
    for (size_t k = 0; k < circuit.size(); ++k) {
        if (circuit[k].kind != GateKind::RZ || is_clifford(circuit[k])) {
            continue;
        }
        if (cone && cone->contains(k) != inside) {
            continue;
        }
        out.push_back(k);
    }
    return out;
}

void snap(Circuit &c, size_t k, DistanceConvention conv) {
    c.set_rz_angle(k, clifford_angle(closest_clifford(c[k].angle, conv), conv));
}

}  // namespace

double clifford_distance(double beta, int n, DistanceConvention conv) {
    check_n(n);
    double d2 = 0;
    if (conv == DistanceConvention::PhaseInvariant) {
        d2 = 4.0 - 4.0 * std::abs(std::cos(0.5 * (beta - n * kHalfPi)));
    } else {
        d2 = 4.0 - 4.0 * std::cos(0.5 * beta + 0.25 * n * std::numbers::pi);
    }
    return std::sqrt(std::max(0.0, d2));
}

double clifford_angle(int n, DistanceConvention conv) {
    check_n(n);
    return reduce_angle(conv == DistanceConvention::PhaseInvariant ? n * kHalfPi : -n * kHalfPi);
}

int closest_clifford(double beta, DistanceConvention conv) {
    int best = 0;
    double best_d = clifford_distance(beta, 0, conv);
    for (int n = 1; n < 4; ++n) {
        const double d = clifford_distance(beta, n, conv);
        if (d < best_d - 1e-12) {
            best = n;
            best_d = d;
        }
    }
    return best;
}

Circuit substitute_simple(const Circuit &circuit, uint32_t n_keep, uint64_t seed, DistanceConvention conv) {
    std::vector<size_t> pool = non_clifford_indices(circuit, nullptr, true);
    if (n_keep > pool.size()) {
        throw ParameterError("asked to keep " + std::to_string(n_keep) + " non-Clifford gates but only " +
                             std::to_string(pool.size()) + " exist");
    }
    Circuit out = circuit;
    Rng rng(seed);
    while (pool.size() > n_keep) {
        const size_t pick = uniform_index(rng, pool.size());
        snap(out, pool[pick], conv);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

Circuit substitute_cone_weighted(const Circuit &circuit, const PauliObservable &obs,
                                 const SubstitutionStrategy &strategy) {
    if (!(strategy.sigma > 0.0)) {
        throw ParameterError("sigma must be positive");
    }
    const CausalCone cone = causal_cone(circuit, obs);
    std::vector<size_t> pool = non_clifford_indices(circuit, &cone, true);
    if (strategy.non_clifford > pool.size()) {
        throw ParameterError("asked to keep " + std::to_string(strategy.non_clifford) +
                             " non-Clifford gates but the cone holds " + std::to_string(pool.size()));
    }
    Circuit out = circuit;
    for (size_t k : non_clifford_indices(circuit, &cone, false)) {
        snap(out, k, strategy.distance);
    }
    Rng rng(strategy.seed);
    const double inv_s2 = 1.0 / (strategy.sigma * strategy.sigma);
    std::vector<double> weights;
    while (pool.size() > strategy.non_clifford) {
        weights.clear();
        double total = 0;
        for (size_t k : pool) {
            for (int n = 0; n < 4; ++n) {
                const double d = clifford_distance(out[k].angle, n, strategy.distance);
                total += std::exp(-d * d * inv_s2);
                weights.push_back(total);
            }
        }
        const double u = uniform01(rng) * total;
        size_t pick = static_cast<size_t>(std::upper_bound(weights.begin(), weights.end(), u) - weights.begin());
        pick = std::min(pick, weights.size() - 1);
        const size_t gate = pool[pick / 4];
        out.set_rz_angle(gate, clifford_angle(static_cast<int>(pick % 4), strategy.distance));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick / 4));
    }
    return out;
}

std::vector<Circuit> generate_training_circuits(const Circuit &circuit, const PauliObservable &obs,
                                                const SubstitutionStrategy &strategy, uint32_t m) {
    std::vector<Circuit> out;
    out.reserve(m);
    for (uint32_t i = 0; i < m; ++i) {
        SubstitutionStrategy s = strategy;
        s.seed = derive_seed(strategy.seed, {i});
        Circuit c = s.variant == SubstitutionStrategy::Variant::Simple
                        ? substitute_simple(circuit, s.non_clifford, s.seed, s.distance)
                        : substitute_cone_weighted(circuit, obs, s);
        c.set_label((circuit.label().empty() ? std::string("train") : circuit.label()) + "/" + std::to_string(i));
        out.push_back(std::move(c));
    }
    return out;
}

TrainingData build_training_data(const Circuit &circuit, const PauliObservable &obs,
                                 const SubstitutionStrategy &strategy, uint32_t m, const NoiseLevelSet &levels,
                                 const NoiseModel &noise, const ShotConfig &shots, const SimulationOptions &opts) {
    if (m == 0) {
        throw ParameterError("training set needs at least one circuit");
    }
    TrainingData data{levels, {}, {}, {}};
    const auto circuits = generate_training_circuits(circuit, obs, strategy, m);
    for (uint32_t i = 0; i < m; ++i) {
        std::vector<double> xi;
        for (size_t j = 0; j < levels.size(); ++j) {
            const double mu = noisy_expectation(amplify_fiim(circuits[i], levels[j]), noise, obs, opts);
            ShotConfig cfg = shots;
            cfg.seed = derive_seed(shots.seed, {i, j});
            xi.push_back(sample_expectation(mu, cfg));
        }
        data.add_row(std::move(xi), exact_expectation(circuits[i], obs, opts), circuits[i].label());
    }
    return data;
}

}  // namespace vncdr
