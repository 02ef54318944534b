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

#include "vncdr/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "vncdr/errors.hpp"
#include "vncdr/rng.hpp"

namespace vncdr {

ShotConfig ShotConfig::finite(uint64_t shots, uint64_t seed) {
    if (shots == 0) {
        throw ParameterError("shot count must be positive");
    }
    return ShotConfig{shots, seed};
}

double sample_expectation(double mu, const ShotConfig &cfg) {
    if (!std::isfinite(mu) || mu < -1.0 - 1e-9 || mu > 1.0 + 1e-9) {
        throw ParameterError("expectation value outside [-1, 1]");
    }
    mu = std::clamp(mu, -1.0, 1.0);
    if (cfg.is_infinite()) {
        return mu;
    }
    const uint64_t n = *cfg.shots;
    if (n == 0) {
        throw ParameterError("shot count must be positive");
    }
    Rng rng(cfg.seed);
    std::binomial_distribution<uint64_t> draw(n, 0.5 * (1.0 + mu));
    const uint64_t plus = draw(rng);
    return (2.0 * static_cast<double>(plus) - static_cast<double>(n)) / static_cast<double>(n);
}

}  // namespace vncdr
