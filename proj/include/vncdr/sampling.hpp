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

#include <cstdint>
#include <optional>

namespace vncdr {

/// Finite shot budget, or the infinite-shot limit when `shots` is empty.
struct ShotConfig {
    std::optional<uint64_t> shots;
    uint64_t seed = 0;

    static ShotConfig infinite() {
        return {};
    }
    static ShotConfig finite(uint64_t shots, uint64_t seed);
    bool is_infinite() const {
        return !shots.has_value();
    }
};

/// Mean of N independent +-1 outcomes with P(+1) = (1 + mu)/2. The count of
/// +1 outcomes is drawn as one binomial variate, which has the same law.
/// Values of mu within 1e-9 outside [-1, 1] are clamped.
double sample_expectation(double mu, const ShotConfig &cfg);

}  // namespace vncdr
