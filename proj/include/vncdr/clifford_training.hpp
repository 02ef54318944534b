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
#include <vector>

#include "vncdr/circuit.hpp"
#include "vncdr/noise.hpp"
#include "vncdr/sampling.hpp"
#include "vncdr/simulate.hpp"
#include "vncdr/training_data.hpp"

namespace vncdr {

enum class DistanceConvention : uint8_t {
    /// min over global phase of ||RZ(beta) - e^{i phi} RZ(n pi/2)||_F.
    PhaseInvariant,
    /// ||RZ(beta) - S^n||_F with S = exp(i pi/4 Z), so S^n = RZ(-n pi/2).
    LiteralFrobenius,
};

/// Distance between RZ(beta) and the n-th quarter-turn, n in {0,1,2,3}.
double clifford_distance(double beta, int n, DistanceConvention conv = DistanceConvention::PhaseInvariant);

/// RZ angle of the quarter-turn S^n under a convention.
double clifford_angle(int n, DistanceConvention conv = DistanceConvention::PhaseInvariant);

/// The n minimizing clifford_distance; ties within 1e-12 go to the lowest n.
int closest_clifford(double beta, DistanceConvention conv = DistanceConvention::PhaseInvariant);

struct SubstitutionStrategy {
    enum class Variant : uint8_t { Simple, ConeWeighted };
    Variant variant = Variant::Simple;
    uint32_t non_clifford = 0;  // N, the non-Cliffords left in place
    double sigma = 0.5;
    uint64_t seed = 0;
    DistanceConvention distance = DistanceConvention::PhaseInvariant;
};

/// Snaps uniformly chosen non-Clifford RZ gates to their closest quarter-turn
/// until exactly N remain.
Circuit substitute_simple(const Circuit &circuit, uint32_t n_keep, uint64_t seed,
                          DistanceConvention conv = DistanceConvention::PhaseInvariant);

/// Snaps every non-Clifford outside the observable's cone, then draws
/// (gate, n) pairs inside it with weight exp(-d^2/sigma^2) until N remain.
Circuit substitute_cone_weighted(const Circuit &circuit, const PauliObservable &obs,
                                 const SubstitutionStrategy &strategy);

/// m substituted circuits; circuit i uses seed derive_seed(strategy.seed, {i}).
/// `obs` is only consulted by the cone-weighted variant.
std::vector<Circuit> generate_training_circuits(const Circuit &circuit, const PauliObservable &obs,
                                                const SubstitutionStrategy &strategy, uint32_t m);

/// Evaluates generated circuits at every level (FIIM) with the noisy backend
/// and exactly with the statevector. Row i, level j is sampled with seed
/// derive_seed(shots.seed, {i, j}).
TrainingData build_training_data(const Circuit &circuit, const PauliObservable &obs,
                                 const SubstitutionStrategy &strategy, uint32_t m, const NoiseLevelSet &levels,
                                 const NoiseModel &noise, const ShotConfig &shots,
                                 const SimulationOptions &opts = {});

}  // namespace vncdr
