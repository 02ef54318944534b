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
#include <span>
#include <vector>

#include "vncdr/circuit.hpp"
#include "vncdr/mpo.hpp"
#include "vncdr/noise.hpp"

namespace vncdr {

enum class Backend : uint8_t { Dense, Mpo };

struct SimulationOptions {
    Backend backend = Backend::Dense;
    TruncationPolicy mpo{};
    /// Evaluate only the causal cone of the requested observables. Ignored
    /// (full circuit simulated) when the noise is not gate-local.
    bool restrict_to_cone = true;
    uint32_t dense_cap = 10;
    uint32_t statevector_cap = 20;
};

/// Noiseless expectation, evaluated on the observable's causal cone.
double exact_expectation(const Circuit &circuit, const PauliObservable &obs, const SimulationOptions &opts = {});
std::vector<double> exact_expectations(const Circuit &circuit, std::span<const PauliObservable> observables,
                                       const SimulationOptions &opts = {});

/// Whole-register noisy evolution in the Pauli basis (no cone restriction).
double noisy_expectation_dense(const Circuit &circuit, const NoiseModel &noise, const PauliObservable &obs,
                               uint32_t cap = 10);

/// Literal Kraus-sum density-matrix evolution; slow, kept as a reference.
double noisy_expectation_kraus(const Circuit &circuit, const NoiseModel &noise, const PauliObservable &obs);

/// Whole-register MPO evolution with relative singular-value cutoff.
double noisy_expectation_mpo(const Circuit &circuit, const NoiseModel &noise, const PauliObservable &obs,
                             double cutoff = 1e-12);

/// Several observables from one simulation. With gate-local noise the
/// circuit is first cut down to the cone of the union of their supports.
std::vector<double> noisy_expectations(const Circuit &circuit, const NoiseModel &noise,
                                       std::span<const PauliObservable> observables,
                                       const SimulationOptions &opts = {});
double noisy_expectation(const Circuit &circuit, const NoiseModel &noise, const PauliObservable &obs,
                         const SimulationOptions &opts = {});

}  // namespace vncdr
