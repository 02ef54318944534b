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

namespace vncdr {

/// Gates that can influence an observable, assuming gate-local noise.
struct CausalCone {
    std::vector<bool> in_cone;            // indexed by gate position
    std::vector<uint32_t> active_qubits;  // sorted; active set at circuit input

    bool contains(size_t gate_index) const {
        return gate_index < in_cone.size() && in_cone[gate_index];
    }
    size_t gate_count() const;
    std::vector<size_t> gate_indices() const;
};

CausalCone causal_cone(const Circuit &circuit, const PauliObservable &obs);

/// Circuit restricted to the cone's gates and relabelled onto the compact
/// qubit range [0, active.size()); `active_qubits[new] = old`.
struct RestrictedCircuit {
    Circuit circuit;
    std::vector<uint32_t> active_qubits;
    PauliObservable observable;
};

RestrictedCircuit restrict_to_cone(const Circuit &circuit, const PauliObservable &obs);

}  // namespace vncdr
