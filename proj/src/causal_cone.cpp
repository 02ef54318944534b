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

#include "vncdr/causal_cone.hpp"

#include <algorithm>

#include "vncdr/errors.hpp"

namespace vncdr {

size_t CausalCone::gate_count() const {
    return static_cast<size_t>(std::count(in_cone.begin(), in_cone.end(), true));
}

std::vector<size_t> CausalCone::gate_indices() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < in_cone.size(); ++k) {
        if (in_cone[k]) {
            out.push_back(k);
        }
    }
    return out;
}

CausalCone causal_cone(const Circuit &circuit, const PauliObservable &obs) {
    const uint32_t nq = circuit.qubit_count();
    std::vector<bool> active(nq, false);
    for (uint32_t q : obs.support()) {
        if (q >= nq) {
            throw ParameterError("observable qubit out of range");
        }
        active[q] = true;
    }

    CausalCone cone;
    cone.in_cone.assign(circuit.size(), false);
    for (size_t k = circuit.size(); k-- > 0;) {
        const Gate &g = circuit[k];
        if (g.kind == GateKind::CNOT) {
            if (active[g.q0] || active[g.q1]) {
                cone.in_cone[k] = true;
                active[g.q0] = active[g.q1] = true;
            }
        } else if (active[g.q0]) {
            cone.in_cone[k] = true;
        }
    }
    for (uint32_t q = 0; q < nq; ++q) {
        if (active[q]) {
            cone.active_qubits.push_back(q);
        }
    }
    return cone;
}

RestrictedCircuit restrict_to_cone(const Circuit &circuit, const PauliObservable &obs) {
    CausalCone cone = causal_cone(circuit, obs);
    std::vector<uint32_t> remap(circuit.qubit_count(), UINT32_MAX);
    for (uint32_t k = 0; k < cone.active_qubits.size(); ++k) {
        remap[cone.active_qubits[k]] = k;
    }
    const uint32_t width = std::max<uint32_t>(1, static_cast<uint32_t>(cone.active_qubits.size()));
    RestrictedCircuit out{Circuit(width, circuit.label()), cone.active_qubits, {}};
    for (size_t k = 0; k < circuit.size(); ++k) {
        if (!cone.in_cone[k]) {
            continue;
        }
        Gate g = circuit[k];
        g.q0 = remap[g.q0];
        if (g.kind == GateKind::CNOT) {
            g.q1 = remap[g.q1];
        }
        out.circuit.append(g);
    }
    std::map<uint32_t, Pauli> terms;
    for (auto [q, p] : obs.terms()) {
        terms.emplace(remap[q], p);
    }
    out.observable = PauliObservable(std::move(terms));
    return out;
}

}  // namespace vncdr
