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

#include "vncdr/simulate.hpp"

#include <algorithm>
#include <set>

#include "vncdr/causal_cone.hpp"
#include "vncdr/density_matrix.hpp"
#include "vncdr/errors.hpp"
#include "vncdr/pauli_simulator.hpp"
#include "vncdr/statevector.hpp"

namespace vncdr {

namespace {

void check_range(const Circuit &circuit, const PauliObservable &obs) {
    if (!obs.terms().empty() && obs.max_qubit() >= circuit.qubit_count()) {
        throw ParameterError("observable qubit out of range");
    }
}

// Z on every qubit any of the observables touches. The cone depends only on
// the support, so this stands in for the whole family.
PauliObservable union_support(std::span<const PauliObservable> observables) {
    std::map<uint32_t, Pauli> terms;
    for (const auto &obs : observables) {
        for (auto [q, p] : obs.terms()) {
            terms[q] = Pauli::Z;
        }
    }
    return PauliObservable(std::move(terms));
}

PauliObservable remapped(const PauliObservable &obs, const std::vector<uint32_t> &active) {
    std::map<uint32_t, Pauli> terms;
    for (auto [q, p] : obs.terms()) {
        const auto it = std::lower_bound(active.begin(), active.end(), q);
        terms.emplace(static_cast<uint32_t>(it - active.begin()), p);
    }
    return PauliObservable(std::move(terms));
}

bool nearest_neighbour(const Circuit &circuit) {
    return std::all_of(circuit.gates().begin(), circuit.gates().end(), [](const Gate &g) {
        return g.kind != GateKind::CNOT || g.q0 + 1 == g.q1 || g.q1 + 1 == g.q0;
    });
}

std::vector<double> dense_values(const Circuit &circuit, const NoiseModel &noise,
                                 std::span<const PauliObservable> observables, uint32_t cap) {
    if (circuit.qubit_count() > cap) {
        throw CapacityError("dense backend cap exceeded: " + std::to_string(circuit.qubit_count()) + " > " +
                            std::to_string(cap) + " qubits");
    }
    PauliSimulator sim(circuit.qubit_count());
    sim.run(compile_ptm_program(circuit, noise));
    std::vector<double> out;
    out.reserve(observables.size());
    for (const auto &obs : observables) {
        out.push_back(sim.expectation(obs));
    }
    return out;
}

std::vector<double> mpo_values(const Circuit &circuit, const NoiseModel &noise,
                               std::span<const PauliObservable> observables, TruncationPolicy policy) {
    for (const auto &obs : observables) {
        if (obs.weight() > 2) {
            throw ParameterError("MPO backend supports observables of weight at most 2");
        }
    }
    const MpoState state = simulate_mpo(circuit, noise, policy);
    std::vector<double> out;
    out.reserve(observables.size());
    for (const auto &obs : observables) {
        out.push_back(state.expectation(obs));
    }
    return out;
}

}  // namespace

std::vector<double> exact_expectations(const Circuit &circuit, std::span<const PauliObservable> observables,
                                       const SimulationOptions &opts) {
    for (const auto &obs : observables) {
        check_range(circuit, obs);
    }
    const RestrictedCircuit cut = restrict_to_cone(circuit, union_support(observables));
    if (cut.circuit.qubit_count() > opts.statevector_cap) {
        throw CapacityError("statevector cap exceeded: cone spans " + std::to_string(cut.circuit.qubit_count()) +
                            " qubits");
    }
    StateVector sv(cut.circuit.qubit_count());
    sv.apply(cut.circuit);
    std::vector<double> out;
    out.reserve(observables.size());
    for (const auto &obs : observables) {
        out.push_back(sv.expectation(remapped(obs, cut.active_qubits)));
    }
    return out;
}

double exact_expectation(const Circuit &circuit, const PauliObservable &obs, const SimulationOptions &opts) {
    return exact_expectations(circuit, std::span(&obs, 1), opts).front();
}

double noisy_expectation_dense(const Circuit &circuit, const NoiseModel &noise, const PauliObservable &obs,
                               uint32_t cap) {
    check_range(circuit, obs);
    return dense_values(circuit, noise, std::span(&obs, 1), cap).front();
}

double noisy_expectation_kraus(const Circuit &circuit, const NoiseModel &noise, const PauliObservable &obs) {
    check_range(circuit, obs);
    return simulate_density_matrix(circuit, noise).expectation(obs);
}

double noisy_expectation_mpo(const Circuit &circuit, const NoiseModel &noise, const PauliObservable &obs,
                             double cutoff) {
    check_range(circuit, obs);
    if (!(cutoff >= 0.0)) {
        throw ParameterError("MPO cutoff must be non-negative");
    }
    return mpo_values(circuit, noise, std::span(&obs, 1), TruncationPolicy{cutoff, false}).front();
}

std::vector<double> noisy_expectations(const Circuit &circuit, const NoiseModel &noise,
                                       std::span<const PauliObservable> observables,
                                       const SimulationOptions &opts) {
    for (const auto &obs : observables) {
        check_range(circuit, obs);
    }
    auto run = [&](const Circuit &c, std::span<const PauliObservable> obs) {
        return opts.backend == Backend::Dense ? dense_values(c, noise, obs, opts.dense_cap)
                                              : mpo_values(c, noise, obs, opts.mpo);
    };
    if (!opts.restrict_to_cone || !noise.is_gate_local()) {
        return run(circuit, observables);
    }
    RestrictedCircuit cut = restrict_to_cone(circuit, union_support(observables));
    if (opts.backend == Backend::Mpo && !nearest_neighbour(cut.circuit)) {
        return run(circuit, observables);
    }
    std::vector<PauliObservable> local;
    local.reserve(observables.size());
    for (const auto &obs : observables) {
        local.push_back(remapped(obs, cut.active_qubits));
    }
    return run(cut.circuit, local);
}

double noisy_expectation(const Circuit &circuit, const NoiseModel &noise, const PauliObservable &obs,
                         const SimulationOptions &opts) {
    return noisy_expectations(circuit, noise, std::span(&obs, 1), opts).front();
}

}  // namespace vncdr
