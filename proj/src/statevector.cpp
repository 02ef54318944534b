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

#include "vncdr/statevector.hpp"

#include <bit>
#include <cmath>

#include "vncdr/errors.hpp"

namespace vncdr {

using cdouble = std::complex<double>;

PauliMasks PauliMasks::of(const PauliObservable &obs) {
    PauliMasks m;
    for (auto [q, p] : obs.terms()) {
        const uint64_t bit = uint64_t{1} << q;
        if (p == Pauli::X || p == Pauli::Y) {
            m.x_mask |= bit;
        }
        if (p == Pauli::Z || p == Pauli::Y) {
            m.z_mask |= bit;
        }
        if (p == Pauli::Y) {
            ++m.y_count;
        }
    }
    return m;
}

cdouble PauliMasks::phase(uint64_t x) const {
    static const cdouble powers_of_i[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    cdouble ph = powers_of_i[y_count & 3];
    return (std::popcount(x & z_mask) & 1) ? -ph : ph;
}

StateVector::StateVector(uint32_t qubits) : qubits_(qubits) {
    if (qubits == 0 || qubits > 30) {
        throw CapacityError("statevector supports 1..30 qubits");
    }
    amps_.assign(size_t{1} << qubits, cdouble{0.0, 0.0});
    amps_[0] = 1.0;
}

void StateVector::apply(const Gate &gate) {
    const size_t n = amps_.size();
    switch (gate.kind) {
        case GateKind::RZ: {
            const uint64_t bit = uint64_t{1} << gate.q0;
            const cdouble p0 = std::polar(1.0, -0.5 * gate.angle);
            const cdouble p1 = std::polar(1.0, 0.5 * gate.angle);
            for (size_t x = 0; x < n; ++x) {
                amps_[x] *= (x & bit) ? p1 : p0;
            }
            break;
        }
        case GateKind::SX: {
            const uint64_t bit = uint64_t{1} << gate.q0;
            const double s = std::sqrt(0.5);
            const cdouble mis{0.0, -s};
            for (size_t x = 0; x < n; ++x) {
                if (x & bit) {
                    continue;
                }
                cdouble a = amps_[x];
                cdouble b = amps_[x | bit];
                amps_[x] = s * a + mis * b;
                amps_[x | bit] = mis * a + s * b;
            }
            break;
        }
        case GateKind::CNOT: {
            const uint64_t cbit = uint64_t{1} << gate.q0;
            const uint64_t tbit = uint64_t{1} << gate.q1;
            for (size_t x = 0; x < n; ++x) {
                if ((x & cbit) && !(x & tbit)) {
                    std::swap(amps_[x], amps_[x | tbit]);
                }
            }
            break;
        }
    }
}

void StateVector::apply(const Circuit &circuit) {
    if (circuit.qubit_count() != qubits_) {
        throw ParameterError("circuit width does not match statevector");
    }
    for (const Gate &g : circuit.gates()) {
        apply(g);
    }
}

double StateVector::expectation(const PauliObservable &obs) const {
    if (!obs.terms().empty() && obs.max_qubit() >= qubits_) {
        throw ParameterError("observable qubit out of range");
    }
    const PauliMasks m = PauliMasks::of(obs);
    cdouble acc = 0.0;
    for (size_t x = 0; x < amps_.size(); ++x) {
        acc += std::conj(amps_[x ^ m.x_mask]) * m.phase(x) * amps_[x];
    }
    return acc.real();
}

}  // namespace vncdr
