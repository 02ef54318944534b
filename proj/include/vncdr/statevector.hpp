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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "vncdr/circuit.hpp"

namespace vncdr {

/// Bit masks describing a Pauli string's action on computational basis
/// states: P|x> = i^y_count (-1)^popcount(x & z_mask) |x ^ x_mask>.
struct PauliMasks {
    uint64_t x_mask = 0;
    uint64_t z_mask = 0;
    int y_count = 0;

    static PauliMasks of(const PauliObservable &obs);
    std::complex<double> phase(uint64_t x) const;
};

/// Noiseless pure-state simulator; qubit q is bit q of the basis index.
class StateVector {
   public:
    explicit StateVector(uint32_t qubits);

    void apply(const Gate &gate);
    void apply(const Circuit &circuit);
    double expectation(const PauliObservable &obs) const;

    uint32_t qubit_count() const {
        return qubits_;
    }
    std::span<const std::complex<double>> amplitudes() const {
        return amps_;
    }

   private:
    uint32_t qubits_;
    std::vector<std::complex<double>> amps_;
};

}  // namespace vncdr
