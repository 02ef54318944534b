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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "vncdr/channel_algebra.hpp"
#include "vncdr/density_matrix.hpp"
#include "vncdr/errors.hpp"
#include "vncdr/mpo.hpp"
#include "vncdr/pauli_simulator.hpp"
#include "vncdr/rng.hpp"
#include "vncdr/sampling.hpp"
#include "vncdr/simulate.hpp"
#include "vncdr/statevector.hpp"

using namespace vncdr;

namespace {

void hadamard(Circuit &c, uint32_t q) {
    c.append(Gate::rz(q, kHalfPi)).append(Gate::sx(q)).append(Gate::rz(q, kHalfPi));
}

Circuit bell() {
    Circuit c(2);
    hadamard(c, 0);
    c.append(Gate::cnot(0, 1));
    return c;
}

NoiseModel cnot_only(double eps) {
    NoiseModel m;
    m.set_channel(GateKind::CNOT, depolarizing_channel(eps, 2));
    return m;
}

const char *kObs[] = {"X0", "X1", "Z0Z1", "Z1Z2"};

}  // namespace

TEST(Exact, PlusStateHasUnitX) {
    const Circuit c = build_qaoa_ising(QaoaParams{5, {0.0}, {0.0}, 2.0});
    for (uint32_t j = 0; j < 5; ++j) {
        EXPECT_NEAR(exact_expectation(c, PauliObservable::single(j, Pauli::X)), 1.0, 1e-12);
    }
}

TEST(Exact, HadamardThenRzGivesCosine) {
    for (double beta : {std::numbers::pi / 3, 0.7, 2.9}) {
        Circuit c(1);
        hadamard(c, 0);
        c.append(Gate::rz(0, beta));
        EXPECT_NEAR(exact_expectation(c, PauliObservable::single(0, Pauli::X)), std::cos(beta), 1e-12);
    }
    Circuit c(1);
    hadamard(c, 0);
    c.append(Gate::rz(0, std::numbers::pi / 3));
    EXPECT_NEAR(exact_expectation(c, PauliObservable::single(0, Pauli::X)), 0.5, 1e-12);
}

TEST(Exact, UntouchedQubitStaysZero) {
    Circuit c = build_random_hea(4, 3, 1);
    Circuit wide(6);
    for (const auto &g : c.gates()) wide.append(g);
    EXPECT_NEAR(exact_expectation(wide, PauliObservable::single(5, Pauli::Z)), 1.0, 1e-12);
}

TEST(Exact, ErrorsOnRangeAndCap) {
    const Circuit c = build_random_hea(4, 1, 1);
    EXPECT_THROW(exact_expectation(c, PauliObservable::single(4, Pauli::Z)), ParameterError);
    SimulationOptions tiny;
    tiny.statevector_cap = 1;
    EXPECT_THROW(exact_expectation(c, PauliObservable::pair(0, Pauli::Z, 3, Pauli::Z), tiny), CapacityError);
}

TEST(Dense, NoiselessMatchesExact) {
    for (uint64_t seed = 0; seed < 5; ++seed) {
        const Circuit c = build_random_hea(5, 3, seed);
        for (const char *l : kObs) {
            const auto obs = PauliObservable::parse(l);
            EXPECT_NEAR(noisy_expectation_dense(c, NoiseModel::noiseless(), obs), exact_expectation(c, obs), 1e-12);
        }
    }
}

TEST(Dense, GlobalModeOnHadamard) {
    Circuit c(1);
    hadamard(c, 0);
    NoiseModel m;
    m.set_global(0.1, {GateKind::SX});
    EXPECT_NEAR(noisy_expectation_dense(c, m, PauliObservable::single(0, Pauli::X)), 0.9, 1e-12);
    EXPECT_NEAR(noisy_expectation_kraus(c, m, PauliObservable::single(0, Pauli::X)), 0.9, 1e-12);
}

TEST(Dense, BellStateZZ) {
    const auto zz = PauliObservable::pair(0, Pauli::Z, 1, Pauli::Z);
    EXPECT_NEAR(noisy_expectation_dense(bell(), cnot_only(0.1), zz), 0.9, 1e-12);
    EXPECT_NEAR(noisy_expectation_kraus(bell(), cnot_only(0.1), zz), 0.9, 1e-12);
}

TEST(Dense, CapEnforced) {
    const Circuit c = build_random_hea(11, 1, 0);
    EXPECT_THROW(noisy_expectation_dense(c, NoiseModel::noiseless(), PauliObservable::single(0, Pauli::Z)),
                 CapacityError);
}

TEST(Dense, PauliBasisMatchesKrausSum) {
    NoiseSpec spec;
    spec.amplitude_damping = 0.01;
    spec.eps_1q = 0.02;
    spec.eps_2q = 0.05;
    const NoiseModel noise(spec);
    for (uint64_t seed = 0; seed < 6; ++seed) {
        const Circuit c = amplify_fiim(build_random_hea(4, 3, seed), 3);
        PauliSimulator sim(4);
        sim.run(compile_ptm_program(c, noise));
        const DensityMatrix ref = simulate_density_matrix(c, noise);
        EXPECT_LT((sim.to_density_matrix().matrix() - ref.matrix()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Dense, TraceAndPositivityAfterEveryGate) {
    NoiseSpec spec;
    spec.amplitude_damping = 0.05;
    const NoiseModel noise(spec);
    const Circuit c = build_random_hea(4, 3, 77);
    double worst_trace = 0, worst_herm = 0, min_eig = 1;
    simulate_density_matrix(c, noise, [&](size_t, const DensityMatrix &rho) {
        worst_trace = std::max(worst_trace, std::abs(rho.trace() - 1.0));
        worst_herm = std::max(worst_herm, rho.hermiticity_error());
        min_eig = std::min(min_eig, rho.min_eigenvalue());
    });
    EXPECT_LT(worst_trace, 1e-10);
    EXPECT_LT(worst_herm, 1e-10);
    EXPECT_GT(min_eig, -1e-10);
}

TEST(Dense, ConeRestrictionIsSoundUnderLocalNoise) {
    const NoiseModel noise{NoiseSpec{}};
    SimulationOptions full;
    full.restrict_to_cone = false;
    for (uint64_t seed = 0; seed < 8; ++seed) {
        const Circuit c = build_random_hea(7, 2, seed);
        for (const char *l : kObs) {
            const auto obs = PauliObservable::parse(l);
            EXPECT_NEAR(noisy_expectation(c, noise, obs), noisy_expectation(c, noise, obs, full), 1e-13);
        }
    }
}

TEST(Mpo, ProductCircuitKeepsUnitBonds) {
    Circuit c(5);
    for (uint32_t q = 0; q < 5; ++q) append_u(c, q, 0.3 * q, 1.1, 0.4);
    const MpoState s = simulate_mpo(c, NoiseModel(NoiseSpec{}));
    EXPECT_EQ(s.max_bond(), 1u);
}

TEST(Mpo, AgreesWithDenseOnSeededCircuits) {
    const NoiseModel noise{NoiseSpec{}};
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        const uint32_t q = 3 + static_cast<uint32_t>(uniform_index(rng, 4));
        const uint32_t p = 1 + static_cast<uint32_t>(uniform_index(rng, 4));
        const Circuit c = build_random_hea(q, p, rng());
        const MpoState s = simulate_mpo(c, noise);
        PauliSimulator dense(q);
        dense.run(compile_ptm_program(c, noise));
        const uint32_t mid = q / 2 - 1;
        for (const auto &obs : {PauliObservable::single(0, Pauli::X), PauliObservable::single(mid, Pauli::X),
                                PauliObservable::pair(0, Pauli::Z, 1, Pauli::Z),
                                PauliObservable::pair(mid, Pauli::Z, mid + 1, Pauli::Z)}) {
            EXPECT_NEAR(s.expectation(obs), dense.expectation(obs), 1e-8);
        }
        EXPECT_NEAR(s.trace().real(), 1.0, 1e-8);
        EXPECT_LE(static_cast<double>(s.max_bond()), std::pow(16.0, std::ceil(p / 2.0)));
        EXPECT_LE(s.max_growth_factor(), 16.0);
    }
}

TEST(Mpo, MatrixMatchesKrausReference) {
    const NoiseModel noise{NoiseSpec{}};
    const Circuit c = build_random_hea(4, 2, 9);
    const MpoState s = simulate_mpo(c, noise);
    const DensityMatrix ref = simulate_density_matrix(c, noise);
    EXPECT_LT((s.to_matrix() - ref.matrix()).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Mpo, GlobalModeMatchesDense) {
    NoiseModel m;
    m.set_global(0.05, {GateKind::CNOT});
    const Circuit c = build_random_hea(4, 3, 12);
    for (const char *l : kObs) {
        const auto obs = PauliObservable::parse(l);
        EXPECT_NEAR(noisy_expectation_mpo(c, m, obs), noisy_expectation_dense(c, m, obs), 1e-9);
    }
}

TEST(Mpo, Errors) {
    Circuit c(3);
    c.append(Gate::cnot(0, 2));
    EXPECT_THROW(noisy_expectation_mpo(c, NoiseModel::noiseless(), PauliObservable::single(0, Pauli::Z)),
                 ParameterError);
    EXPECT_THROW(noisy_expectation_mpo(build_random_hea(3, 1, 0), NoiseModel::noiseless(),
                                       PauliObservable::single(0, Pauli::Z), -1.0),
                 ParameterError);
}

TEST(Mpo, ReversedCnotHandled) {
    Circuit c(3);
    append_u(c, 0, 0.4, 0.3, 1.2);
    append_u(c, 1, 1.4, 0.2, 0.2);
    c.append(Gate::cnot(1, 0)).append(Gate::cnot(2, 1));
    append_u(c, 1, 0.9, 0.1, 0.5);
    const NoiseModel noise{NoiseSpec{}};
    for (const char *l : {"X0", "Y1", "Z1Z2", "X0Z1"}) {
        const auto obs = PauliObservable::parse(l);
        EXPECT_NEAR(noisy_expectation_mpo(c, noise, obs), noisy_expectation_kraus(c, noise, obs), 1e-10);
    }
}

TEST(Sampling, Examples) {
    EXPECT_EQ(sample_expectation(1.0, ShotConfig::finite(17, 3)), 1.0);
    EXPECT_EQ(sample_expectation(-1.0, ShotConfig::finite(17, 3)), -1.0);
    EXPECT_EQ(sample_expectation(0.37, ShotConfig::infinite()), 0.37);
    EXPECT_EQ(sample_expectation(1.0 + 1e-12, ShotConfig::infinite()), 1.0);
    EXPECT_THROW(sample_expectation(1.01, ShotConfig::infinite()), ParameterError);
    EXPECT_THROW(ShotConfig::finite(0, 1), ParameterError);
    EXPECT_EQ(sample_expectation(0.2, ShotConfig::finite(1000, 5)), sample_expectation(0.2, ShotConfig::finite(1000, 5)));
}

TEST(Sampling, ZeroMeanWithinThreeSigma) {
    int inside = 0;
    for (uint64_t seed = 0; seed < 1000; ++seed) {
        inside += std::abs(sample_expectation(0.0, ShotConfig::finite(10000, derive_seed(5, {seed})))) <= 0.03;
    }
    EXPECT_GE(inside, 990);
}

TEST(Sampling, Unbiased) {
    for (double mu : {-0.6, 0.1, 0.85}) {
        const uint64_t n = 100;
        double acc = 0;
        for (uint64_t seed = 0; seed < 10000; ++seed) {
            acc += sample_expectation(mu, ShotConfig::finite(n, derive_seed(9, {seed})));
        }
        EXPECT_NEAR(acc / 10000, mu, 4.0 / std::sqrt(n * 10000.0));
    }
}

TEST(CliffordSpan, OracleWeightsMatchClosedForm) {
    for (double beta : {0.3, 1.0, 2.5, 4.0}) {
        const auto w = oracle::clifford_span_weights(beta);
        EXPECT_NEAR(w[0], (1 + std::cos(beta) - std::sin(beta)) / 2, 1e-12);
        EXPECT_NEAR(w[1], std::sin(beta), 1e-12);
        EXPECT_NEAR(w[2], (1 - std::cos(beta) - std::sin(beta)) / 2, 1e-12);
    }
}

TEST(CliffordSpan, LinearInTheRotation) {
    const NoiseModel noisy{NoiseSpec{}};
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Circuit base = build_random_hea(3, 2, seed);
        // Snap every rotation to a quarter turn except one.
        size_t keep = 0;
        for (size_t k = 0; k < base.size(); ++k) {
            if (base[k].kind == GateKind::RZ) {
                base.set_rz_angle(k, std::round(base[k].angle / kHalfPi) * kHalfPi);
                keep = k;
            }
        }
        for (double beta : {0.3, 1.0, 2.5}) {
            const auto w = oracle::clifford_span_weights(beta);
            for (const char *l : {"X0", "Z1Z2"}) {
                const auto obs = PauliObservable::parse(l);
                auto value = [&](double b, const NoiseModel &m) {
                    return noisy_expectation_kraus(base.with_rz_angle(keep, b), m, obs);
                };
                for (const NoiseModel *m : {&noisy, static_cast<const NoiseModel *>(nullptr)}) {
                    const NoiseModel use = m ? *m : NoiseModel::noiseless();
                    const double lhs = value(beta, use);
                    const double rhs = w[0] * value(0, use) + w[1] * value(kHalfPi, use) +
                                       w[2] * value(std::numbers::pi, use);
                    EXPECT_NEAR(lhs, rhs, 1e-10);
                }
            }
        }
    }
}
