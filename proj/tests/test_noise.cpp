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

#include "vncdr/channel_algebra.hpp"
#include "vncdr/density_matrix.hpp"
#include "vncdr/errors.hpp"
#include "vncdr/noise.hpp"
#include "vncdr/rng.hpp"
#include "vncdr/simulate.hpp"

using namespace vncdr;

TEST(Depolarizing, ZeroIsIdentity) {
    const KrausChannel ch = depolarizing_channel(0.0, 1);
    ASSERT_EQ(ch.ops.size(), 1u);
    EXPECT_TRUE(ch.ops[0].isApprox(Eigen::MatrixXcd::Identity(2, 2), 1e-15));
}

TEST(Depolarizing, FullStrengthMixesEverything) {
    const KrausChannel ch = depolarizing_channel(1.0, 1);
    Eigen::MatrixXcd rho(2, 2);
    rho << 0.7, cdouble(0.1, 0.3), cdouble(0.1, -0.3), 0.3;
    DensityMatrix dm(rho);
    const uint32_t q = 0;
    dm.apply_channel(ch, std::span(&q, 1));
    EXPECT_TRUE(dm.matrix().isApprox(0.5 * Eigen::MatrixXcd::Identity(2, 2), 1e-14));
}

TEST(Depolarizing, ShrinksTracelessExpectation) {
    // A state with <X> = 0.8: rho = (I + 0.8 X)/2.
    Eigen::MatrixXcd rho(2, 2);
    rho << 0.5, 0.4, 0.4, 0.5;
    DensityMatrix dm(rho);
    const uint32_t q = 0;
    dm.apply_channel(depolarizing_channel(0.1, 1), std::span(&q, 1));
    EXPECT_NEAR(dm.expectation(PauliObservable::single(0, Pauli::X)), 0.72, 1e-14);
}

TEST(Depolarizing, RejectsOutOfRange) {
    EXPECT_THROW(depolarizing_channel(-0.1, 1), ParameterError);
    EXPECT_THROW(depolarizing_channel(1.1, 2), ParameterError);
}

TEST(ValidateChannel, Examples) {
    EXPECT_TRUE(validate_channel(depolarizing_channel(0.3, 1)));
    EXPECT_TRUE(validate_channel(depolarizing_channel(0.3, 2)));
    EXPECT_FALSE(validate_channel(KrausChannel{1, {0.5 * Eigen::MatrixXcd::Identity(2, 2)}}));
    // Amplitude damping written out by hand.
    const double g = 0.2;
    Eigen::MatrixXcd k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1 - g);
    k1 << 0, std::sqrt(g), 0, 0;
    EXPECT_TRUE(validate_channel(KrausChannel{1, {k0, k1}}));
    const KrausChannel lib = amplitude_damping_channel(g);
    ASSERT_EQ(lib.ops.size(), 2u);
    EXPECT_TRUE(lib.ops[0].isApprox(k0));
    EXPECT_TRUE(lib.ops[1].isApprox(k1));
}

TEST(ValidateChannel, ConstructedChannelsAreComplete) {
    NoiseSpec spec;
    spec.amplitude_damping = 0.001;
    const NoiseModel model(spec);
    for (GateKind k : {GateKind::RZ, GateKind::SX, GateKind::CNOT}) {
        ASSERT_NE(model.channel_for(k), nullptr);
        EXPECT_TRUE(validate_channel(*model.channel_for(k)));
    }
    EXPECT_TRUE(validate_channel(compose(depolarizing_channel(0.2, 2), tensor(amplitude_damping_channel(0.1),
                                                                              amplitude_damping_channel(0.3)))));
}

TEST(NoiseModel, ArityMustMatch) {
    NoiseModel m;
    EXPECT_THROW(m.set_channel(GateKind::CNOT, depolarizing_channel(0.1, 1)), ParameterError);
    EXPECT_THROW(m.set_channel(GateKind::SX, KrausChannel{1, {0.5 * Eigen::MatrixXcd::Identity(2, 2)}}),
                 ParameterError);
}

TEST(GlobalDepolarizingFormula, Examples) {
    EXPECT_DOUBLE_EQ(apply_global_depolarizing(0.37, 0.5, 0.3, 0), 0.37);
    EXPECT_NEAR(apply_global_depolarizing(0.8, 0.0, 0.1, 3), 0.5832, 1e-15);
    EXPECT_NEAR(apply_global_depolarizing(1.0, 0.5, 0.2, 1), 0.9, 1e-15);
}

TEST(GlobalDepolarizingFormula, AffineWithExactSlope) {
    for (int times : {0, 1, 4, 9}) {
        const double f0 = apply_global_depolarizing(0.0, 0.25, 0.07, times);
        const double f1 = apply_global_depolarizing(1.0, 0.25, 0.07, times);
        EXPECT_NEAR(f1 - f0, std::pow(0.93, times), 1e-15);
        EXPECT_NEAR(apply_global_depolarizing(0.4, 0.25, 0.07, times), f0 + 0.4 * (f1 - f0), 1e-15);
    }
}

TEST(NoiseLevelSet, Validation) {
    EXPECT_NO_THROW(NoiseLevelSet({1, 3, 5}));
    EXPECT_THROW(NoiseLevelSet({3, 5}), ParameterError);
    EXPECT_THROW(NoiseLevelSet({1, 2}), ParameterError);
    EXPECT_THROW(NoiseLevelSet({1, 5, 3}), ParameterError);
    EXPECT_EQ(NoiseLevelSet::odd(5).levels(), (std::vector<uint32_t>{1, 3, 5, 7, 9}));
}

TEST(Fiim, LevelOneIsIdentity) {
    const Circuit c = build_random_hea(5, 3, 2);
    EXPECT_EQ(amplify_fiim(c, 1), c);
    for (uint32_t k : {3u, 5u, 7u}) {
        EXPECT_EQ(amplify_fiim(amplify_fiim(c, 1), k), amplify_fiim(c, k));
    }
}

TEST(Fiim, TriplesCnotsAndKeepsTheRest) {
    const Circuit c = build_qaoa_ising(QaoaParams{8, {0.3, 0.4, 0.5, 0.6}, {0.2, 0.1, 0.7, 0.9}, 2.0});
    ASSERT_EQ(c.cnot_count(), 56u);
    const Circuit a = amplify_fiim(c, 3);
    EXPECT_EQ(a.cnot_count(), 168u);
    std::vector<Gate> rest_c, rest_a;
    for (const auto &g : c.gates()) if (g.kind != GateKind::CNOT) rest_c.push_back(g);
    for (const auto &g : a.gates()) if (g.kind != GateKind::CNOT) rest_a.push_back(g);
    EXPECT_EQ(rest_c, rest_a);
}

TEST(Fiim, RejectsEvenOrZeroLevel) {
    const Circuit c = build_random_hea(3, 1, 0);
    EXPECT_THROW(amplify_fiim(c, 0), ParameterError);
    EXPECT_THROW(amplify_fiim(c, 2), ParameterError);
}

TEST(Fiim, NoiselessExpectationUnchanged) {
    const Circuit c = build_random_hea(6, 3, 8);
    for (const char *label : {"X0", "Z2Z3", "Y5"}) {
        const auto obs = PauliObservable::parse(label);
        const double base = exact_expectation(c, obs);
        for (uint32_t k : {3u, 5u, 9u}) {
            EXPECT_NEAR(exact_expectation(amplify_fiim(c, k), obs), base, 1e-12);
            EXPECT_NEAR(noisy_expectation(amplify_fiim(c, k), NoiseModel::noiseless(), obs), base, 1e-12);
        }
    }
}

TEST(Fiim, MagnitudeDecaysWithLevel) {
    const NoiseModel noise{NoiseSpec{}};
    int violations = 0;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const Circuit c = build_random_hea(5, 3, 1000 + seed);
        for (const char *label : {"X0", "Z1Z2"}) {
            const auto obs = PauliObservable::parse(label);
            double prev = 2.0;
            for (uint32_t k : {1u, 3u, 5u, 7u, 9u}) {
                const double v = std::abs(noisy_expectation(amplify_fiim(c, k), noise, obs));
                if (v > prev + 1e-12) {
                    ++violations;
                }
                prev = v;
            }
        }
    }
    EXPECT_EQ(violations, 0);
}
