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
#include <map>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "vncdr/causal_cone.hpp"
#include "vncdr/clifford_training.hpp"
#include "vncdr/errors.hpp"
#include "vncdr/rng.hpp"

using namespace vncdr;

namespace {

constexpr double kPi = std::numbers::pi;

// One qubit, k rotations at the same angle separated by SX pulses.
Circuit rotation_chain(size_t k, double beta) {
    Circuit c(1);
    for (size_t i = 0; i < k; ++i) {
        c.append(Gate::sx(0)).append(Gate::rz(0, beta));
    }
    c.append(Gate::sx(0));
    return c;
}

// (gate index, quarter-turn) of the single replacement between a and b.
std::pair<size_t, int> replacement(const Circuit &a, const Circuit &b) {
    for (size_t k = 0; k < a.size(); ++k) {
        if (a[k].angle != b[k].angle) {
            return {k, static_cast<int>(std::lround(b[k].angle / kHalfPi)) % 4};
        }
    }
    return {SIZE_MAX, -1};
}

}  // namespace

TEST(CliffordDistance, ZeroOnQuarterTurns) {
    for (int n = 0; n < 4; ++n) {
        EXPECT_NEAR(clifford_distance(n * kHalfPi, n), 0.0, 1e-7);
    }
}

TEST(CliffordDistance, SmallAngleAgreesWithMatrixOracle) {
    const double d = clifford_distance(0.1, 0);
    EXPECT_NEAR(d, std::sqrt(4 - 4 * std::cos(0.05)), 1e-15);
    EXPECT_NEAR(d, 0.0707033, 1e-6);
    for (double beta : {0.1, 0.9, 2.2, 5.5}) {
        for (int n = 0; n < 4; ++n) {
            EXPECT_NEAR(clifford_distance(beta, n), oracle::phase_min_distance(oracle::rz(beta), oracle::rz(n * kHalfPi)),
                        1e-7);
        }
    }
}

TEST(CliffordDistance, LiteralVariantUsesSPowers) {
    // S = exp(i pi/4 Z); S^n as an explicit matrix.
    for (double beta : {0.2, 1.7, 3.9}) {
        for (int n = 0; n < 4; ++n) {
            Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
            s(0, 0) = std::exp(std::complex<double>(0, n * kPi / 4));
            s(1, 1) = std::exp(std::complex<double>(0, -n * kPi / 4));
            EXPECT_NEAR(clifford_distance(beta, n, DistanceConvention::LiteralFrobenius),
                        (oracle::rz(beta) - s).norm(), 1e-12);
        }
    }
}

TEST(CliffordDistance, TieBreaksToLowestN) {
    const double beta = 3 * kPi / 4;
    EXPECT_NEAR(clifford_distance(beta, 1), clifford_distance(beta, 2), 1e-14);
    EXPECT_EQ(closest_clifford(beta), 1);
    EXPECT_EQ(closest_clifford(kPi / 4), 0);
    EXPECT_THROW(clifford_distance(0.1, 4), ParameterError);
    EXPECT_THROW(clifford_distance(0.1, -1), ParameterError);
}

TEST(SubstituteSimple, KeepAllIsIdentityAndZeroIsClifford) {
    const Circuit c = build_random_hea(5, 3, 4);
    const auto total = static_cast<uint32_t>(count_non_clifford(c));
    EXPECT_EQ(substitute_simple(c, total, 1), c);
    EXPECT_EQ(count_non_clifford(substitute_simple(c, 0, 1)), 0u);
    EXPECT_THROW(substitute_simple(c, total + 1, 1), ParameterError);
}

TEST(SubstituteSimple, SingleSmallRotationSnapsToZero) {
    Circuit c(2);
    c.append(Gate::cnot(0, 1)).append(Gate::rz(0, kHalfPi)).append(Gate::sx(0)).append(Gate::rz(0, kHalfPi));
    c.append(Gate::rz(0, 0.1));
    const Circuit s = substitute_simple(c, 0, 3);
    EXPECT_EQ(s[4].angle, 0.0);
    const auto obs = PauliObservable::parse("X0");
    const double shift = std::abs(exact_expectation(c, obs) - exact_expectation(s, obs));
    EXPECT_GT(shift, 1e-3);
    EXPECT_LT(shift, 0.1);
}

TEST(Substitution, PreservesShapeAndHitsExactCount) {
    const Circuit c = build_random_hea(6, 4, 21);
    const auto obs = PauliObservable::parse("X2");
    const CausalCone cone = causal_cone(c, obs);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const Circuit s1 = substitute_simple(c, 10, seed);
        SubstitutionStrategy strat;
        strat.variant = SubstitutionStrategy::Variant::ConeWeighted;
        strat.non_clifford = 10;
        strat.seed = seed;
        const Circuit s2 = substitute_cone_weighted(c, obs, strat);
        EXPECT_EQ(count_non_clifford(s1), 10u);
        EXPECT_EQ(count_non_clifford(s2, &cone), 10u);
        EXPECT_EQ(count_non_clifford(s2), 10u);  // everything outside was snapped
        for (const Circuit *s : {&s1, &s2}) {
            ASSERT_EQ(s->size(), c.size());
            for (size_t k = 0; k < c.size(); ++k) {
                EXPECT_EQ((*s)[k].kind, c[k].kind);
                EXPECT_EQ((*s)[k].q0, c[k].q0);
                EXPECT_EQ((*s)[k].q1, c[k].q1);
                if ((*s)[k].angle != c[k].angle) {
                    EXPECT_TRUE(is_clifford((*s)[k]));
                }
            }
        }
        EXPECT_EQ(substitute_cone_weighted(c, obs, strat), s2);
        EXPECT_EQ(causal_cone(s2, obs).in_cone, cone.in_cone);
    }
}

TEST(SubstituteConeWeighted, NearZeroCandidateDominates) {
    // One gate at 1e-9: weights exp(-d^2/sigma^2) for n = 0..3.
    const Circuit c = rotation_chain(1, 1e-9);
    SubstitutionStrategy strat;
    strat.variant = SubstitutionStrategy::Variant::ConeWeighted;
    strat.non_clifford = 0;
    std::map<int, int> counts;
    const int draws = 10000;
    for (int t = 0; t < draws; ++t) {
        strat.seed = derive_seed(44, {static_cast<uint64_t>(t)});
        counts[replacement(c, substitute_cone_weighted(c, PauliObservable::parse("Z0"), strat)).second]++;
    }
    double w[4], total = 0;
    for (int n = 0; n < 4; ++n) {
        const double d = clifford_distance(1e-9, n);
        w[n] = std::exp(-d * d / 0.25);
        total += w[n];
    }
    const double p0 = w[0] / total;
    EXPECT_NEAR(counts[0] / double(draws), p0, 4 * std::sqrt(p0 * (1 - p0) / draws));
    EXPECT_EQ(counts[2], 0);  // weight ratio e^-16
}

TEST(SubstituteConeWeighted, EquidistantCandidatesAreUniform) {
    // Four gates at pi/4: every (gate, n in {0,1}) pair has the same weight.
    const Circuit c = rotation_chain(4, kPi / 4);
    SubstitutionStrategy strat;
    strat.variant = SubstitutionStrategy::Variant::ConeWeighted;
    strat.non_clifford = 3;
    std::map<std::pair<size_t, int>, int> counts;
    int kept = 0;
    for (int t = 0; t < 10000; ++t) {
        strat.seed = derive_seed(45, {static_cast<uint64_t>(t)});
        const auto r = replacement(c, substitute_cone_weighted(c, PauliObservable::parse("Z0"), strat));
        if (r.second == 0 || r.second == 1) {
            counts[r]++;
            ++kept;
        }
    }
    ASSERT_EQ(counts.size(), 8u);
    const double expected = kept / 8.0;
    double chi2 = 0;
    for (const auto &[key, n] : counts) {
        chi2 += (n - expected) * (n - expected) / expected;
    }
    EXPECT_LT(chi2, 24.32);  // 7 degrees of freedom, p = 0.001
}

TEST(SubstituteConeWeighted, Errors) {
    const Circuit c = rotation_chain(2, 0.4);
    SubstitutionStrategy strat;
    strat.variant = SubstitutionStrategy::Variant::ConeWeighted;
    strat.non_clifford = 3;
    EXPECT_THROW(substitute_cone_weighted(c, PauliObservable::parse("Z0"), strat), ParameterError);
    strat.non_clifford = 0;
    strat.sigma = 0;
    EXPECT_THROW(substitute_cone_weighted(c, PauliObservable::parse("Z0"), strat), ParameterError);
}

TEST(TrainingData, NoiselessRowsAreExact) {
    const Circuit c = build_random_hea(4, 2, 6);
    SubstitutionStrategy strat;
    strat.non_clifford = 5;
    strat.seed = 8;
    const auto data = build_training_data(c, PauliObservable::parse("Z1Z2"), strat, 12, NoiseLevelSet::odd(3),
                                          NoiseModel::noiseless(), ShotConfig::infinite());
    ASSERT_EQ(data.rows(), 12u);
    for (size_t i = 0; i < data.rows(); ++i) {
        for (double x : data.x[i]) {
            EXPECT_NEAR(x, data.y[i], 1e-12);
        }
    }
}

TEST(TrainingData, GlobalModeRowsObeyAffineLaw) {
    const Circuit c = build_random_hea(4, 3, 16);
    const double eps = 0.02;
    const NoiseModel noise(NoiseSpec::global(eps));
    const NoiseLevelSet levels = NoiseLevelSet::odd(3);
    SubstitutionStrategy strat;
    strat.variant = SubstitutionStrategy::Variant::ConeWeighted;
    strat.non_clifford = 4;
    strat.seed = 3;
    const auto obs = PauliObservable::parse("X1");
    const auto data = build_training_data(c, obs, strat, 10, levels, noise, ShotConfig::infinite());
    const double l = static_cast<double>(c.cnot_count());
    for (size_t i = 0; i < data.rows(); ++i) {
        for (size_t j = 0; j < levels.size(); ++j) {
            const double f = std::pow(1 - eps, l * levels[j]);
            EXPECT_NEAR(data.x[i][j], f * data.y[i], 1e-10);
        }
    }
}

TEST(TrainingData, CsvRoundTrip) {
    TrainingData d{NoiseLevelSet::odd(2), {}, {}, {}};
    d.add_row({0.25, 0.125}, 0.5, "c0");
    d.add_row({-0.1 / 3, 0.7}, 1.0 / 7, "c1");
    std::stringstream ss;
    write_training_csv(ss, d);
    EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')), "circuit_id,y,x_c1,x_c3");
    const TrainingData back = read_training_csv(ss);
    EXPECT_EQ(back.x, d.x);
    EXPECT_EQ(back.y, d.y);
    EXPECT_EQ(back.labels, d.labels);
    EXPECT_THROW(d.add_row({0.1}, 0.1), ParameterError);
}

TEST(TrainingData, ConeWeightedDiversityReport) {
    // Reported, not asserted: spread of exact training values per strategy.
    const Circuit c = build_random_hea(8, 6, 2024);
    const auto obs = PauliObservable::parse("X3");
    auto variance = [&](SubstitutionStrategy::Variant v) {
        SubstitutionStrategy s;
        s.variant = v;
        s.non_clifford = 20;
        s.seed = 77;
        std::vector<double> ys;
        for (const auto &t : generate_training_circuits(c, obs, s, 100)) {
            ys.push_back(exact_expectation(t, obs));
        }
        double mean = 0, var = 0;
        for (double y : ys) mean += y / ys.size();
        for (double y : ys) var += (y - mean) * (y - mean) / ys.size();
        return var;
    };
    const double simple = variance(SubstitutionStrategy::Variant::Simple);
    const double weighted = variance(SubstitutionStrategy::Variant::ConeWeighted);
    RecordProperty("variance_simple", std::to_string(simple));
    RecordProperty("variance_cone_weighted", std::to_string(weighted));
    std::printf("training-value variance: simple %.4g, cone-weighted %.4g\n", simple, weighted);
    SUCCEED();
}
