// Copyright 2026 The gaussree Authors
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

#include <cmath>

#include <gtest/gtest.h>

#include "gaussree/channels.h"
#include "gaussree/errors.h"
#include "gaussree/gaussian_info.h"
#include "gaussree/normal_form.h"
#include "gaussree/random_states.h"
#include "gaussree/separability.h"
#include "gaussree/symplectic.h"
#include "test_util.h"

namespace gaussree {
namespace {

NormalForm channel_normal_form(ChannelKind kind, double param, double n_th, double r) {
    ChannelParams p;
    p.kind = kind;
    p.lambda = p.eta = param;
    p.n_th = n_th;
    auto v = quasi_choi(build_channel(p), r);
    return NormalForm{v.entries()(0, 0), v.entries()(2, 2), v.entries()(0, 2)};
}

TEST(NormalFormTest, SpectrumMatchesGenericWilliamson) {
    NormalForm nf{3.0, 2.0, 1.0};
    auto closed = nf.symplectic_spectrum();
    auto generic = symplectic_spectrum(nf.to_covariance().entries());
    EXPECT_NEAR(closed[0], generic[0], 1e-12);
    EXPECT_NEAR(closed[1], generic[1], 1e-12);
    EXPECT_NEAR(NormalForm({2.0, 2.0, 1.0}).z_max(), std::sqrt(3.0), 1e-12);
}

TEST(TwirlTest, QuasiChoiIsAlreadyNormal) {
    ChannelParams p;
    p.lambda = 0.5;
    p.n_th = 2.0;
    auto red = twirl_to_normal_form(quasi_choi(build_channel(p), 1.0));
    EXPECT_TRUE(red.exact);
    EXPECT_NEAR(red.normal_form.x, 2.8810978455418157, 1e-12);
    EXPECT_NEAR(red.normal_form.y, 3.7621956910836314, 1e-12);
    EXPECT_NEAR(red.normal_form.z, 2.5645775888056344, 1e-12);
}

TEST(TwirlTest, Vacuum) {
    auto red = twirl_to_normal_form(CovarianceMatrix(1, 1, Matrix::Identity(4, 4)));
    EXPECT_TRUE(red.exact);
    EXPECT_EQ(red.normal_form.x, 1.0);
    EXPECT_EQ(red.normal_form.y, 1.0);
    EXPECT_EQ(red.normal_form.z, 0.0);
}

TEST(TwirlTest, WrongPartitionRejected) {
    EXPECT_THROW(twirl_to_normal_form(CovarianceMatrix(2, 0, Matrix::Identity(4, 4))), ValidationError);
}

TEST(TwirlTest, SigmaZeroCorrelationIsNotLocallyNormal) {
    // det C is a local invariant, so zσ0 cannot be rotated into zσ3.
    Matrix v = testing::normal_form_matrix(3.0, 2.0, 0.0);
    v(0, 2) = v(2, 0) = v(1, 3) = v(3, 1) = 1.0;
    CovarianceMatrix cov(1, 1, v);
    auto twirled = twirl_to_normal_form(cov);
    EXPECT_FALSE(twirled.exact);
    EXPECT_EQ(twirled.normal_form.x, 3.0);
    EXPECT_EQ(twirled.normal_form.y, 2.0);
    EXPECT_EQ(twirled.normal_form.z, 0.0);
    auto local = local_normal_form(cov);
    EXPECT_FALSE(local.exact);
    EXPECT_NEAR(local.normal_form.x, 3.0, 1e-12);
    EXPECT_NEAR(local.normal_form.y, 2.0, 1e-12);
}

TEST(LocalNormalFormProperty, RecoversNormalFormUnderLocalSymplectics) {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        NormalForm nf = random_normal_form(rng);
        Matrix s = direct_sum(random_symplectic(1, rng, 0.6), random_symplectic(1, rng, 0.6));
        CovarianceMatrix v(1, 1, s * nf.to_covariance().entries() * s.transpose());
        auto red = local_normal_form(v);
        ASSERT_TRUE(red.exact) << "trial " << trial;
        ASSERT_NEAR(red.normal_form.x, nf.x, 1e-9 * nf.x);
        ASSERT_NEAR(red.normal_form.y, nf.y, 1e-9 * nf.y);
        ASSERT_NEAR(std::abs(red.normal_form.z), std::abs(nf.z), 1e-8 * std::max(1.0, nf.x));
    }
}

TEST(BorderPointProperty, ReconstructionIsBorderSeparable) {
    Rng rng(21);
    std::uniform_real_distribution<double> log_nu(-8.0, 5.0);
    for (int trial = 0; trial < 1000; ++trial) {
        BorderPoint p{1.0 + std::exp(log_nu(rng)), 1.0 + std::exp(log_nu(rng))};
        NormalForm nf = p.to_normal_form(trial % 2 ? 1.0 : -1.0);
        double border = (nf.x - 1.0) * (nf.y - 1.0);
        ASSERT_NEAR(nf.z * nf.z, border, 1e-10 * std::max(1.0, border));
        auto spectrum = symplectic_spectrum(nf.to_covariance().entries());
        double hi = std::max(p.nu1, p.nu2), lo = std::min(p.nu1, p.nu2);
        ASSERT_NEAR(spectrum[0], hi, 1e-9 * hi);
        ASSERT_NEAR(spectrum[1], lo, 1e-9 * hi);
        ASSERT_TRUE(is_separable_two_mode(nf));
    }
}

TEST(ObjectiveTest, ZeroAtRho) {
    NormalForm rho{3.0, 2.5, 1.8};
    EXPECT_NEAR(objective_f(rho, gibbs_normal(rho), log2_z(rho)), 0.0, 1e-12);
}

TEST(ObjectiveTest, VacuumAgainstThermalProductIsAdditive) {
    NormalForm rho{3.0, 2.0, 0.0};
    NormalForm vacuum{1.0, 1.0, 0.0};
    double expected = relative_entropy(Matrix::Identity(2, 2), 3.0 * Matrix::Identity(2, 2)) +
                      relative_entropy(Matrix::Identity(2, 2), 2.0 * Matrix::Identity(2, 2));
    EXPECT_NEAR(objective_f(vacuum, gibbs_normal(rho), log2_z(rho)), expected, 1e-12);
    EXPECT_NEAR(expected, 1.0 + std::log2(1.5), 1e-12);
}

TEST(ObjectiveTest, MatchesRelativeEntropy) {
    Rng rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        NormalForm rho = random_entangled_normal_form(rng);
        NormalForm sigma = random_normal_form(rng);
        double f = objective_f(sigma, gibbs_normal(rho), log2_z(rho));
        double d = relative_entropy(sigma.to_covariance().entries(), rho.to_covariance().entries());
        ASSERT_NEAR(f, d, 1e-9 * std::max(1.0, d));
    }
}

TEST(ObjectiveProperty, SignFlipSymmetry) {
    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        NormalForm rho = random_entangled_normal_form(rng);
        NormalForm sigma = random_normal_form(rng);
        GibbsNormal g = gibbs_normal(rho);
        GibbsNormal flipped = g;
        flipped.gamma = -g.gamma;
        NormalForm sigma_flipped = sigma;
        sigma_flipped.z = -sigma.z;
        double z = log2_z(rho);
        ASSERT_NEAR(objective_f(sigma, g, z), objective_f(sigma_flipped, flipped, z), 1e-12);
    }
}

TEST(ObjectiveProperty, EntropyTermSwapSymmetry) {
    Rng rng(10);
    for (int trial = 0; trial < 200; ++trial) {
        NormalForm sigma = random_normal_form(rng);
        NormalForm swapped{sigma.y, sigma.x, sigma.z};
        auto a = sigma.symplectic_spectrum();
        auto b = swapped.symplectic_spectrum();
        ASSERT_NEAR(bosonic_g(a[0]) + bosonic_g(a[1]), bosonic_g(b[0]) + bosonic_g(b[1]), 1e-12);
        NormalForm rho = random_entangled_normal_form(rng);
        GibbsNormal g = gibbs_normal(rho);
        GibbsNormal gs{g.beta, g.alpha, g.gamma};
        ASSERT_NEAR(objective_f(sigma, g, 1.0), objective_f(swapped, gs, 1.0), 1e-10);
    }
}

TEST(SolveReducedTest, SeparableRhoIsTrivial) {
    auto sol = solve_reduced(NormalForm{3.0, 3.0, 1.0});
    EXPECT_TRUE(sol.trivial);
    EXPECT_EQ(sol.value_bits, 0.0);
}

TEST(SolveReducedTest, AttenuatorLargeSqueezing) {
    auto sol = solve_reduced(channel_normal_form(ChannelKind::attenuator, 0.5, 2.0, 5.0));
    EXPECT_NEAR(sol.value_bits, 0.1699244, 1e-2);
    EXPECT_NEAR(std::min(sol.point.nu1, sol.point.nu2), 3.0, 1e-2);
    auto sigma_spectrum = sol.sigma.symplectic_spectrum();
    EXPECT_NEAR(std::min(sigma_spectrum[0], sigma_spectrum[1]), 3.0, 1e-2);
}

TEST(SolveReducedTest, AmplifierLargeSqueezing) {
    auto sol = solve_reduced(channel_normal_form(ChannelKind::amplifier, 2.0, 2.0, 5.0));
    EXPECT_NEAR(sol.value_bits, 0.1699244, 1e-2);
    EXPECT_NEAR(std::min(sol.point.nu1, sol.point.nu2), 3.0, 1e-2);
}

TEST(SolveReducedTest, OptimumIsBorderSeparableWithReversedSign) {
    Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        NormalForm rho = random_entangled_normal_form(rng);
        auto sol = solve_reduced(rho);
        GibbsNormal g = gibbs_normal(rho);
        ASSERT_FALSE(sol.trivial);
        ASSERT_LT(std::abs(sol.residuals.d_nu1), 1e-6);
        ASSERT_LT(std::abs(sol.residuals.d_nu2), 1e-6);
        double border = (sol.sigma.x - 1.0) * (sol.sigma.y - 1.0);
        ASSERT_NEAR(sol.sigma.z * sol.sigma.z, border, 1e-9 * std::max(1.0, border));
        ASSERT_LT(sol.sigma.z * g.gamma, 0.0);
        double d = relative_entropy(sol.sigma.to_covariance().entries(), rho.to_covariance().entries());
        ASSERT_NEAR(sol.value_bits, d, 1e-8 * std::max(1.0, d));
        ASSERT_GT(sol.value_bits, 0.0);
    }
}

TEST(SolveReducedTest, BeatsNeighbouringBorderPoints) {
    Rng rng(34);
    for (int trial = 0; trial < 30; ++trial) {
        NormalForm rho = random_entangled_normal_form(rng);
        auto sol = solve_reduced(rho);
        GibbsNormal g = gibbs_normal(rho);
        double zr = log2_z(rho);
        for (double f1 : {0.98, 1.02}) {
            for (double f2 : {0.98, 1.02}) {
                BorderPoint q{1.0 + (sol.point.nu1 - 1.0) * f1, 1.0 + (sol.point.nu2 - 1.0) * f2};
                double sign = sol.sigma.z >= 0 ? 1.0 : -1.0;
                ASSERT_GE(objective_f(q.to_normal_form(sign), g, zr), sol.value_bits - 1e-12);
            }
        }
    }
}

TEST(SolveReducedTest, NonFaithfulRhoIsError) {
    double c = std::cosh(2.0), s = std::sinh(2.0);
    EXPECT_THROW(solve_reduced(NormalForm{c, c, s}), NotFaithfulError);
}

}  // namespace
}  // namespace gaussree
