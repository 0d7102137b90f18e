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
#include "gaussree/normal_form.h"
#include "gaussree/random_states.h"
#include "gaussree/separability.h"
#include "gaussree/symplectic.h"

namespace gaussree {
namespace {

ChannelParams attenuator(double lambda, double n_th) {
    ChannelParams p;
    p.kind = ChannelKind::attenuator;
    p.lambda = lambda;
    p.n_th = n_th;
    return p;
}

ChannelParams amplifier(double eta, double n_th) {
    ChannelParams p;
    p.kind = ChannelKind::amplifier;
    p.eta = eta;
    p.n_th = n_th;
    return p;
}

ChannelParams additive(double mu) {
    ChannelParams p;
    p.kind = ChannelKind::additive_noise;
    p.mu = mu;
    return p;
}

NormalForm read_normal_form(const CovarianceMatrix &v) {
    return NormalForm{v.entries()(0, 0), v.entries()(2, 2), v.entries()(0, 2)};
}

TEST(BuildChannelTest, Attenuator) {
    auto ch = build_channel(attenuator(0.5, 2.0));
    EXPECT_TRUE(ch.x_matrix.isApprox(std::sqrt(0.5) * Matrix::Identity(2, 2)));
    EXPECT_TRUE(ch.y_matrix.isApprox(Matrix::Identity(2, 2)));
    EXPECT_EQ(ch.n_modes(), 1);
}

TEST(BuildChannelTest, IdentityAndAdditiveNoise) {
    auto ch = build_channel(additive(0.0));
    EXPECT_TRUE(ch.x_matrix.isApprox(Matrix::Identity(2, 2)));
    EXPECT_TRUE(ch.y_matrix.isZero(0.0));
    ChannelParams id;
    id.kind = ChannelKind::identity;
    auto ch2 = build_channel(id);
    EXPECT_TRUE(ch2.x_matrix.isApprox(Matrix::Identity(2, 2)));
    EXPECT_TRUE(ch2.y_matrix.isZero(0.0));
    EXPECT_TRUE(build_channel(additive(0.7)).y_matrix.isApprox(0.7 * Matrix::Identity(2, 2)));
}

TEST(BuildChannelTest, QuantumLimitedAmplifier) {
    auto ch = build_channel(amplifier(2.0, 1.0));
    EXPECT_TRUE(ch.x_matrix.isApprox(std::sqrt(2.0) * Matrix::Identity(2, 2)));
    EXPECT_TRUE(ch.y_matrix.isApprox(Matrix::Identity(2, 2)));
    EXPECT_NEAR(ch.complete_positivity_margin(), 0.0, 1e-12);
}

TEST(BuildChannelTest, PureLossIsAttenuatorWithVacuumNoise) {
    ChannelParams p;
    p.kind = ChannelKind::pure_loss;
    p.lambda = 0.3;
    p.n_th = 5.0;
    auto ch = build_channel(p);
    auto ref = build_channel(attenuator(0.3, 1.0));
    EXPECT_TRUE(ch.x_matrix.isApprox(ref.x_matrix));
    EXPECT_TRUE(ch.y_matrix.isApprox(ref.y_matrix));
}

TEST(BuildChannelTest, RejectsOutOfRangeParameters) {
    EXPECT_THROW(build_channel(attenuator(1.5, 2.0)), ValidationError);
    EXPECT_THROW(build_channel(attenuator(0.5, 0.5)), ValidationError);
    EXPECT_THROW(build_channel(amplifier(0.5, 2.0)), ValidationError);
    EXPECT_THROW(build_channel(additive(-0.1)), ValidationError);
}

TEST(ChannelKindTest, NamesRoundTrip) {
    for (auto kind : {ChannelKind::attenuator, ChannelKind::amplifier, ChannelKind::additive_noise,
                      ChannelKind::pure_loss, ChannelKind::identity, ChannelKind::custom}) {
        EXPECT_EQ(channel_kind_from_string(to_string(kind)), kind);
    }
    EXPECT_EQ(channel_kind_from_string("additive_noise"), ChannelKind::additive_noise);
    EXPECT_THROW(channel_kind_from_string("dephasing"), ValidationError);
}

TEST(ChannelParamsTest, SeparabilityThreshold) {
    EXPECT_DOUBLE_EQ(attenuator(0.5, 2.0).n_sep(), 3.0);
    EXPECT_DOUBLE_EQ(amplifier(2.0, 2.0).n_sep(), 3.0);
    EXPECT_TRUE(std::isinf(attenuator(1.0, 2.0).n_sep()));
}

TEST(MakeChannelTest, RejectsNonCompletelyPositiveMaps) {
    EXPECT_THROW(make_channel(2.0 * Matrix::Identity(2, 2), Matrix::Zero(2, 2)), ValidationError);
    EXPECT_THROW(make_channel(Matrix::Identity(2, 2), -0.1 * Matrix::Identity(2, 2)), ValidationError);
    EXPECT_THROW(make_channel(Matrix::Identity(2, 2), Matrix::Identity(4, 4)), ValidationError);
    EXPECT_NO_THROW(make_channel(0.5 * Matrix::Identity(2, 2), 0.75 * Matrix::Identity(2, 2)));
}

TEST(QuasiChoiTest, AttenuatorExample) {
    auto v = quasi_choi(build_channel(attenuator(0.5, 2.0)), 1.0);
    EXPECT_EQ(v.n_modes_a(), 1);
    EXPECT_EQ(v.n_modes_b(), 1);
    auto nf = read_normal_form(v);
    EXPECT_NEAR(nf.x, 2.8810978455418157, 1e-12);
    EXPECT_NEAR(nf.y, 3.7621957, 5e-8);
    // sinh(2)·√0.5 evaluated directly.
    EXPECT_NEAR(nf.z, 2.5645775888056344, 1e-12);
    EXPECT_NEAR(v.entries()(1, 3), -nf.z, 1e-15);
}

TEST(QuasiChoiTest, IdentityChannelGivesPureState) {
    for (double r : {0.3, 1.0, 2.0}) {
        auto v = quasi_choi(build_channel(additive(0.0)), r);
        auto nf = read_normal_form(v);
        EXPECT_NEAR(nf.x, std::cosh(2 * r), 1e-12);
        EXPECT_NEAR(nf.z, std::sinh(2 * r), 1e-12);
        for (double nu : symplectic_spectrum(v.entries())) EXPECT_NEAR(nu, 1.0, 1e-7);
    }
}

TEST(QuasiChoiTest, ZeroSqueezingIsProduct) {
    auto ch = build_channel(attenuator(0.5, 2.0));
    auto v = quasi_choi(ch, 0.0);
    EXPECT_TRUE(v.block_ab().isZero(0.0));
    EXPECT_TRUE(v.block_a().isApprox(ch.x_matrix * ch.x_matrix.transpose() + ch.y_matrix));
    EXPECT_TRUE(v.block_b().isApprox(Matrix::Identity(2, 2)));
    EXPECT_TRUE(is_separable_two_mode(read_normal_form(v)));
}

TEST(QuasiChoiTest, NegativeSqueezingRejected) {
    EXPECT_THROW(quasi_choi(build_channel(additive(1.0)), -0.1), ValidationError);
}

TEST(QuasiChoiProperty, AlwaysBonaFide) {
    Rng rng(4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        ChannelParams p;
        switch (trial % 3) {
            case 0: p = attenuator(unit(rng), 1.0 + 4.0 * unit(rng)); break;
            case 1: p = amplifier(1.0 + 3.0 * unit(rng), 1.0 + 4.0 * unit(rng)); break;
            default: p = additive(3.0 * unit(rng)); break;
        }
        double r = 4.0 * unit(rng);
        ASSERT_TRUE(check_bona_fide(quasi_choi(build_channel(p), r), 1e-8).bona_fide) << "trial " << trial;
    }
}

TEST(QuasiChoiProperty, AttenuatorSpectrumAsymptotics) {
    for (double lambda : {0.3, 0.5}) {
        for (double n_th : {1.5, 2.0, 2.5}) {
            for (double r : {3.0, 4.0, 5.0}) {
                auto spectrum = symplectic_spectrum(quasi_choi(build_channel(attenuator(lambda, n_th)), r).entries());
                double c = std::cosh(2 * r);
                double large = c * (1 - lambda) + n_th * lambda;
                EXPECT_LT(std::abs(spectrum[1] - n_th), 10.0 / c) << lambda << " " << n_th << " " << r;
                EXPECT_LT(std::abs(spectrum[0] - large), 10.0 / c) << lambda << " " << n_th << " " << r;
            }
        }
    }
}

TEST(QuasiChoiProperty, AttenuatorSpectrumCorrectionCoefficient) {
    // The 1/cosh(2r) coefficient of ν₁ − n_th tends to λ(n_th² − 1)/(1 − λ), which exceeds 10
    // once λ approaches 1.
    for (double lambda : {0.2, 0.5, 0.8}) {
        for (double n_th : {1.5, 3.0}) {
            auto spectrum = symplectic_spectrum(quasi_choi(build_channel(attenuator(lambda, n_th)), 5.0).entries());
            double coefficient = (n_th - spectrum[1]) * std::cosh(10.0);
            double expected = lambda * (n_th * n_th - 1) / (1 - lambda);
            EXPECT_NEAR(coefficient, expected, 0.02 * expected) << lambda << " " << n_th;
        }
    }
}

TEST(QuasiChoiProperty, EntanglementThresholdIndependentOfSqueezing) {
    for (double lambda : {0.2, 0.5, 0.75}) {
        double n_sep = (1 + lambda) / (1 - lambda);
        for (double r : {0.1, 0.5, 1.0, 2.0, 4.0}) {
            auto below = read_normal_form(quasi_choi(build_channel(attenuator(lambda, n_sep - 1e-4)), r));
            auto above = read_normal_form(quasi_choi(build_channel(attenuator(lambda, n_sep + 1e-4)), r));
            EXPECT_FALSE(is_separable_two_mode(below)) << lambda << " " << r;
            EXPECT_TRUE(is_separable_two_mode(above)) << lambda << " " << r;
        }
    }
    for (double eta : {1.5, 2.0, 3.0}) {
        double n_sep = (eta + 1) / (eta - 1);
        for (double r : {0.1, 1.0, 4.0}) {
            EXPECT_FALSE(is_separable_two_mode(read_normal_form(quasi_choi(build_channel(amplifier(eta, n_sep - 1e-4)), r))));
            EXPECT_TRUE(is_separable_two_mode(read_normal_form(quasi_choi(build_channel(amplifier(eta, n_sep + 1e-4)), r))));
        }
    }
}

}  // namespace
}  // namespace gaussree
