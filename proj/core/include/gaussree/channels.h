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

#ifndef GAUSSREE_CHANNELS_H
#define GAUSSREE_CHANNELS_H

#include <optional>
#include <string>

#include "gaussree/covariance.h"

namespace gaussree {

enum class ChannelKind { attenuator, amplifier, additive_noise, pure_loss, identity, custom };

const char *to_string(ChannelKind kind);
/// Accepts "attenuator", "amplifier", "additive-noise"/"additive_noise", "pure-loss"/"pure_loss",
/// "identity", "custom". Throws ValidationError otherwise.
ChannelKind channel_kind_from_string(const std::string &name);

/// Catalog channel parameters: transmissivity λ = cos²θ, gain η = cosh²s,
/// thermal noise n_th and additive noise μ. Unused fields are ignored.
struct ChannelParams {
    ChannelKind kind = ChannelKind::attenuator;
    double lambda = 1.0;
    double eta = 1.0;
    double n_th = 1.0;
    double mu = 0.0;

    /// Throws ValidationError when a field used by `kind` is out of range.
    void validate() const;
    /// Separability threshold n_sep for attenuator/amplifier/pure-loss; +inf when undefined.
    double n_sep() const;
};

/// V -> X V X^T + Y on covariance matrices.
struct GaussianChannel {
    Matrix x_matrix;
    Matrix y_matrix;
    std::string label;

    int n_modes() const { return static_cast<int>(x_matrix.rows() / 2); }
    /// Smallest eigenvalue of Y + iΩ - i X Ω X^T.
    double complete_positivity_margin() const;
};

/// Validates shapes, symmetry of Y and complete positivity (margin >= -1e-10).
GaussianChannel make_channel(Matrix x_matrix, Matrix y_matrix, std::string label = "custom");

GaussianChannel build_channel(const ChannelParams &params);

/// Covariance matrix of one half of a two-mode squeezed vacuum (squeezing r)
/// sent through the channel; the output occupies A and the reference B.
CovarianceMatrix quasi_choi(const GaussianChannel &channel, double r);

}  // namespace gaussree

#endif
