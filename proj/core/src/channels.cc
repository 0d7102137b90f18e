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

#include "gaussree/channels.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "gaussree/errors.h"
#include "gaussree/hermitian.h"
#include "gaussree/symplectic.h"

namespace gaussree {

const char *to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::attenuator:
            return "attenuator";
        case ChannelKind::amplifier:
            return "amplifier";
        case ChannelKind::additive_noise:
            return "additive-noise";
        case ChannelKind::pure_loss:
            return "pure-loss";
        case ChannelKind::identity:
            return "identity";
        case ChannelKind::custom:
            return "custom";
    }
    return "custom";
}

ChannelKind channel_kind_from_string(const std::string &name) {
    if (name == "attenuator") return ChannelKind::attenuator;
    if (name == "amplifier") return ChannelKind::amplifier;
    if (name == "additive-noise" || name == "additive_noise") return ChannelKind::additive_noise;
    if (name == "pure-loss" || name == "pure_loss") return ChannelKind::pure_loss;
    if (name == "identity") return ChannelKind::identity;
    if (name == "custom") return ChannelKind::custom;
    throw ValidationError("unknown channel kind '" + name + "'");
}

namespace {

void require_range(bool ok, const char *what, double value) {
    if (!ok) {
        std::ostringstream out;
        out.precision(17);
        out << what << " out of range: " << value;
        throw ValidationError(out.str());
    }
}

}  // namespace

void ChannelParams::validate() const {
    switch (kind) {
        case ChannelKind::attenuator:
            require_range(lambda >= 0.0 && lambda <= 1.0, "transmissivity lambda", lambda);
            require_range(n_th >= 1.0 && std::isfinite(n_th), "thermal noise n_th", n_th);
            break;
        case ChannelKind::pure_loss:
            require_range(lambda >= 0.0 && lambda <= 1.0, "transmissivity lambda", lambda);
            break;
        case ChannelKind::amplifier:
            require_range(eta >= 1.0 && std::isfinite(eta), "gain eta", eta);
            require_range(n_th >= 1.0 && std::isfinite(n_th), "thermal noise n_th", n_th);
            break;
        case ChannelKind::additive_noise:
            require_range(mu >= 0.0 && std::isfinite(mu), "noise mu", mu);
            break;
        case ChannelKind::identity:
            break;
        case ChannelKind::custom:
            throw ValidationError("custom channels are given by (X, Y) matrices, not parameters");
    }
}

double ChannelParams::n_sep() const {
    const double inf = std::numeric_limits<double>::infinity();
    switch (kind) {
        case ChannelKind::attenuator:
        case ChannelKind::pure_loss:
            return lambda >= 1.0 ? inf : (1.0 + lambda) / (1.0 - lambda);
        case ChannelKind::amplifier:
            return eta <= 1.0 ? inf : (eta + 1.0) / (eta - 1.0);
        default:
            return inf;
    }
}

double GaussianChannel::complete_positivity_margin() const {
    Matrix omega = symplectic_form(n_modes());
    Matrix im = omega - x_matrix * omega * x_matrix.transpose();
    im = 0.5 * (im - im.transpose()).eval();
    return hermitian_min_eigenvalue(y_matrix, im);
}

GaussianChannel make_channel(Matrix x_matrix, Matrix y_matrix, std::string label) {
    if (x_matrix.rows() != x_matrix.cols() || x_matrix.rows() % 2 != 0 || x_matrix.rows() == 0) {
        throw ValidationError("channel X must be square with even dimension");
    }
    if (y_matrix.rows() != x_matrix.rows() || y_matrix.cols() != x_matrix.cols()) {
        throw ValidationError("channel X and Y must have the same shape");
    }
    require_finite(x_matrix);
    require_finite(y_matrix);
    require_symmetric(y_matrix);
    GaussianChannel ch{std::move(x_matrix), symmetrized(y_matrix), std::move(label)};
    double margin = ch.complete_positivity_margin();
    if (margin < -1e-10) {
        std::ostringstream out;
        out.precision(17);
        out << "channel is not completely positive: min eig of Y + iΩ - iXΩX^T = " << margin;
        throw ValidationError(out.str());
    }
    return ch;
}

GaussianChannel build_channel(const ChannelParams &params) {
    params.validate();
    const Matrix id = Matrix::Identity(2, 2);
    switch (params.kind) {
        case ChannelKind::attenuator:
        case ChannelKind::pure_loss: {
            double n_th = params.kind == ChannelKind::pure_loss ? 1.0 : params.n_th;
            return make_channel(std::sqrt(params.lambda) * id, n_th * (1.0 - params.lambda) * id,
                                to_string(params.kind));
        }
        case ChannelKind::amplifier:
            return make_channel(std::sqrt(params.eta) * id, params.n_th * (params.eta - 1.0) * id,
                                "amplifier");
        case ChannelKind::additive_noise:
            return make_channel(id, params.mu * id, "additive-noise");
        case ChannelKind::identity:
            return make_channel(id, Matrix::Zero(2, 2), "identity");
        case ChannelKind::custom:
            break;
    }
    throw ValidationError("custom channels are given by (X, Y) matrices, not parameters");
}

CovarianceMatrix quasi_choi(const GaussianChannel &channel, double r) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        std::ostringstream out;
        out << "squeezing r must be finite and non-negative, got " << r;
        throw ValidationError(out.str());
    }
    const int n = channel.n_modes();
    const Eigen::Index dim = 2 * n;
    Matrix sigma3 = Matrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) sigma3(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    const double c = std::cosh(2.0 * r);
    const double s = std::sinh(2.0 * r);
    const Matrix &x = channel.x_matrix;
    Matrix v(2 * dim, 2 * dim);
    v.topLeftCorner(dim, dim) = c * x * x.transpose() + channel.y_matrix;
    v.topRightCorner(dim, dim) = s * x * sigma3;
    v.bottomLeftCorner(dim, dim) = s * sigma3 * x.transpose();
    v.bottomRightCorner(dim, dim) = c * Matrix::Identity(dim, dim);
    return CovarianceMatrix(n, n, symmetrized(v));
}

}  // namespace gaussree
