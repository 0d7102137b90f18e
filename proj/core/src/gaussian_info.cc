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

#include "gaussree/gaussian_info.h"

#include <cmath>
#include <sstream>

#include "gaussree/errors.h"
#include "gaussree/hermitian.h"
#include "gaussree/symplectic.h"

namespace gaussree {

namespace {

// Below this distance from 1 the (ν-1) log(ν-1) term is taken at its limit.
constexpr double kPureModeCutoff = 1e-12;
// Spectra from a numerical Williamson decomposition may dip this far below 1.
constexpr double kSpectrumSlack = 1e-9;

void require_same_shape(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream out;
        out << "covariance matrices differ in shape: " << a.rows() << "x" << a.cols() << " vs "
            << b.rows() << "x" << b.cols();
        throw ValidationError(out.str());
    }
}

void require_bona_fide(const Matrix &v, const char *name) {
    auto check = check_bona_fide(v);
    if (!check.bona_fide) {
        std::ostringstream out;
        out.precision(17);
        out << name << " is not a bona fide covariance matrix (min eig of V+iΩ = "
            << check.min_eigenvalue << ")";
        throw DomainError(out.str());
    }
}

}  // namespace

double bosonic_g(double nu) {
    if (!(nu >= 1.0 - kSpectrumSlack)) {
        std::ostringstream out;
        out.precision(17);
        out << "bosonic_g needs nu >= 1, got " << nu;
        throw DomainError(out.str());
    }
    if (nu < 1.0) nu = 1.0;
    double plus = 0.5 * (nu + 1.0);
    double minus = 0.5 * (nu - 1.0);
    double value = plus * std::log2(plus);
    if (nu - 1.0 >= kPureModeCutoff) value -= minus * std::log2(minus);
    return value;
}

double entropy(const std::vector<double> &spectrum) {
    double sum = 0.0;
    for (double nu : spectrum) sum += bosonic_g(nu);
    return sum;
}

double entropy(const Matrix &v) { return entropy(symplectic_spectrum(v)); }

double relative_entropy(const Matrix &v_sigma, const Matrix &v_rho) {
    require_same_shape(v_sigma, v_rho);
    require_bona_fide(v_sigma, "v_sigma");
    auto wd_rho = williamson(v_rho);
    Matrix g_rho = gibbs_matrix(wd_rho);
    double overlap = (v_sigma.cwiseProduct(g_rho)).sum();
    return overlap / (2.0 * std::log(2.0)) - entropy(v_sigma) + log2_z(wd_rho.spectrum);
}

double relative_entropy_gibbs_form(const Matrix &v_sigma, const Matrix &v_rho) {
    require_same_shape(v_sigma, v_rho);
    Matrix g_rho = gibbs_matrix(v_rho);
    Matrix g_sigma = gibbs_matrix(v_sigma);
    double trace_term = (v_sigma.cwiseProduct(g_rho - g_sigma)).sum() / (2.0 * std::log(2.0));
    const int n = static_cast<int>(v_rho.rows() / 2);
    Matrix omega = symplectic_form(n);
    auto ld_rho = hermitian_log_det(v_rho, omega);
    auto ld_sigma = hermitian_log_det(v_sigma, omega);
    if (!ld_rho || !ld_sigma) throw NotFaithfulError(1.0, kFaithfulnessTolerance);
    return trace_term + 0.5 * (*ld_rho - *ld_sigma) / std::log(2.0);
}

}  // namespace gaussree
