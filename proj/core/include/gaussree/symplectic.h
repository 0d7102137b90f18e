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

#ifndef GAUSSREE_SYMPLECTIC_H
#define GAUSSREE_SYMPLECTIC_H

#include <functional>
#include <vector>

#include "gaussree/covariance.h"

namespace gaussree {

/// Symplectic eigenvalues closer to 1 than this make Gibbs-form quantities diverge.
inline constexpr double kFaithfulnessTolerance = 1e-9;

/// Default tolerance on the smallest eigenvalue of V + iΩ.
inline constexpr double kBonaFideTolerance = 1e-10;

/// Ω = ⊕_j [[0, 1], [-1, 0]] over `n_modes` modes.
Matrix symplectic_form(int n_modes);

struct BonaFideCheck {
    bool bona_fide;
    /// Smallest eigenvalue of the Hermitian matrix V + iΩ.
    double min_eigenvalue;
};

BonaFideCheck check_bona_fide(const Matrix &v, double tolerance = kBonaFideTolerance);
BonaFideCheck check_bona_fide(const CovarianceMatrix &v, double tolerance = kBonaFideTolerance);

/// V = S W S^T with S symplectic and W = diag(ν1, ν1, ..., νN, νN).
struct WilliamsonDecomposition {
    Matrix symplectic;
    /// Symplectic eigenvalues, descending.
    std::vector<double> spectrum;

    Matrix williamson_form() const;
};

/// Throws DomainError when `v` is not positive definite.
WilliamsonDecomposition williamson(const Matrix &v);

std::vector<double> symplectic_spectrum(const Matrix &v);

/// Symplectic action f_*(V) = S f(W) S^T of a scalar function.
Matrix symplectic_action(const WilliamsonDecomposition &wd, const std::function<double(double)> &f);

double arcoth(double x);

/// G[V] = -Ω arcoth_*(V) Ω. Throws NotFaithfulError when some ν <= 1 + tolerance.
Matrix gibbs_matrix(const Matrix &v, double tolerance = kFaithfulnessTolerance);
Matrix gibbs_matrix(const WilliamsonDecomposition &wd, double tolerance = kFaithfulnessTolerance);

/// log2 Z[V] = Σ_j (½ log2(ν_j² - 1) - 1), from the symplectic spectrum.
double log2_z(const Matrix &v, double tolerance = kFaithfulnessTolerance);
double log2_z(const std::vector<double> &spectrum, double tolerance = kFaithfulnessTolerance);

/// log2 Z[V] = log2 sqrt(det((V + iΩ) / 2)) through the Hermitian determinant.
double log2_z_hermitian(const Matrix &v);

/// Throws NotFaithfulError unless every ν exceeds 1 + tolerance.
void require_faithful(const std::vector<double> &spectrum, double tolerance = kFaithfulnessTolerance);

}  // namespace gaussree

#endif
