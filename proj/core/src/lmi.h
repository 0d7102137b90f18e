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

#ifndef GAUSSREE_SRC_LMI_H
#define GAUSSREE_SRC_LMI_H

// Shared machinery for the log-det barrier solvers: coordinates on symmetric
// matrices and derivatives of -log det H for Hermitian H = X + iY whose real
// part X is affine in the decision variables.

#include <optional>
#include <vector>

#include "gaussree/covariance.h"
#include "gaussree/hermitian.h"

namespace gaussree::detail {

/// Number of independent entries of an n x n symmetric matrix.
int sym_dim(int n);

/// Basis E_k of symmetric matrices: e_i e_i^T on the diagonal, e_i e_j^T + e_j e_i^T off it.
Matrix sym_basis(int n, int k);

/// Σ_k c_k L E_k L^T.
Matrix sym_combination(const Vector &coords, const Matrix &l);

/// L E_k L^T for every basis element.
std::vector<Matrix> congruence_directions(const Matrix &l);

/// tr(A B) for square matrices.
double trace_product(const Matrix &a, const Matrix &b);

struct LmiPoint {
    HermitianInverse inverse;
};

/// Evaluates H = re + i im; nullopt when H is not positive definite.
std::optional<LmiPoint> lmi_point(const Matrix &re, const Matrix &im);

/// A direction of the decision space paired with its (possibly absent) action on X.
using LmiDirections = std::vector<const Matrix *>;

/// Adds weight * (-log det H) derivatives: grad_k -= w tr(Re(H^-1) D_k),
/// hess_kl += w Re tr(H^-1 D_k H^-1 D_l). Null directions contribute nothing.
void add_barrier_derivatives(const LmiPoint &point, const LmiDirections &dirs, double weight,
                             Vector *grad, Matrix *hess);

/// Lower Cholesky factor of a symmetric positive-definite matrix, or identity-scaled fallback.
Matrix cholesky_factor(const Matrix &m);

/// Solves (H + shift I) x = -g with the smallest shift that keeps H positive definite.
Vector newton_direction(const Matrix &hess, const Vector &grad);

}  // namespace gaussree::detail

#endif
