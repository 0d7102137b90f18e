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

#ifndef GAUSSREE_GAUSSIAN_INFO_H
#define GAUSSREE_GAUSSIAN_INFO_H

#include <vector>

#include "gaussree/covariance.h"

namespace gaussree {

/// g(ν) = ((ν+1)/2) log2((ν+1)/2) - ((ν-1)/2) log2((ν-1)/2), the entropy of a
/// thermal mode with symplectic eigenvalue ν, in bits. g(1) = 0.
double bosonic_g(double nu);

/// von Neumann entropy Σ g(ν_j) in bits.
double entropy(const Matrix &v);
double entropy(const std::vector<double> &spectrum);

/// D(σ || ρ) in bits for zero-mean Gaussian states, evaluated as
/// tr(V_σ G[V_ρ]) / (2 ln 2) - H(σ) + log2 Z[V_ρ]. `v_sigma` may be pure;
/// `v_rho` must be faithful.
double relative_entropy(const Matrix &v_sigma, const Matrix &v_rho);

/// Same quantity through tr(V_σ (G[V_ρ] - G[V_σ])) / (2 ln 2) + log2 sqrt(det(V_ρ+iΩ)/det(V_σ+iΩ)).
/// Needs both states faithful.
double relative_entropy_gibbs_form(const Matrix &v_sigma, const Matrix &v_rho);

}  // namespace gaussree

#endif
