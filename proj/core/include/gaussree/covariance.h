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

#ifndef GAUSSREE_COVARIANCE_H
#define GAUSSREE_COVARIANCE_H

#include <Eigen/Dense>

namespace gaussree {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Largest supported total mode count.
inline constexpr int kMaxModes = 16;

/// Quadrature covariance matrix of a bipartite zero-mean Gaussian state.
///
/// Quadratures are ordered (x1, p1, x2, p2, ...); the first `n_modes_a` modes
/// form subsystem A and the remaining `n_modes_b` subsystem B. The vacuum has
/// V = identity. Construction checks shape, finiteness and symmetry (relative
/// tolerance 1e-12) and stores the exactly symmetrised matrix; it does not
/// check the uncertainty relation (see check_bona_fide).
class CovarianceMatrix {
   public:
    CovarianceMatrix(int n_modes_a, int n_modes_b, Matrix entries);

    /// Single-partition convenience constructor (all modes in A).
    explicit CovarianceMatrix(Matrix entries);

    int n_modes_a() const { return n_modes_a_; }
    int n_modes_b() const { return n_modes_b_; }
    int n_modes() const { return n_modes_a_ + n_modes_b_; }
    int dim() const { return 2 * n_modes(); }
    const Matrix &entries() const { return entries_; }

    Matrix block_a() const;
    Matrix block_b() const;
    /// Off-diagonal block with rows in A and columns in B.
    Matrix block_ab() const;

   private:
    int n_modes_a_;
    int n_modes_b_;
    Matrix entries_;
};

/// Throws ValidationError naming the first (i, j) pair that breaks symmetry.
void require_symmetric(const Matrix &m, double rel_tol = 1e-12);

/// Throws ValidationError on non-finite entries.
void require_finite(const Matrix &m);

Matrix symmetrized(const Matrix &m);

/// Direct sum m1 ⊕ m2.
Matrix direct_sum(const Matrix &m1, const Matrix &m2);

}  // namespace gaussree

#endif
