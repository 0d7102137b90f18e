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

#ifndef GAUSSREE_HERMITIAN_H
#define GAUSSREE_HERMITIAN_H

// Hermitian matrices H = X + iY are represented by their real part X
// (symmetric) and imaginary part Y (antisymmetric). Everything is computed on
// the real symmetric embedding [[X, -Y], [Y, X]], whose spectrum is that of H
// with every eigenvalue doubled and whose determinant is det(H)^2.

#include <optional>

#include "gaussree/covariance.h"

namespace gaussree {

Matrix real_embedding(const Matrix &re, const Matrix &im);

/// Eigenvalues of H, ascending.
Vector hermitian_eigenvalues(const Matrix &re, const Matrix &im);

double hermitian_min_eigenvalue(const Matrix &re, const Matrix &im);

/// Natural log of det(H), or nullopt when H is not positive definite.
std::optional<double> hermitian_log_det(const Matrix &re, const Matrix &im);

/// Real and imaginary parts of H^{-1} for positive-definite H, nullopt otherwise.
struct HermitianInverse {
    Matrix re;
    Matrix im;
    double log_det;
};
std::optional<HermitianInverse> hermitian_inverse(const Matrix &re, const Matrix &im);

}  // namespace gaussree

#endif
