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

#include "gaussree/hermitian.h"

#include <cmath>

namespace gaussree {

Matrix real_embedding(const Matrix &re, const Matrix &im) {
    const Eigen::Index n = re.rows();
    Matrix out(2 * n, 2 * n);
    out.topLeftCorner(n, n) = re;
    out.topRightCorner(n, n) = -im;
    out.bottomLeftCorner(n, n) = im;
    out.bottomRightCorner(n, n) = re;
    return out;
}

Vector hermitian_eigenvalues(const Matrix &re, const Matrix &im) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(real_embedding(re, im), Eigen::EigenvaluesOnly);
    const Vector &doubled = solver.eigenvalues();
    Vector out(re.rows());
    for (Eigen::Index k = 0; k < out.size(); ++k) {
        out(k) = 0.5 * (doubled(2 * k) + doubled(2 * k + 1));
    }
    return out;
}

double hermitian_min_eigenvalue(const Matrix &re, const Matrix &im) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(real_embedding(re, im), Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

std::optional<double> hermitian_log_det(const Matrix &re, const Matrix &im) {
    Eigen::LLT<Matrix> llt(real_embedding(re, im));
    if (llt.info() != Eigen::Success) return std::nullopt;
    const Matrix &l = llt.matrixLLT();
    double sum = 0.0;
    for (Eigen::Index k = 0; k < l.rows(); ++k) {
        if (!(l(k, k) > 0.0)) return std::nullopt;
        sum += std::log(l(k, k));
    }
    // log det(embedding) = 2 * sum and det(embedding) = det(H)^2.
    return sum;
}

std::optional<HermitianInverse> hermitian_inverse(const Matrix &re, const Matrix &im) {
    const Eigen::Index n = re.rows();
    Eigen::LLT<Matrix> llt(real_embedding(re, im));
    if (llt.info() != Eigen::Success) return std::nullopt;
    const Matrix &l = llt.matrixLLT();
    double sum = 0.0;
    for (Eigen::Index k = 0; k < l.rows(); ++k) {
        if (!(l(k, k) > 0.0)) return std::nullopt;
        sum += std::log(l(k, k));
    }
    Matrix inv = llt.solve(Matrix::Identity(2 * n, 2 * n));
    HermitianInverse out;
    out.re = symmetrized(0.5 * (inv.topLeftCorner(n, n) + inv.bottomRightCorner(n, n)));
    Matrix im_part = 0.5 * (inv.bottomLeftCorner(n, n) - inv.topRightCorner(n, n));
    out.im = 0.5 * (im_part - im_part.transpose());
    out.log_det = sum;
    return out;
}

}  // namespace gaussree
