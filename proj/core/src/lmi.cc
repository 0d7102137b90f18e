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

#include "lmi.h"

#include <cmath>

namespace gaussree::detail {

int sym_dim(int n) { return n * (n + 1) / 2; }

namespace {

std::pair<int, int> sym_index(int n, int k) {
    for (int i = 0; i < n; ++i) {
        int row = n - i;
        if (k < row) return {i, i + k};
        k -= row;
    }
    return {-1, -1};
}

}  // namespace

Matrix sym_basis(int n, int k) {
    auto [i, j] = sym_index(n, k);
    Matrix e = Matrix::Zero(n, n);
    e(i, j) = 1.0;
    e(j, i) = 1.0;
    return e;
}

Matrix sym_combination(const Vector &coords, const Matrix &l) {
    const int n = static_cast<int>(l.rows());
    Matrix s = Matrix::Zero(n, n);
    for (int k = 0; k < coords.size(); ++k) {
        auto [i, j] = sym_index(n, k);
        s(i, j) += coords(k);
        if (i != j) s(j, i) += coords(k);
    }
    return l * s * l.transpose();
}

std::vector<Matrix> congruence_directions(const Matrix &l) {
    const int n = static_cast<int>(l.rows());
    std::vector<Matrix> out;
    out.reserve(sym_dim(n));
    for (int k = 0; k < sym_dim(n); ++k) {
        auto [i, j] = sym_index(n, k);
        Matrix d = l.col(i) * l.col(j).transpose();
        if (i != j) d += l.col(j) * l.col(i).transpose();
        out.push_back(std::move(d));
    }
    return out;
}

double trace_product(const Matrix &a, const Matrix &b) { return a.cwiseProduct(b.transpose()).sum(); }

std::optional<LmiPoint> lmi_point(const Matrix &re, const Matrix &im) {
    auto inv = hermitian_inverse(re, im);
    if (!inv) return std::nullopt;
    return LmiPoint{std::move(*inv)};
}

void add_barrier_derivatives(const LmiPoint &point, const LmiDirections &dirs, double weight,
                             Vector *grad, Matrix *hess) {
    const Matrix &a = point.inverse.re;
    const Matrix &b = point.inverse.im;
    const size_t count = dirs.size();
    std::vector<Matrix> ad(count), bd(count);
    for (size_t k = 0; k < count; ++k) {
        if (dirs[k] == nullptr) continue;
        if (grad != nullptr) (*grad)(k) -= weight * a.cwiseProduct(*dirs[k]).sum();
        if (hess != nullptr) {
            ad[k] = a * *dirs[k];
            bd[k] = b * *dirs[k];
        }
    }
    if (hess == nullptr) return;
    for (size_t k = 0; k < count; ++k) {
        if (dirs[k] == nullptr) continue;
        for (size_t l = k; l < count; ++l) {
            if (dirs[l] == nullptr) continue;
            double value = trace_product(ad[k], ad[l]) - trace_product(bd[k], bd[l]);
            (*hess)(k, l) += weight * value;
            if (l != k) (*hess)(l, k) += weight * value;
        }
    }
}

Matrix cholesky_factor(const Matrix &m) {
    Eigen::LLT<Matrix> llt(symmetrized(m));
    if (llt.info() == Eigen::Success) return llt.matrixL();
    return Matrix::Identity(m.rows(), m.cols()) * std::sqrt(std::max(1.0, m.diagonal().maxCoeff()));
}

Vector newton_direction(const Matrix &hess, const Vector &grad) {
    Matrix h = symmetrized(hess);
    double scale = std::max(1e-300, h.diagonal().cwiseAbs().maxCoeff());
    double shift = 0.0;
    for (int attempt = 0; attempt < 40; ++attempt) {
        Matrix shifted = h;
        if (shift > 0.0) shifted.diagonal().array() += shift;
        Eigen::LLT<Matrix> llt(shifted);
        if (llt.info() == Eigen::Success) {
            Vector step = -llt.solve(grad);
            if (step.allFinite()) return step;
        }
        shift = (shift == 0.0) ? 1e-12 * scale : 10.0 * shift;
    }
    return -grad / scale;
}

}  // namespace gaussree::detail
