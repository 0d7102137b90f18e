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

#include "gaussree/symplectic.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "gaussree/errors.h"
#include "gaussree/hermitian.h"

namespace gaussree {

namespace {

// Relative width under which two symplectic eigenvalues are treated as one cluster.
constexpr double kClusterTolerance = 1e-10;

struct SqrtPair {
    Matrix sqrt;
    Matrix inv_sqrt;
};

SqrtPair positive_sqrt(const Matrix &v) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(v);
    const Vector &evals = solver.eigenvalues();
    if (!(evals(0) > 0.0)) {
        std::ostringstream out;
        out.precision(17);
        out << "matrix is not positive definite (smallest eigenvalue " << evals(0) << ")";
        throw DomainError(out.str());
    }
    const Matrix &q = solver.eigenvectors();
    Vector s = evals.cwiseSqrt();
    return {q * s.asDiagonal() * q.transpose(), q * s.cwiseInverse().asDiagonal() * q.transpose()};
}

}  // namespace

Matrix symplectic_form(int n_modes) {
    Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
    for (int j = 0; j < n_modes; ++j) {
        omega(2 * j, 2 * j + 1) = 1.0;
        omega(2 * j + 1, 2 * j) = -1.0;
    }
    return omega;
}

BonaFideCheck check_bona_fide(const Matrix &v, double tolerance) {
    require_symmetric(v);
    if (v.rows() % 2 != 0) throw ValidationError("covariance matrix must have even dimension");
    double min_eig = hermitian_min_eigenvalue(v, symplectic_form(static_cast<int>(v.rows() / 2)));
    return {min_eig >= -tolerance, min_eig};
}

BonaFideCheck check_bona_fide(const CovarianceMatrix &v, double tolerance) {
    return check_bona_fide(v.entries(), tolerance);
}

Matrix WilliamsonDecomposition::williamson_form() const {
    Matrix w = Matrix::Zero(2 * spectrum.size(), 2 * spectrum.size());
    for (size_t j = 0; j < spectrum.size(); ++j) {
        w(2 * j, 2 * j) = spectrum[j];
        w(2 * j + 1, 2 * j + 1) = spectrum[j];
    }
    return w;
}

WilliamsonDecomposition williamson(const Matrix &v) {
    if (v.rows() != v.cols() || v.rows() % 2 != 0 || v.rows() == 0) {
        throw ValidationError("covariance matrix must be square with even dimension");
    }
    const int n = static_cast<int>(v.rows() / 2);
    const Eigen::Index dim = 2 * n;
    SqrtPair roots = positive_sqrt(symmetrized(v));

    // K = V^{-1/2} Ω V^{-1/2} is antisymmetric with eigenvalues ±i/ν_j. The
    // embedding of the Hermitian matrix iK is [[0, -K], [K, 0]].
    Matrix k = roots.inv_sqrt * symplectic_form(n) * roots.inv_sqrt;
    k = 0.5 * (k - k.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(real_embedding(Matrix::Zero(dim, dim), k));
    const Vector &evals = solver.eigenvalues();
    const Matrix &evecs = solver.eigenvectors();

    // Positive half of the embedded spectrum, ascending in κ = 1/ν, so descending in ν.
    std::vector<Eigen::Index> positive;
    for (Eigen::Index idx = 2 * dim - 2 * n; idx < 2 * dim; ++idx) positive.push_back(idx);

    Matrix o(dim, dim);
    std::vector<double> kappas;
    kappas.reserve(n);
    size_t start = 0;
    while (start < positive.size()) {
        size_t stop = start + 1;
        double scale = std::abs(evals(positive.back()));
        while (stop < positive.size() &&
               evals(positive[stop]) - evals(positive[stop - 1]) <= kClusterTolerance * scale) {
            ++stop;
        }
        // Embedded multiplicity is twice the number of modes in the cluster.
        const size_t modes = (stop - start) / 2;
        Matrix candidates(dim, 2 * (stop - start));
        for (size_t c = start; c < stop; ++c) {
            candidates.col(2 * (c - start)) = evecs.col(positive[c]).head(dim);
            candidates.col(2 * (c - start) + 1) = evecs.col(positive[c]).tail(dim);
        }
        // Orthonormal basis of the real invariant subspace.
        std::vector<Vector> basis;
        for (Eigen::Index c = 0; c < candidates.cols() && basis.size() < 2 * modes; ++c) {
            Vector u = candidates.col(c);
            for (const Vector &b : basis) u -= b.dot(u) * b;
            for (const Vector &b : basis) u -= b.dot(u) * b;
            double norm = u.norm();
            if (norm > 1e-6) basis.push_back(u / norm);
        }
        // Pair the subspace into canonical planes: K e1 = κ e2, K e2 = -κ e1.
        std::vector<Vector> chosen;
        for (size_t m = 0; m < modes; ++m) {
            Vector e1;
            for (const Vector &b : basis) {
                Vector u = b;
                for (const Vector &c : chosen) u -= c.dot(u) * c;
                for (const Vector &c : chosen) u -= c.dot(u) * c;
                if (u.norm() > 1e-6) {
                    e1 = u.normalized();
                    break;
                }
            }
            if (e1.size() == 0) throw DomainError("williamson: degenerate cluster could not be paired");
            Vector e2 = k * e1;
            for (const Vector &c : chosen) e2 -= c.dot(e2) * c;
            e2 -= e1.dot(e2) * e1;
            double kappa = e2.norm();
            e2 /= kappa;
            const Eigen::Index col = 2 * static_cast<Eigen::Index>(kappas.size());
            o.col(col) = e2;
            o.col(col + 1) = e1;
            kappas.push_back(kappa);
            chosen.push_back(e1);
            chosen.push_back(e2);
        }
        start = stop;
    }

    WilliamsonDecomposition out;
    out.spectrum.resize(n);
    Vector inv_sqrt_w(dim);
    for (int j = 0; j < n; ++j) {
        out.spectrum[j] = 1.0 / kappas[j];
        inv_sqrt_w(2 * j) = std::sqrt(kappas[j]);
        inv_sqrt_w(2 * j + 1) = std::sqrt(kappas[j]);
    }
    out.symplectic = roots.sqrt * o * inv_sqrt_w.asDiagonal();
    return out;
}

std::vector<double> symplectic_spectrum(const Matrix &v) { return williamson(v).spectrum; }

Matrix symplectic_action(const WilliamsonDecomposition &wd, const std::function<double(double)> &f) {
    const Eigen::Index dim = wd.symplectic.rows();
    Vector fw(dim);
    for (size_t j = 0; j < wd.spectrum.size(); ++j) {
        double value = f(wd.spectrum[j]);
        fw(2 * j) = value;
        fw(2 * j + 1) = value;
    }
    return symmetrized(wd.symplectic * fw.asDiagonal() * wd.symplectic.transpose());
}

double arcoth(double x) { return 0.5 * std::log1p(2.0 / (x - 1.0)); }

void require_faithful(const std::vector<double> &spectrum, double tolerance) {
    for (double nu : spectrum) {
        if (!(nu - 1.0 > tolerance)) throw NotFaithfulError(nu, tolerance);
    }
}

Matrix gibbs_matrix(const WilliamsonDecomposition &wd, double tolerance) {
    require_faithful(wd.spectrum, tolerance);
    Matrix omega = symplectic_form(static_cast<int>(wd.spectrum.size()));
    return symmetrized(-omega * symplectic_action(wd, arcoth) * omega);
}

Matrix gibbs_matrix(const Matrix &v, double tolerance) {
    return gibbs_matrix(williamson(v), tolerance);
}

double log2_z(const std::vector<double> &spectrum, double tolerance) {
    require_faithful(spectrum, tolerance);
    double sum = 0.0;
    for (double nu : spectrum) sum += 0.5 * std::log2((nu - 1.0) * (nu + 1.0)) - 1.0;
    return sum;
}

double log2_z(const Matrix &v, double tolerance) { return log2_z(symplectic_spectrum(v), tolerance); }

double log2_z_hermitian(const Matrix &v) {
    const int n = static_cast<int>(v.rows() / 2);
    auto log_det = hermitian_log_det(0.5 * v, 0.5 * symplectic_form(n));
    if (!log_det) throw NotFaithfulError(1.0, 0.0);
    return 0.5 * *log_det / std::log(2.0);
}

}  // namespace gaussree
