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

#include "gaussree/separability.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "gaussree/errors.h"
#include "gaussree/hermitian.h"
#include "gaussree/symplectic.h"
#include "lmi.h"

namespace gaussree {

bool is_separable_two_mode(const NormalForm &nf) {
    if (!nf.is_bona_fide()) {
        std::ostringstream out;
        out.precision(17);
        out << "normal form (" << nf.x << ", " << nf.y << ", " << nf.z << ") is not bona fide";
        throw DomainError(out.str());
    }
    double border = (nf.x - 1.0) * (nf.y - 1.0);
    return nf.z * nf.z <= border + 1e-12 * std::max(1.0, border);
}

double partial_transpose_min_eigenvalue(const CovarianceMatrix &v) {
    Vector flip = Vector::Ones(v.dim());
    for (int k = 0; k < v.n_modes_b(); ++k) flip(2 * (v.n_modes_a() + k) + 1) = -1.0;
    Matrix pt = flip.asDiagonal() * v.entries() * flip.asDiagonal();
    return symplectic_spectrum(pt).back();
}

bool is_separable_ppt(const CovarianceMatrix &v, double tolerance) {
    if (v.n_modes_a() != 1 && v.n_modes_b() != 1) {
        throw ValidationError("the partial-transpose test decides separability only with one mode on a side");
    }
    return partial_transpose_min_eigenvalue(v) >= 1.0 - tolerance;
}

const char *to_string(SeparabilityStatus status) {
    switch (status) {
        case SeparabilityStatus::separable:
            return "separable";
        case SeparabilityStatus::entangled:
            return "entangled";
        case SeparabilityStatus::indeterminate:
            return "indeterminate";
    }
    return "indeterminate";
}

namespace {

struct Constraints {
    Matrix re1, im1, re2, im2;
};

Constraints constraint_matrices(const CovarianceMatrix &v, const Matrix &gamma, double s) {
    const int na = v.n_modes_a();
    const int nb = v.n_modes_b();
    const Eigen::Index dim = v.dim();
    Constraints c;
    c.re1 = v.entries();
    c.re1.topLeftCorner(2 * na, 2 * na) -= gamma;
    c.re1.diagonal().array() -= s;
    c.im1 = Matrix::Zero(dim, dim);
    c.im1.bottomRightCorner(2 * nb, 2 * nb) = -symplectic_form(nb);
    c.re2 = gamma;
    c.re2.diagonal().array() -= s;
    c.im2 = -symplectic_form(na);
    return c;
}

}  // namespace

double separability_margin(const CovarianceMatrix &v, const Matrix &gamma_a) {
    Constraints c = constraint_matrices(v, gamma_a, 0.0);
    return std::min(hermitian_min_eigenvalue(c.re1, c.im1), hermitian_min_eigenvalue(c.re2, c.im2));
}

SeparabilityWitness is_separable_feasibility(const CovarianceMatrix &v, const SolverConfig &cfg) {
    cfg.validate();
    auto check = check_bona_fide(v);
    if (!check.bona_fide) {
        std::ostringstream out;
        out.precision(17);
        out << "covariance matrix is not bona fide (min eig of V+iΩ = " << check.min_eigenvalue << ")";
        throw DomainError(out.str());
    }
    SeparabilityWitness result;
    const int na = v.n_modes_a();
    if (v.n_modes_b() == 0) {
        // Without a B side V itself is a valid γ_A.
        result.status = SeparabilityStatus::separable;
        result.separable = true;
        result.gamma_a = v.entries();
        result.gamma_last = v.entries();
        result.margin = check.min_eigenvalue;
        result.margin_upper_bound = check.min_eigenvalue;
        return result;
    }

    // Variables: γ_A in whitened-free symmetric coordinates, then the margin s.
    const int ga = 2 * na;
    const int n_gamma = detail::sym_dim(ga);
    const int n_vars = n_gamma + 1;
    std::vector<Matrix> gamma_dirs;
    for (int k = 0; k < n_gamma; ++k) gamma_dirs.push_back(detail::sym_basis(ga, k));
    const Eigen::Index dim = v.dim();
    std::vector<Matrix> dirs1(n_vars), dirs2(n_vars);
    for (int k = 0; k < n_gamma; ++k) {
        dirs1[k] = Matrix::Zero(dim, dim);
        dirs1[k].topLeftCorner(ga, ga) = -gamma_dirs[k];
        dirs2[k] = gamma_dirs[k];
    }
    dirs1[n_gamma] = -Matrix::Identity(dim, dim);
    dirs2[n_gamma] = -Matrix::Identity(ga, ga);
    detail::LmiDirections d1, d2;
    for (int k = 0; k < n_vars; ++k) {
        d1.push_back(&dirs1[k]);
        d2.push_back(&dirs2[k]);
    }

    Matrix gamma = Matrix::Identity(ga, ga);
    double s = separability_margin(v, gamma) - 1.0;
    const double constraint_dims = static_cast<double>(dim + ga);
    double mu = cfg.barrier_mu_initial;

    auto barrier_at = [&](const Matrix &g, double sv) -> std::optional<double> {
        Constraints c = constraint_matrices(v, g, sv);
        auto l1 = hermitian_log_det(c.re1, c.im1);
        auto l2 = hermitian_log_det(c.re2, c.im2);
        if (!l1 || !l2) return std::nullopt;
        return -(*l1) - (*l2);
    };

    int total_inner = 0;
    for (int outer = 0; outer < cfg.max_outer; ++outer) {
        for (int inner = 0; inner < cfg.max_inner; ++inner) {
            ++total_inner;
            Constraints c = constraint_matrices(v, gamma, s);
            auto p1 = detail::lmi_point(c.re1, c.im1);
            auto p2 = detail::lmi_point(c.re2, c.im2);
            if (!p1 || !p2) {
                result.trace.push_back("iterate left the feasible region");
                break;
            }
            Vector grad = Vector::Zero(n_vars);
            Matrix hess = Matrix::Zero(n_vars, n_vars);
            grad(n_gamma) = -1.0 / mu;
            detail::add_barrier_derivatives(*p1, d1, 1.0, &grad, &hess);
            detail::add_barrier_derivatives(*p2, d2, 1.0, &grad, &hess);
            Vector step = detail::newton_direction(hess, grad);
            double decrement = -grad.dot(step);
            if (0.5 * decrement < cfg.newton_tol) break;
            double phi = -s / mu + *barrier_at(gamma, s);
            double alpha = 1.0;
            bool moved = false;
            for (int ls = 0; ls < 60; ++ls, alpha *= 0.5) {
                Matrix g_new = gamma + alpha * detail::sym_combination(step.head(n_gamma), Matrix::Identity(ga, ga));
                double s_new = s + alpha * step(n_gamma);
                auto b = barrier_at(g_new, s_new);
                if (!b) continue;
                double phi_new = -s_new / mu + *b;
                if (phi_new <= phi - 1e-4 * alpha * decrement) {
                    gamma = symmetrized(g_new);
                    s = s_new;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
        const double gap = mu * constraint_dims;
        result.iterations = total_inner;
        result.margin = s;
        result.margin_upper_bound = s + gap;
        std::ostringstream line;
        line.precision(12);
        line << "outer " << outer << ": mu=" << mu << " margin=" << s << " gap=" << gap;
        result.trace.push_back(line.str());
        if (s + gap < -kSeparabilityMargin) {
            result.status = SeparabilityStatus::entangled;
            break;
        }
        if (s >= 0.0 || (gap < cfg.outer_tol && s >= -kSeparabilityMargin)) {
            result.status = SeparabilityStatus::separable;
            break;
        }
        mu *= cfg.barrier_decay;
    }
    result.gamma_last = gamma;
    if (result.status == SeparabilityStatus::separable) {
        result.separable = true;
        result.gamma_a = gamma;
        result.margin = separability_margin(v, gamma);
    }
    return result;
}

const char *to_string(SupportStatus status) {
    switch (status) {
        case SupportStatus::faithful:
            return "faithful";
        case SupportStatus::product_in_support:
            return "product_in_support";
        case SupportStatus::no_product_in_support:
            return "no_product_in_support";
        case SupportStatus::undetermined:
            return "undetermined";
    }
    return "undetermined";
}

SupportStatus product_support_status(const CovarianceMatrix &v, double tolerance) {
    auto spectrum = symplectic_spectrum(v.entries());
    int pure = 0;
    for (double nu : spectrum) pure += (nu - 1.0 <= tolerance) ? 1 : 0;
    if (pure == 0) return SupportStatus::faithful;
    if (v.n_modes_a() != 1 || v.n_modes_b() != 1) return SupportStatus::undetermined;
    if (pure == 2) {
        // A pure Gaussian state is a product exactly when the cross block vanishes.
        double scale = v.entries().cwiseAbs().maxCoeff();
        return v.block_ab().cwiseAbs().maxCoeff() <= 1e-9 * scale ? SupportStatus::product_in_support
                                                                  : SupportStatus::no_product_in_support;
    }
    // The pure mode is annihilated by c = w·R with (V + iΩ) w = 0. Writing c = u a + u' a† + v b + v' b†,
    // a product vector in the support needs normalisable eigenvectors of both local parts,
    // which exist only when the annihilation part dominates on each side that is present.
    using Complex = std::complex<double>;
    Eigen::MatrixXcd h = v.entries().cast<Complex>() + Complex(0.0, 1.0) * symplectic_form(2).cast<Complex>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
    Eigen::VectorXcd w = eig.eigenvectors().col(0);
    const Complex i(0.0, 1.0);
    const double norm = w.norm();
    for (int side = 0; side < 2; ++side) {
        Complex wx = w(2 * side);
        Complex wp = w(2 * side + 1);
        double ann = std::abs(wx - i * wp);
        double cre = std::abs(wx + i * wp);
        if (std::max(ann, cre) <= 1e-9 * norm) continue;
        if (ann <= cre * (1.0 + 1e-9)) return SupportStatus::no_product_in_support;
    }
    return SupportStatus::product_in_support;
}

}  // namespace gaussree
