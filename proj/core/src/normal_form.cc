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

#include "gaussree/normal_form.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gaussree/errors.h"
#include "gaussree/gaussian_info.h"
#include "gaussree/separability.h"
#include "gaussree/symplectic.h"

namespace gaussree {

namespace {

const double kLn2 = std::log(2.0);

double sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// (x+y)² - 4z² without cancellation.
double discriminant(const NormalForm &nf) {
    double sum = nf.x + nf.y;
    double two_z = 2.0 * std::abs(nf.z);
    return (sum - two_z) * (sum + two_z);
}

std::string format_nf(const NormalForm &nf) {
    std::ostringstream out;
    out.precision(12);
    out << "(" << nf.x << ", " << nf.y << ", " << nf.z << ")";
    return out.str();
}

}  // namespace

bool NormalForm::is_bona_fide(double tolerance) const {
    if (!(x >= 1.0 - tolerance) || !(y >= 1.0 - tolerance)) return false;
    return z * z <= x * y - 1.0 - std::abs(x - y) + tolerance;
}

double NormalForm::z_max() const { return std::sqrt(std::max(0.0, x * y - 1.0 - std::abs(x - y))); }

std::array<double, 2> NormalForm::symplectic_spectrum() const {
    double root = std::sqrt(std::max(0.0, discriminant(*this)));
    return {0.5 * (root + x - y), 0.5 * (root + y - x)};
}

CovarianceMatrix NormalForm::to_covariance() const {
    Matrix v = Matrix::Zero(4, 4);
    v(0, 0) = x;
    v(1, 1) = x;
    v(2, 2) = y;
    v(3, 3) = y;
    v(0, 2) = v(2, 0) = z;
    v(1, 3) = v(3, 1) = -z;
    return CovarianceMatrix(1, 1, v);
}

GibbsNormal gibbs_normal(const NormalForm &nf, double tolerance) {
    auto [nu1, nu2] = nf.symplectic_spectrum();
    require_faithful({nu1, nu2}, tolerance);
    double root = std::sqrt(discriminant(nf));
    double sum = nf.x + nf.y;
    double omega_plus_sq = (sum + root) / (2.0 * root);
    // x + y - root = 4z² / (x + y + root).
    double omega_minus_sq = (4.0 * nf.z * nf.z / (sum + root)) / (2.0 * root);
    double f1 = arcoth(nu1);
    double f2 = arcoth(nu2);
    GibbsNormal g;
    g.alpha = omega_plus_sq * f1 + omega_minus_sq * f2;
    g.beta = omega_minus_sq * f1 + omega_plus_sq * f2;
    g.gamma = -sign_of(nf.z) * std::sqrt(omega_minus_sq * omega_plus_sq) * (f1 + f2);
    return g;
}

double log2_z(const NormalForm &nf, double tolerance) {
    auto spectrum = nf.symplectic_spectrum();
    return log2_z(std::vector<double>(spectrum.begin(), spectrum.end()), tolerance);
}

NormalForm BorderPoint::to_normal_form(double z_sign) const {
    NormalForm nf;
    double product = nu1 * nu2;
    nf.x = 0.5 * (1.0 + product + nu1 - nu2);
    nf.y = 0.5 * (1.0 + product + nu2 - nu1);
    nf.z = z_sign * 0.5 * std::sqrt((nu1 - 1.0) * (nu1 + 1.0) * (nu2 - 1.0) * (nu2 + 1.0));
    return nf;
}

NormalFormReduction twirl_to_normal_form(const CovarianceMatrix &v) {
    if (v.n_modes_a() != 1 || v.n_modes_b() != 1) {
        throw ValidationError("normal-form reduction needs a 1:1 mode partition");
    }
    Matrix a = v.block_a();
    Matrix b = v.block_b();
    Matrix c = v.block_ab();
    NormalFormReduction out;
    out.normal_form.x = 0.5 * a.trace();
    out.normal_form.y = 0.5 * b.trace();
    out.normal_form.z = 0.5 * (c(0, 0) - c(1, 1));

    Matrix residual_a = a - out.normal_form.x * Matrix::Identity(2, 2);
    Matrix residual_b = b - out.normal_form.y * Matrix::Identity(2, 2);
    double sigma1 = 0.5 * (c(0, 1) + c(1, 0));
    double sigma0 = 0.5 * (c(0, 0) + c(1, 1));
    double antisym = 0.5 * (c(0, 1) - c(1, 0));
    double scale = std::max(1.0, v.entries().cwiseAbs().maxCoeff());
    double discarded = residual_a.norm() + residual_b.norm() + std::abs(sigma1) + std::abs(sigma0) +
                       std::abs(antisym);
    out.exact = discarded <= 1e-12 * scale;
    std::ostringstream line;
    line.precision(12);
    if (out.exact) {
        line << "input already in normal form; read off " << format_nf(out.normal_form);
    } else {
        line << "twirled: A anisotropy " << residual_a.norm() << ", B anisotropy " << residual_b.norm()
             << ", discarded correlation weights sigma0=" << sigma0 << " sigma1=" << sigma1
             << " antisym=" << antisym << " -> " << format_nf(out.normal_form);
    }
    out.log.push_back(line.str());
    return out;
}

NormalFormReduction local_normal_form(const CovarianceMatrix &v) {
    NormalFormReduction twirled = twirl_to_normal_form(v);
    if (twirled.exact) return twirled;

    NormalFormReduction out;
    auto local_block = [](const Matrix &m, std::vector<std::string> &log, const char *name) {
        double det = m.determinant();
        if (!(det > 0.0)) throw DomainError(std::string("local block ") + name + " is not positive definite");
        double scale = std::sqrt(det);
        Eigen::SelfAdjointEigenSolver<Matrix> solver(m / scale);
        // (M / sqrt(det M))^{-1/2} is symplectic because its determinant is one.
        Matrix inv_sqrt = solver.eigenvectors() * solver.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                          solver.eigenvectors().transpose();
        std::ostringstream line;
        line.precision(12);
        line << "local squeezing on " << name << ": block -> " << scale << " * I";
        log.push_back(line.str());
        return std::pair<double, Matrix>(scale, inv_sqrt);
    };
    auto [x, s_a] = local_block(v.block_a(), out.log, "A");
    auto [y, s_b] = local_block(v.block_b(), out.log, "B");
    Matrix c = s_a * v.block_ab() * s_b.transpose();
    Eigen::JacobiSVD<Matrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Matrix u = svd.matrixU();
    Matrix w = svd.matrixV();
    double c_plus = svd.singularValues()(0);
    double c_minus = svd.singularValues()(1);
    if (u.determinant() < 0.0) {
        u.col(1) *= -1.0;
        c_minus = -c_minus;
    }
    if (w.determinant() < 0.0) {
        w.col(1) *= -1.0;
        c_minus = -c_minus;
    }
    out.normal_form.x = x;
    out.normal_form.y = y;
    out.normal_form.z = 0.5 * (c_plus - c_minus);
    double scale = std::max(1.0, std::abs(c_plus));
    out.exact = std::abs(c_plus + c_minus) <= 1e-10 * scale;
    std::ostringstream line;
    line.precision(12);
    line << "standard form (a, b, c+, c-) = (" << x << ", " << y << ", " << c_plus << ", " << c_minus << ")";
    out.log.push_back(line.str());
    if (!out.exact) {
        out.log.push_back("c+ != -c-: not locally equivalent to a normal form; projected z = (c+ - c-)/2");
    }
    return out;
}

double objective_f(const NormalForm &sigma, const GibbsNormal &rho_gibbs, double log2_z_rho) {
    if (!sigma.is_bona_fide(1e-9)) {
        throw DomainError("objective_f: sigma " + format_nf(sigma) + " is not bona fide");
    }
    auto [nu1, nu2] = sigma.symplectic_spectrum();
    double linear = sigma.x * rho_gibbs.alpha + sigma.y * rho_gibbs.beta + 2.0 * sigma.z * rho_gibbs.gamma;
    return linear / kLn2 - bosonic_g(nu1) - bosonic_g(nu2) + log2_z_rho;
}

FirstOrderResiduals first_order_residuals(const BorderPoint &p, const GibbsNormal &g) {
    double q1 = (p.nu1 - 1.0) * (p.nu1 + 1.0);
    double q2 = (p.nu2 - 1.0) * (p.nu2 + 1.0);
    double abs_gamma = std::abs(g.gamma);
    FirstOrderResiduals r;
    r.d_nu1 = g.alpha * (p.nu2 + 1.0) / 2.0 + g.beta * (p.nu2 - 1.0) / 2.0 -
              abs_gamma * p.nu1 * std::sqrt(q2 / q1) - arcoth(p.nu1);
    r.d_nu2 = g.alpha * (p.nu1 - 1.0) / 2.0 + g.beta * (p.nu1 + 1.0) / 2.0 -
              abs_gamma * p.nu2 * std::sqrt(q1 / q2) - arcoth(p.nu2);
    return r;
}

namespace {

struct BorderSearch {
    GibbsNormal gibbs;
    double log2_z_rho;
    double z_sign;

    BorderPoint point(const Eigen::Vector2d &l) const { return {1.0 + std::exp(l(0)), 1.0 + std::exp(l(1))}; }

    double value(const Eigen::Vector2d &l) const {
        BorderPoint p = point(l);
        NormalForm nf = p.to_normal_form(z_sign);
        double linear = nf.x * gibbs.alpha + nf.y * gibbs.beta + 2.0 * nf.z * gibbs.gamma;
        return linear / kLn2 - bosonic_g(p.nu1) - bosonic_g(p.nu2) + log2_z_rho;
    }

    // Gradient in the log coordinates l_i = log(ν_i - 1), in bits.
    Eigen::Vector2d gradient(const Eigen::Vector2d &l) const {
        BorderPoint p = point(l);
        FirstOrderResiduals r = first_order_residuals(p, gibbs);
        return {r.d_nu1 * (p.nu1 - 1.0) / kLn2, r.d_nu2 * (p.nu2 - 1.0) / kLn2};
    }
};

struct SearchOutcome {
    Eigen::Vector2d l;
    double value;
    int iterations;
    bool converged;
};

// Largest term in each first-order condition; the residuals cannot resolve below
// rounding relative to these.
std::array<double, 2> residual_scale(const BorderPoint &p, const GibbsNormal &g) {
    const double q1 = (p.nu1 - 1.0) * (p.nu1 + 1.0);
    const double q2 = (p.nu2 - 1.0) * (p.nu2 + 1.0);
    const double c = std::abs(g.gamma);
    double s1 = std::max({std::abs(g.alpha) * (p.nu2 + 1.0) / 2.0, std::abs(g.beta) * (p.nu2 + 1.0) / 2.0,
                          c * p.nu1 * std::sqrt(q2 / q1), arcoth(p.nu1), 1.0});
    double s2 = std::max({std::abs(g.alpha) * (p.nu1 + 1.0) / 2.0, std::abs(g.beta) * (p.nu1 + 1.0) / 2.0,
                          c * p.nu2 * std::sqrt(q1 / q2), arcoth(p.nu2), 1.0});
    return {s1, s2};
}

double scaled_residual(const BorderPoint &p, const GibbsNormal &g) {
    FirstOrderResiduals r = first_order_residuals(p, g);
    auto scale = residual_scale(p, g);
    return std::max(std::abs(r.d_nu1) / scale[0], std::abs(r.d_nu2) / scale[1]);
}

SearchOutcome newton_search(const BorderSearch &search, Eigen::Vector2d l, int max_iterations) {
    const double residual_target = 1e-11;
    const double stall_target = 1e-7;
    double value = search.value(l);
    Eigen::Vector2d best_l = l;
    double best_value = value;
    double best_residual = scaled_residual(search.point(l), search.gibbs);
    int it = 0;
    bool converged = false;
    for (; it < max_iterations; ++it) {
        BorderPoint p = search.point(l);
        double residual = scaled_residual(p, search.gibbs);
        if (residual < best_residual) {
            best_residual = residual;
            best_l = l;
            best_value = value;
        }
        if (residual < residual_target) {
            converged = true;
            break;
        }
        Eigen::Vector2d grad = search.gradient(l);
        Eigen::Matrix2d hess;
        const double h = 1e-6;
        for (int k = 0; k < 2; ++k) {
            Eigen::Vector2d lp = l, lm = l;
            lp(k) += h;
            lm(k) -= h;
            hess.col(k) = (search.gradient(lp) - search.gradient(lm)) / (2.0 * h);
        }
        hess = 0.5 * (hess + hess.transpose()).eval();
        Eigen::Vector2d step;
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(hess);
        if (eig.eigenvalues()(0) > 1e-14 * std::max(1.0, eig.eigenvalues()(1))) {
            step = -hess.ldlt().solve(grad);
        } else {
            // Indefinite: step along the eigenbasis with absolute curvatures.
            Eigen::Vector2d abs_eval = eig.eigenvalues().cwiseAbs().cwiseMax(1e-8);
            step = -eig.eigenvectors() * (eig.eigenvectors().transpose() * grad).cwiseQuotient(abs_eval);
        }
        // Keep single steps within a factor e^4 in ν - 1.
        double longest = step.cwiseAbs().maxCoeff();
        if (longest > 4.0) step *= 4.0 / longest;
        double slope = grad.dot(step);
        if (slope >= 0.0) {
            step = -grad;
            slope = -grad.squaredNorm();
        }
        double alpha = 1.0;
        bool moved = false;
        // Near the optimum F is flat to rounding; then a step that keeps F within noise and
        // shrinks the gradient is accepted instead.
        const double noise = 1e-13 * (1.0 + std::abs(value));
        const double grad_norm = grad.norm();
        for (int ls = 0; ls < 60; ++ls, alpha *= 0.5) {
            Eigen::Vector2d candidate = l + alpha * step;
            double cand_value = search.value(candidate);
            if (!std::isfinite(cand_value)) continue;
            bool armijo = cand_value <= value + 1e-4 * alpha * slope;
            bool flat = cand_value <= value + noise && search.gradient(candidate).norm() < 0.9 * grad_norm;
            if (armijo || flat) {
                l = candidate;
                value = cand_value;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (!converged) {
        // No representable progress left: keep the most stationary point seen.
        l = best_l;
        value = best_value;
        converged = best_residual < stall_target;
    }
    return {l, value, it, converged};
}

}  // namespace

ReducedSolution solve_reduced(const NormalForm &rho, const SolverConfig &cfg) {
    cfg.validate();
    ReducedSolution out;
    if (is_separable_two_mode(rho)) {
        out.trivial = true;
        out.value_bits = 0.0;
        out.sigma = rho;
        out.point = {1.0, 1.0};
        out.log.push_back("rho separable: sigma = rho, value 0");
        return out;
    }
    NormalForm work = rho;
    GibbsNormal gibbs = gibbs_normal(rho, cfg.faithfulness_floor);
    if (gibbs.alpha > gibbs.beta) {
        std::swap(work.x, work.y);
        std::swap(gibbs.alpha, gibbs.beta);
        out.swapped_modes = true;
        out.log.push_back("relabelled modes so that alpha <= beta");
    }
    BorderSearch search{gibbs, log2_z(work, cfg.faithfulness_floor), -sign_of(gibbs.gamma)};

    auto [rho_nu1, rho_nu2] = work.symplectic_spectrum();
    double nu_max = std::max(rho_nu1, rho_nu2);
    double nu_min = std::min(rho_nu1, rho_nu2);
    const double starts[3][2] = {{1.0 + 0.25 * (nu_max - 1.0), nu_min},
                                 {nu_max, nu_min},
                                 {1.0 + 4.0 * (nu_max - 1.0), nu_min}};
    const int max_iterations = std::max(200, 4 * cfg.max_inner);
    bool have_best = false;
    SearchOutcome best{};
    for (const auto &start : starts) {
        Eigen::Vector2d l(std::log(start[0] - 1.0), std::log(std::max(start[1] - 1.0, 1e-6)));
        SearchOutcome outcome = newton_search(search, l, max_iterations);
        out.iterations += outcome.iterations;
        BorderPoint p = search.point(outcome.l);
        std::ostringstream line;
        line.precision(12);
        line << "start (" << start[0] << ", " << start[1] << ") -> nu=(" << p.nu1 << ", " << p.nu2
             << ") F=" << outcome.value << (outcome.converged ? "" : " [not converged]");
        out.log.push_back(line.str());
        if (outcome.converged && (!have_best || outcome.value < best.value)) {
            best = outcome;
            have_best = true;
        }
    }
    if (!have_best) {
        throw SolverError("solve_reduced: no start converged", out.log);
    }
    BorderPoint p = search.point(best.l);
    out.value_bits = best.value;
    out.residuals = first_order_residuals(p, gibbs);
    out.sigma = p.to_normal_form(search.z_sign);
    out.point = p;
    if (out.swapped_modes) {
        std::swap(out.sigma.x, out.sigma.y);
        std::swap(out.point.nu1, out.point.nu2);
        std::swap(out.residuals.d_nu1, out.residuals.d_nu2);
    }
    return out;
}

}  // namespace gaussree
