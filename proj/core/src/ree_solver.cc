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

#include "gaussree/ree_solver.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "gaussree/errors.h"
#include "gaussree/gaussian_info.h"
#include "gaussree/hermitian.h"
#include "gaussree/separability.h"
#include "gaussree/symplectic.h"
#include "lmi.h"

namespace gaussree {

const char *to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::converged:
            return "converged";
        case SolveStatus::max_iter:
            return "max_iter";
        case SolveStatus::infeasible_start_repaired:
            return "infeasible_start_repaired";
    }
    return "max_iter";
}

Matrix objective_gradient(const Matrix &v_sigma, const Matrix &v_rho) {
    return (gibbs_matrix(v_rho) - gibbs_matrix(v_sigma)) / (2.0 * std::log(2.0));
}

Matrix objective_gradient_fd(const Matrix &v_sigma, const Matrix &v_rho, double step) {
    const Eigen::Index dim = v_sigma.rows();
    Matrix out(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = i; j < dim; ++j) {
            Matrix e = Matrix::Zero(dim, dim);
            e(i, j) = 1.0;
            e(j, i) = 1.0;
            double d = (relative_entropy(v_sigma + step * e, v_rho) -
                        relative_entropy(v_sigma - step * e, v_rho)) /
                       (2.0 * step);
            // A symmetric off-diagonal perturbation moves two entries at once.
            out(i, j) = (i == j) ? d : 0.5 * d;
            out(j, i) = out(i, j);
        }
    }
    return out;
}

GradientCheck check_objective_gradient(const Matrix &v_sigma, const Matrix &v_rho, double step,
                                       double tolerance) {
    Matrix analytic = objective_gradient(v_sigma, v_rho);
    Matrix numeric = objective_gradient_fd(v_sigma, v_rho, step);
    const double floor = std::max(1e-3 * analytic.cwiseAbs().maxCoeff(), 1e-8);
    GradientCheck check;
    for (Eigen::Index i = 0; i < analytic.rows(); ++i) {
        for (Eigen::Index j = 0; j < analytic.cols(); ++j) {
            double denom = std::max(std::abs(numeric(i, j)), floor);
            check.max_relative_error =
                std::max(check.max_relative_error, std::abs(analytic(i, j) - numeric(i, j)) / denom);
        }
    }
    check.passed = check.max_relative_error < tolerance;
    return check;
}

namespace {

constexpr double kGuardWeight = 1e-3;
constexpr double kHessianStep = 1e-5;

struct Problem {
    const CovarianceMatrix &rho;
    Matrix g_rho;
    double log2_z_rho;
    Matrix omega;
    Matrix omega_a;
    Matrix im_sep;  // imaginary part of V - γ_A ⊕ iΩ_B
    bool analytic_gradient = true;

    double objective(const Matrix &v, Matrix *grad) const {
        auto wd = williamson(v);
        require_faithful(wd.spectrum);
        double value = v.cwiseProduct(g_rho).sum() / (2.0 * std::log(2.0)) - entropy(wd.spectrum) + log2_z_rho;
        if (grad != nullptr) {
            if (analytic_gradient) {
                *grad = (g_rho - gibbs_matrix(wd)) / (2.0 * std::log(2.0));
            } else {
                *grad = objective_gradient_fd(v, rho.entries());
            }
        }
        return value;
    }
};

struct Iterate {
    Matrix v;
    Matrix gamma;
};

Matrix lmi1_re(const Iterate &it) {
    Matrix re = it.v;
    re.topLeftCorner(it.gamma.rows(), it.gamma.cols()) -= it.gamma;
    return re;
}

// Objective plus barrier terms; nullopt when the iterate is not strictly feasible.
std::optional<double> merit(const Problem &p, const Iterate &it, double mu) {
    auto l1 = hermitian_log_det(lmi1_re(it), p.im_sep);
    auto l2 = hermitian_log_det(it.gamma, -p.omega_a);
    auto l3 = hermitian_log_det(it.v, p.omega);
    if (!l1 || !l2 || !l3) return std::nullopt;
    double f;
    try {
        f = p.objective(it.v, nullptr);
    } catch (const DomainError &) {
        return std::nullopt;
    }
    if (!std::isfinite(f)) return std::nullopt;
    return f - mu * (*l1 + *l2) - kGuardWeight * mu * (*l3);
}

struct Derivatives {
    Vector grad;
    Matrix hess;
    Matrix objective_grad;
};

// Gradient and Hessian in the coordinates (V directions, then γ directions).
std::optional<Derivatives> derivatives(const Problem &p, const Iterate &it, double mu,
                                       const std::vector<Matrix> &v_dirs, const std::vector<Matrix> &g_dirs,
                                       bool objective_hessian) {
    const int nv = static_cast<int>(v_dirs.size());
    const int ng = static_cast<int>(g_dirs.size());
    const int n = nv + ng;
    const Eigen::Index dim = it.v.rows();
    const Eigen::Index ga = it.gamma.rows();

    auto p1 = detail::lmi_point(lmi1_re(it), p.im_sep);
    auto p2 = detail::lmi_point(it.gamma, -p.omega_a);
    auto p3 = detail::lmi_point(it.v, p.omega);
    if (!p1 || !p2 || !p3) return std::nullopt;

    Derivatives d;
    d.grad = Vector::Zero(n);
    d.hess = Matrix::Zero(n, n);
    try {
        p.objective(it.v, &d.objective_grad);
    } catch (const DomainError &) {
        return std::nullopt;
    }
    for (int k = 0; k < nv; ++k) d.grad(k) = d.objective_grad.cwiseProduct(v_dirs[k]).sum();

    std::vector<Matrix> lifted(ng);
    for (int k = 0; k < ng; ++k) {
        lifted[k] = Matrix::Zero(dim, dim);
        lifted[k].topLeftCorner(ga, ga) = -g_dirs[k];
    }
    detail::LmiDirections d1(n), d2(n, nullptr), d3(n, nullptr);
    for (int k = 0; k < nv; ++k) {
        d1[k] = &v_dirs[k];
        d3[k] = &v_dirs[k];
    }
    for (int k = 0; k < ng; ++k) {
        d1[nv + k] = &lifted[k];
        d2[nv + k] = &g_dirs[k];
    }
    detail::add_barrier_derivatives(*p1, d1, mu, &d.grad, &d.hess);
    detail::add_barrier_derivatives(*p2, d2, mu, &d.grad, &d.hess);
    detail::add_barrier_derivatives(*p3, d3, kGuardWeight * mu, &d.grad, &d.hess);

    if (objective_hessian) {
        // Central differences of the gradient along each V direction.
        Matrix h_obj(nv, nv);
        for (int l = 0; l < nv; ++l) {
            double h = kHessianStep;
            Matrix diff;
            bool ok = false;
            for (int attempt = 0; attempt < 20 && !ok; ++attempt, h *= 0.5) {
                try {
                    Matrix gp, gm;
                    p.objective(it.v + h * v_dirs[l], &gp);
                    p.objective(it.v - h * v_dirs[l], &gm);
                    diff = (gp - gm) / (2.0 * h);
                    ok = true;
                } catch (const DomainError &) {
                }
            }
            if (!ok) return std::nullopt;
            for (int k = 0; k < nv; ++k) h_obj(k, l) = diff.cwiseProduct(v_dirs[k]).sum();
        }
        d.hess.topLeftCorner(nv, nv) += 0.5 * (h_obj + h_obj.transpose());
    }
    return d;
}

std::vector<Matrix> scaled_directions(const Matrix &m) {
    return detail::congruence_directions(detail::cholesky_factor(m));
}

Iterate displaced(const Iterate &base, const std::vector<Matrix> &v_dirs, const std::vector<Matrix> &g_dirs,
                  const Vector &step, double alpha) {
    Iterate out = base;
    const int nv = static_cast<int>(v_dirs.size());
    for (int k = 0; k < nv; ++k) out.v += (alpha * step(k)) * v_dirs[k];
    for (size_t k = 0; k < g_dirs.size(); ++k) out.gamma += (alpha * step(nv + static_cast<int>(k))) * g_dirs[k];
    out.v = symmetrized(out.v);
    out.gamma = symmetrized(out.gamma);
    return out;
}

}  // namespace

SolveResult solve(const CovarianceMatrix &v_rho, const SolverConfig &cfg) {
    cfg.validate();
    auto bona = check_bona_fide(v_rho);
    if (!bona.bona_fide) {
        std::ostringstream out;
        out.precision(17);
        out << "covariance matrix is not bona fide (min eig of V+iΩ = " << bona.min_eigenvalue << ")";
        throw DomainError(out.str());
    }
    auto wd_rho = williamson(v_rho.entries());
    require_faithful(wd_rho.spectrum, cfg.faithfulness_floor);

    const int na = v_rho.n_modes_a();
    const int nb = v_rho.n_modes_b();
    const int n_modes = v_rho.n_modes();
    const Eigen::Index dim = v_rho.dim();
    const Eigen::Index ga = 2 * na;

    Problem p{v_rho, gibbs_matrix(wd_rho, cfg.faithfulness_floor), log2_z(wd_rho.spectrum, cfg.faithfulness_floor),
              symplectic_form(n_modes), symplectic_form(na), Matrix::Zero(dim, dim)};
    if (nb > 0) p.im_sep.bottomRightCorner(2 * nb, 2 * nb) = -symplectic_form(nb);

    SolveResult result;
    auto witness = is_separable_feasibility(v_rho, cfg);
    result.trace.push_back(std::string("phase-1: ") + to_string(witness.status));
    if (witness.separable) {
        result.value_bits = 0.0;
        result.v_sigma_opt = v_rho;
        result.gamma_a_opt = *witness.gamma_a;
        result.iterations = witness.iterations;
        result.duality_gap_estimate = 0.0;
        result.status = SolveStatus::converged;
        result.outer_objectives.push_back(0.0);
        return result;
    }

    if (cfg.gradient_check) {
        auto check = check_objective_gradient(v_rho.entries() + Matrix::Identity(dim, dim), v_rho.entries());
        std::ostringstream line;
        line << "gradient check: max relative error " << check.max_relative_error;
        result.trace.push_back(line.str());
        if (!check.passed) {
            p.analytic_gradient = false;
            result.analytic_gradient = false;
            result.trace.push_back("analytic gradient rejected, using finite differences");
        }
    }

    // Shift the phase-1 iterate so both constraints hold with margin 1/2.
    const double s0 = std::abs(std::min(witness.margin, 0.0));
    Iterate it{v_rho.entries() + (2.0 * s0 + 1.0) * Matrix::Identity(dim, dim),
               witness.gamma_last + (s0 + 0.5) * Matrix::Identity(ga, ga)};
    double mu = cfg.barrier_mu_initial;
    if (!merit(p, it, mu)) {
        for (int attempt = 0; attempt < 30 && !merit(p, it, mu); ++attempt) {
            it.v += (1.0 + s0) * Matrix::Identity(dim, dim);
        }
        if (!merit(p, it, mu)) {
            throw SolverError("could not construct a strictly feasible starting point", result.trace);
        }
        result.status = SolveStatus::infeasible_start_repaired;
    }

    const bool use_newton = n_modes <= 8 && p.analytic_gradient;
    const double barrier_degree = static_cast<double>(dim + ga) + kGuardWeight * static_cast<double>(dim);
    bool converged = false;
    int total_inner = 0;
    for (int outer = 0; outer < cfg.max_outer; ++outer) {
        // Coordinates are rescaled by the current iterate at the start of each outer step.
        std::vector<Matrix> v_dirs = scaled_directions(it.v);
        std::vector<Matrix> g_dirs = scaled_directions(it.gamma);
        const int nv = static_cast<int>(v_dirs.size());
        Matrix bfgs = Matrix::Zero(nv, nv);
        Vector prev_obj_grad;
        Vector prev_step;
        bool have_prev = false;

        for (int inner = 0; inner < cfg.max_inner; ++inner) {
            ++total_inner;
            auto d = derivatives(p, it, mu, v_dirs, g_dirs, use_newton);
            if (!d) {
                throw SolverError("barrier breakdown: iterate lost strict feasibility", result.trace);
            }
            if (!use_newton) {
                Vector obj_grad(nv);
                for (int k = 0; k < nv; ++k) obj_grad(k) = d->objective_grad.cwiseProduct(v_dirs[k]).sum();
                if (have_prev) {
                    // Damped BFGS update of the objective block; barrier blocks stay exact.
                    Vector y = obj_grad - prev_obj_grad;
                    Vector bs = bfgs * prev_step;
                    double sbs = prev_step.dot(bs);
                    double sy = prev_step.dot(y);
                    if (sbs > 1e-300) {
                        double theta = sy >= 0.2 * sbs ? 1.0 : 0.8 * sbs / (sbs - sy);
                        Vector r = theta * y + (1.0 - theta) * bs;
                        double sr = prev_step.dot(r);
                        if (sr > 1e-300) bfgs += r * r.transpose() / sr - bs * bs.transpose() / sbs;
                    } else if (sy > 1e-300) {
                        bfgs += y * y.transpose() / sy;
                    }
                }
                prev_obj_grad = obj_grad;
                d->hess.topLeftCorner(nv, nv) += bfgs;
            }
            Vector step = detail::newton_direction(d->hess, d->grad);
            double decrement = -d->grad.dot(step);
            if (0.5 * decrement < cfg.newton_tol) break;
            double phi = *merit(p, it, mu);
            double alpha = 1.0;
            bool moved = false;
            bool any_feasible = false;
            for (int ls = 0; ls < 60; ++ls, alpha *= 0.5) {
                Iterate trial = displaced(it, v_dirs, g_dirs, step, alpha);
                auto phi_new = merit(p, trial, mu);
                if (!phi_new) continue;
                any_feasible = true;
                if (*phi_new <= phi - 1e-4 * alpha * decrement) {
                    it = std::move(trial);
                    moved = true;
                    break;
                }
            }
            if (!any_feasible) {
                throw SolverError("barrier breakdown: step halving did not restore feasibility", result.trace);
            }
            if (!moved) break;
            if (!use_newton) {
                prev_step = alpha * step.head(nv);
                have_prev = true;
            } else {
                // Coordinates follow the iterate so Newton steps stay well scaled.
                v_dirs = scaled_directions(it.v);
                g_dirs = scaled_directions(it.gamma);
            }
        }

        const double gap = mu * barrier_degree;
        const double value = p.objective(it.v, nullptr);
        result.outer_objectives.push_back(value);
        result.duality_gap_estimate = gap;
        std::ostringstream line;
        line.precision(12);
        line << "outer " << outer << ": mu=" << mu << " objective=" << value << " gap=" << gap;
        result.trace.push_back(line.str());
        if (gap < cfg.outer_tol) {
            converged = true;
            break;
        }
        mu *= cfg.barrier_decay;
    }

    result.iterations = total_inner;
    result.v_sigma_opt = CovarianceMatrix(na, nb, it.v);
    result.gamma_a_opt = it.gamma;
    result.value_bits = std::max(0.0, relative_entropy(it.v, v_rho.entries()));
    if (!converged) result.status = SolveStatus::max_iter;
    return result;
}

}  // namespace gaussree
