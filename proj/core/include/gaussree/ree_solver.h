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

#ifndef GAUSSREE_REE_SOLVER_H
#define GAUSSREE_REE_SOLVER_H

#include <string>
#include <vector>

#include "gaussree/covariance.h"
#include "gaussree/solver_config.h"

namespace gaussree {

enum class SolveStatus { converged, max_iter, infeasible_start_repaired };

const char *to_string(SolveStatus status);

struct SolveResult {
    double value_bits = 0.0;
    CovarianceMatrix v_sigma_opt{1, 0, Matrix::Identity(2, 2)};
    Matrix gamma_a_opt;
    /// Total inner (Newton or quasi-Newton) iterations.
    int iterations = 0;
    double duality_gap_estimate = 0.0;
    SolveStatus status = SolveStatus::converged;
    /// Objective value in bits after each outer iteration.
    std::vector<double> outer_objectives;
    /// False when the solver fell back to finite-difference gradients.
    bool analytic_gradient = true;
    std::vector<std::string> trace;
};

/// Minimises D(σ‖ρ) over Gaussian σ with V_σ >= γ_A ⊕ iΩ_B and γ_A >= iΩ_A.
/// Throws DomainError for invalid or non-faithful input and SolverError when the
/// barrier iterates cannot be kept strictly feasible.
SolveResult solve(const CovarianceMatrix &v_rho, const SolverConfig &cfg = {});

/// (G[V_ρ] - G[V_σ]) / (2 ln 2), so that dD = tr(M dV_σ).
Matrix objective_gradient(const Matrix &v_sigma, const Matrix &v_rho);

/// Central finite differences of relative_entropy(·, v_rho) in the same convention.
Matrix objective_gradient_fd(const Matrix &v_sigma, const Matrix &v_rho, double step = 1e-5);

struct GradientCheck {
    bool passed = false;
    double max_relative_error = 0.0;
};

/// Entrywise comparison of the analytic and finite-difference gradients.
GradientCheck check_objective_gradient(const Matrix &v_sigma, const Matrix &v_rho, double step = 1e-5,
                                       double tolerance = 1e-4);

}  // namespace gaussree

#endif
