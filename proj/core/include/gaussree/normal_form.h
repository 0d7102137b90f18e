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

#ifndef GAUSSREE_NORMAL_FORM_H
#define GAUSSREE_NORMAL_FORM_H

#include <array>
#include <string>
#include <vector>

#include "gaussree/covariance.h"
#include "gaussree/solver_config.h"

namespace gaussree {

/// Two-mode covariance matrix [[x σ0, z σ3], [z σ3, y σ0]].
struct NormalForm {
    double x = 1.0;
    double y = 1.0;
    double z = 0.0;

    /// x >= 1, y >= 1 and |z| <= z_max, each to within `tolerance`.
    bool is_bona_fide(double tolerance = 1e-12) const;
    /// sqrt(xy - 1 - |x - y|).
    double z_max() const;
    /// Closed-form symplectic eigenvalues (ν1, ν2); ν1 belongs to the x mode.
    std::array<double, 2> symplectic_spectrum() const;
    CovarianceMatrix to_covariance() const;
};

/// Normal-form parameters of the Gibbs matrix G = [[α σ0, γ σ3], [γ σ3, β σ0]].
struct GibbsNormal {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// Closed-form Gibbs parameters. Throws NotFaithfulError when min ν <= 1 + tolerance.
GibbsNormal gibbs_normal(const NormalForm &nf, double tolerance = 1e-9);

/// log2 Z of a normal form from its closed-form spectrum.
double log2_z(const NormalForm &nf, double tolerance = 1e-9);

/// A border-separable normal form parametrised by its symplectic eigenvalues.
struct BorderPoint {
    double nu1 = 1.0;
    double nu2 = 1.0;

    /// x = (1 + ν1ν2 + ν1 - ν2)/2, y = (1 + ν1ν2 + ν2 - ν1)/2, z = sign * sqrt((ν1²-1)(ν2²-1))/2.
    NormalForm to_normal_form(double z_sign) const;
};

struct NormalFormReduction {
    NormalForm normal_form;
    /// True when the result has the same symplectic invariants as the input.
    bool exact = true;
    std::vector<std::string> log;
};

/// Averages a two-mode state over the local symmetry group of normal forms
/// (rotations O ⊕ σ3 O σ3 together with transposition). Normal-form inputs
/// are returned unchanged; for any normal-form ρ the relative entropy to ρ
/// does not increase. Throws ValidationError unless the partition is 1:1.
NormalFormReduction twirl_to_normal_form(const CovarianceMatrix &v);

/// Standard-form reduction by local symplectics. `exact` is false when the
/// input is not locally equivalent to a normal form (its standard-form
/// correlations c+ and c- differ in magnitude); then z = (c+ - c-)/2.
NormalFormReduction local_normal_form(const CovarianceMatrix &v);

/// F(x, y, z) = (xα + yβ + 2zγ)/ln 2 - g(ν1) - g(ν2) + log2 Z[ρ], in bits.
double objective_f(const NormalForm &sigma, const GibbsNormal &rho_gibbs, double log2_z_rho);

/// The two first-order conditions of F on the border, in the natural-log scale:
/// ∂ν1: α(ν2+1)/2 + β(ν2-1)/2 - |γ| ν1 sqrt((ν2²-1)/(ν1²-1)) - arcoth ν1, and symmetrically.
struct FirstOrderResiduals {
    double d_nu1 = 0.0;
    double d_nu2 = 0.0;
};
FirstOrderResiduals first_order_residuals(const BorderPoint &point, const GibbsNormal &rho_gibbs);

struct ReducedSolution {
    double value_bits = 0.0;
    /// Optimiser on the border; (1, 1) for the trivial certificate.
    BorderPoint point;
    NormalForm sigma;
    FirstOrderResiduals residuals;
    /// ρ was separable and σ = ρ.
    bool trivial = false;
    /// Modes were relabelled so that α ≤ β during the search.
    bool swapped_modes = false;
    int iterations = 0;
    std::vector<std::string> log;
};

/// Minimises F over border-separable normal forms. Returns value 0 for separable ρ.
/// Throws NotFaithfulError for non-faithful entangled ρ and SolverError on non-convergence.
ReducedSolution solve_reduced(const NormalForm &rho, const SolverConfig &cfg = {});

}  // namespace gaussree

#endif
