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

#ifndef GAUSSREE_SEPARABILITY_H
#define GAUSSREE_SEPARABILITY_H

#include <optional>
#include <string>
#include <vector>

#include "gaussree/covariance.h"
#include "gaussree/normal_form.h"
#include "gaussree/solver_config.h"

namespace gaussree {

/// Boundary states with feasibility margin above -kSeparabilityMargin count as separable.
inline constexpr double kSeparabilityMargin = 1e-9;

/// Simon criterion on a two-mode normal form: z² <= (x-1)(y-1) + 1e-12.
/// Throws DomainError for non-bona-fide input.
bool is_separable_two_mode(const NormalForm &nf);

/// Partial-transpose test, exact for Gaussian states with one mode on either side:
/// separable iff the smallest symplectic eigenvalue of the partially transposed matrix is >= 1 - tol.
/// Throws ValidationError for other partitions.
bool is_separable_ppt(const CovarianceMatrix &v, double tolerance = 1e-12);

/// Smallest symplectic eigenvalue after flipping the momenta of side B.
double partial_transpose_min_eigenvalue(const CovarianceMatrix &v);

enum class SeparabilityStatus { separable, entangled, indeterminate };

const char *to_string(SeparabilityStatus status);

struct SeparabilityWitness {
    SeparabilityStatus status = SeparabilityStatus::indeterminate;
    bool separable = false;
    /// γ_A with γ_A >= iΩ_A and V >= γ_A ⊕ iΩ_B, present when separable.
    std::optional<Matrix> gamma_a;
    /// Best value found of the smallest eigenvalue over both constraints.
    double margin = 0.0;
    /// Upper bound on the achievable margin (margin + duality gap).
    double margin_upper_bound = 0.0;
    /// Last feasible iterate of the phase-1 program, whether or not it certifies separability.
    Matrix gamma_last;
    int iterations = 0;
    std::vector<std::string> trace;
};

/// Decides whether some bona-fide γ_A satisfies V >= γ_A ⊕ iΩ_B by maximising
/// the smallest eigenvalue of both constraints with a log-det barrier method.
SeparabilityWitness is_separable_feasibility(const CovarianceMatrix &v, const SolverConfig &cfg = {});

/// Smallest eigenvalue of V - (γ_A ⊕ iΩ_B) and of γ_A - iΩ_A, whichever is lower.
double separability_margin(const CovarianceMatrix &v, const Matrix &gamma_a);

enum class SupportStatus { faithful, product_in_support, no_product_in_support, undetermined };

const char *to_string(SupportStatus status);

/// For a state with symplectic eigenvalues within `tolerance` of 1, decides whether a product
/// vector lies in its support. When none does, every separable state is at infinite relative
/// entropy. Decided for one mode per side; larger partitions report `undetermined`.
SupportStatus product_support_status(const CovarianceMatrix &v, double tolerance = 1e-9);

}  // namespace gaussree

#endif
