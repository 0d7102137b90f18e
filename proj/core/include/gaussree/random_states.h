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

#ifndef GAUSSREE_RANDOM_STATES_H
#define GAUSSREE_RANDOM_STATES_H

#include <cstdint>
#include <random>

#include "gaussree/covariance.h"
#include "gaussree/normal_form.h"

namespace gaussree {

/// Fixture generators. The library's computations never draw random numbers.
using Rng = std::mt19937_64;

/// exp(Ω H) for a random symmetric H with entries of size `scale`.
Matrix random_symplectic(int n_modes, Rng &rng, double scale = 0.5);

/// S diag(ν) S^T with ν uniform in [nu_min, nu_max] and a random symplectic S.
CovarianceMatrix random_state(int n_modes_a, int n_modes_b, Rng &rng, double nu_min = 1.1, double nu_max = 3.0,
                              double scale = 0.5);

/// γ_A ⊕ γ_B + P with random states γ_A, γ_B and a small random PSD matrix P.
CovarianceMatrix random_separable_state(int n_modes_a, int n_modes_b, Rng &rng, double noise = 0.2);

/// Two-mode normal form with z drawn uniformly in [0, z_max] (sign random).
NormalForm random_normal_form(Rng &rng, double max_diagonal = 4.0);

/// Two-mode normal form that violates the separability criterion and stays faithful.
NormalForm random_entangled_normal_form(Rng &rng, double max_diagonal = 4.0);

}  // namespace gaussree

#endif
