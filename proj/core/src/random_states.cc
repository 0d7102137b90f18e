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

#include "gaussree/random_states.h"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "gaussree/symplectic.h"

namespace gaussree {

namespace {

double uniform(Rng &rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Matrix random_symmetric(Eigen::Index dim, Rng &rng, double scale) {
    std::normal_distribution<double> normal(0.0, scale);
    Matrix h(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            h(i, j) = normal(rng);
            h(j, i) = h(i, j);
        }
    }
    return h;
}

}  // namespace

Matrix random_symplectic(int n_modes, Rng &rng, double scale) {
    Matrix h = random_symmetric(2 * n_modes, rng, scale);
    Matrix generator = symplectic_form(n_modes) * h;
    return generator.exp();
}

CovarianceMatrix random_state(int n_modes_a, int n_modes_b, Rng &rng, double nu_min, double nu_max, double scale) {
    const int n = n_modes_a + n_modes_b;
    Vector diag(2 * n);
    for (int k = 0; k < n; ++k) {
        double nu = uniform(rng, nu_min, nu_max);
        diag(2 * k) = nu;
        diag(2 * k + 1) = nu;
    }
    Matrix s = random_symplectic(n, rng, scale);
    return CovarianceMatrix(n_modes_a, n_modes_b, symmetrized(s * diag.asDiagonal() * s.transpose()));
}

CovarianceMatrix random_separable_state(int n_modes_a, int n_modes_b, Rng &rng, double noise) {
    Matrix a = random_state(n_modes_a, 0, rng, 1.0, 2.0).entries();
    Matrix b = n_modes_b > 0 ? random_state(n_modes_b, 0, rng, 1.0, 2.0).entries() : Matrix(0, 0);
    Matrix v = direct_sum(a, b);
    Matrix g = random_symmetric(v.rows(), rng, noise);
    return CovarianceMatrix(n_modes_a, n_modes_b, symmetrized(v + g * g.transpose()));
}

NormalForm random_normal_form(Rng &rng, double max_diagonal) {
    NormalForm nf;
    nf.x = uniform(rng, 1.0, max_diagonal);
    nf.y = uniform(rng, 1.0, max_diagonal);
    nf.z = uniform(rng, 0.0, 1.0) * nf.z_max();
    if (uniform(rng, 0.0, 1.0) < 0.5) nf.z = -nf.z;
    return nf;
}

NormalForm random_entangled_normal_form(Rng &rng, double max_diagonal) {
    for (;;) {
        NormalForm nf;
        nf.x = uniform(rng, 1.05, max_diagonal);
        nf.y = uniform(rng, 1.05, max_diagonal);
        double z_sep = std::sqrt((nf.x - 1.0) * (nf.y - 1.0));
        double z_max = nf.z_max();
        if (z_max - z_sep < 1e-3) continue;
        // Stay clear of both the separable border and the pure-state edge.
        double t = uniform(rng, 0.05, 0.95);
        nf.z = z_sep + t * (z_max - z_sep);
        if (uniform(rng, 0.0, 1.0) < 0.5) nf.z = -nf.z;
        auto nu = nf.symplectic_spectrum();
        if (std::min(nu[0], nu[1]) - 1.0 < 1e-3) continue;
        return nf;
    }
}

}  // namespace gaussree
