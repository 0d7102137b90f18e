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

#include "gaussree/covariance.h"

#include <cmath>
#include <sstream>

#include "gaussree/errors.h"

namespace gaussree {

NotFaithfulError::NotFaithfulError(double nu, double tolerance)
    : DomainError([&] {
          std::ostringstream out;
          out.precision(17);
          out << "state not faithful: symplectic eigenvalue " << nu << " is within ";
          out.precision(3);
          out << tolerance << " of 1";
          return out.str();
      }()),
      nu_(nu) {}

SolverError::SolverError(const std::string &what, std::vector<std::string> trace)
    : Error(what), trace_(std::move(trace)) {}

void require_finite(const Matrix &m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!std::isfinite(m(i, j))) {
                std::ostringstream out;
                out << "entry (" << i << ", " << j << ") is not finite";
                throw ValidationError(out.str());
            }
        }
    }
}

void require_symmetric(const Matrix &m, double rel_tol) {
    if (m.rows() != m.cols()) {
        std::ostringstream out;
        out << "matrix is " << m.rows() << "x" << m.cols() << ", expected square";
        throw ValidationError(out.str());
    }
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - m(j, i)) > rel_tol * scale) {
                std::ostringstream out;
                out.precision(17);
                out << "matrix not symmetric: entries (" << i << ", " << j << ") = " << m(i, j)
                    << " and (" << j << ", " << i << ") = " << m(j, i);
                throw ValidationError(out.str());
            }
        }
    }
}

Matrix symmetrized(const Matrix &m) { return 0.5 * (m + m.transpose()); }

Matrix direct_sum(const Matrix &m1, const Matrix &m2) {
    Matrix out = Matrix::Zero(m1.rows() + m2.rows(), m1.cols() + m2.cols());
    out.topLeftCorner(m1.rows(), m1.cols()) = m1;
    out.bottomRightCorner(m2.rows(), m2.cols()) = m2;
    return out;
}

CovarianceMatrix::CovarianceMatrix(int n_modes_a, int n_modes_b, Matrix entries)
    : n_modes_a_(n_modes_a), n_modes_b_(n_modes_b) {
    if (n_modes_a < 1 || n_modes_b < 0) {
        throw ValidationError("need n_modes_a >= 1 and n_modes_b >= 0");
    }
    if (n_modes_a + n_modes_b > kMaxModes) {
        std::ostringstream out;
        out << "at most " << kMaxModes << " modes are supported, got " << n_modes_a + n_modes_b;
        throw ValidationError(out.str());
    }
    Eigen::Index dim = 2 * (n_modes_a + n_modes_b);
    if (entries.rows() != dim || entries.cols() != dim) {
        std::ostringstream out;
        out << "covariance matrix is " << entries.rows() << "x" << entries.cols() << ", expected "
            << dim << "x" << dim;
        throw ValidationError(out.str());
    }
    require_finite(entries);
    require_symmetric(entries);
    entries_ = symmetrized(entries);
}

CovarianceMatrix::CovarianceMatrix(Matrix entries)
    : CovarianceMatrix(static_cast<int>(entries.rows() / 2), 0, entries) {}

Matrix CovarianceMatrix::block_a() const {
    return entries_.topLeftCorner(2 * n_modes_a_, 2 * n_modes_a_);
}

Matrix CovarianceMatrix::block_b() const {
    return entries_.bottomRightCorner(2 * n_modes_b_, 2 * n_modes_b_);
}

Matrix CovarianceMatrix::block_ab() const {
    return entries_.topRightCorner(2 * n_modes_a_, 2 * n_modes_b_);
}

}  // namespace gaussree
