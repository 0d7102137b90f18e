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

#ifndef GAUSSREE_ERRORS_H
#define GAUSSREE_ERRORS_H

#include <stdexcept>
#include <string>
#include <vector>

namespace gaussree {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: wrong shape, non-symmetric entries, out-of-range parameters, NaN/Inf.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// Mathematically valid input outside the domain of an operation.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A covariance matrix has a symplectic eigenvalue too close to 1 for Gibbs-form quantities.
class NotFaithfulError : public DomainError {
   public:
    NotFaithfulError(double nu, double tolerance);
    double nu() const { return nu_; }

   private:
    double nu_;
};

/// An iterative solver failed; carries the iteration trace collected so far.
class SolverError : public Error {
   public:
    SolverError(const std::string &what, std::vector<std::string> trace);
    const std::vector<std::string> &trace() const { return trace_; }

   private:
    std::vector<std::string> trace_;
};

/// File could not be read or written.
class IoError : public Error {
   public:
    using Error::Error;
};

}  // namespace gaussree

#endif
