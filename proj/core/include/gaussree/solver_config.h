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

#ifndef GAUSSREE_SOLVER_CONFIG_H
#define GAUSSREE_SOLVER_CONFIG_H

namespace gaussree {

/// Parameters of the log-det barrier method shared by the separability
/// feasibility test and the relative-entropy program.
struct SolverConfig {
    double barrier_mu_initial = 1.0;
    /// Factor applied to μ after every outer iteration, in (0, 1).
    double barrier_decay = 0.2;
    /// Inner loop stops when half the squared Newton decrement drops below this.
    double newton_tol = 1e-9;
    /// Outer loop stops when the duality-gap estimate drops below this.
    double outer_tol = 1e-8;
    int max_outer = 60;
    int max_inner = 100;
    double faithfulness_floor = 1e-9;
    /// Validate the analytic objective gradient against finite differences before use.
    bool gradient_check = false;

    /// Throws ValidationError when a field is out of range.
    void validate() const;
};

}  // namespace gaussree

#endif
