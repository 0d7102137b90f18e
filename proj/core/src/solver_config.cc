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

#include "gaussree/solver_config.h"

#include <cmath>

#include "gaussree/errors.h"

namespace gaussree {

void SolverConfig::validate() const {
    if (!(barrier_mu_initial > 0.0) || !std::isfinite(barrier_mu_initial)) {
        throw ValidationError("barrier_mu_initial must be positive");
    }
    if (!(barrier_decay > 0.0 && barrier_decay < 1.0)) {
        throw ValidationError("barrier_decay must lie in (0, 1)");
    }
    if (!(newton_tol > 0.0)) throw ValidationError("newton_tol must be positive");
    if (!(outer_tol > 0.0)) throw ValidationError("outer_tol must be positive");
    if (max_outer < 1) throw ValidationError("max_outer must be at least 1");
    if (max_inner < 1) throw ValidationError("max_inner must be at least 1");
    if (!(faithfulness_floor > 0.0)) throw ValidationError("faithfulness_floor must be positive");
}

}  // namespace gaussree
