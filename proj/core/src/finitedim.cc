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

#include "gaussree/finitedim.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "gaussree/errors.h"

namespace gaussree {

namespace {

// q log2(q / p) with the 0 log 0 = 0 convention.
double term(double q, double p) {
    if (q == 0.0) return 0.0;
    if (p == 0.0) return std::numeric_limits<double>::infinity();
    return q * std::log2(q / p);
}

void require_probability(double value, const char *name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        std::ostringstream out;
        out.precision(17);
        out << name << " must lie in [0, 1], got " << value;
        throw ValidationError(out.str());
    }
}

}  // namespace

double d_bin(double q, double p) {
    require_probability(q, "q");
    require_probability(p, "p");
    return term(q, p) + term(1.0 - q, 1.0 - p);
}

double isotropic_reverse_ree(int d, double fidelity) {
    if (d < 2) throw ValidationError("local dimension must be at least 2");
    require_probability(fidelity, "singlet fraction");
    const double threshold = 1.0 / d;
    if (fidelity <= threshold) return 0.0;
    return d_bin(threshold, fidelity);
}

}  // namespace gaussree
