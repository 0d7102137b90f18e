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

#ifndef GAUSSREE_FINITEDIM_H
#define GAUSSREE_FINITEDIM_H

namespace gaussree {

/// Relative entropy in bits between the two-outcome distributions (q, 1-q) and (p, 1-p).
/// Returns +inf when q puts weight where p has none.
double d_bin(double q, double p);

/// Relative entropy of an isotropic state of local dimension d and singlet fraction F to the
/// separable set, in bits; zero for F <= 1/d.
double isotropic_reverse_ree(int d, double fidelity);

}  // namespace gaussree

#endif
