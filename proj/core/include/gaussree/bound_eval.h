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

#ifndef GAUSSREE_BOUND_EVAL_H
#define GAUSSREE_BOUND_EVAL_H

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gaussree/channels.h"
#include "gaussree/solver_config.h"

namespace gaussree {

/// Limit of the separable-state distance of the quasi-Choi states as r -> ∞, in bits.
/// Returns +inf for pure loss, the quantum-limited amplifier and noiseless additive noise.
/// Throws ValidationError for custom channels or out-of-range parameters.
double closed_form_bound(const ChannelParams &params);

enum class SolverPath { reduced, full, both };

const char *to_string(SolverPath path);
SolverPath solver_path_from_string(const std::string &name);

/// Correction model used for the r -> ∞ fit: a + b·φ(r).
enum class FitModel { inverse_cosh, inverse_sqrt_cosh };

const char *to_string(FitModel model);
/// 1/cosh(2r) for attenuator, amplifier and pure loss; 1/sqrt(cosh(2r)) otherwise.
FitModel fit_model_for(ChannelKind kind);

struct BoundReport {
    std::optional<ChannelParams> channel;
    std::string channel_label;
    SolverPath path = SolverPath::reduced;
    FitModel fit_model = FitModel::inverse_cosh;
    std::vector<double> r_values;
    /// Bits per r; +inf when the quasi-Choi state has no separable state in its support, NaN on failure.
    std::vector<double> bound_at_r;
    /// Per-r results of each path when path == both, otherwise the one path used.
    std::vector<double> full_at_r;
    std::vector<double> reduced_at_r;
    /// Empty when the r point succeeded.
    std::vector<std::string> errors;
    double extrapolated = 0.0;
    double fit_slope = 0.0;
    /// Largest absolute residual of the three-point fit.
    double fit_residual = 0.0;
    /// Values grow without saturating, or are infinite.
    bool divergent = false;
    /// Successive differences fail to shrink somewhere along the schedule.
    bool non_monotone_tail = false;
    std::optional<double> closed_form;
    std::optional<double> abs_deviation;

    bool all_succeeded() const;
};

/// Distance of quasi_choi(channel, r) to the separable set along the requested path.
/// `threads` = 0 uses GAUSSREE_THREADS or the hardware concurrency.
BoundReport sweep_bound(const ChannelParams &params, const std::vector<double> &r_schedule,
                        const SolverConfig &cfg = {}, SolverPath path = SolverPath::reduced, int threads = 0);

BoundReport sweep_bound(const GaussianChannel &channel, const std::vector<double> &r_schedule,
                        const SolverConfig &cfg = {}, SolverPath path = SolverPath::full, int threads = 0,
                        FitModel model = FitModel::inverse_sqrt_cosh);

/// Single-point evaluation for one quasi-Choi state; throws on failure.
double quasi_choi_bound(const GaussianChannel &channel, double r, const SolverConfig &cfg, SolverPath path);

/// Default r schedule {2, 3, 4, 5}.
std::vector<double> default_r_schedule();

/// Worker count from GAUSSREE_THREADS, else hardware concurrency (at least 1).
int default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(int count, int threads, const std::function<void(int)> &body);

}  // namespace gaussree

#endif
