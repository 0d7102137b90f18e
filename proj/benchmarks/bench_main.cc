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

#include <benchmark/benchmark.h>

#include "gaussree/bound_eval.h"
#include "gaussree/channels.h"
#include "gaussree/gaussian_info.h"
#include "gaussree/normal_form.h"
#include "gaussree/random_states.h"
#include "gaussree/ree_solver.h"
#include "gaussree/separability.h"
#include "gaussree/symplectic.h"

namespace {

using namespace gaussree;

ChannelParams attenuator(double lambda, double n_th) {
    ChannelParams p;
    p.lambda = lambda;
    p.n_th = n_th;
    return p;
}

void BM_Williamson(benchmark::State &state) {
    Rng rng(1);
    Matrix v = random_state(static_cast<int>(state.range(0)), 0, rng).entries();
    for (auto _ : state) benchmark::DoNotOptimize(williamson(v));
}
BENCHMARK(BM_Williamson)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_GibbsMatrix(benchmark::State &state) {
    Rng rng(2);
    Matrix v = random_state(static_cast<int>(state.range(0)), 0, rng).entries();
    for (auto _ : state) benchmark::DoNotOptimize(gibbs_matrix(v));
}
BENCHMARK(BM_GibbsMatrix)->Arg(2)->Arg(8);

void BM_RelativeEntropy(benchmark::State &state) {
    Rng rng(3);
    int n = static_cast<int>(state.range(0));
    Matrix vs = random_state(n, 0, rng).entries();
    Matrix vr = random_state(n, 0, rng).entries();
    for (auto _ : state) benchmark::DoNotOptimize(relative_entropy(vs, vr));
}
BENCHMARK(BM_RelativeEntropy)->Arg(2)->Arg(4)->Arg(8);

void BM_SeparabilityFeasibility(benchmark::State &state) {
    Rng rng(4);
    int n = static_cast<int>(state.range(0));
    auto v = random_state(n, n, rng, 1.1, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(is_separable_feasibility(v));
}
BENCHMARK(BM_SeparabilityFeasibility)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_SolveReduced(benchmark::State &state) {
    auto v = quasi_choi(build_channel(attenuator(0.5, 2.0)), static_cast<double>(state.range(0)));
    NormalForm nf{v.entries()(0, 0), v.entries()(2, 2), v.entries()(0, 2)};
    for (auto _ : state) benchmark::DoNotOptimize(solve_reduced(nf));
}
BENCHMARK(BM_SolveReduced)->Arg(1)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_SolveFullTwoMode(benchmark::State &state) {
    auto v = quasi_choi(build_channel(attenuator(0.5, 2.0)), static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve(v));
}
BENCHMARK(BM_SolveFullTwoMode)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SolveFullFourMode(benchmark::State &state) {
    Rng rng(5);
    auto v = random_state(2, 2, rng, 1.1, 2.0);
    for (auto _ : state) benchmark::DoNotOptimize(solve(v));
}
BENCHMARK(BM_SolveFullFourMode)->Unit(benchmark::kMillisecond);

void BM_SweepAttenuator(benchmark::State &state) {
    auto path = state.range(0) ? SolverPath::full : SolverPath::reduced;
    for (auto _ : state) benchmark::DoNotOptimize(sweep_bound(attenuator(0.5, 2.0), default_r_schedule(), {}, path, 1));
}
BENCHMARK(BM_SweepAttenuator)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
