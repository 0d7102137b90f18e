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

#include "gaussree/bound_eval.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include "gaussree/errors.h"
#include "gaussree/normal_form.h"
#include "gaussree/ree_solver.h"
#include "gaussree/separability.h"
#include "gaussree/symplectic.h"

namespace gaussree {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// n_sep(arcoth n_th - arcoth n_sep)/ln2 + log2 sqrt((n_th²-1)/(n_sep²-1)) on 1 <= n_th <= n_sep.
double thermal_bound(double n_th, double n_sep) {
    if (!std::isfinite(n_sep)) return kInf;
    if (n_th >= n_sep) return 0.0;
    if (n_th <= 1.0) return kInf;
    double value = n_sep * (arcoth(n_th) - arcoth(n_sep)) / std::log(2.0) +
                   0.5 * std::log2((n_th * n_th - 1.0) / (n_sep * n_sep - 1.0));
    return std::max(0.0, value);
}

}  // namespace

double closed_form_bound(const ChannelParams &params) {
    params.validate();
    switch (params.kind) {
        case ChannelKind::attenuator:
            return thermal_bound(params.n_th, params.n_sep());
        case ChannelKind::pure_loss:
            return params.lambda <= 0.0 ? 0.0 : kInf;
        case ChannelKind::amplifier:
            return thermal_bound(params.n_th, params.n_sep());
        case ChannelKind::additive_noise: {
            const double mu = params.mu;
            if (mu >= 2.0) return 0.0;
            if (mu <= 0.0) return kInf;
            return std::max(0.0, (2.0 - mu) / (mu * std::log(2.0)) + std::log2(mu / 2.0));
        }
        case ChannelKind::identity:
            return kInf;
        case ChannelKind::custom:
            break;
    }
    throw ValidationError("no closed form for custom channels");
}

const char *to_string(SolverPath path) {
    switch (path) {
        case SolverPath::reduced:
            return "reduced";
        case SolverPath::full:
            return "full";
        case SolverPath::both:
            return "both";
    }
    return "reduced";
}

SolverPath solver_path_from_string(const std::string &name) {
    if (name == "reduced") return SolverPath::reduced;
    if (name == "full") return SolverPath::full;
    if (name == "both") return SolverPath::both;
    throw ValidationError("unknown solver path '" + name + "' (expected reduced, full or both)");
}

const char *to_string(FitModel model) {
    return model == FitModel::inverse_cosh ? "a+b/cosh(2r)" : "a+b/sqrt(cosh(2r))";
}

FitModel fit_model_for(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::attenuator:
        case ChannelKind::amplifier:
        case ChannelKind::pure_loss:
            return FitModel::inverse_cosh;
        default:
            return FitModel::inverse_sqrt_cosh;
    }
}

bool BoundReport::all_succeeded() const {
    return std::all_of(errors.begin(), errors.end(), [](const std::string &e) { return e.empty(); });
}

std::vector<double> default_r_schedule() { return {2.0, 3.0, 4.0, 5.0}; }

int default_thread_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    int count = std::max(1, hw);
    if (const char *env = std::getenv("GAUSSREE_THREADS")) {
        char *end = nullptr;
        long requested = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && requested > 0) count = static_cast<int>(std::min<long>(requested, 1024));
    }
    return count;
}

void parallel_for(int count, int threads, const std::function<void(int)> &body) {
    if (threads <= 0) threads = default_thread_count();
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
        });
    }
    for (auto &worker : pool) worker.join();
}

double quasi_choi_bound(const GaussianChannel &channel, double r, const SolverConfig &cfg, SolverPath path) {
    CovarianceMatrix v = quasi_choi(channel, r);
    auto support = product_support_status(v, cfg.faithfulness_floor);
    if (support == SupportStatus::no_product_in_support) return kInf;
    if (support != SupportStatus::faithful) {
        // Zero only if ρ itself is separable; otherwise the objective is undefined.
        auto witness = is_separable_feasibility(v, cfg);
        if (witness.separable) return 0.0;
        throw NotFaithfulError(symplectic_spectrum(v.entries()).back(), cfg.faithfulness_floor);
    }
    if (path == SolverPath::full) return solve(v, cfg).value_bits;
    if (v.n_modes_a() != 1 || v.n_modes_b() != 1) {
        throw ValidationError("the reduced path needs a single-mode channel");
    }
    auto reduction = local_normal_form(v);
    if (!reduction.exact) throw DomainError("state could not be brought to normal form exactly");
    return solve_reduced(reduction.normal_form, cfg).value_bits;
}

namespace {

double phi(FitModel model, double r) {
    double c = std::cosh(2.0 * r);
    return model == FitModel::inverse_cosh ? 1.0 / c : 1.0 / std::sqrt(c);
}

void summarise(BoundReport &report) {
    const auto &values = report.bound_at_r;
    const size_t n = values.size();
    report.extrapolated = kNaN;
    for (size_t i = 0; i < n; ++i) {
        if (std::isinf(values[i])) report.divergent = true;
    }
    // Saturation diagnostics on successive differences.
    for (size_t i = 2; i < n; ++i) {
        double d_prev = values[i - 1] - values[i - 2];
        double d_next = values[i] - values[i - 1];
        if (!std::isfinite(d_prev) || !std::isfinite(d_next)) continue;
        if (std::abs(d_next) >= std::abs(d_prev) && std::abs(d_next) > 1e-9) report.non_monotone_tail = true;
    }
    if (n >= 3) {
        double d_prev = values[n - 2] - values[n - 3];
        double d_last = values[n - 1] - values[n - 2];
        if (std::isfinite(d_prev) && std::isfinite(d_last) && d_prev > 1e-6 && d_last >= d_prev) {
            report.divergent = true;
        }
    }
    if (report.divergent) {
        report.extrapolated = kInf;
    } else {
        // Least-squares fit of a + b φ(r) over the last three successful points.
        std::vector<std::pair<double, double>> pts;
        for (size_t i = n; i-- > 0 && pts.size() < 3;) {
            if (std::isfinite(values[i])) pts.emplace_back(phi(report.fit_model, report.r_values[i]), values[i]);
        }
        if (pts.size() == 1) {
            report.extrapolated = pts[0].second;
        } else if (pts.size() >= 2) {
            double mx = 0.0, my = 0.0;
            for (auto &[x, y] : pts) {
                mx += x;
                my += y;
            }
            mx /= static_cast<double>(pts.size());
            my /= static_cast<double>(pts.size());
            double sxx = 0.0, sxy = 0.0;
            for (auto &[x, y] : pts) {
                sxx += (x - mx) * (x - mx);
                sxy += (x - mx) * (y - my);
            }
            double b = sxx > 0.0 ? sxy / sxx : 0.0;
            double a = my - b * mx;
            report.fit_slope = b;
            for (auto &[x, y] : pts) report.fit_residual = std::max(report.fit_residual, std::abs(a + b * x - y));
            report.extrapolated = std::max(0.0, a);
        }
    }
    if (report.closed_form && std::isfinite(report.extrapolated)) {
        if (std::isfinite(*report.closed_form)) {
            report.abs_deviation = std::abs(report.extrapolated - *report.closed_form);
        }
    }
}

BoundReport run_sweep(const GaussianChannel &channel, const std::vector<double> &r_schedule,
                      const SolverConfig &cfg, SolverPath path, int threads, BoundReport report) {
    cfg.validate();
    if (r_schedule.empty()) throw ValidationError("r schedule is empty");
    for (size_t i = 0; i < r_schedule.size(); ++i) {
        if (!(r_schedule[i] >= 0.0) || !std::isfinite(r_schedule[i])) {
            throw ValidationError("r values must be finite and non-negative");
        }
        if (i > 0 && !(r_schedule[i] > r_schedule[i - 1])) throw ValidationError("r schedule must be ascending");
    }
    const int n = static_cast<int>(r_schedule.size());
    report.path = path;
    report.r_values = r_schedule;
    report.bound_at_r.assign(n, kNaN);
    report.full_at_r.assign(n, kNaN);
    report.reduced_at_r.assign(n, kNaN);
    report.errors.assign(n, "");

    std::vector<std::string> full_errors(n), reduced_errors(n);
    const bool want_full = path != SolverPath::reduced;
    const bool want_reduced = path != SolverPath::full;
    const int jobs = (want_full ? n : 0) + (want_reduced ? n : 0);
    parallel_for(jobs, threads, [&](int job) {
        bool full = want_full && job < n;
        int i = full ? job : job - (want_full ? n : 0);
        auto &out = full ? report.full_at_r[i] : report.reduced_at_r[i];
        auto &err = full ? full_errors[i] : reduced_errors[i];
        try {
            out = quasi_choi_bound(channel, r_schedule[i], cfg, full ? SolverPath::full : SolverPath::reduced);
        } catch (const std::exception &e) {
            err = e.what();
        }
    });
    for (int i = 0; i < n; ++i) {
        if (path == SolverPath::reduced) {
            report.bound_at_r[i] = report.reduced_at_r[i];
            report.errors[i] = reduced_errors[i];
        } else {
            report.bound_at_r[i] = report.full_at_r[i];
            report.errors[i] = full_errors[i];
            if (path == SolverPath::both && !reduced_errors[i].empty() && report.errors[i].empty()) {
                report.errors[i] = "reduced path: " + reduced_errors[i];
            }
        }
    }
    summarise(report);
    return report;
}

}  // namespace

BoundReport sweep_bound(const ChannelParams &params, const std::vector<double> &r_schedule, const SolverConfig &cfg,
                        SolverPath path, int threads) {
    GaussianChannel channel = build_channel(params);
    BoundReport report;
    report.channel = params;
    report.channel_label = channel.label;
    report.fit_model = fit_model_for(params.kind);
    report.closed_form = closed_form_bound(params);
    return run_sweep(channel, r_schedule, cfg, path, threads, std::move(report));
}

BoundReport sweep_bound(const GaussianChannel &channel, const std::vector<double> &r_schedule,
                        const SolverConfig &cfg, SolverPath path, int threads, FitModel model) {
    BoundReport report;
    report.channel_label = channel.label;
    report.fit_model = model;
    return run_sweep(channel, r_schedule, cfg, path, threads, std::move(report));
}

}  // namespace gaussree
