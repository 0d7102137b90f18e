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

#include "cli.h"

#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gaussree/bound_eval.h"
#include "gaussree/channels.h"
#include "gaussree/errors.h"
#include "gaussree/finitedim.h"
#include "gaussree/io.h"
#include "gaussree/normal_form.h"
#include "gaussree/random_states.h"
#include "gaussree/ree_solver.h"
#include "gaussree/separability.h"
#include "gaussree/symplectic.h"

namespace gaussree::cli {

namespace {

using nlohmann::json;

json real(double value) {
    if (!std::isfinite(value)) return nullptr;
    return round_significant(value);
}

// Config files are JSON objects keyed by subcommand, e.g. {"bound": {"lambda": 0.5, "r": [2, 3]}}.
class JsonConfig : public CLI::Config {
   public:
    std::string to_config(const CLI::App *, bool, bool, std::string) const override { return "{}\n"; }

    std::vector<CLI::ConfigItem> from_config(std::istream &input) const override {
        json doc;
        try {
            input >> doc;
        } catch (const json::exception &e) {
            throw ValidationError(std::string("malformed config file: ") + e.what());
        }
        if (!doc.is_object()) throw ValidationError("config file must hold a JSON object");
        std::vector<CLI::ConfigItem> items;
        collect(doc, {}, items);
        return items;
    }

   private:
    static std::string scalar(const json &value) {
        if (value.is_string()) return value.get<std::string>();
        if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
        return value.dump();
    }

    static void collect(const json &obj, const std::vector<std::string> &parents, std::vector<CLI::ConfigItem> &out) {
        for (const auto &[key, value] : obj.items()) {
            std::string name = key;
            for (char &c : name) {
                if (c == '_') c = '-';
            }
            if (value.is_object()) {
                auto nested = parents;
                nested.push_back(name);
                collect(value, nested, out);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = name;
            if (value.is_array()) {
                for (const auto &element : value) item.inputs.push_back(scalar(element));
            } else {
                item.inputs.push_back(scalar(value));
            }
            out.push_back(std::move(item));
        }
    }
};

struct Output {
    std::string path;
    std::string format = "json";

    void add(CLI::App *sub, bool csv_allowed) {
        sub->add_option("-o,--output", path, "Write the result to this file instead of stdout");
        if (csv_allowed) {
            sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        }
    }

    void emit(const std::string &text, std::ostream &out) const {
        if (path.empty()) {
            out << text;
        } else {
            write_text_file(path, text);
        }
    }
};

void add_solver_flags(CLI::App *sub, SolverConfig &cfg) {
    sub->add_option("--mu0", cfg.barrier_mu_initial, "Initial barrier weight");
    sub->add_option("--decay", cfg.barrier_decay, "Barrier weight reduction per outer step");
    sub->add_option("--newton-tol", cfg.newton_tol, "Inner loop tolerance on the Newton decrement");
    sub->add_option("--outer-tol", cfg.outer_tol, "Target duality-gap estimate");
    sub->add_option("--max-outer", cfg.max_outer, "Outer iteration limit");
    sub->add_option("--max-inner", cfg.max_inner, "Inner iteration limit");
    sub->add_option("--faithfulness-floor", cfg.faithfulness_floor, "Smallest accepted symplectic eigenvalue minus 1");
    sub->add_flag("--gradient-check", cfg.gradient_check, "Validate the analytic gradient before solving");
}

struct ChannelFlags {
    std::string kind;
    std::string file;
    std::optional<double> lambda;
    std::optional<double> eta;
    std::optional<double> mu;
    std::optional<double> n_th;

    void add(CLI::App *sub) {
        sub->add_option("--channel", kind,
                        "Channel kind: attenuator, amplifier, additive-noise, pure-loss or identity");
        sub->add_option("--channel-file", file, "Channel JSON file (catalog or custom X, Y)");
        sub->add_option("--lambda", lambda, "Transmissivity");
        sub->add_option("--eta", eta, "Amplifier gain");
        sub->add_option("--mu", mu, "Additive noise variance");
        sub->add_option("--n-th", n_th, "Thermal noise of the environment");
    }

    ChannelParams params() const {
        if (kind.empty()) throw ValidationError("--channel or --channel-file is required");
        ChannelParams p;
        p.kind = channel_kind_from_string(kind);
        auto need = [](const std::optional<double> &value, const char *flag) {
            if (!value) throw ValidationError(std::string("missing ") + flag + " for channel");
            return *value;
        };
        switch (p.kind) {
            case ChannelKind::attenuator:
                p.lambda = need(lambda, "--lambda");
                p.n_th = need(n_th, "--n-th");
                break;
            case ChannelKind::pure_loss:
                p.lambda = need(lambda, "--lambda");
                break;
            case ChannelKind::amplifier:
                p.eta = need(eta, "--eta");
                p.n_th = need(n_th, "--n-th");
                break;
            case ChannelKind::additive_noise:
                p.mu = need(mu, "--mu");
                break;
            case ChannelKind::identity:
                break;
            case ChannelKind::custom:
                throw ValidationError("custom channels are read with --channel-file");
        }
        p.validate();
        return p;
    }

    ChannelDescription resolve() const {
        if (!file.empty()) {
            if (!kind.empty()) throw ValidationError("use either --channel or --channel-file, not both");
            return channel_from_json(read_text_file(file));
        }
        ChannelParams p = params();
        return {p, build_channel(p)};
    }
};

struct GridAxis {
    std::string name;
    std::vector<double> values;
};

GridAxis parse_grid(const std::string &spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw ValidationError("grid '" + spec + "' must look like name:start,stop,count");
    GridAxis axis;
    axis.name = spec.substr(0, colon);
    for (char &c : axis.name) {
        if (c == '-') c = '_';
    }
    if (axis.name != "lambda" && axis.name != "eta" && axis.name != "mu" && axis.name != "n_th") {
        throw ValidationError("unknown grid parameter '" + axis.name + "' (expected lambda, eta, mu or n_th)");
    }
    std::vector<std::string> parts;
    std::stringstream rest(spec.substr(colon + 1));
    for (std::string part; std::getline(rest, part, ',');) parts.push_back(part);
    if (parts.size() != 3) throw ValidationError("grid '" + spec + "' must look like name:start,stop,count");
    double start = 0.0, stop = 0.0;
    long count = 0;
    try {
        size_t used = 0;
        start = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument("start");
        stop = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("stop");
        count = std::stol(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("count");
    } catch (const std::exception &) {
        throw ValidationError("grid '" + spec + "' has malformed numbers");
    }
    if (!std::isfinite(start) || !std::isfinite(stop)) throw ValidationError("grid bounds must be finite");
    if (count <= 0) throw ValidationError("grid '" + spec + "' is empty");
    for (long k = 0; k < count; ++k) {
        double t = count == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(count - 1);
        axis.values.push_back(k == count - 1 ? stop : start + t * (stop - start));
    }
    return axis;
}

void set_param(ChannelParams &p, const std::string &name, double value) {
    if (name == "lambda") p.lambda = value;
    if (name == "eta") p.eta = value;
    if (name == "mu") p.mu = value;
    if (name == "n_th") p.n_th = value;
}

std::string csv_safe(std::string text) {
    for (char &c : text) {
        if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
    }
    return text;
}

CovarianceMatrix load_covariance(const std::string &path) { return covariance_from_json(read_text_file(path)); }

json normal_form_json(const NormalForm &nf) { return {{"x", real(nf.x)}, {"y", real(nf.y)}, {"z", real(nf.z)}}; }

int cmd_ree(const std::string &input, const SolverConfig &cfg, const Output &output, std::ostream &out) {
    SolveResult result = solve(load_covariance(input), cfg);
    output.emit(solve_result_to_json(result), out);
    return kExitOk;
}

int cmd_bound(const ChannelFlags &flags, const std::vector<double> &r_values, const std::string &path,
              int threads, const SolverConfig &cfg, const Output &output, std::ostream &out) {
    ChannelDescription desc = flags.resolve();
    BoundReport report;
    if (desc.params) {
        SolverPath p = solver_path_from_string(path.empty() ? "reduced" : path);
        report = sweep_bound(*desc.params, r_values, cfg, p, threads);
    } else {
        SolverPath p = solver_path_from_string(path.empty() ? "full" : path);
        report = sweep_bound(desc.channel, r_values, cfg, p, threads);
    }
    output.emit(output.format == "csv" ? bound_report_to_csv(report) : bound_report_to_json(report), out);
    bool any_ok = false;
    for (const auto &e : report.errors) any_ok = any_ok || e.empty();
    return any_ok ? kExitOk : kExitSolver;
}

int cmd_sweep(const ChannelFlags &flags, const std::vector<std::string> &grids, const std::vector<double> &r_values,
              const std::string &path, int threads, const SolverConfig &cfg, const Output &output,
              std::ostream &out) {
    if (grids.empty()) throw ValidationError("sweep needs at least one --grid name:start,stop,count");
    if (r_values.empty()) throw ValidationError("r schedule is empty");
    for (double r : r_values) {
        if (!(r >= 0.0) || !std::isfinite(r)) throw ValidationError("r values must be finite and non-negative");
    }
    SolverPath solver_path = solver_path_from_string(path);
    if (solver_path == SolverPath::both) throw ValidationError("sweep supports --path reduced or full");
    if (!flags.file.empty()) throw ValidationError("sweep works on catalog channels given with --channel");
    cfg.validate();

    std::vector<GridAxis> axes;
    for (const auto &spec : grids) axes.push_back(parse_grid(spec));
    ChannelFlags base = flags;
    // Grid parameters need no base value of their own.
    for (const auto &axis : axes) {
        if (axis.name == "lambda" && !base.lambda) base.lambda = axis.values.front();
        if (axis.name == "eta" && !base.eta) base.eta = axis.values.front();
        if (axis.name == "mu" && !base.mu) base.mu = axis.values.front();
        if (axis.name == "n_th" && !base.n_th) base.n_th = axis.values.front();
    }
    ChannelParams base_params = base.params();

    // Grid points in lexicographic order, first axis slowest.
    std::vector<std::vector<double>> points{{}};
    for (const auto &axis : axes) {
        std::vector<std::vector<double>> next;
        for (const auto &prefix : points) {
            for (double v : axis.values) {
                auto p = prefix;
                p.push_back(v);
                next.push_back(std::move(p));
            }
        }
        points = std::move(next);
    }
    std::vector<ChannelParams> params;
    for (const auto &point : points) {
        ChannelParams p = base_params;
        for (size_t k = 0; k < axes.size(); ++k) set_param(p, axes[k].name, point[k]);
        p.validate();
        params.push_back(p);
    }

    const int n_r = static_cast<int>(r_values.size());
    const int jobs = static_cast<int>(params.size()) * n_r;
    std::vector<double> values(jobs, std::numeric_limits<double>::quiet_NaN());
    std::vector<std::string> status(jobs, "ok");
    parallel_for(jobs, threads, [&](int job) {
        const ChannelParams &p = params[job / n_r];
        try {
            values[job] = quasi_choi_bound(build_channel(p), r_values[job % n_r], cfg, solver_path);
        } catch (const std::exception &e) {
            status[job] = e.what();
        }
    });

    bool any_ok = false;
    for (const auto &s : status) any_ok = any_ok || s == "ok";
    if (output.format == "csv") {
        std::ostringstream text;
        for (const auto &axis : axes) text << axis.name << ',';
        text << "r,bound_bits,closed_form_bits,status\n";
        for (int job = 0; job < jobs; ++job) {
            const auto &point = points[job / n_r];
            for (double v : point) text << format_real(v) << ',';
            text << format_real(r_values[job % n_r]) << ',' << format_real(values[job]) << ','
                 << format_real(closed_form_bound(params[job / n_r])) << ',' << csv_safe(status[job]) << '\n';
        }
        output.emit(text.str(), out);
    } else {
        json rows = json::array();
        for (int job = 0; job < jobs; ++job) {
            json row;
            const auto &point = points[job / n_r];
            for (size_t k = 0; k < axes.size(); ++k) row[axes[k].name] = real(point[k]);
            row["r"] = real(r_values[job % n_r]);
            row["bound_bits"] = real(values[job]);
            row["divergent"] = std::isinf(values[job]);
            double cf = closed_form_bound(params[job / n_r]);
            row["closed_form_bits"] = real(cf);
            row["status"] = status[job];
            rows.push_back(std::move(row));
        }
        json doc;
        doc["channel"] = json::parse(channel_to_json(base_params));
        doc["path"] = to_string(solver_path);
        doc["rows"] = rows;
        output.emit(doc.dump(2) + "\n", out);
    }
    return any_ok ? kExitOk : kExitSolver;
}

int cmd_separability(const std::string &input, const SolverConfig &cfg, const Output &output, std::ostream &out) {
    CovarianceMatrix v = load_covariance(input);
    SeparabilityWitness w = is_separable_feasibility(v, cfg);
    json doc;
    doc["status"] = to_string(w.status);
    doc["separable"] = w.separable;
    doc["margin"] = real(w.margin);
    doc["margin_upper_bound"] = real(w.margin_upper_bound);
    doc["iterations"] = w.iterations;
    if (w.gamma_a) {
        json g = json::array();
        for (Eigen::Index i = 0; i < w.gamma_a->rows(); ++i) {
            for (Eigen::Index j = 0; j < w.gamma_a->cols(); ++j) g.push_back((*w.gamma_a)(i, j));
        }
        doc["gamma_a"] = g;
    }
    if (v.n_modes_b() > 0 && (v.n_modes_a() == 1 || v.n_modes_b() == 1)) {
        doc["partial_transpose"] = {{"min_symplectic_eigenvalue", real(partial_transpose_min_eigenvalue(v))},
                                    {"separable", is_separable_ppt(v)}};
    }
    output.emit(doc.dump(2) + "\n", out);
    return kExitOk;
}

int cmd_normal_form(const std::string &input, std::optional<double> x, std::optional<double> y,
                    std::optional<double> z, bool do_solve, const SolverConfig &cfg, const Output &output,
                    std::ostream &out) {
    json doc;
    NormalForm nf;
    if (!input.empty()) {
        if (x || y || z) throw ValidationError("use either --input or --x/--y/--z");
        NormalFormReduction reduction = local_normal_form(load_covariance(input));
        nf = reduction.normal_form;
        doc["exact"] = reduction.exact;
        doc["log"] = reduction.log;
    } else {
        if (!x || !y || !z) throw ValidationError("normal-form needs --input or all of --x, --y, --z");
        nf = NormalForm{*x, *y, *z};
        if (!nf.is_bona_fide()) throw DomainError("normal form is not bona fide");
        doc["exact"] = true;
    }
    doc["normal_form"] = normal_form_json(nf);
    auto nu = nf.symplectic_spectrum();
    doc["symplectic_spectrum"] = {real(nu[0]), real(nu[1])};
    doc["separable"] = is_separable_two_mode(nf);
    if (do_solve) {
        ReducedSolution sol = solve_reduced(nf, cfg);
        doc["reduced"] = {{"value_bits", real(sol.value_bits)},
                          {"nu1", real(sol.point.nu1)},
                          {"nu2", real(sol.point.nu2)},
                          {"sigma", normal_form_json(sol.sigma)},
                          {"residuals", {real(sol.residuals.d_nu1), real(sol.residuals.d_nu2)}},
                          {"trivial", sol.trivial}};
    }
    output.emit(doc.dump(2) + "\n", out);
    return kExitOk;
}

void print_error(std::ostream &err, const char *kind, const std::string &message,
                 const std::vector<std::string> &trace = {}) {
    json doc;
    doc["error"] = {{"kind", kind}, {"message", message}};
    if (!trace.empty()) doc["error"]["trace"] = trace;
    err << doc.dump() << "\n";
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Distance of Gaussian states and channels to the separable set"};
    app.name("gaussree");
    app.require_subcommand(1);
    app.set_config("--config", "", "JSON file with option values keyed by subcommand");
    app.config_formatter(std::make_shared<JsonConfig>());

    SolverConfig cfg;
    Output output;
    std::string input;
    ChannelFlags channel;
    std::vector<double> r_values = default_r_schedule();
    std::vector<double> sweep_r = {5.0};
    std::string path = "";
    std::string sweep_path = "reduced";
    int threads = 0;
    std::vector<std::string> grids;

    auto *ree = app.add_subcommand("ree", "Relative entropy of a state to the separable Gaussian states");
    ree->add_option("-i,--input", input, "Covariance JSON file")->required();
    add_solver_flags(ree, cfg);
    output.add(ree, false);

    auto *bound = app.add_subcommand("bound", "Quasi-Choi bound of a channel over an r schedule");
    channel.add(bound);
    bound->add_option("--r", r_values, "Squeezing schedule, ascending")->delimiter(',');
    bound->add_option("--path", path, "Solver path: reduced, full or both");
    bound->add_option("--threads", threads, "Worker count (default GAUSSREE_THREADS or all cores)");
    add_solver_flags(bound, cfg);
    output.add(bound, true);

    auto *sweep = app.add_subcommand("sweep", "Bound over a grid of channel parameters");
    channel.add(sweep);
    sweep->add_option("--grid", grids, "Parameter grid name:start,stop,count (repeatable)");
    sweep->add_option("--r", sweep_r, "Squeezing values")->delimiter(',');
    sweep->add_option("--path", sweep_path, "Solver path: reduced or full");
    sweep->add_option("--threads", threads, "Worker count (default GAUSSREE_THREADS or all cores)");
    add_solver_flags(sweep, cfg);
    output.add(sweep, true);

    auto *sep = app.add_subcommand("separability", "Separability test with a feasibility certificate");
    sep->add_option("-i,--input", input, "Covariance JSON file")->required();
    add_solver_flags(sep, cfg);
    output.add(sep, false);

    std::optional<double> nf_x, nf_y, nf_z;
    bool nf_solve = false;
    auto *nf = app.add_subcommand("normal-form", "Two-mode normal form and the reduced optimisation");
    nf->add_option("-i,--input", input, "Covariance JSON file with one mode per side");
    nf->add_option("--x", nf_x, "Normal-form x");
    nf->add_option("--y", nf_y, "Normal-form y");
    nf->add_option("--z", nf_z, "Normal-form z");
    nf->add_flag("--solve", nf_solve, "Run the reduced optimisation");
    output.add(nf, false);

    auto *oracle = app.add_subcommand("oracle", "Closed-form calculators and fixture generation");
    oracle->require_subcommand(1);
    double q = 0.0, p = 0.0, fidelity = 0.0;
    int d = 2;
    auto *dbin = oracle->add_subcommand("d-bin", "Binary relative entropy in bits");
    dbin->add_option("--q", q, "First distribution")->required();
    dbin->add_option("--p", p, "Second distribution")->required();
    auto *iso = oracle->add_subcommand("isotropic", "Isotropic-state distance to the separable set");
    iso->add_option("--d", d, "Local dimension")->required();
    iso->add_option("--fidelity", fidelity, "Singlet fraction")->required();
    int modes_a = 1, modes_b = 1;
    std::optional<std::uint64_t> seed;
    std::string family = "state";
    auto *rcov = oracle->add_subcommand("random-cov", "Random covariance matrix fixture");
    rcov->add_option("--modes-a", modes_a, "Modes on side A");
    rcov->add_option("--modes-b", modes_b, "Modes on side B");
    rcov->add_option("--seed", seed, "Generator seed")->required();
    rcov->add_option("--family", family, "state, separable or entangled-normal")
        ->check(CLI::IsMember({"state", "separable", "entangled-normal"}));
    output.add(oracle, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::FileError &e) {
        print_error(err, "io", e.what());
        return kExitIo;
    } catch (const CLI::ParseError &e) {
        print_error(err, "validation", e.what());
        return kExitValidation;
    } catch (const IoError &e) {
        print_error(err, "io", e.what());
        return kExitIo;
    } catch (const Error &e) {
        print_error(err, "validation", e.what());
        return kExitValidation;
    }

    try {
        if (*ree) return cmd_ree(input, cfg, output, out);
        if (*bound) return cmd_bound(channel, r_values, path, threads, cfg, output, out);
        if (*sweep) return cmd_sweep(channel, grids, sweep_r, sweep_path, threads, cfg, output, out);
        if (*sep) return cmd_separability(input, cfg, output, out);
        if (*nf) return cmd_normal_form(input, nf_x, nf_y, nf_z, nf_solve, cfg, output, out);
        json doc;
        if (*dbin) {
            double v = d_bin(q, p);
            doc = {{"d_bin_bits", real(v)}, {"divergent", std::isinf(v)}};
        } else if (*iso) {
            double v = isotropic_reverse_ree(d, fidelity);
            doc = {{"value_bits", real(v)}, {"divergent", std::isinf(v)}};
        } else if (*rcov) {
            if (modes_a < 1 || modes_b < 0 || modes_a + modes_b > kMaxModes) {
                throw ValidationError("mode counts out of range");
            }
            Rng rng(*seed);
            if (family == "separable") {
                output.emit(covariance_to_json(random_separable_state(modes_a, modes_b, rng)), out);
            } else if (family == "entangled-normal") {
                output.emit(covariance_to_json(random_entangled_normal_form(rng).to_covariance()), out);
            } else {
                output.emit(covariance_to_json(random_state(modes_a, modes_b, rng)), out);
            }
            return kExitOk;
        }
        output.emit(doc.dump(2) + "\n", out);
        return kExitOk;
    } catch (const IoError &e) {
        print_error(err, "io", e.what());
        return kExitIo;
    } catch (const SolverError &e) {
        print_error(err, "solver", e.what(), e.trace());
        return kExitSolver;
    } catch (const ValidationError &e) {
        print_error(err, "validation", e.what());
        return kExitValidation;
    } catch (const DomainError &e) {
        print_error(err, "validation", e.what());
        return kExitValidation;
    } catch (const std::exception &e) {
        print_error(err, "internal", e.what());
        return 1;
    }
}

}  // namespace gaussree::cli
