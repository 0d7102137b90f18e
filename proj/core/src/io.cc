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

#include "gaussree/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gaussree/errors.h"

namespace gaussree {

using nlohmann::json;

namespace {

json parse(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

double real_field(const json &value, const std::string &name) {
    if (!value.is_number()) throw ValidationError("field '" + name + "' must be a number");
    double out = value.get<double>();
    if (!std::isfinite(out)) throw ValidationError("field '" + name + "' must be finite");
    return out;
}

int int_field(const json &obj, const std::string &name) {
    if (!obj.contains(name)) throw ValidationError("missing field '" + name + "'");
    const json &value = obj.at(name);
    if (!value.is_number_integer()) throw ValidationError("field '" + name + "' must be an integer");
    return value.get<int>();
}

// Accepts a flat row-major array of dim*dim numbers or an array of dim rows.
Matrix square_matrix(const json &value, Eigen::Index dim, const std::string &name) {
    if (!value.is_array()) throw ValidationError("field '" + name + "' must be an array");
    Matrix m(dim, dim);
    if (!value.empty() && value.front().is_array()) {
        if (static_cast<Eigen::Index>(value.size()) != dim) {
            throw ValidationError("field '" + name + "' must have " + std::to_string(dim) + " rows");
        }
        for (Eigen::Index i = 0; i < dim; ++i) {
            const json &row = value.at(i);
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
                throw ValidationError("row " + std::to_string(i) + " of '" + name + "' must have " +
                                      std::to_string(dim) + " entries");
            }
            for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = real_field(row.at(j), name);
        }
        return m;
    }
    if (static_cast<Eigen::Index>(value.size()) != dim * dim) {
        throw ValidationError("field '" + name + "' must have " + std::to_string(dim * dim) + " entries, got " +
                              std::to_string(value.size()));
    }
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = real_field(value.at(i * dim + j), name);
    }
    return m;
}

Eigen::Index infer_dim(const json &value, const std::string &name) {
    if (!value.is_array() || value.empty()) throw ValidationError("field '" + name + "' must be a non-empty array");
    if (value.front().is_array()) return static_cast<Eigen::Index>(value.size());
    auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(value.size()))));
    if (n * n != static_cast<Eigen::Index>(value.size())) {
        throw ValidationError("field '" + name + "' is not a square matrix");
    }
    return n;
}

json flat(const Matrix &m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    }
    return out;
}

// Rounded to 12 significant digits; non-finite values become null.
json real(double value) {
    if (!std::isfinite(value)) return nullptr;
    return round_significant(value);
}

json real_list(const std::vector<double> &values) {
    json out = json::array();
    for (double v : values) out.push_back(real(v));
    return out;
}

}  // namespace

CovarianceMatrix covariance_from_json(const std::string &text) {
    json doc = parse(text);
    if (!doc.is_object()) throw ValidationError("covariance file must hold a JSON object");
    int na = int_field(doc, "n_modes_a");
    int nb = int_field(doc, "n_modes_b");
    if (na < 1 || nb < 0 || na + nb > kMaxModes) {
        throw ValidationError("mode counts out of range: n_modes_a=" + std::to_string(na) +
                              ", n_modes_b=" + std::to_string(nb));
    }
    if (!doc.contains("entries")) throw ValidationError("missing field 'entries'");
    Matrix m = square_matrix(doc.at("entries"), 2 * (na + nb), "entries");
    return CovarianceMatrix(na, nb, std::move(m));
}

std::string covariance_to_json(const CovarianceMatrix &v) {
    json doc;
    doc["n_modes_a"] = v.n_modes_a();
    doc["n_modes_b"] = v.n_modes_b();
    doc["entries"] = flat(v.entries());
    return doc.dump() + "\n";
}

ChannelDescription channel_from_json(const std::string &text) {
    json doc = parse(text);
    if (!doc.is_object()) throw ValidationError("channel file must hold a JSON object");
    if (!doc.contains("kind") || !doc.at("kind").is_string()) throw ValidationError("missing string field 'kind'");
    ChannelKind kind = channel_kind_from_string(doc.at("kind").get<std::string>());
    if (kind == ChannelKind::custom) {
        if (!doc.contains("x_matrix") || !doc.contains("y_matrix")) {
            throw ValidationError("custom channels need 'x_matrix' and 'y_matrix'");
        }
        Eigen::Index dim = infer_dim(doc.at("x_matrix"), "x_matrix");
        Matrix x = square_matrix(doc.at("x_matrix"), dim, "x_matrix");
        Matrix y = square_matrix(doc.at("y_matrix"), dim, "y_matrix");
        std::string label = doc.contains("label") && doc.at("label").is_string() ? doc.at("label").get<std::string>()
                                                                                 : "custom";
        return {std::nullopt, make_channel(std::move(x), std::move(y), label)};
    }
    ChannelParams params;
    params.kind = kind;
    if (doc.contains("lambda")) params.lambda = real_field(doc.at("lambda"), "lambda");
    if (doc.contains("eta")) params.eta = real_field(doc.at("eta"), "eta");
    if (doc.contains("mu")) params.mu = real_field(doc.at("mu"), "mu");
    if (doc.contains("n_th")) params.n_th = real_field(doc.at("n_th"), "n_th");
    return {params, build_channel(params)};
}

std::string channel_to_json(const ChannelParams &params) {
    json doc;
    doc["kind"] = to_string(params.kind);
    switch (params.kind) {
        case ChannelKind::attenuator:
            doc["lambda"] = params.lambda;
            doc["n_th"] = params.n_th;
            break;
        case ChannelKind::pure_loss:
            doc["lambda"] = params.lambda;
            break;
        case ChannelKind::amplifier:
            doc["eta"] = params.eta;
            doc["n_th"] = params.n_th;
            break;
        case ChannelKind::additive_noise:
            doc["mu"] = params.mu;
            break;
        default:
            break;
    }
    return doc.dump();
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("error while reading '" + path + "'");
    return buffer.str();
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("error while writing '" + path + "'");
}

std::string format_real(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

double round_significant(double value) {
    if (!std::isfinite(value)) return value;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return std::strtod(buf, nullptr);
}

std::string bound_report_to_json(const BoundReport &report) {
    json doc;
    if (report.channel) {
        doc["channel"] = json::parse(channel_to_json(*report.channel));
    } else {
        doc["channel"] = {{"kind", "custom"}, {"label", report.channel_label}};
    }
    doc["path"] = to_string(report.path);
    doc["fit_model"] = to_string(report.fit_model);
    doc["r_values"] = real_list(report.r_values);
    doc["bound_at_r"] = real_list(report.bound_at_r);
    json divergent_at_r = json::array();
    for (double v : report.bound_at_r) divergent_at_r.push_back(std::isinf(v));
    doc["divergent_at_r"] = divergent_at_r;
    if (report.path == SolverPath::both) {
        doc["full_at_r"] = real_list(report.full_at_r);
        doc["reduced_at_r"] = real_list(report.reduced_at_r);
    }
    json errors = json::array();
    for (size_t i = 0; i < report.errors.size(); ++i) {
        if (report.errors[i].empty()) continue;
        errors.push_back({{"r", real(report.r_values[i])}, {"message", report.errors[i]}});
    }
    doc["errors"] = errors;
    doc["extrapolated"] = real(report.extrapolated);
    doc["fit_slope"] = real(report.fit_slope);
    doc["fit_residual"] = real(report.fit_residual);
    doc["divergent"] = report.divergent;
    doc["non_monotone_tail"] = report.non_monotone_tail;
    doc["closed_form"] = report.closed_form ? real(*report.closed_form) : json(nullptr);
    doc["closed_form_divergent"] = report.closed_form.has_value() && std::isinf(*report.closed_form);
    doc["abs_deviation"] = report.abs_deviation ? real(*report.abs_deviation) : json(nullptr);
    return doc.dump(2) + "\n";
}

std::string bound_report_to_csv(const BoundReport &report) {
    std::ostringstream out;
    out << "r,bound_bits,closed_form_bits,deviation\n";
    for (size_t i = 0; i < report.r_values.size(); ++i) {
        double bound = report.bound_at_r[i];
        out << format_real(report.r_values[i]) << ',' << format_real(bound) << ',';
        if (report.closed_form) {
            out << format_real(*report.closed_form) << ',';
            double cf = *report.closed_form;
            if (std::isfinite(bound) && std::isfinite(cf)) out << format_real(std::abs(bound - cf));
        } else {
            out << ',';
        }
        out << '\n';
    }
    return out.str();
}

std::string solve_result_to_json(const SolveResult &result) {
    json doc;
    doc["value_bits"] = real(result.value_bits);
    doc["status"] = to_string(result.status);
    doc["iterations"] = result.iterations;
    doc["duality_gap_estimate"] = real(result.duality_gap_estimate);
    doc["analytic_gradient"] = result.analytic_gradient;
    doc["outer_objectives"] = real_list(result.outer_objectives);
    doc["v_sigma_opt"] = json::parse(covariance_to_json(result.v_sigma_opt));
    doc["gamma_a_opt"] = flat(result.gamma_a_opt);
    return doc.dump(2) + "\n";
}

}  // namespace gaussree
