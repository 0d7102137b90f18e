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

#ifndef GAUSSREE_IO_H
#define GAUSSREE_IO_H

#include <optional>
#include <string>

#include "gaussree/bound_eval.h"
#include "gaussree/channels.h"
#include "gaussree/covariance.h"
#include "gaussree/ree_solver.h"

namespace gaussree {

/// Parses {"n_modes_a", "n_modes_b", "entries"} where entries is a row-major flat array
/// (nested rows are also accepted). Throws ValidationError on malformed or non-finite input.
CovarianceMatrix covariance_from_json(const std::string &text);
/// Flat row-major entries with 17 significant digits so the file round-trips exactly.
std::string covariance_to_json(const CovarianceMatrix &v);

struct ChannelDescription {
    /// Present for catalog channels.
    std::optional<ChannelParams> params;
    GaussianChannel channel;
};

/// {"kind", "lambda"|"eta"|"mu", "n_th"} or {"kind": "custom", "x_matrix", "y_matrix"}.
ChannelDescription channel_from_json(const std::string &text);
std::string channel_to_json(const ChannelParams &params);

/// Throws IoError when the file cannot be read or written.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

/// %.12g, with "inf", "-inf" and "nan" for non-finite values.
std::string format_real(double value);
/// Value rounded to 12 significant digits.
double round_significant(double value);

std::string bound_report_to_json(const BoundReport &report);
/// Columns r, bound_bits, closed_form_bits, deviation.
std::string bound_report_to_csv(const BoundReport &report);
std::string solve_result_to_json(const SolveResult &result);

}  // namespace gaussree

#endif
