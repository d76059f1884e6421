// Copyright 2026 The kurlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Text serialization of reports and result tables.
//
// Floats are printed with 17 significant digits; undefined values become an empty CSV cell or
// JSON null. CSV is comma-separated with a single header row and LF line endings.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kurlab/kur.hpp"

namespace kurlab {

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(std::string_view name);
constexpr std::string_view to_string(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

/// One table cell: undefined, real, flag, integer or text.
using Cell = std::variant<std::monostate, double, bool, std::int64_t, std::string>;

Cell cell(std::optional<double> v);
Cell cell(std::optional<bool> v);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// "%.17g"; non-finite values are rendered as undefined.
std::string format_double(double v);

std::string render_csv(const Table& t);
/// JSON array of flat objects, one per row.
std::string render_json(const Table& t);
std::string render(const Table& t, OutputFormat f);

/// Field names in report order: kind, J, D, A, psi, chi, ratio, bound_classical, bound_psi,
/// bound_chi, ok_classical, ok_psi, ok_chi.
const std::vector<std::string>& report_fields();
std::vector<Cell> report_cells(const UncertaintyReport& r);

/// A single report as a flat JSON object, or as a CSV header plus one row.
std::string emit_report(const UncertaintyReport& r, OutputFormat f);

/// Inverse of emit_report (used for round-trip checks). Throws InvalidInput on malformed text.
UncertaintyReport parse_report(std::string_view text, OutputFormat f);

}  // namespace kurlab
