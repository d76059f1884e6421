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

#include "kurlab/report_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "kurlab/error.hpp"

namespace kurlab {
namespace {

std::string csv_field(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
      }
      return out + "\"";
    }
  };
  return std::visit(Visitor{}, c);
}

std::string json_value(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(double v) const {
      const std::string s = format_double(v);
      return s.empty() ? "null" : s;
    }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const { return nlohmann::json(s).dump(); }
  };
  return std::visit(Visitor{}, c);
}

std::string json_object(const std::vector<std::string>& keys, const std::vector<Cell>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) out += ", ";
    out += nlohmann::json(keys[i]).dump();
    out += ": ";
    out += i < values.size() ? json_value(values[i]) : "null";
  }
  return out + "}";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

double parse_number(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw KurError(ErrorKind::InvalidInput, "malformed number '" + s + "'");
  }
  return v;
}

Unraveling parse_kind(const std::string& s) {
  if (s == "jump") return Unraveling::Jump;
  if (s == "diffusive") return Unraveling::Diffusive;
  throw KurError(ErrorKind::InvalidInput, "unknown unraveling '" + s + "'");
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw KurError(ErrorKind::InvalidInput, "unknown output format '" + std::string(name) + "'");
}

Cell cell(std::optional<double> v) { return v ? Cell(*v) : Cell(std::monostate{}); }
Cell cell(std::optional<bool> v) { return v ? Cell(*v) : Cell(std::monostate{}); }

std::string format_double(double v) {
  if (!std::isfinite(v)) return {};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      if (i) out += ',';
      if (i < row.size()) out += csv_field(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& t) {
  std::string out = "[\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out += "  ";
    out += json_object(t.columns, t.rows[r]);
    out += r + 1 < t.rows.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

std::string render(const Table& t, OutputFormat f) {
  return f == OutputFormat::Csv ? render_csv(t) : render_json(t);
}

const std::vector<std::string>& report_fields() {
  static const std::vector<std::string> fields{
      "kind",      "J",         "D",      "A",         "psi",          "chi",   "ratio",
      "bound_classical", "bound_psi", "bound_chi", "ok_classical", "ok_psi", "ok_chi"};
  return fields;
}

std::vector<Cell> report_cells(const UncertaintyReport& r) {
  return {std::string(to_string(r.kind)),
          r.J,
          r.D,
          r.A,
          cell(r.psi),
          r.chi,
          cell(r.ratio),
          cell(r.bound_classical),
          cell(r.bound_psi),
          cell(r.bound_chi),
          cell(r.ok_classical),
          cell(r.ok_psi),
          cell(r.ok_chi)};
}

std::string emit_report(const UncertaintyReport& r, OutputFormat f) {
  if (f == OutputFormat::Json) return json_object(report_fields(), report_cells(r)) + "\n";
  Table t{report_fields(), {report_cells(r)}};
  return render_csv(t);
}

UncertaintyReport parse_report(std::string_view text, OutputFormat f) {
  UncertaintyReport r;
  auto opt_num = [](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    return parse_number(s);
  };
  auto opt_bool = [](const std::string& s) -> std::optional<bool> {
    if (s.empty()) return std::nullopt;
    if (s == "true") return true;
    if (s == "false") return false;
    throw KurError(ErrorKind::InvalidInput, "malformed flag '" + s + "'");
  };
  if (f == OutputFormat::Json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw KurError(ErrorKind::InvalidInput, std::string("malformed report JSON: ") + e.what());
    }
    auto num = [&](const char* k) -> std::optional<double> {
      if (!j.contains(k) || j[k].is_null()) return std::nullopt;
      return j[k].get<double>();
    };
    auto flag = [&](const char* k) -> std::optional<bool> {
      if (!j.contains(k) || j[k].is_null()) return std::nullopt;
      return j[k].get<bool>();
    };
    r.kind = parse_kind(j.at("kind").get<std::string>());
    r.J = j.at("J").get<double>();
    r.D = j.at("D").get<double>();
    r.A = j.at("A").get<double>();
    r.psi = num("psi");
    r.chi = j.at("chi").get<double>();
    r.ratio = num("ratio");
    r.bound_classical = num("bound_classical");
    r.bound_psi = num("bound_psi");
    r.bound_chi = num("bound_chi");
    r.ok_classical = flag("ok_classical");
    r.ok_psi = flag("ok_psi");
    r.ok_chi = flag("ok_chi");
    return r;
  }
  std::istringstream in{std::string(text)};
  std::string header, row;
  if (!std::getline(in, header) || !std::getline(in, row)) {
    throw KurError(ErrorKind::InvalidInput, "report CSV needs a header and one row");
  }
  const auto keys = split_csv_line(header);
  const auto vals = split_csv_line(row);
  if (keys != report_fields() || vals.size() != keys.size()) {
    throw KurError(ErrorKind::InvalidInput, "report CSV has unexpected columns");
  }
  r.kind = parse_kind(vals[0]);
  r.J = parse_number(vals[1]);
  r.D = parse_number(vals[2]);
  r.A = parse_number(vals[3]);
  r.psi = opt_num(vals[4]);
  r.chi = parse_number(vals[5]);
  r.ratio = opt_num(vals[6]);
  r.bound_classical = opt_num(vals[7]);
  r.bound_psi = opt_num(vals[8]);
  r.bound_chi = opt_num(vals[9]);
  r.ok_classical = opt_bool(vals[10]);
  r.ok_psi = opt_bool(vals[11]);
  r.ok_chi = opt_bool(vals[12]);
  return r;
}

}  // namespace kurlab
