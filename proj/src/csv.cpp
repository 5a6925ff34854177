// Copyright 2026 The eur Authors
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

#include <array>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "eur/scan.hpp"

namespace eur {

namespace {

constexpr std::array<const char*, 13> kColumns = {
    "p",       "alpha_x", "alpha_y", "alpha_z",  "s_x_su", "s_z_su", "u_su",
    "b_su",    "s_x_proc", "s_z_proc", "u_proc", "b_proc", "delta_u"};

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::array<double, kColumns.size()> flatten(const ScanRow& r) {
  return {r.p,
          r.alpha_x,
          r.alpha_y,
          r.alpha_z,
          r.single_use.s_x_given_b,
          r.single_use.s_z_given_b,
          r.single_use.total_u,
          r.single_use.bound_b,
          r.process.s_x_given_b,
          r.process.s_z_given_b,
          r.process.total_u,
          r.process.bound_b,
          r.delta_u};
}

UncertaintyReport report(double sx, double sz, double u, double b) {
  return {sx, sz, u, b, u - b};
}

}  // namespace

std::string csv_header() {
  std::string h;
  for (std::size_t i = 0; i < kColumns.size(); ++i) {
    if (i) h += ',';
    h += kColumns[i];
  }
  return h;
}

void write_csv(const std::vector<ScanRow>& rows, std::ostream& out) {
  out << csv_header() << '\n';
  for (const ScanRow& row : rows) {
    const auto values = flatten(row);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out << ',';
      out << format_value(values[i]);
    }
    out << '\n';
  }
}

void emit_csv(const std::vector<ScanRow>& rows, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("emit_csv: cannot open " + path.string() + " for writing");
  write_csv(rows, out);
  out.flush();
  if (!out) throw std::runtime_error("emit_csv: write to " + path.string() + " failed");
}

std::vector<ScanRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != csv_header()) {
    throw std::runtime_error("parse_csv: missing or unexpected header");
  }
  std::vector<ScanRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::array<double, kColumns.size()> v{};
    std::istringstream fields(line);
    std::string cell;
    std::size_t n = 0;
    while (std::getline(fields, cell, ',')) {
      if (n >= v.size()) throw std::runtime_error("parse_csv: too many fields on line " + std::to_string(line_no));
      std::size_t used = 0;
      try {
        v[n] = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != cell.size()) {
        throw std::runtime_error("parse_csv: bad number '" + cell + "' on line " + std::to_string(line_no));
      }
      ++n;
    }
    if (n != v.size()) throw std::runtime_error("parse_csv: too few fields on line " + std::to_string(line_no));
    ScanRow r;
    r.p = v[0];
    r.alpha_x = v[1];
    r.alpha_y = v[2];
    r.alpha_z = v[3];
    r.single_use = report(v[4], v[5], v[6], v[7]);
    r.process = report(v[8], v[9], v[10], v[11]);
    r.delta_u = v[12];
    rows.push_back(r);
  }
  return rows;
}

}  // namespace eur
