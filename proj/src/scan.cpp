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

#include <cmath>
#include <sstream>

#include "eur/scan.hpp"

namespace eur {

namespace {

constexpr double kMaeurSlackTol = 1e-9;
constexpr double kCrossoverTol = 1e-6;
constexpr std::size_t kCrossoverScanPoints = 1000;
constexpr double kCrossoverZero = 1e-12;

std::string describe(const ScanRow& row) {
  std::ostringstream os;
  os.precision(12);
  os << "p=" << row.p << " alpha=(" << row.alpha_x << "," << row.alpha_y << "," << row.alpha_z << ")";
  return os.str();
}

void check_row_invariants(const ScanRow& row) {
  for (const UncertaintyReport* r : {&row.single_use, &row.process}) {
    if (r->slack < -kMaeurSlackTol) {
      throw InvariantViolation("uncertainty below bound at " + describe(row));
    }
  }
}

void check_against_oracle(Process process, const PauliChannel& ch, const ScanRow& row, double tol) {
  const UncertaintyReport su = evaluate_maeur(evolve_bell_state(Process::single_use, ch));
  const UncertaintyReport pr = evaluate_maeur(evolve_bell_state(process, ch));
  auto close = [tol](const UncertaintyReport& a, const UncertaintyReport& b) {
    return std::abs(a.s_x_given_b - b.s_x_given_b) <= tol && std::abs(a.s_z_given_b - b.s_z_given_b) <= tol &&
           std::abs(a.total_u - b.total_u) <= tol && std::abs(a.bound_b - b.bound_b) <= tol;
  };
  if (!close(su, row.single_use) || !close(pr, row.process)) {
    throw InvariantViolation("closed form disagrees with density-matrix oracle at " + describe(row));
  }
}

double difference(const BiasVector& alpha, Process compare, Quantity quantity, double p) {
  const PauliChannel ch(p, alpha);
  const UncertaintyReport su = closed_form_report(Process::single_use, ch);
  const UncertaintyReport pr = closed_form_report(compare, ch);
  return quantity == Quantity::total ? pr.total_u - su.total_u : pr.s_x_given_b - su.s_x_given_b;
}

}  // namespace

ScanRow evaluate_row(Process process, const PauliChannel& ch) {
  ScanRow row;
  row.p = ch.p();
  row.alpha_x = ch.alpha().x;
  row.alpha_y = ch.alpha().y;
  row.alpha_z = ch.alpha().z;
  row.single_use = closed_form_report(Process::single_use, ch);
  row.process = closed_form_report(process, ch);
  row.delta_u = row.process.total_u - row.single_use.total_u;
  return row;
}

std::vector<ScanRow> sweep_1d(const SweepSpec& spec) {
  if (!(spec.p_min >= 0.0 && spec.p_max <= 1.0 && spec.p_min <= spec.p_max)) {
    throw std::invalid_argument("sweep_1d: p range must satisfy 0 <= p_min <= p_max <= 1");
  }
  if (spec.steps == 0) throw std::invalid_argument("sweep_1d: steps must be positive");
  // Validates alpha once up front.
  const PauliChannel probe(spec.p_min, spec.alpha);

  std::vector<ScanRow> rows;
  rows.reserve(spec.steps + 1);
  const double width = spec.p_max - spec.p_min;
  for (std::size_t k = 0; k <= spec.steps; ++k) {
    const double p = k == spec.steps ? spec.p_max
                                     : spec.p_min + width * static_cast<double>(k) / static_cast<double>(spec.steps);
    const PauliChannel ch(p, probe.alpha());
    ScanRow row = evaluate_row(spec.process, ch);
    check_row_invariants(row);
    if (spec.oracle.enabled && spec.oracle.stride > 0 && k % spec.oracle.stride == 0) {
      check_against_oracle(spec.process, ch, row, spec.oracle.tol);
    }
    rows.push_back(row);
  }
  return rows;
}

std::size_t simplex_point_count(std::size_t denominator) { return (denominator + 1) * (denominator + 2) / 2; }

std::vector<ScanRow> scan_simplex(const SimplexSpec& spec) {
  if (spec.denominator == 0) throw std::invalid_argument("scan_simplex: denominator must be positive");
  if (spec.compare == Process::single_use) {
    throw std::invalid_argument("scan_simplex: compare must be self_switch or time_flip");
  }
  const std::size_t n = spec.denominator;
  const double dn = static_cast<double>(n);
  std::vector<ScanRow> rows;
  rows.reserve(simplex_point_count(n));
  std::size_t index = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j, ++index) {
      const BiasVector alpha{static_cast<double>(i) / dn, static_cast<double>(j) / dn,
                             static_cast<double>(n - i - j) / dn};
      const PauliChannel ch(spec.p, alpha);
      ScanRow row = evaluate_row(spec.compare, ch);
      check_row_invariants(row);
      if (spec.oracle.enabled && spec.oracle.stride > 0 && index % spec.oracle.stride == 0) {
        check_against_oracle(spec.compare, ch, row, spec.oracle.tol);
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::optional<double> find_crossover(const BiasVector& alpha, Process compare, Quantity quantity) {
  if (compare == Process::single_use) {
    throw std::invalid_argument("find_crossover: compare must be self_switch or time_flip");
  }
  auto diff = [&](double p) { return difference(alpha, compare, quantity, p); };
  auto sign = [](double d) { return std::abs(d) <= kCrossoverZero ? 0 : (d > 0.0 ? 1 : -1); };

  // Both curves coincide at p = 0, so the scan starts at the first grid point
  // and looks for the first strict sign change.
  int ref_sign = 0;
  double last_ref = 0.0;
  for (std::size_t k = 1; k <= kCrossoverScanPoints; ++k) {
    const double p = static_cast<double>(k) / kCrossoverScanPoints;
    const int s = sign(diff(p));
    if (s == 0) continue;
    if (ref_sign == 0 || s == ref_sign) {
      ref_sign = s;
      last_ref = p;
      continue;
    }
    double a = last_ref;
    double b = p;
    while (b - a > kCrossoverTol) {
      const double mid = 0.5 * (a + b);
      if (sign(diff(mid)) == ref_sign) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return 0.5 * (a + b);
  }
  return std::nullopt;
}

}  // namespace eur
