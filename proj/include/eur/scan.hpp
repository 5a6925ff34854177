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

// Parameter sweeps over Pauli channels and the CSV interchange format.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eur/analytic.hpp"

namespace eur {

/// A computed result broke an invariant (MA-EUR violated, oracle mismatch).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScanRow {
  double p = 0.0;
  double alpha_x = 0.0;
  double alpha_y = 0.0;
  double alpha_z = 0.0;
  UncertaintyReport single_use;
  UncertaintyReport process;
  /// process.total_u - single_use.total_u
  double delta_u = 0.0;
};

struct OracleCheck {
  bool enabled = true;
  /// Every stride-th row (by grid index) is re-evaluated on the density-matrix path.
  std::size_t stride = 100;
  double tol = 1e-9;
};

struct SweepSpec {
  Process process = Process::self_switch;
  BiasVector alpha;
  double p_min = 0.0;
  double p_max = 1.0;
  /// Number of intervals; the grid has steps + 1 points including both ends.
  std::size_t steps = 500;
  OracleCheck oracle;
};

struct SimplexSpec {
  /// self_switch or time_flip, compared against single use.
  Process compare = Process::self_switch;
  double p = 0.5;
  /// Grid step is 1 / denominator in alpha_x and alpha_y.
  std::size_t denominator = 200;
  OracleCheck oracle;
};

/// Evaluates one channel through the closed forms.
ScanRow evaluate_row(Process process, const PauliChannel& ch);

std::vector<ScanRow> sweep_1d(const SweepSpec& spec);

// Rows ordered by (i, j) with alpha_x = i/N, alpha_y = j/N,
// alpha_z = (N - i - j)/N.
std::vector<ScanRow> scan_simplex(const SimplexSpec& spec);

/// (N + 1)(N + 2) / 2.
std::size_t simplex_point_count(std::size_t denominator);

enum class Quantity { x_uncertainty, total };

// Root in (0, 1] of (process - single use) for the chosen quantity, found by
// a coarse scan for the first sign change then bisection to 1e-6. Returns
// nullopt when the difference never changes sign.
std::optional<double> find_crossover(const BiasVector& alpha, Process compare, Quantity quantity);

std::string csv_header();
void write_csv(const std::vector<ScanRow>& rows, std::ostream& out);
/// Throws std::runtime_error on I/O failure.
void emit_csv(const std::vector<ScanRow>& rows, const std::filesystem::path& path);
/// Parses what write_csv produces. Throws std::runtime_error on malformed input.
std::vector<ScanRow> parse_csv(std::istream& in);

struct VerifySummary {
  std::size_t samples = 0;
  std::size_t mismatches = 0;
  /// Largest |closed form - oracle| over coefficients, U and bound.
  double max_coeff_error = 0.0;
  double max_report_error = 0.0;
  double min_slack = 0.0;
  std::vector<std::string> failures;

  bool ok() const { return mismatches == 0; }
};

// Draws random (p, alpha) with alpha uniform on the simplex and compares the
// closed forms against the density-matrix path for all three processes.
// Coefficients must agree within 1e-10, U and bound within report_tol.
VerifySummary verify_oracle_equivalence(std::size_t samples, std::uint64_t seed, double report_tol = 1e-9);

}  // namespace eur
