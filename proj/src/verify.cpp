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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "eur/scan.hpp"

namespace eur {

namespace {

constexpr double kCoeffTol = 1e-10;
constexpr double kSlackTol = 1e-9;

double max_abs_diff(const BellDiagonalCoeffs& a, const BellDiagonalCoeffs& b) {
  return std::max({std::abs(a.c_x - b.c_x), std::abs(a.c_y - b.c_y), std::abs(a.c_z - b.c_z)});
}

double max_abs_diff(const UncertaintyReport& a, const UncertaintyReport& b) {
  return std::max({std::abs(a.s_x_given_b - b.s_x_given_b), std::abs(a.s_z_given_b - b.s_z_given_b),
                   std::abs(a.total_u - b.total_u), std::abs(a.bound_b - b.bound_b)});
}

const char* process_name(Process p) {
  switch (p) {
    case Process::single_use: return "single_use";
    case Process::self_switch: return "self_switch";
    case Process::time_flip: return "time_flip";
  }
  return "?";
}

}  // namespace

VerifySummary verify_oracle_equivalence(std::size_t samples, std::uint64_t seed, double report_tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);

  VerifySummary summary;
  summary.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < samples; ++n) {
    const double p = unit(rng);
    const double ex = expo(rng);
    const double ey = expo(rng);
    const double ez = expo(rng);
    const double total = ex + ey + ez;
    const PauliChannel ch(p, BiasVector{ex / total, ey / total, ez / total});
    ++summary.samples;

    for (Process process : {Process::single_use, Process::self_switch, Process::time_flip}) {
      const CMat state = evolve_bell_state(process, ch);
      const BellDiagonalCoeffs oracle_coeffs = BellDiagonalCoeffs::from_density_matrix(state);
      const UncertaintyReport oracle = evaluate_maeur(state);
      const UncertaintyReport closed = closed_form_report(process, ch);

      const double coeff_err = max_abs_diff(oracle_coeffs, coeffs_for(process, ch));
      const double report_err = max_abs_diff(oracle, closed);
      summary.max_coeff_error = std::max(summary.max_coeff_error, coeff_err);
      summary.max_report_error = std::max(summary.max_report_error, report_err);
      summary.min_slack = std::min({summary.min_slack, oracle.slack, closed.slack});

      if (coeff_err > kCoeffTol || report_err > report_tol || oracle.slack < -kSlackTol) {
        ++summary.mismatches;
        std::ostringstream os;
        os.precision(17);
        os << process_name(process) << " p=" << p << " alpha=(" << ch.alpha().x << "," << ch.alpha().y << ","
           << ch.alpha().z << ") coeff_err=" << coeff_err << " report_err=" << report_err << " slack=" << oracle.slack;
        summary.failures.push_back(os.str());
      }
    }
  }
  return summary;
}

}  // namespace eur
