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

#include "eur/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eur {

namespace {

constexpr double kEigenvalueFloor = 1e-12;
constexpr double kSaturationTol = 1e-12;

}  // namespace

std::array<double, 4> BellDiagonalCoeffs::eigenvalues() const {
  return {0.25 * (1.0 + c_z + (c_x + c_y)), 0.25 * (1.0 + c_z - (c_x + c_y)),
          0.25 * (1.0 - c_z + (c_x - c_y)), 0.25 * (1.0 - c_z - (c_x - c_y))};
}

CMat BellDiagonalCoeffs::to_density_matrix() const {
  return 0.25 * (identity(4) + c_x * kron(sigma_x(), sigma_x()) - c_y * kron(sigma_y(), sigma_y()) +
                 c_z * kron(sigma_z(), sigma_z()));
}

BellDiagonalCoeffs BellDiagonalCoeffs::from_density_matrix(const CMat& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw std::invalid_argument("BellDiagonalCoeffs: expected a 4x4 operator");
  }
  return {(rho * kron(sigma_x(), sigma_x())).trace().real(),
          -(rho * kron(sigma_y(), sigma_y())).trace().real(),
          (rho * kron(sigma_z(), sigma_z())).trace().real()};
}

BellDiagonalCoeffs coeffs_single_use(const PauliChannel& ch) {
  const ShrinkFactors l = shrink_factors(ch);
  return {l.x, l.y, l.z};
}

BellDiagonalCoeffs coeffs_switch(const PauliChannel& ch) {
  const double p = ch.p();
  const auto& a = ch.alpha();
  const double lz = shrink_factors(ch).z;
  const double kx = std::pow(1.0 - 2.0 * p * (a.y + a.z), 2) + 4.0 * p * p * (a.x * a.y + a.x * a.z - a.y * a.z);
  const double ky = std::pow(1.0 - 2.0 * p * (a.x + a.z), 2) + 4.0 * p * p * (a.x * a.y - a.x * a.z + a.y * a.z);
  return {kx, ky, lz * lz};
}

BellDiagonalCoeffs coeffs_timeflip(const PauliChannel& ch) {
  const double p = ch.p();
  return {1.0 - 2.0 * ch.alpha().z * p, 1.0 - 2.0 * p, shrink_factors(ch).z};
}

BellDiagonalCoeffs coeffs_for(Process process, const PauliChannel& ch) {
  switch (process) {
    case Process::single_use: return coeffs_single_use(ch);
    case Process::self_switch: return coeffs_switch(ch);
    case Process::time_flip: return coeffs_timeflip(ch);
  }
  throw std::logic_error("coeffs_for: unknown process");
}

double correlation_entropy(double t) { return binary_entropy(0.5 * (1.0 + t)); }

UncertaintyReport uncertainty_closed_form(const BellDiagonalCoeffs& c) {
  const auto ev = c.eigenvalues();
  for (double e : ev) {
    if (e < -kEigenvalueFloor) {
      throw std::domain_error("uncertainty_closed_form: coefficients give negative eigenvalue " +
                              std::to_string(e));
    }
  }
  UncertaintyReport r;
  r.s_x_given_b = correlation_entropy(c.c_x);
  r.s_z_given_b = correlation_entropy(c.c_z);
  r.total_u = r.s_x_given_b + r.s_z_given_b;
  r.bound_b = shannon_entropy(ev, kEigenvalueFloor);
  r.slack = r.total_u - r.bound_b;
  return r;
}

UncertaintyReport closed_form_report(Process process, const PauliChannel& ch) {
  return uncertainty_closed_form(coeffs_for(process, ch));
}

bool saturation_predicate(const PauliChannel& ch) {
  const ShrinkFactors l = shrink_factors(ch);
  return std::abs(l.y - l.x * l.z) <= kSaturationTol;
}

AdvantageVerdict switch_advantage(const PauliChannel& ch) {
  AdvantageVerdict v;
  v.delta_u = closed_form_report(Process::self_switch, ch).total_u -
              closed_form_report(Process::single_use, ch).total_u;
  v.advantaged = v.delta_u < -kAdvantageEpsilon;

  const double lx = shrink_factors(ch).x;
  const double kx = coeffs_switch(ch).c_x;
  if (lx >= 0.0 && kx >= 0.0) {
    const auto& a = ch.alpha();
    const double denom = 2.0 * (a.y + a.z - a.y * a.z);
    // a_y = a_z = 0 is the bit-flip channel: kappa_x = lambda_x = 1, never met.
    const bool met = denom > 0.0 && ch.p() > (a.y + a.z) / denom;
    v.necessary_condition = met ? Condition::met : Condition::not_met;
  }
  return v;
}

AdvantageVerdict timeflip_advantage(const PauliChannel& ch) {
  AdvantageVerdict v;
  v.delta_u = closed_form_report(Process::time_flip, ch).total_u -
              closed_form_report(Process::single_use, ch).total_u;
  v.advantaged = v.delta_u < -kAdvantageEpsilon;
  const double ay_p = ch.alpha().y * ch.p();
  const bool met = 0.0 < ay_p && ay_p < 1.0 - 2.0 * ch.alpha().z * ch.p();
  v.necessary_condition = met ? Condition::met : Condition::not_met;
  return v;
}

}  // namespace eur
