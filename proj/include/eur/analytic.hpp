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

// Closed-form uncertainty results for a Bell pair whose memory qubit passes
// through a Pauli channel directly, through a self-switch, or through a
// time-flip. Every quantity here has a brute-force counterpart built from
// channels.hpp, superprocess.hpp and maeur.hpp.

#pragma once

#include <array>

#include "eur/channels.hpp"
#include "eur/maeur.hpp"
#include "eur/superprocess.hpp"

namespace eur {

// Correlations of the Bell-diagonal state
//   1/4 [I(x)I + c_x X(x)X - c_y Y(x)Y + c_z Z(x)Z].
// The Bell state |Phi+> has (1, 1, 1).
struct BellDiagonalCoeffs {
  double c_x = 1.0;
  double c_y = 1.0;
  double c_z = 1.0;

  /// 1/4 (1 + c_z +- (c_x + c_y)), 1/4 (1 - c_z +- (c_x - c_y)).
  std::array<double, 4> eigenvalues() const;

  CMat to_density_matrix() const;
  /// Reads the correlations back as Tr[rho X(x)X], -Tr[rho Y(x)Y], Tr[rho Z(x)Z].
  static BellDiagonalCoeffs from_density_matrix(const CMat& rho);
};

/// (lambda_x, lambda_y, lambda_z).
BellDiagonalCoeffs coeffs_single_use(const PauliChannel& ch);
/// (kappa_x, kappa_y, kappa_z) for two identical copies in the switch.
BellDiagonalCoeffs coeffs_switch(const PauliChannel& ch);
/// (tau_x, tau_y, tau_z) for the time-flip.
BellDiagonalCoeffs coeffs_timeflip(const PauliChannel& ch);

BellDiagonalCoeffs coeffs_for(Process process, const PauliChannel& ch);

/// h(t) = H_bin((1 + t) / 2).
double correlation_entropy(double t);

// U = h(c_x) + h(c_z); bound = Shannon entropy of the four eigenvalues.
// Throws std::domain_error if an eigenvalue is below -1e-12.
UncertaintyReport uncertainty_closed_form(const BellDiagonalCoeffs& c);

UncertaintyReport closed_form_report(Process process, const PauliChannel& ch);

/// lambda_y == lambda_x lambda_z within 1e-12.
bool saturation_predicate(const PauliChannel& ch);

/// Strictness margin for "U_process < U_single_use".
inline constexpr double kAdvantageEpsilon = 1e-9;

enum class Condition { met, not_met, not_applicable };

struct AdvantageVerdict {
  /// U_process - U_single_use in bits.
  double delta_u = 0.0;
  /// delta_u < -kAdvantageEpsilon.
  bool advantaged = false;
  Condition necessary_condition = Condition::not_applicable;
};

// delta_u = U_sw - U_su. necessary_condition evaluates
//   p > (a_y + a_z) / (2 (a_y + a_z - a_y a_z)),
// and is not_applicable unless lambda_x >= 0 and kappa_x >= 0.
AdvantageVerdict switch_advantage(const PauliChannel& ch);

// delta_u = U_tf - U_su. necessary_condition evaluates
//   0 < a_y p < 1 - 2 a_z p,
// which is also sufficient.
AdvantageVerdict timeflip_advantage(const PauliChannel& ch);

}  // namespace eur
