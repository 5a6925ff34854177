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

// Memory-assisted entropic uncertainty evaluated directly on a two-qubit
// density matrix: measurement on qubit A, quantum memory B.

#pragma once

#include "eur/matcore.hpp"

namespace eur {

enum class Observable { sigma_x, sigma_z };

/// Rank-1 projectors (I +- sigma)/2 for the given observable; index 0 is "+".
CMat measurement_projector(Observable obs, int sign);

// The measured pair. Always sigma_x / sigma_z in practice; the overlap c is
// held explicitly so -log2 c is a named quantity.
class MeasurementPair {
 public:
  /// sigma_x and sigma_z, with c = 1/2.
  MeasurementPair() = default;

  /// Same observables with an overridden complementarity c in (0, 1].
  static MeasurementPair with_complementarity(double c);

  Observable first() const { return Observable::sigma_x; }
  Observable second() const { return Observable::sigma_z; }
  double complementarity() const { return c_; }

 private:
  double c_ = 0.5;
};

/// All quantities in bits.
struct UncertaintyReport {
  double s_x_given_b = 0.0;
  double s_z_given_b = 0.0;
  double total_u = 0.0;
  double bound_b = 0.0;
  /// total_u - bound_b.
  double slack = 0.0;
};

/// sum_k (Pi_k (x) I) rho (Pi_k (x) I).
CMat post_measurement_state(const CMat& rho, Observable obs);

/// S(rho_AB) - S(rho_B). Can be negative.
double conditional_entropy(const CMat& rho_joint);

/// -log2 c.
double maassen_uffink_bound(const MeasurementPair& pair);

enum class BoundMode {
  // B = S(rho_AB); requires rho_B = I/2 within 1e-9 and throws otherwise.
  maximally_mixed_memory,
  // B = -log2 c + S(A|B) for any state.
  general,
};

UncertaintyReport evaluate_maeur(const CMat& rho, const MeasurementPair& pair = {},
                                 BoundMode mode = BoundMode::maximally_mixed_memory);

}  // namespace eur
