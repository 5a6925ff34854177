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

// Qubit channels in Kraus form, with the Pauli family as a parametrized type.

#pragma once

#include <array>
#include <vector>

#include "eur/matcore.hpp"

namespace eur {

/// Bias fractions (alpha_x, alpha_y, alpha_z) of a Pauli channel.
struct BiasVector {
  double x = 1.0 / 3.0;
  double y = 1.0 / 3.0;
  double z = 1.0 / 3.0;
};

/// Bloch-vector shrink factors (lambda_x, lambda_y, lambda_z).
struct ShrinkFactors {
  double x = 1.0;
  double y = 1.0;
  double z = 1.0;
};

// A Pauli channel rho -> sum_i q_i sigma_i rho sigma_i with
// q = (1 - p, alpha_x p, alpha_y p, alpha_z p).
class PauliChannel {
 public:
  /// Identity channel.
  PauliChannel() = default;

  // Bias triples summing to within 1e-9 of one are accepted and the last
  // component is adjusted to restore the exact sum.
  PauliChannel(double p, BiasVector alpha);

  /// From raw (q_0, q_x, q_y, q_z); rejects |sum q - 1| > 1e-12.
  static PauliChannel from_probabilities(const std::array<double, 4>& q);

  double p() const { return p_; }
  const BiasVector& alpha() const { return alpha_; }
  /// (q_0, q_x, q_y, q_z).
  std::array<double, 4> probabilities() const;

 private:
  double p_ = 0.0;
  BiasVector alpha_{};
};

/// A qubit channel given by 2x2 Kraus operators.
class KrausChannel {
 public:
  /// Throws std::invalid_argument unless sum K^dag K = I within tol.
  explicit KrausChannel(std::vector<CMat> ops, double tol = kDefaultTol);

  const std::vector<CMat>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  /// sum K K^dag = I within the construction tolerance.
  bool is_unital() const { return unital_; }

 private:
  std::vector<CMat> ops_;
  bool unital_ = false;
};

/// Kraus operators sqrt(q_i) sigma_i in the fixed order (0, x, y, z).
KrausChannel pauli_to_kraus(const PauliChannel& ch);

/// lambda_mu = 1 - 2 (1 - alpha_mu) p.
ShrinkFactors shrink_factors(const PauliChannel& ch);

/// |1 +- lambda_z| >= |lambda_x +- lambda_y| for both signs (1e-12 slack).
bool check_fujiwara_algoet(const ShrinkFactors& f);

/// sum_i K_i rho K_i^dag for any 2x2 operator rho.
CMat apply_channel(const KrausChannel& ch, const CMat& rho);

/// Element-wise transpose of every Kraus operator in the computational basis.
/// Only defined for unital channels.
KrausChannel transpose_channel(const KrausChannel& ch);

}  // namespace eur
