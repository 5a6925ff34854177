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

#include "eur/maeur.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eur {

namespace {

constexpr double kMemoryMixednessTol = 1e-9;

void require_4x4(const CMat& m, const char* what) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument(std::string(what) + ": expected a 4x4 density matrix");
  }
}

}  // namespace

CMat measurement_projector(Observable obs, int sign) {
  const CMat s = obs == Observable::sigma_x ? sigma_x() : sigma_z();
  return 0.5 * (identity(2) + (sign >= 0 ? 1.0 : -1.0) * s);
}

MeasurementPair MeasurementPair::with_complementarity(double c) {
  if (!(c > 0.0 && c <= 1.0)) {
    throw std::invalid_argument("MeasurementPair: complementarity must lie in (0, 1]");
  }
  MeasurementPair pair;
  pair.c_ = c;
  return pair;
}

CMat post_measurement_state(const CMat& rho, Observable obs) {
  require_4x4(rho, "post_measurement_state");
  CMat out = CMat::Zero(4, 4);
  for (int sign : {+1, -1}) {
    const CMat p = kron(measurement_projector(obs, sign), identity(2));
    out += p * rho * p;
  }
  return out;
}

double conditional_entropy(const CMat& rho_joint) {
  require_4x4(rho_joint, "conditional_entropy");
  return von_neumann_entropy(rho_joint) - von_neumann_entropy(partial_trace_a(rho_joint));
}

double maassen_uffink_bound(const MeasurementPair& pair) { return -std::log2(pair.complementarity()); }

UncertaintyReport evaluate_maeur(const CMat& rho, const MeasurementPair& pair, BoundMode mode) {
  require_4x4(rho, "evaluate_maeur");
  UncertaintyReport r;
  r.s_x_given_b = conditional_entropy(post_measurement_state(rho, pair.first()));
  r.s_z_given_b = conditional_entropy(post_measurement_state(rho, pair.second()));
  r.total_u = r.s_x_given_b + r.s_z_given_b;

  if (mode == BoundMode::maximally_mixed_memory) {
    const double dev = frobenius_distance(partial_trace_a(rho), 0.5 * identity(2));
    if (dev > kMemoryMixednessTol) {
      throw std::domain_error("evaluate_maeur: memory marginal is not maximally mixed (deviation " +
                              std::to_string(dev) + "); use BoundMode::general");
    }
    // -log2 c + S(A|B) with S(B) = 1 and -log2 c = 1.
    r.bound_b = maassen_uffink_bound(pair) - 1.0 + von_neumann_entropy(rho);
  } else {
    r.bound_b = maassen_uffink_bound(pair) + conditional_entropy(rho);
  }
  r.slack = r.total_u - r.bound_b;
  return r;
}

}  // namespace eur
