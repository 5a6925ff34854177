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

#include "eur/channels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eur {

namespace {

constexpr double kBiasSumTol = 1e-9;
constexpr double kProbabilitySumTol = 1e-12;
constexpr double kFujiwaraAlgoetSlack = 1e-12;

BiasVector normalize_bias(BiasVector a) {
  if (!(a.x >= 0.0 && a.y >= 0.0 && a.z >= 0.0)) {
    throw std::invalid_argument("PauliChannel: bias components must be non-negative");
  }
  const double total = a.x + a.y + a.z;
  if (std::abs(total - 1.0) > kBiasSumTol) {
    throw std::invalid_argument("PauliChannel: bias components sum to " + std::to_string(total) +
                                ", expected 1");
  }
  a.z = 1.0 - a.x - a.y;
  if (a.z < 0.0) {
    // alpha_z was ~0 and the excess came from x or y; take it off the larger.
    double& big = a.x >= a.y ? a.x : a.y;
    big += a.z;
    a.z = 0.0;
  }
  return a;
}

}  // namespace

PauliChannel::PauliChannel(double p, BiasVector alpha) : p_(p), alpha_(normalize_bias(alpha)) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("PauliChannel: p = " + std::to_string(p) + " outside [0, 1]");
  }
}

PauliChannel PauliChannel::from_probabilities(const std::array<double, 4>& q) {
  double total = 0.0;
  for (double qi : q) {
    if (!(qi >= 0.0)) throw std::invalid_argument("PauliChannel: negative probability");
    total += qi;
  }
  if (std::abs(total - 1.0) > kProbabilitySumTol) {
    throw std::invalid_argument("PauliChannel: probabilities sum to " + std::to_string(total));
  }
  const double p = q[1] + q[2] + q[3];
  if (p == 0.0) return PauliChannel();
  return PauliChannel(std::min(p, 1.0), BiasVector{q[1] / p, q[2] / p, q[3] / p});
}

std::array<double, 4> PauliChannel::probabilities() const {
  return {1.0 - p_, alpha_.x * p_, alpha_.y * p_, alpha_.z * p_};
}

KrausChannel::KrausChannel(std::vector<CMat> ops, double tol) : ops_(std::move(ops)) {
  if (ops_.empty()) throw std::invalid_argument("KrausChannel: no Kraus operators");
  CMat completeness = CMat::Zero(2, 2);
  CMat unitality = CMat::Zero(2, 2);
  for (const CMat& k : ops_) {
    if (k.rows() != 2 || k.cols() != 2) {
      throw std::invalid_argument("KrausChannel: Kraus operators must be 2x2");
    }
    completeness += k.adjoint() * k;
    unitality += k * k.adjoint();
  }
  const double tp_error = frobenius_distance(completeness, identity(2));
  if (tp_error > tol) {
    throw std::invalid_argument("KrausChannel: not trace preserving (||sum K^dag K - I||_F = " +
                                std::to_string(tp_error) + ")");
  }
  unital_ = frobenius_distance(unitality, identity(2)) <= tol;
}

KrausChannel pauli_to_kraus(const PauliChannel& ch) {
  const auto q = ch.probabilities();
  std::vector<CMat> ops;
  ops.reserve(4);
  for (std::size_t i = 0; i < 4; ++i) ops.push_back(std::sqrt(q[i]) * pauli(i));
  return KrausChannel(std::move(ops));
}

ShrinkFactors shrink_factors(const PauliChannel& ch) {
  const double p = ch.p();
  const auto& a = ch.alpha();
  return {1.0 - 2.0 * (1.0 - a.x) * p, 1.0 - 2.0 * (1.0 - a.y) * p, 1.0 - 2.0 * (1.0 - a.z) * p};
}

bool check_fujiwara_algoet(const ShrinkFactors& f) {
  return std::abs(1.0 + f.z) + kFujiwaraAlgoetSlack >= std::abs(f.x + f.y) &&
         std::abs(1.0 - f.z) + kFujiwaraAlgoetSlack >= std::abs(f.x - f.y);
}

CMat apply_channel(const KrausChannel& ch, const CMat& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) {
    throw std::invalid_argument("apply_channel: expected a 2x2 operator");
  }
  CMat out = CMat::Zero(2, 2);
  for (const CMat& k : ch.ops()) out += k * rho * k.adjoint();
  return out;
}

KrausChannel transpose_channel(const KrausChannel& ch) {
  if (!ch.is_unital()) {
    throw std::invalid_argument("transpose_channel: channel is not unital, no backward process");
  }
  std::vector<CMat> ops;
  ops.reserve(ch.size());
  for (const CMat& k : ch.ops()) ops.push_back(k.transpose());
  return KrausChannel(std::move(ops));
}

}  // namespace eur
