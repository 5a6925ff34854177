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

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace eur;

namespace {

void expect_coeffs(const BellDiagonalCoeffs& c, double x, double y, double z, double tol = 1e-14) {
  EXPECT_NEAR(c.c_x, x, tol);
  EXPECT_NEAR(c.c_y, y, tol);
  EXPECT_NEAR(c.c_z, z, tol);
}

// Independent derivation path: sum over the Pauli index pairs using the sign
// rules s_mu(i) and eta_i rather than the expanded polynomials.
int s(std::size_t mu, std::size_t i) { return (i == 0 || i == mu) ? 1 : -1; }
constexpr int eta[] = {1, 1, -1, 1};

BellDiagonalCoeffs kappa_by_sign_sums(const PauliChannel& ch) {
  const auto q = ch.probabilities();
  double k[4] = {0, 0, 0, 0};
  for (std::size_t mu = 1; mu <= 3; ++mu) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        // i == j gives +1; one index zero gives s_mu of the other; an
        // anticommuting pair gives -s_mu of the remaining axis, except for
        // z whose block is diagonal in the control basis.
        int sign;
        if (i == j) {
          sign = 1;
        } else if (i == 0 || j == 0) {
          sign = s(mu, i + j);
        } else {
          sign = mu == 3 ? s(mu, i) * s(mu, j) : -s(mu, 6 - i - j);
        }
        k[mu] += q[i] * q[j] * sign;
      }
    }
  }
  return {k[1], k[2], k[3]};
}

BellDiagonalCoeffs tau_by_sign_sums(const PauliChannel& ch) {
  const auto q = ch.probabilities();
  double t[4] = {0, 0, 0, 0};
  for (std::size_t mu = 1; mu <= 3; ++mu) {
    for (std::size_t i = 0; i < 4; ++i) {
      // The z block is diagonal in the control basis, so no eta factor.
      t[mu] += q[i] * s(mu, i) * (mu == 3 ? 1 : eta[i]);
    }
  }
  return {t[1], t[2], t[3]};
}

}  // namespace

TEST(BellDiagonalCoeffs, eigenvalues_match_diagonalization) {
  std::mt19937_64 rng(149);
  for (int trial = 0; trial < 100; ++trial) {
    const BellDiagonalCoeffs c = coeffs_switch(testutil::random_pauli(rng));
    auto ev = c.eigenvalues();
    std::sort(ev.begin(), ev.end(), std::greater<>());
    const Spectrum s = hermitian_eigenvalues(c.to_density_matrix());
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], s.eigenvalues[i], 1e-12);
    const BellDiagonalCoeffs back = BellDiagonalCoeffs::from_density_matrix(c.to_density_matrix());
    expect_coeffs(back, c.c_x, c.c_y, c.c_z, 1e-14);
  }
  EXPECT_LT(frobenius_distance(BellDiagonalCoeffs{}.to_density_matrix(), bell_state()), 1e-15);
}

TEST(coeffs_single_use, reference_values) {
  expect_coeffs(coeffs_single_use(PauliChannel(0.0, {0.2, 0.3, 0.5})), 1, 1, 1);
  expect_coeffs(coeffs_single_use(PauliChannel(0.3, {1.0 / 3, 1.0 / 3, 1.0 / 3})), 0.6, 0.6, 0.6);
  expect_coeffs(coeffs_single_use(PauliChannel(1.0, {0, 0, 1})), -1, -1, 1);
}

TEST(coeffs_switch, reference_values) {
  expect_coeffs(coeffs_switch(PauliChannel(0.0, {0.2, 0.3, 0.5})), 1, 1, 1);
  expect_coeffs(coeffs_switch(PauliChannel(1.0, {0.5, 0.5, 0.0})), 1, 1, 1);
  // Frozen from an independent numpy evaluation of the switch Kraus sum.
  expect_coeffs(coeffs_switch(PauliChannel(0.75, {0.5, 0.1, 0.4})), 0.535, -0.125, 0.01, 1e-12);
}

TEST(coeffs_switch, matches_sign_rule_sums_and_kappa_z_is_lambda_z_squared) {
  std::mt19937_64 rng(151);
  for (int trial = 0; trial < 500; ++trial) {
    const PauliChannel ch = testutil::random_pauli(rng);
    const BellDiagonalCoeffs k = coeffs_switch(ch);
    const BellDiagonalCoeffs ref = kappa_by_sign_sums(ch);
    expect_coeffs(k, ref.c_x, ref.c_y, ref.c_z, 1e-12);
    const double lz = shrink_factors(ch).z;
    EXPECT_EQ(k.c_z, lz * lz);
  }
}

TEST(coeffs_timeflip, reference_values) {
  expect_coeffs(coeffs_timeflip(PauliChannel(0.0, {0.2, 0.3, 0.5})), 1, 1, 1);
  for (const BiasVector a : {BiasVector{1, 0, 0}, BiasVector{0.2, 0.3, 0.5}, BiasVector{0, 0, 1}}) {
    EXPECT_NEAR(coeffs_timeflip(PauliChannel(0.5, a)).c_y, 0.0, 1e-15);
  }
  const PauliChannel ch(0.75, {1.0 / 3, 2.0 / 3, 0.0});
  EXPECT_NEAR(coeffs_timeflip(ch).c_x, 1.0, 1e-15);
  EXPECT_NEAR(coeffs_single_use(ch).c_x, 0.0, 1e-15);
  EXPECT_NEAR(timeflip_advantage(ch).delta_u, -1.0, 1e-12);
}

TEST(coeffs_timeflip, matches_sign_rule_sums_and_tau_z_is_lambda_z) {
  std::mt19937_64 rng(157);
  for (int trial = 0; trial < 500; ++trial) {
    const PauliChannel ch = testutil::random_pauli(rng);
    const BellDiagonalCoeffs t = coeffs_timeflip(ch);
    const BellDiagonalCoeffs ref = tau_by_sign_sums(ch);
    expect_coeffs(t, ref.c_x, ref.c_y, ref.c_z, 1e-12);
    EXPECT_EQ(t.c_z, shrink_factors(ch).z);
  }
}

TEST(coeffs, match_density_matrix_oracle) {
  std::mt19937_64 rng(163);
  for (int trial = 0; trial < 1000; ++trial) {
    const PauliChannel ch = testutil::random_pauli(rng);
    for (Process proc : {Process::single_use, Process::self_switch, Process::time_flip}) {
      const CMat rho = evolve_bell_state(proc, ch);
      const BellDiagonalCoeffs oracle = BellDiagonalCoeffs::from_density_matrix(rho);
      expect_coeffs(coeffs_for(proc, ch), oracle.c_x, oracle.c_y, oracle.c_z, 1e-10);
      const UncertaintyReport a = closed_form_report(proc, ch);
      const UncertaintyReport b = evaluate_maeur(rho);
      EXPECT_NEAR(a.total_u, b.total_u, 1e-9);
      EXPECT_NEAR(a.bound_b, b.bound_b, 1e-9);
    }
  }
}

TEST(uncertainty_closed_form, reference_values) {
  const UncertaintyReport bell = uncertainty_closed_form({1, 1, 1});
  EXPECT_NEAR(bell.total_u, 0.0, 1e-15);
  EXPECT_NEAR(bell.bound_b, 0.0, 1e-15);

  const UncertaintyReport mixed = uncertainty_closed_form({0, 0, 0});
  EXPECT_DOUBLE_EQ(mixed.total_u, 2.0);
  EXPECT_DOUBLE_EQ(mixed.bound_b, 2.0);

  const UncertaintyReport dep = uncertainty_closed_form({0.6, 0.6, 0.6});
  EXPECT_NEAR(dep.total_u, 1.4438561897747249, 1e-12);
  EXPECT_NEAR(dep.bound_b, 1.3567796494470397, 1e-12);
  const UncertaintyReport oracle = evaluate_maeur(BellDiagonalCoeffs{0.6, 0.6, 0.6}.to_density_matrix());
  EXPECT_NEAR(dep.total_u, oracle.total_u, 1e-12);
  EXPECT_NEAR(dep.bound_b, oracle.bound_b, 1e-12);
}

TEST(uncertainty_closed_form, rejects_unphysical_coefficients) {
  EXPECT_THROW(uncertainty_closed_form({1, 1, -1}), std::domain_error);
}

TEST(saturation_predicate, reference_values) {
  for (double p : {0.05, 0.3, 0.5, 0.8, 1.0}) {
    EXPECT_TRUE(saturation_predicate(PauliChannel(p, {1, 0, 0})));
    EXPECT_TRUE(saturation_predicate(PauliChannel(p, {0, 0, 1})));
  }
  EXPECT_FALSE(saturation_predicate(PauliChannel(0.3, {1.0 / 3, 1.0 / 3, 1.0 / 3})));
}

TEST(saturation_predicate, implies_tight_bound) {
  std::mt19937_64 rng(167);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    // Pick alpha, then solve alpha_y (1 - p) = p alpha_x alpha_z for p.
    const double ax = unit(rng);
    const double az = (1.0 - ax) * unit(rng);
    const double ay = 1.0 - ax - az;
    const PauliChannel ch(ay / (ay + ax * az), {ax, ay, az});
    ASSERT_TRUE(saturation_predicate(ch));
    const UncertaintyReport r = closed_form_report(Process::single_use, ch);
    EXPECT_NEAR(r.total_u, r.bound_b, 1e-9);
  }
  for (int trial = 0; trial < 500; ++trial) {
    const PauliChannel ch = testutil::random_pauli(rng);
    if (saturation_predicate(ch)) {
      const UncertaintyReport r = closed_form_report(Process::single_use, ch);
      EXPECT_NEAR(r.total_u, r.bound_b, 1e-9);
    }
  }
}

TEST(switch_advantage, reference_cases) {
  const AdvantageVerdict xy = switch_advantage(PauliChannel(0.6, {0.5, 0.5, 0.0}));
  EXPECT_TRUE(xy.advantaged);
  EXPECT_EQ(xy.necessary_condition, Condition::met);
  EXPECT_NEAR(xy.delta_u, -0.05835567830563759, 1e-12);

  const PauliChannel generic(0.55, {0.5, 0.1, 0.4});
  const AdvantageVerdict g = switch_advantage(generic);
  EXPECT_FALSE(g.advantaged);
  EXPECT_EQ(g.necessary_condition, Condition::met);
  EXPECT_LT(closed_form_report(Process::self_switch, generic).s_x_given_b,
            closed_form_report(Process::single_use, generic).s_x_given_b);

  EXPECT_EQ(switch_advantage(PauliChannel(0.5, {1, 0, 0})).necessary_condition, Condition::not_met);
}

TEST(switch_advantage, not_applicable_when_signs_differ) {
  // Phase flip at p = 1: lambda_x = -1.
  EXPECT_EQ(switch_advantage(PauliChannel(1.0, {0, 0, 1})).necessary_condition, Condition::not_applicable);
}

TEST(switch_advantage, never_at_low_noise) {
  std::mt19937_64 rng(173);
  std::uniform_real_distribution<double> low(0.0, 0.5);
  for (int trial = 0; trial < 3000; ++trial) {
    const PauliChannel r = testutil::random_pauli(rng);
    const PauliChannel ch(trial % 3 == 0 ? 0.25 : low(rng), r.alpha());
    const AdvantageVerdict v = switch_advantage(ch);
    EXPECT_FALSE(v.advantaged) << "p=" << ch.p();
    EXPECT_NE(v.necessary_condition, Condition::met);
  }
}

TEST(switch_advantage, z_uncertainty_never_lower) {
  std::mt19937_64 rng(179);
  for (int trial = 0; trial < 1000; ++trial) {
    const PauliChannel ch = testutil::random_pauli(rng);
    EXPECT_GE(closed_form_report(Process::self_switch, ch).s_z_given_b,
              closed_form_report(Process::single_use, ch).s_z_given_b - 1e-12);
  }
}

TEST(switch_advantage, advantage_implies_necessary_condition_when_applicable) {
  std::mt19937_64 rng(181);
  for (int trial = 0; trial < 3000; ++trial) {
    const AdvantageVerdict v = switch_advantage(testutil::random_pauli(rng));
    if (v.advantaged && v.necessary_condition != Condition::not_applicable) {
      EXPECT_EQ(v.necessary_condition, Condition::met);
    }
  }
}

TEST(timeflip_advantage, reference_cases) {
  for (double p : {0.01, 0.25, 0.5, 0.75, 1.0}) {
    const AdvantageVerdict v = timeflip_advantage(PauliChannel(p, {0.5, 0.3, 0.2}));
    EXPECT_TRUE(v.advantaged) << "p=" << p;
    EXPECT_EQ(v.necessary_condition, Condition::met);
  }
  for (double p : {0.2, 0.6, 1.0}) {
    const AdvantageVerdict v = timeflip_advantage(PauliChannel(p, {0.4, 0.0, 0.6}));
    EXPECT_FALSE(v.advantaged);
    EXPECT_EQ(v.necessary_condition, Condition::not_met);
  }
  for (double p : {0.5, 0.75, 1.0}) {
    const double ay = 1.0 / (2.0 * p);
    EXPECT_NEAR(timeflip_advantage(PauliChannel(p, {1.0 - ay, ay, 0.0})).delta_u, -1.0, 1e-12);
  }
}

TEST(timeflip_advantage, predicate_matches_sign_and_correlation_test) {
  std::mt19937_64 rng(191);
  for (int trial = 0; trial < 5000; ++trial) {
    const PauliChannel ch = testutil::random_pauli(rng);
    const AdvantageVerdict v = timeflip_advantage(ch);
    const bool predicate = v.necessary_condition == Condition::met;
    if (std::abs(v.delta_u) > 1e-9) EXPECT_EQ(predicate, v.advantaged);
    const bool larger = std::abs(coeffs_timeflip(ch).c_x) > std::abs(coeffs_single_use(ch).c_x);
    if (std::abs(std::abs(coeffs_timeflip(ch).c_x) - std::abs(coeffs_single_use(ch).c_x)) > 1e-12) {
      EXPECT_EQ(predicate, larger);
    }
    EXPECT_EQ(closed_form_report(Process::time_flip, ch).s_z_given_b,
              closed_form_report(Process::single_use, ch).s_z_given_b);
  }
}
