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

#include "eur/superprocess.hpp"

#include <stdexcept>
#include <string>

namespace eur {

namespace {

CMat projector(int a) {
  CMat m = CMat::Zero(2, 2);
  m(a, a) = 1.0;
  return m;
}

CMat controlled(const CMat& on_zero, const CMat& on_one) {
  return kron(projector(0), on_zero) + kron(projector(1), on_one);
}

bool is_exactly_zero(const CMat& m) { return m.cwiseAbs().maxCoeff() == 0.0; }

void require_4x4(const CMat& m, const char* what) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument(std::string(what) + ": expected a 4x4 operator");
  }
}

}  // namespace

BlockDecomposition BlockDecomposition::split(const CMat& m) {
  require_4x4(m, "BlockDecomposition::split");
  return {m.block(0, 0, 2, 2), m.block(0, 2, 2, 2), m.block(2, 0, 2, 2), m.block(2, 2, 2, 2)};
}

CMat BlockDecomposition::assemble() const {
  CMat m(4, 4);
  m.block(0, 0, 2, 2) = x00;
  m.block(0, 2, 2, 2) = x01;
  m.block(2, 0, 2, 2) = x10;
  m.block(2, 2, 2, 2) = x11;
  return m;
}

Superchannel::Superchannel(SuperchannelKind kind, std::vector<CMat> ops, double tol)
    : kind_(kind), ops_(std::move(ops)) {
  if (ops_.empty()) throw std::invalid_argument("Superchannel: no Kraus operators");
  CMat completeness = CMat::Zero(4, 4);
  for (const CMat& k : ops_) {
    require_4x4(k, "Superchannel");
    if (k.block(0, 2, 2, 2).norm() > tol || k.block(2, 0, 2, 2).norm() > tol) {
      throw std::invalid_argument("Superchannel: Kraus operator is not block diagonal in the control basis");
    }
    completeness += k.adjoint() * k;
  }
  const double err = frobenius_distance(completeness, identity(4));
  if (err > tol) {
    throw std::invalid_argument("Superchannel: not trace preserving (||sum K^dag K - I||_F = " +
                                std::to_string(err) + ")");
  }
}

Superchannel build_switch(const KrausChannel& first, const KrausChannel& second) {
  std::vector<CMat> ops;
  ops.reserve(first.size() * second.size());
  for (const CMat& m2 : second.ops()) {
    for (const CMat& m1 : first.ops()) {
      CMat op = controlled(m2 * m1, m1 * m2);
      if (!is_exactly_zero(op)) ops.push_back(std::move(op));
    }
  }
  return Superchannel(SuperchannelKind::quantum_switch, std::move(ops));
}

Superchannel build_timeflip(const KrausChannel& ch) {
  if (!ch.is_unital()) {
    throw std::invalid_argument("build_timeflip: channel is not unital (not bidirectional)");
  }
  std::vector<CMat> ops;
  ops.reserve(ch.size());
  for (const CMat& m : ch.ops()) {
    CMat op = controlled(m, m.transpose());
    if (!is_exactly_zero(op)) ops.push_back(std::move(op));
  }
  return Superchannel(SuperchannelKind::time_flip, std::move(ops));
}

CMat apply_superchannel(const Superchannel& s, const CMat& rho) {
  require_4x4(rho, "apply_superchannel");
  CMat out = CMat::Zero(4, 4);
  for (const CMat& k : s.ops()) out += k * rho * k.adjoint();
  return out;
}

BlockDecomposition block_superoperators(const Superchannel& s, const BlockDecomposition& blocks) {
  BlockDecomposition out;
  for (const CMat& k : s.ops()) {
    const CMat a = k.block(0, 0, 2, 2);
    const CMat b = k.block(2, 2, 2, 2);
    out.x00 += a * blocks.x00 * a.adjoint();
    out.x01 += a * blocks.x01 * b.adjoint();
    out.x10 += b * blocks.x10 * a.adjoint();
    out.x11 += b * blocks.x11 * b.adjoint();
  }
  return out;
}

std::vector<ControlReadout> readout_control(const CMat& rho_out, ControlBasis mode) {
  require_4x4(rho_out, "readout_control");

  auto make = [mode](ControlOutcome outcome, CMat block) {
    ControlReadout r;
    r.mode = mode;
    r.outcome = outcome;
    r.probability = block.trace().real();
    if (r.probability < kZeroProbability) {
      r.zero_probability = true;
      r.conditional_state = std::move(block);
    } else {
      r.conditional_state = block / r.probability;
    }
    return r;
  };

  switch (mode) {
    case ControlBasis::z_basis:
      return {make(ControlOutcome::zero, rho_out.block(0, 0, 2, 2)),
              make(ControlOutcome::one, rho_out.block(2, 2, 2, 2))};
    case ControlBasis::x_basis: {
      CMat plus = CMat::Constant(2, 2, 0.5);
      CMat minus = plus;
      minus(0, 1) = minus(1, 0) = -0.5;
      std::vector<ControlReadout> out;
      for (auto [outcome, proj] : {std::pair{ControlOutcome::plus, plus}, std::pair{ControlOutcome::minus, minus}}) {
        const CMat p = kron(proj, identity(2));
        out.push_back(make(outcome, partial_trace_a(p * rho_out * p)));
      }
      return out;
    }
    case ControlBasis::traced_out:
      return {make(ControlOutcome::none, partial_trace_a(rho_out))};
  }
  throw std::logic_error("readout_control: unknown mode");
}

CMat evolve_bell_state(Process process, const PauliChannel& ch) {
  const KrausChannel kraus = pauli_to_kraus(ch);
  const CMat bell = bell_state();
  switch (process) {
    case Process::single_use: {
      CMat out = CMat::Zero(4, 4);
      for (const CMat& k : kraus.ops()) {
        const CMat op = kron(identity(2), k);
        out += op * bell * op.adjoint();
      }
      return out;
    }
    case Process::self_switch:
      return apply_superchannel(build_switch(kraus, kraus), bell);
    case Process::time_flip:
      return apply_superchannel(build_timeflip(kraus), bell);
  }
  throw std::logic_error("evolve_bell_state: unknown process");
}

}  // namespace eur
