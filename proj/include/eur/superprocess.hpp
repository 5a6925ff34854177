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

// Quantum switch and quantum time-flip superchannels acting on a control
// qubit A and a target qubit B, plus readout of the control qubit.

#pragma once

#include <vector>

#include "eur/channels.hpp"
#include "eur/matcore.hpp"

namespace eur {

/// The 2x2 conditional blocks X_ab = <a|rho|b>_A of a 4x4 operator.
struct BlockDecomposition {
  CMat x00 = CMat::Zero(2, 2);
  CMat x01 = CMat::Zero(2, 2);
  CMat x10 = CMat::Zero(2, 2);
  CMat x11 = CMat::Zero(2, 2);

  static BlockDecomposition split(const CMat& m);
  /// sum_{a,b} |a><b| (x) X_ab.
  CMat assemble() const;
};

enum class SuperchannelKind { quantum_switch, time_flip };

// A CPTP map on A (x) B whose Kraus operators are block diagonal in the
// control basis: K = |0><0| (x) A_k + |1><1| (x) B_k.
class Superchannel {
 public:
  /// Validates block-diagonality and sum K^dag K = I_4 within tol.
  Superchannel(SuperchannelKind kind, std::vector<CMat> ops, double tol = kDefaultTol);

  SuperchannelKind kind() const { return kind_; }
  const std::vector<CMat>& ops() const { return ops_; }

 private:
  SuperchannelKind kind_;
  std::vector<CMat> ops_;
};

// S_ij = |0><0| (x) M2_i M1_j + |1><1| (x) M1_j M2_i, (i, j) lexicographic.
// Products that are exactly zero are dropped.
Superchannel build_switch(const KrausChannel& first, const KrausChannel& second);

// F_i = |0><0| (x) M_i + |1><1| (x) M_i^T. Requires a unital channel.
// Operators that are exactly zero are dropped.
Superchannel build_timeflip(const KrausChannel& ch);

CMat apply_superchannel(const Superchannel& s, const CMat& rho);

/// Applies each block superoperator to the matching conditional block.
BlockDecomposition block_superoperators(const Superchannel& s, const BlockDecomposition& blocks);

enum class ControlBasis { z_basis, x_basis, traced_out };

enum class ControlOutcome { zero, one, plus, minus, none };

struct ControlReadout {
  ControlBasis mode = ControlBasis::traced_out;
  ControlOutcome outcome = ControlOutcome::none;
  double probability = 0.0;
  // Normalized conditional state of B. When zero_probability is set this
  // holds the unnormalized block instead.
  CMat conditional_state = CMat::Zero(2, 2);
  bool zero_probability = false;
};

/// Outcomes below this probability are flagged instead of normalized.
inline constexpr double kZeroProbability = 1e-12;

std::vector<ControlReadout> readout_control(const CMat& rho_out, ControlBasis mode);

/// The three ways a Pauli channel is applied to the memory qubit.
enum class Process { single_use, self_switch, time_flip };

/// Brute-force evolution of the Bell state |Phi+><Phi+| under a process.
CMat evolve_bell_state(Process process, const PauliChannel& ch);

}  // namespace eur
