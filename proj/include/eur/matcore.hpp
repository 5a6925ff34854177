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

// Dense complex-matrix helpers for one- and two-qubit operators.
//
// Two-qubit operators use the ordering A (x) B: the first tensor factor is
// the control / measured qubit A, the second is the memory qubit B.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace eur {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;

/// Default tolerance for Hermiticity, trace and eigenvalue clamping.
inline constexpr double kDefaultTol = 1e-10;

/// Real eigenvalues of a Hermitian operator, sorted descending.
struct Spectrum {
  std::vector<double> eigenvalues;

  double sum() const;
};

// Fixed operators.
CMat identity(std::size_t dim);
CMat sigma_x();
CMat sigma_y();
CMat sigma_z();
/// Pauli operator by index in the order (0, x, y, z); index 0 is the identity.
CMat pauli(std::size_t index);
/// |Phi+><Phi+| with |Phi+> = (|00> + |11>)/sqrt(2).
CMat bell_state();

CMat kron(const CMat& a, const CMat& b);

Spectrum hermitian_eigenvalues(const CMat& m, double tol = kDefaultTol);

/// Tr_A of a 4x4 operator on A (x) B.
CMat partial_trace_a(const CMat& m);

/// -Tr[rho log2 rho]; eigenvalues in [-tol, 0) are treated as zero.
double von_neumann_entropy(const CMat& m, double tol = kDefaultTol);

/// Shannon entropy in bits of a probability vector. Entries in [-tol, 0) are
/// treated as zero; anything lower throws.
double shannon_entropy(std::span<const double> probs, double tol = kDefaultTol);

double binary_entropy(double x, double tol = kDefaultTol);

double frobenius_distance(const CMat& a, const CMat& b);
bool is_hermitian(const CMat& m, double tol = kDefaultTol);

}  // namespace eur
