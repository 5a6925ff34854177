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

#include "eur/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eur {

namespace {

void require_square(const CMat& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

double entropy_term(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

}  // namespace

double Spectrum::sum() const { return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0); }

CMat identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return CMat::Identity(n, n);
}

CMat sigma_x() {
  CMat m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

CMat sigma_y() {
  CMat m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

CMat sigma_z() {
  CMat m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

CMat pauli(std::size_t index) {
  switch (index) {
    case 0: return identity(2);
    case 1: return sigma_x();
    case 2: return sigma_y();
    case 3: return sigma_z();
    default: throw std::out_of_range("pauli: index must be 0..3");
  }
}

CMat bell_state() {
  CMat m = CMat::Zero(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return m;
}

CMat kron(const CMat& a, const CMat& b) {
  require_square(a, "kron");
  require_square(b, "kron");
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double frobenius_distance(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frobenius_distance: shape mismatch");
  }
  return (a - b).norm();
}

bool is_hermitian(const CMat& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).norm() <= tol;
}

Spectrum hermitian_eigenvalues(const CMat& m, double tol) {
  require_square(m, "hermitian_eigenvalues");
  const double skew = (m - m.adjoint()).norm();
  if (skew > tol) {
    throw std::domain_error("hermitian_eigenvalues: matrix is not Hermitian (||m - m^dag||_F = " +
                            std::to_string(skew) + ")");
  }
  // Symmetrize so the solver sees an exactly Hermitian input.
  const CMat herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  }
  const auto& values = solver.eigenvalues();
  Spectrum out;
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

CMat partial_trace_a(const CMat& m) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument("partial_trace_a: expected a 4x4 operator");
  }
  return m.block(0, 0, 2, 2) + m.block(2, 2, 2, 2);
}

double von_neumann_entropy(const CMat& m, double tol) {
  const Spectrum spec = hermitian_eigenvalues(m, tol);
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > tol) {
    throw std::domain_error("von_neumann_entropy: trace " + std::to_string(trace) + " is not 1");
  }
  return shannon_entropy(spec.eigenvalues, tol);
}

double shannon_entropy(std::span<const double> probs, double tol) {
  double h = 0.0;
  for (double x : probs) {
    if (x < -tol) {
      throw std::domain_error("shannon_entropy: negative weight " + std::to_string(x));
    }
    h += entropy_term(x);
  }
  return h;
}

double binary_entropy(double x, double tol) {
  if (x < -tol || x > 1.0 + tol || std::isnan(x)) {
    throw std::domain_error("binary_entropy: argument " + std::to_string(x) + " outside [0, 1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  return entropy_term(x) + entropy_term(1.0 - x);
}

}  // namespace eur
