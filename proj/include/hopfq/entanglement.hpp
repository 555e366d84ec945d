// Copyright 2026 The hopfq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Entanglement functionals of two- and three-qubit pure states: concurrence,
// one-qubit reduced density matrices, the generalized complex concurrences
// T_ij,kl = t_i t_j - t_k t_l, partial Bloch radii and foliation leaves.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <string_view>

#include "hopfq/errors.hpp"
#include "hopfq/states.hpp"
#include "hopfq/tolerance.hpp"

namespace hopfq {

/// 2x2 one-qubit density matrix, rho = 1/2 (1 + r . sigma).
struct DensityMatrix2 {
  Complex r00, r01, r10, r11;

  Complex trace() const { return r00 + r11; }
  Complex det() const { return r00 * r11 - r01 * r10; }

  /// Bloch vector (x, y, z) = (2 Re r10, 2 Im r10, r00 - r11).
  std::array<double, 3> bloch_vector() const {
    return {2.0 * r10.real(), 2.0 * r10.imag(), (r00 - r11).real()};
  }
  double bloch_radius() const {
    const auto b = bloch_vector();
    return std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
  }

  /// Eigenvalues in ascending order (Hermitian assumed).
  std::array<double, 2> eigenvalues() const {
    const double half_tr = 0.5 * trace().real();
    const double r = 0.5 * bloch_radius();
    return {half_tr - r, half_tr + r};
  }

  /// Throws ConsistencyError unless Hermitian, unit trace and positive
  /// semidefinite within the documented slacks.
  void validate() const {
    const double herm = std::max({std::abs(r10 - std::conj(r01)), std::abs(r00.imag()), std::abs(r11.imag())});
    if (herm > tol::kAlgebra) throw ConsistencyError("density matrix is not Hermitian");
    if (std::abs(trace() - 1.0) > tol::kNorm) throw ConsistencyError("density matrix trace differs from 1");
    if (eigenvalues()[0] < -tol::kEigenSlack) throw ConsistencyError("density matrix has a negative eigenvalue");
  }
};

/// Partial trace down to qubit `which` (1-based, qubit 1 most significant).
inline DensityMatrix2 reduced_density(const PureState& s, int which) {
  const int n = s.n_qubits();
  if (n < 2) throw ValidationError("reduced density needs at least two qubits");
  if (which < 1 || which > n) {
    throw ValidationError("qubit index " + std::to_string(which) + " out of range 1.." + std::to_string(n));
  }
  const std::size_t bit = std::size_t{1} << (n - which);
  std::array<std::array<Complex, 2>, 2> rho{};
  for (std::size_t l = 0; l < s.dimension(); ++l) {
    if (l & bit) continue;
    const Complex z0 = s[l], z1 = s[l | bit];
    rho[0][0] += z0 * std::conj(z0);
    rho[0][1] += z0 * std::conj(z1);
    rho[1][0] += z1 * std::conj(z0);
    rho[1][1] += z1 * std::conj(z1);
  }
  return {rho[0][0], rho[0][1], rho[1][0], rho[1][1]};
}

/// C2 = alpha delta - beta gamma.
inline Complex c2_term(const PureState& s) {
  require_qubits(s, 2, "C2");
  return s[0] * s[3] - s[1] * s[2];
}

/// c = 2 |alpha delta - beta gamma|, clamped to [0, 1].
inline double concurrence(const PureState& s) {
  const double c = 2.0 * std::abs(c2_term(s));
  if (c > 1.0 + tol::kConcurrenceSlack) throw ConsistencyError("concurrence exceeds 1: " + std::to_string(c));
  return std::clamp(c, 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Three qubits

/// The six bilinears that build the S^8 base coordinates x3..x8.
struct GeneralizedConcurrences {
  Complex t05_14;
  Complex t27_36;
  Complex t06_24;
  Complex t35_17;
  Complex t16_25;
  Complex t07_34;

  std::array<Complex, 6> as_array() const { return {t05_14, t27_36, t06_24, t35_17, t16_25, t07_34}; }
};

inline GeneralizedConcurrences generalized_concurrences(const PureState& s) {
  require_qubits(s, 3, "generalized concurrences");
  auto T = [&](int i, int j, int k, int l) {
    return s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)] -
           s[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(l)];
  };
  return {T(0, 5, 1, 4), T(2, 7, 3, 6), T(0, 6, 2, 4), T(3, 5, 1, 7), T(1, 6, 2, 5), T(0, 7, 3, 4)};
}

struct BlochRadii {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
  double average = 0.0;

  double operator[](int k) const { return k == 1 ? r1 : (k == 2 ? r2 : r3); }
};

inline BlochRadii partial_bloch_radii(const PureState& s) {
  require_qubits(s, 3, "partial Bloch radii");
  BlochRadii r;
  r.r1 = reduced_density(s, 1).bloch_radius();
  r.r2 = reduced_density(s, 2).bloch_radius();
  r.r3 = reduced_density(s, 3).bloch_radius();
  r.average = (r.r1 + r.r2 + r.r3) / 3.0;
  return r;
}

// ---------------------------------------------------------------------------
// Two-qubit foliation

enum class LeafLabel { separable_s2xs2, intermediate_s2xso3, mes_so3 };

inline std::string_view to_string(LeafLabel l) {
  switch (l) {
    case LeafLabel::separable_s2xs2: return "SEPARABLE_S2xS2";
    case LeafLabel::intermediate_s2xso3: return "INTERMEDIATE_S2xSO3";
    case LeafLabel::mes_so3: return "MES_SO3";
  }
  return "?";
}

struct LeafDescriptor {
  double concurrence = 0.0;
  double shell_radius = 1.0;  // sqrt(1 - c^2)
  LeafLabel label = LeafLabel::separable_s2xs2;
};

inline LeafDescriptor classify_leaf(const PureState& s, double tol = tol::kClassify) {
  LeafDescriptor d;
  d.concurrence = concurrence(s);
  d.shell_radius = std::sqrt(1.0 - d.concurrence * d.concurrence);
  if (d.concurrence <= tol) {
    d.label = LeafLabel::separable_s2xs2;
  } else if (d.concurrence >= 1.0 - tol) {
    d.label = LeafLabel::mes_so3;
  } else {
    d.label = LeafLabel::intermediate_s2xso3;
  }
  return d;
}

/// Is qubit `qubit` (1-based) unentangled from the rest?
/// Two qubits: |alpha delta - beta gamma| < tol (either index).
/// Three qubits: partial Bloch radius of that qubit within tol of 1.
inline bool separability_check(const PureState& s, int qubit, double tol = tol::kClassify) {
  const int n = s.n_qubits();
  if (n < 2 || qubit < 1 || qubit > n) {
    throw ValidationError("invalid partition: qubit " + std::to_string(qubit) + " of " + std::to_string(n));
  }
  if (n == 2) return std::abs(c2_term(s)) < tol;
  return std::abs(reduced_density(s, qubit).bloch_radius() - 1.0) < tol;
}

}  // namespace hopfq
