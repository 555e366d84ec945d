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

// The three Hopf maps S^3 -> S^2, S^7 -> S^4 and S^15 -> S^8.
//
// Each map is h2 o h1: h1 sends an encoded state (num, den) to
// conj(num den^-1) in the extended plane R^d + {inf}, and h2 is the inverse
// stereographic projection from the north pole x0 = +1 onto the unit sphere
// S^d. The same template runs over complex numbers, quaternions and
// octonions. Each map also has a closed-form route (Bloch expectation
// values, C1/C2, or the T_ij,kl terms) that the tests compare against.

#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hopfq/algebra.hpp"
#include "hopfq/entanglement.hpp"
#include "hopfq/errors.hpp"
#include "hopfq/operators.hpp"
#include "hopfq/states.hpp"
#include "hopfq/tolerance.hpp"

namespace hopfq {

// ---------------------------------------------------------------------------
// Algebra traits for the generic h1

template <class T>
struct AlgebraTraits;

template <>
struct AlgebraTraits<Complex> {
  static constexpr std::size_t dim = 2;
  static std::array<double, 2> components(const Complex& z) { return {z.real(), z.imag()}; }
  static Complex conjugate(const Complex& z) { return std::conj(z); }
  static Complex mul(const Complex& a, const Complex& b) { return a * b; }
  static Complex inverse(const Complex& z) {
    if (!(std::norm(z) > 0.0)) throw ZeroDivisorError("complex inverse of zero");
    return 1.0 / z;
  }
  static double norm2(const Complex& z) { return std::norm(z); }
};

template <>
struct AlgebraTraits<Quaternion> {
  static constexpr std::size_t dim = 4;
  static std::array<double, 4> components(const Quaternion& q) { return q.components(); }
  static Quaternion conjugate(const Quaternion& q) { return conj(q); }
  static Quaternion mul(const Quaternion& a, const Quaternion& b) { return quat_mul(a, b); }
  static Quaternion inverse(const Quaternion& q) { return quat_inv(q); }
  static double norm2(const Quaternion& q) { return q.norm2(); }
};

template <>
struct AlgebraTraits<Octonion> {
  static constexpr std::size_t dim = 8;
  static std::array<double, 8> components(const Octonion& a) { return a.components(); }
  static Octonion conjugate(const Octonion& a) { return conj(a); }
  static Octonion mul(const Octonion& a, const Octonion& b) { return oct_mul(a, b); }
  static Octonion inverse(const Octonion& a) { return oct_inv(a); }
  static double norm2(const Octonion& a) { return a.norm2(); }
};

/// A point of R^d + {inf}. Infinity is an ordinary value so h2 o h1 is total.
template <class T>
class Extended {
 public:
  Extended(const T& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static Extended infinity() { return Extended(); }

  bool is_infinite() const { return !value_.has_value(); }
  const T& value() const { return *value_; }

 private:
  Extended() = default;
  std::optional<T> value_;
};

/// h1: conj(num * den^-1), evaluated left to right; inf when den = 0.
template <class T>
Extended<T> h1_ratio(const T& num, const T& den) {
  using A = AlgebraTraits<T>;
  if (!(A::norm2(den) >= std::numeric_limits<double>::min())) return Extended<T>::infinity();
  return A::conjugate(A::mul(num, A::inverse(den)));
}

// ---------------------------------------------------------------------------
// Base points

/// Point on the unit sphere S^dim, dim in {2, 4, 8}; coords = x0 .. x_dim.
struct BasePoint {
  std::vector<double> coords;

  int dim() const { return static_cast<int>(coords.size()) - 1; }
  double operator[](std::size_t l) const { return coords[l]; }

  double norm2() const {
    double s = 0.0;
    for (double x : coords) s += x * x;
    return s;
  }

  /// Validating factory: size 3, 5 or 9 and unit norm within tol::kNorm.
  static BasePoint checked(std::vector<double> coords) {
    const auto n = coords.size();
    if (n != 3 && n != 5 && n != 9) {
      throw ValidationError("base point needs 3, 5 or 9 coordinates, got " + std::to_string(n));
    }
    BasePoint b{std::move(coords)};
    const double err = std::abs(b.norm2() - 1.0);
    if (!(err <= tol::kNorm)) throw ValidationError("base point is off the unit sphere by " + std::to_string(err));
    return b;
  }

  /// Projects any nonzero vector of valid size onto the sphere.
  static BasePoint normalized(std::vector<double> coords) {
    double s = 0.0;
    for (double x : coords) s += x * x;
    if (!(s > 0.0) || !std::isfinite(s)) throw ValidationError("cannot normalize a zero base point");
    const double k = 1.0 / std::sqrt(s);
    for (double& x : coords) x *= k;
    return checked(std::move(coords));
  }
};

/// h2: inverse stereographic projection from the north pole.
/// x0 = (|p|^2 - 1)/(|p|^2 + 1), x_{l+1} = 2 p_l/(1 + |p|^2), inf -> (1, 0, ..).
template <class T>
BasePoint inverse_stereographic(const Extended<T>& p) {
  constexpr std::size_t d = AlgebraTraits<T>::dim;
  std::vector<double> x(d + 1, 0.0);
  if (p.is_infinite()) {
    x[0] = 1.0;
    return BasePoint{std::move(x)};
  }
  const auto c = AlgebraTraits<T>::components(p.value());
  double n2 = 0.0;
  for (double v : c) n2 += v * v;
  if (n2 <= 1.0) {
    const double den = 1.0 + n2;
    x[0] = (n2 - 1.0) / den;
    for (std::size_t l = 0; l < d; ++l) x[l + 1] = 2.0 * c[l] / den;
  } else {
    // Same formulas divided through by |p|^2 so huge |p| cannot overflow.
    const double w = 1.0 / n2;
    const double den = 1.0 + w;
    x[0] = (1.0 - w) / den;
    for (std::size_t l = 0; l < d; ++l) x[l + 1] = 2.0 * (c[l] * w) / den;
  }
  return BasePoint{std::move(x)};
}

/// Polar angle of a base point, arccos(x0) in [0, pi].
inline double base_theta(const BasePoint& b) {
  double s = 0.0;
  for (std::size_t l = 1; l < b.coords.size(); ++l) s += b.coords[l] * b.coords[l];
  return std::atan2(std::sqrt(s), b.coords[0]);
}

// ---------------------------------------------------------------------------
// S^3 -> S^2

/// h2(h1(alpha, beta)) for a one-qubit state.
inline BasePoint hopf_s3(const PureState& s) {
  require_qubits(s, 1, "hopf_s3");
  return inverse_stereographic(h1_ratio(s[0], s[1]));
}

/// Bloch vector ordered as (Z, X, Y) = (|a|^2 - |b|^2, 2 Re(conj(a) b), 2 Im(conj(a) b)).
inline BasePoint bloch_coordinates(const PureState& s) {
  require_qubits(s, 1, "bloch_coordinates");
  const Complex ab = std::conj(s[0]) * s[1];
  return BasePoint{{std::norm(s[0]) - std::norm(s[1]), 2.0 * ab.real(), 2.0 * ab.imag()}};
}

// ---------------------------------------------------------------------------
// S^7 -> S^4

inline BasePoint hopf_s7(const PureState& s, Grouping grouping = Grouping::standard) {
  const QuaternionPair p = encode_two_qubit(s, grouping);
  return inverse_stereographic(h1_ratio(p.q1, p.q2));
}

/// C1 = conj(alpha) gamma + conj(beta) delta (in the given grouping).
inline Complex c1_term(const PureState& s, Grouping grouping = Grouping::standard) {
  const PureState t = grouping == Grouping::standard ? s : swap_qubits(s);
  return std::conj(t[0]) * t[2] + std::conj(t[1]) * t[3];
}

/// Closed form (|q1|^2 - |q2|^2, 2 Re C1, 2 Im C1, 2 Re C2, 2 Im C2).
inline BasePoint hopf_s7_closed_form(const PureState& s, Grouping grouping = Grouping::standard) {
  const PureState t = grouping == Grouping::standard ? s : swap_qubits(s);
  const Complex c1 = c1_term(t);
  const Complex c2 = c2_term(t);
  const double x0 = std::norm(t[0]) + std::norm(t[1]) - std::norm(t[2]) - std::norm(t[3]);
  return BasePoint{{x0, 2.0 * c1.real(), 2.0 * c1.imag(), 2.0 * c2.real(), 2.0 * c2.imag()}};
}

/// <E> for the antilinear entanglor E = -J (sigma_y (x) sigma_y). J
/// conjugates the bra of the scalar product, so
/// <E> = -sum_l psi_l [(sigma_y (x) sigma_y) psi]_l. Equals 2 (alpha delta - beta gamma).
inline Complex entanglor_expectation(const PureState& s) {
  require_qubits(s, 2, "entanglor");
  const std::array<Pauli, 2> yy{Pauli::y, Pauli::y};
  const auto phi = apply_pauli_string(yy, s.amplitudes());
  Complex acc{};
  for (std::size_t l = 0; l < phi.size(); ++l) acc += s[l] * phi[l];
  return -acc;
}

// ---------------------------------------------------------------------------
// S^15 -> S^8

/// Octonion route: h2(h1(a, b)) with (a, b) the three-qubit encoding.
inline BasePoint hopf_s15(const PureState& s) {
  const OctonionPair p = encode_three_qubit(s);
  return inverse_stereographic(h1_ratio(p.a, p.b));
}

/// Closed-form route through the generalized concurrences:
///   x0 = sum_{l<4} |t_l|^2 - sum_{l>=4} |t_l|^2
///   x1 + i x2 = 2 (conj(t0) t4 + conj(t1) t5 + conj(t2) t6 + conj(t3) t7)
///   x3 + i x4 = 2 (T05,14 + conj(T27,36))
///   x5 + i x6 = 2 (T06,24 + conj(T35,17))
///   x7 + i x8 = 2 (T16,25 + conj(T07,34))
inline BasePoint hopf_s15_closed_form(const PureState& s) {
  require_qubits(s, 3, "hopf_s15_closed_form");
  const auto T = generalized_concurrences(s);
  double x0 = 0.0;
  for (std::size_t l = 0; l < 4; ++l) x0 += std::norm(s[l]) - std::norm(s[l + 4]);
  Complex z12{};
  for (std::size_t l = 0; l < 4; ++l) z12 += std::conj(s[l]) * s[l + 4];
  z12 *= 2.0;
  const Complex z34 = 2.0 * (T.t05_14 + std::conj(T.t27_36));
  const Complex z56 = 2.0 * (T.t06_24 + std::conj(T.t35_17));
  const Complex z78 = 2.0 * (T.t16_25 + std::conj(T.t07_34));
  return BasePoint{{x0, z12.real(), z12.imag(), z34.real(), z34.imag(), z56.real(), z56.imag(), z78.real(),
                    z78.imag()}};
}

// ---------------------------------------------------------------------------
// Stereographic rendering of S^3 into R^3

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

inline constexpr Vec4 kDefaultPole{1.0, 0.0, 0.0, 0.0};

inline double dot(const Vec4& a, const Vec4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

/// Orthonormal basis of the hyperplane orthogonal to `pole`. Gram-Schmidt
/// over the standard basis, skipping the axis most aligned with the pole;
/// for the default pole (1,0,0,0) this is e1, e2, e3.
inline std::array<Vec4, 3> tangent_frame(const Vec4& pole) {
  std::size_t skip = 0;
  for (std::size_t l = 1; l < 4; ++l)
    if (std::abs(pole[l]) > std::abs(pole[skip])) skip = l;
  std::array<Vec4, 3> frame{};
  std::size_t k = 0;
  for (std::size_t l = 0; l < 4; ++l) {
    if (l == skip) continue;
    Vec4 v{};
    v[l] = 1.0;
    const double pv = dot(v, pole);
    for (std::size_t m = 0; m < 4; ++m) v[m] -= pv * pole[m];
    for (std::size_t f = 0; f < k; ++f) {
      const double c = dot(v, frame[f]);
      for (std::size_t m = 0; m < 4; ++m) v[m] -= c * frame[f][m];
    }
    const double n = std::sqrt(dot(v, v));
    for (double& x : v) x /= n;
    frame[k++] = v;
  }
  return frame;
}

inline void require_unit(const Vec4& p, const char* what) {
  if (!(std::abs(dot(p, p) - 1.0) <= tol::kNorm)) throw ValidationError(std::string(what) + " is not on the unit S^3");
}

/// Stereographic projection of S^3 from `pole` onto pole^perp ~ R^3.
/// Returns nullopt (the point at infinity) for p = pole.
inline std::optional<Vec3> stereo_project_s3(const Vec4& p, const Vec4& pole = kDefaultPole) {
  require_unit(p, "point");
  require_unit(pole, "pole");
  const double c = dot(p, pole);
  const double den = 1.0 - c;
  if (den <= 1e-15) return std::nullopt;
  const auto frame = tangent_frame(pole);
  Vec3 y{};
  for (std::size_t f = 0; f < 3; ++f) y[f] = dot(p, frame[f]) / den;
  return y;
}

/// Inverse of stereo_project_s3: p = (2y + (|y|^2 - 1) pole)/(|y|^2 + 1).
inline Vec4 inverse_stereo_s3(const Vec3& y, const Vec4& pole = kDefaultPole) {
  const auto frame = tangent_frame(pole);
  const double n2 = y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
  Vec4 p{};
  for (std::size_t m = 0; m < 4; ++m) {
    double v = (n2 - 1.0) * pole[m];
    for (std::size_t f = 0; f < 3; ++f) v += 2.0 * y[f] * frame[f][m];
    p[m] = v / (n2 + 1.0);
  }
  return p;
}

/// (alpha, beta) read as (Re alpha, Im alpha, Re beta, Im beta).
inline Vec4 to_r4(const PureState& s) {
  require_qubits(s, 1, "to_r4");
  return {s[0].real(), s[0].imag(), s[1].real(), s[1].imag()};
}

inline PureState from_r4(const Vec4& p) { return PureState::normalized({{p[0], p[1]}, {p[2], p[3]}}); }

}  // namespace hopfq
