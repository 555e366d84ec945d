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

// Inverse Hopf constructions: explicit state families sitting over a given
// base point.
//
// Over a point of S^4 with polar angle theta and normalized h1 image
// Q' = u + v j, the fiber is the S^3 of states
//   (cos(theta/2) q, sin(theta/2) Q' q),   q = f_a + f_b j unit,
// which as four amplitudes reads
//   (c f_a, c f_b, s (u f_a - v conj(f_b)), s (u f_b + v conj(f_a))).

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hopfq/algebra.hpp"
#include "hopfq/entanglement.hpp"
#include "hopfq/errors.hpp"
#include "hopfq/hopf.hpp"
#include "hopfq/states.hpp"
#include "hopfq/tolerance.hpp"

namespace hopfq {

struct FiberFrame {
  double theta = 0.0;              // arccos x0
  double phi = 0.0;                // cos phi = S(Q')
  Quaternion t = Quaternion::i();  // unit pure-imaginary axis of Q'
  Complex u;                       // (x1 + i x2)/sin theta
  Complex v;                       // (x3 + i x4)/sin theta

  Quaternion q_prime() const { return Quaternion::from_complex_pair(u, v); }
};

namespace detail {
inline double sin_theta(const BasePoint& b) {
  double s = 0.0;
  for (std::size_t l = 1; l < b.coords.size(); ++l) s += b.coords[l] * b.coords[l];
  return std::sqrt(s);
}

inline void require_dim(const BasePoint& b, int dim, const char* what) {
  if (b.dim() != dim) throw ValidationError(std::string(what) + " needs a point of S^" + std::to_string(dim));
  (void)BasePoint::checked(b.coords);
}

inline void require_unit(const Complex& a, const Complex& b, const char* what) {
  if (!(std::abs(std::norm(a) + std::norm(b) - 1.0) <= tol::kNorm)) {
    throw ValidationError(std::string(what) + ": |f_a|^2 + |f_b|^2 must be 1");
  }
}
}  // namespace detail

/// Frame (theta, u, v, phi, t) of a non-polar point of S^4.
inline FiberFrame fiber_frame(const BasePoint& base, double pole_tol = tol::kPole) {
  detail::require_dim(base, 4, "fiber_frame");
  const double st = detail::sin_theta(base);
  if (st <= pole_tol) throw PoleError("fiber frame is undefined at a pole of S^4");
  FiberFrame f;
  f.theta = std::atan2(st, base[0]);
  f.u = Complex{base[1], base[2]} / st;
  f.v = Complex{base[3], base[4]} / st;
  const Quaternion qp = f.q_prime();
  const Quaternion vec = qp.vector();
  const double sin_phi = vec.norm();
  f.phi = std::atan2(sin_phi, qp.x0);
  if (sin_phi > tol::kAxis) f.t = (1.0 / sin_phi) * vec;
  return f;
}

/// Point of the S^3 fiber over `base` selected by the unit quaternion q.
/// At either pole Q' is taken as 1.
inline PureState fiber_point_s7(const BasePoint& base, const Quaternion& q) {
  detail::require_dim(base, 4, "fiber_point_s7");
  if (!(std::abs(q.norm2() - 1.0) <= tol::kNorm)) throw ValidationError("fiber_point_s7: q must be a unit quaternion");
  const double st = detail::sin_theta(base);
  const double theta = std::atan2(st, base[0]);
  Complex u{1.0, 0.0}, v{};
  if (st > tol::kPole) {
    u = Complex{base[1], base[2]} / st;
    v = Complex{base[3], base[4]} / st;
  }
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  const Complex a = q.c1(), b = q.c2();
  return PureState::normalized({c * a, c * b, s * (u * a - v * std::conj(b)), s * (u * b + v * std::conj(a))});
}

/// Maximally entangled state (f_a, f_b, -conj(f_b), conj(f_a))/sqrt(2).
inline PureState mes_state(Complex fa, Complex fb) {
  detail::require_unit(fa, fb, "mes_state");
  const double k = std::numbers::sqrt2 / 2.0;
  return PureState::normalized({k * fa, k * fb, -k * std::conj(fb), k * std::conj(fa)});
}

/// Rays of the generalized Bloch ball that end at the MES centre.
/// x_ray starts at the sigma_x (x) Id eigenstates (0, 1, 0);
/// z_ray starts at the north pole (1, 0, 0).
enum class Ray { x_ray, z_ray };

/// State at angle eps along a ray; its concurrence is sin(eps).
inline PureState epsilon_path(double eps, Complex fa, Complex fb, Ray ray) {
  if (!(eps >= -tol::kAlgebra && eps <= std::numbers::pi / 2.0 + tol::kAlgebra)) {
    throw ValidationError("epsilon must lie in [0, pi/2]");
  }
  eps = std::clamp(eps, 0.0, std::numbers::pi / 2.0);
  detail::require_unit(fa, fb, "epsilon_path");
  const double ce = std::cos(eps), se = std::sin(eps);
  if (ray == Ray::x_ray) {
    const double k = std::numbers::sqrt2 / 2.0;
    return PureState::normalized({k * fa, k * fb, k * (fa * ce - std::conj(fb) * se), k * (fb * ce + std::conj(fa) * se)});
  }
  const double ch = std::cos(eps / 2.0), sh = std::sin(eps / 2.0);
  return PureState::normalized({ch * fa, ch * fb, -sh * std::conj(fb), sh * std::conj(fa)});
}

/// Point of the S^7 fiber over a point of S^8, selected by the unit octonion c:
///   a = cos(theta/2) (conj(P') c),  b = sin(theta/2) c,
/// with P' = (x1 .. x8)/sin theta. Right alternativity gives
/// (conj(P') c) c^-1 = conj(P'), hence h1(a, b) = cot(theta/2) P'.
/// At the poles the fiber degenerates to (c, 0) or (0, c).
inline PureState fiber_point_s15(const BasePoint& base, const Octonion& c) {
  detail::require_dim(base, 8, "fiber_point_s15");
  if (!(std::abs(c.norm2() - 1.0) <= tol::kNorm)) throw ValidationError("fiber_point_s15: c must be a unit octonion");
  const double st = detail::sin_theta(base);
  OctonionPair pair;
  if (st <= tol::kPole) {
    if (base[0] > 0.0) {
      pair = {c, Octonion()};
    } else {
      pair = {Octonion(), c};
    }
  } else {
    const double theta = std::atan2(st, base[0]);
    Octonion p_prime;
    for (std::size_t l = 0; l < 8; ++l) p_prime.u[l] = base[l + 1] / st;
    pair.a = std::cos(theta / 2.0) * oct_mul(conj(p_prime), c);
    pair.b = std::sin(theta / 2.0) * c;
  }
  const PureState raw = decode_three_qubit(pair);
  return PureState::normalized(std::vector<Complex>(raw.amplitudes().begin(), raw.amplitudes().end()));
}

/// |<s1|s2>| > 1 - tol, i.e. equal up to a global phase.
inline bool projective_equal(const PureState& s1, const PureState& s2, double tol = tol::kProjective) {
  if (s1.n_qubits() != s2.n_qubits()) throw ValidationError("projective_equal: qubit counts differ");
  Complex overlap{};
  for (std::size_t l = 0; l < s1.dimension(); ++l) overlap += std::conj(s1[l]) * s2[l];
  return std::abs(overlap) > 1.0 - tol;
}

/// Unit quaternion q with encode(s2) = encode(s1) q, for two states on the
/// same S^7 fiber. Uses the larger of the two components for stability.
inline Quaternion fiber_transition(const PureState& s1, const PureState& s2) {
  const QuaternionPair p1 = encode_two_qubit(s1), p2 = encode_two_qubit(s2);
  if (p1.q1.norm2() >= p1.q2.norm2()) return quat_mul(quat_inv(p1.q1), p2.q1);
  return quat_mul(quat_inv(p1.q2), p2.q2);
}

/// Global phase that makes C2 = alpha delta - beta gamma real and
/// non-negative. In this gauge x4 = 0, x3 >= 0 and v = c / sin(theta).
inline PureState entanglement_gauge(const PureState& s) {
  const Complex c2 = c2_term(s);
  if (std::abs(c2) == 0.0) return s;
  return s.with_global_phase(-std::arg(c2) / 2.0);
}

}  // namespace hopfq
