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

// Quaternion and octonion arithmetic.
//
// Quaternions are q = x0 + x1 i + x2 j + x3 k, equivalently the complex pair
// q = c1 + c2 j with c1 = x0 + x1 i and c2 = x2 + x3 i. Octonions are
// a = sum u_l e_l with e0 = 1, e1 = i, e2 = j, e3 = k, e4 = e, e5 = ie,
// e6 = je, e7 = ke, equivalently the quaternion pair a = a' + a'' e.
//
// Two independent product rules exist for each algebra: the component rule
// (Hamilton relations / the fixed 8x8 basis table) and the Cayley-Dickson
// pair rule. They agree exactly; the test suite checks that they do.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "hopfq/errors.hpp"

namespace hopfq {

using Complex = std::complex<double>;

struct Quaternion {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a, double b, double c, double d) : x0(a), x1(b), x2(c), x3(d) {}
  constexpr explicit Quaternion(double real) : x0(real) {}

  /// q = c1 + c2 j.
  static constexpr Quaternion from_complex_pair(Complex c1, Complex c2) {
    return {c1.real(), c1.imag(), c2.real(), c2.imag()};
  }

  static constexpr Quaternion one() { return Quaternion(1.0); }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr Complex c1() const { return {x0, x1}; }
  constexpr Complex c2() const { return {x2, x3}; }

  constexpr double scalar() const { return x0; }
  constexpr Quaternion vector() const { return {0.0, x1, x2, x3}; }

  constexpr double norm2() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
  double norm() const { return std::sqrt(norm2()); }

  constexpr std::array<double, 4> components() const { return {x0, x1, x2, x3}; }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.x0 + q.x0, p.x1 + q.x1, p.x2 + q.x2, p.x3 + q.x3};
}
constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.x0 - q.x0, p.x1 - q.x1, p.x2 - q.x2, p.x3 - q.x3};
}
constexpr Quaternion operator-(const Quaternion& q) { return {-q.x0, -q.x1, -q.x2, -q.x3}; }
constexpr Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.x0, s * q.x1, s * q.x2, s * q.x3};
}
constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }

constexpr Quaternion conj(const Quaternion& q) { return {q.x0, -q.x1, -q.x2, -q.x3}; }

/// Hamilton product from i^2 = j^2 = k^2 = ijk = -1.
constexpr Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
  return {p.x0 * q.x0 - p.x1 * q.x1 - p.x2 * q.x2 - p.x3 * q.x3,
          p.x0 * q.x1 + p.x1 * q.x0 + p.x2 * q.x3 - p.x3 * q.x2,
          p.x0 * q.x2 - p.x1 * q.x3 + p.x2 * q.x0 + p.x3 * q.x1,
          p.x0 * q.x3 + p.x1 * q.x2 - p.x2 * q.x1 + p.x3 * q.x0};
}

/// Same product through the complex-pair rule
/// (c1, c2)(d1, d2) = (c1 d1 - c2 conj(d2), c1 d2 + c2 conj(d1)).
inline Quaternion quat_mul_pairs(const Quaternion& p, const Quaternion& q) {
  const Complex c1 = p.c1(), c2 = p.c2(), d1 = q.c1(), d2 = q.c2();
  return Quaternion::from_complex_pair(c1 * d1 - c2 * std::conj(d2), c1 * d2 + c2 * std::conj(d1));
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return quat_mul(p, q); }

inline Quaternion quat_inv(const Quaternion& q) {
  const double n2 = q.norm2();
  if (!(n2 > 0.0)) throw ZeroDivisorError("quaternion inverse of zero");
  return (1.0 / n2) * conj(q);
}

/// Polar form q = |q| (cos phi + sin phi t).
struct QuaternionPolar {
  double norm = 0.0;
  double phi = 0.0;  // in [0, pi]
  Quaternion axis = Quaternion::i();
};

/// Splits q into norm, angle and unit pure-imaginary axis. Real quaternions
/// get axis i and phi in {0, pi}, so complex numbers are the t = i slice.
inline QuaternionPolar quat_exp_decompose(const Quaternion& q) {
  const double n = q.norm();
  if (!(n > 0.0)) throw ZeroDivisorError("polar form of zero quaternion");
  const Quaternion v = q.vector();
  const double vn = v.norm();
  QuaternionPolar out;
  out.norm = n;
  out.phi = std::atan2(vn, q.x0);
  if (vn > 0.0) out.axis = (1.0 / vn) * v;
  return out;
}

inline Quaternion quat_from_polar(const QuaternionPolar& p) {
  return p.norm * (Quaternion(std::cos(p.phi)) + std::sin(p.phi) * p.axis);
}

// ---------------------------------------------------------------------------
// Octonions

struct Octonion {
  std::array<double, 8> u{};

  constexpr Octonion() = default;
  constexpr explicit Octonion(const std::array<double, 8>& c) : u(c) {}
  constexpr explicit Octonion(double real) : u{real, 0, 0, 0, 0, 0, 0, 0} {}

  /// a = a' + a'' e.
  static constexpr Octonion from_quaternion_pair(const Quaternion& lo, const Quaternion& hi) {
    return Octonion({lo.x0, lo.x1, lo.x2, lo.x3, hi.x0, hi.x1, hi.x2, hi.x3});
  }

  static constexpr Octonion basis(int l) {
    Octonion o;
    o.u[static_cast<std::size_t>(l)] = 1.0;
    return o;
  }

  constexpr Quaternion lo() const { return {u[0], u[1], u[2], u[3]}; }
  constexpr Quaternion hi() const { return {u[4], u[5], u[6], u[7]}; }

  constexpr double operator[](std::size_t l) const { return u[l]; }
  constexpr double& operator[](std::size_t l) { return u[l]; }

  constexpr double norm2() const {
    double s = 0.0;
    for (double c : u) s += c * c;
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }

  constexpr const std::array<double, 8>& components() const { return u; }

  friend constexpr bool operator==(const Octonion&, const Octonion&) = default;
};

constexpr Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (std::size_t l = 0; l < 8; ++l) r.u[l] = a.u[l] + b.u[l];
  return r;
}
constexpr Octonion operator-(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (std::size_t l = 0; l < 8; ++l) r.u[l] = a.u[l] - b.u[l];
  return r;
}
constexpr Octonion operator-(const Octonion& a) { return Octonion() - a; }
constexpr Octonion operator*(double s, const Octonion& a) {
  Octonion r;
  for (std::size_t l = 0; l < 8; ++l) r.u[l] = s * a.u[l];
  return r;
}
constexpr Octonion operator*(const Octonion& a, double s) { return s * a; }

/// conj(a) = conj(a') - a'' e.
constexpr Octonion conj(const Octonion& a) {
  Octonion r = -a;
  r.u[0] = a.u[0];
  return r;
}

/// One entry of the basis multiplication table: e_row * e_col = sign * e_index.
struct TableEntry {
  std::int8_t sign = 1;
  std::uint8_t index = 0;
  friend constexpr bool operator==(const TableEntry&, const TableEntry&) = default;
};

using OctonionTable = std::array<std::array<TableEntry, 8>, 8>;

namespace detail {
// Signed index encoding used only to spell the table compactly: +l is e_l,
// -l is -e_l, and kMinusOne stands for -e0.
inline constexpr int kMinusOne = -8;

constexpr OctonionTable make_table(const int (&raw)[8][8]) {
  OctonionTable t{};
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const int v = raw[r][c];
      TableEntry e;
      if (v == kMinusOne) {
        e.sign = -1;
        e.index = 0;
      } else {
        e.sign = v < 0 ? -1 : 1;
        e.index = static_cast<std::uint8_t>(v < 0 ? -v : v);
      }
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = e;
    }
  }
  return t;
}

constexpr int kRawTable[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, kMinusOne, 3, -2, 5, -4, -7, 6},
    {2, -3, kMinusOne, 1, 6, 7, -4, -5},
    {3, 2, -1, kMinusOne, 7, -6, 5, -4},
    {4, -5, -6, -7, kMinusOne, 1, 2, 3},
    {5, 4, -7, 6, -1, kMinusOne, -3, 2},
    {6, 7, 4, -5, -2, 3, kMinusOne, -1},
    {7, -6, 5, 4, -3, -2, 1, kMinusOne},
};
}  // namespace detail

/// The basis table e_row * e_col used throughout the library.
inline constexpr OctonionTable kOctonionTable = detail::make_table(detail::kRawTable);

/// Product through the basis table. The table is a parameter so a deliberately
/// corrupted table can be fed to the self-check as a negative control.
constexpr Octonion oct_mul(const Octonion& a, const Octonion& b,
                           const OctonionTable& table = kOctonionTable) {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) {
    if (a.u[i] == 0.0) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      const TableEntry e = table[i][j];
      r.u[e.index] += static_cast<double>(e.sign) * a.u[i] * b.u[j];
    }
  }
  return r;
}

/// Pair rule (a' + a''e)(b' + b''e) = (a'b' - conj(b'') a'') + (b'' a' + a'' conj(b')) e.
constexpr Octonion oct_mul_pairs(const Octonion& a, const Octonion& b) {
  const Quaternion a1 = a.lo(), a2 = a.hi(), b1 = b.lo(), b2 = b.hi();
  return Octonion::from_quaternion_pair(a1 * b1 - conj(b2) * a2, b2 * a1 + a2 * conj(b1));
}

constexpr Octonion operator*(const Octonion& a, const Octonion& b) { return oct_mul(a, b); }

inline Octonion oct_inv(const Octonion& a) {
  const double n2 = a.norm2();
  if (!(n2 > 0.0)) throw ZeroDivisorError("octonion inverse of zero");
  return (1.0 / n2) * conj(a);
}

}  // namespace hopfq
