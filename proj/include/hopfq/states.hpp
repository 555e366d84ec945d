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

// Pure qubit states and their quaternion / octonion encodings.
//
// Amplitudes are stored in binary-counting basis order with qubit 1 as the
// most significant bit: |00>, |01>, |10>, |11> for two qubits, |000> .. |111>
// for three.

#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopfq/algebra.hpp"
#include "hopfq/errors.hpp"
#include "hopfq/tolerance.hpp"

namespace hopfq {

class PureState {
 public:
  /// Validating constructor: the amplitude count must be 2, 4 or 8 and the
  /// squared norm must be 1 within tol::kNorm.
  explicit PureState(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    n_ = qubits_for_size(amps_.size());
    const double err = std::abs(norm2_of(amps_) - 1.0);
    if (!(err <= tol::kNorm)) {
      throw ValidationError("state is not normalized (|norm^2 - 1| = " + std::to_string(err) + ")");
    }
  }
  PureState(std::initializer_list<Complex> amplitudes) : PureState(std::vector<Complex>(amplitudes)) {}

  /// Scales arbitrary nonzero amplitudes onto the unit sphere. Vectors
  /// already unit to within rounding are kept bit for bit.
  static PureState normalized(std::vector<Complex> amplitudes) {
    const double n2 = norm2_of(amplitudes);
    if (!(n2 > 0.0) || !std::isfinite(n2)) throw ValidationError("cannot normalize a zero or non-finite vector");
    if (std::abs(n2 - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) return PureState(std::move(amplitudes));
    const double s = 1.0 / std::sqrt(n2);
    for (auto& a : amplitudes) a *= s;
    return PureState(std::move(amplitudes));
  }

  int n_qubits() const { return n_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t l) const { return amps_[l]; }

  double norm2() const { return norm2_of(amps_); }

  PureState with_global_phase(double omega) const {
    const Complex ph = std::polar(1.0, omega);
    std::vector<Complex> out(amps_);
    for (auto& a : out) a *= ph;
    return PureState(std::move(out));
  }

  static int qubits_for_size(std::size_t size) {
    switch (size) {
      case 2: return 1;
      case 4: return 2;
      case 8: return 3;
      default: throw ValidationError("amplitude count must be 2, 4 or 8, got " + std::to_string(size));
    }
  }

  static double norm2_of(std::span<const Complex> a) {
    double s = 0.0;
    for (const auto& z : a) s += std::norm(z);
    return s;
  }

 private:
  int n_ = 1;
  std::vector<Complex> amps_;
};

inline void require_qubits(const PureState& s, int n, const char* what) {
  if (s.n_qubits() != n) {
    throw ValidationError(std::string(what) + " needs a " + std::to_string(n) + "-qubit state, got " +
                          std::to_string(s.n_qubits()));
  }
}

/// |a> (x) |b>, with the qubits of `a` in the high bits.
inline PureState tensor_product(const PureState& a, const PureState& b) {
  if (a.n_qubits() + b.n_qubits() > 3) throw ValidationError("tensor product beyond three qubits");
  std::vector<Complex> out;
  out.reserve(a.dimension() * b.dimension());
  for (const auto& x : a.amplitudes())
    for (const auto& y : b.amplitudes()) out.push_back(x * y);
  return PureState::normalized(std::move(out));
}

// ---------------------------------------------------------------------------
// Two qubits as a quaternion pair

/// standard: q1 = alpha + beta j, q2 = gamma + delta j.
/// alternate: q1 = alpha + gamma j, q2 = beta + delta j (qubits change roles).
enum class Grouping { standard, alternate };

struct QuaternionPair {
  Quaternion q1;
  Quaternion q2;
  Grouping grouping = Grouping::standard;
};

inline QuaternionPair encode_two_qubit(const PureState& s, Grouping grouping = Grouping::standard) {
  require_qubits(s, 2, "two-qubit encoding");
  const Complex al = s[0], be = s[1], ga = s[2], de = s[3];
  if (grouping == Grouping::standard) {
    return {Quaternion::from_complex_pair(al, be), Quaternion::from_complex_pair(ga, de), grouping};
  }
  return {Quaternion::from_complex_pair(al, ga), Quaternion::from_complex_pair(be, de), grouping};
}

inline PureState decode_two_qubit(const QuaternionPair& p) {
  const Complex a = p.q1.c1(), b = p.q1.c2(), c = p.q2.c1(), d = p.q2.c2();
  if (p.grouping == Grouping::standard) return PureState({a, b, c, d});
  return PureState({a, c, b, d});
}

/// Exchanges beta and gamma, i.e. swaps the two qubits.
inline PureState swap_qubits(const PureState& s) {
  require_qubits(s, 2, "qubit swap");
  return PureState({s[0], s[2], s[1], s[3]});
}

// ---------------------------------------------------------------------------
// Three qubits as an octonion pair

struct OctonionPair {
  Octonion a;
  Octonion b;
};

/// a = (t0 + t1 j) + (t2 + conj(t3) j) e, b = (t4 + t5 j) + (t6 + conj(t7) j) e.
/// The conjugated t3, t7 come from writing t2 + j t3 with j on the left.
inline OctonionPair encode_three_qubit(const PureState& s) {
  require_qubits(s, 3, "three-qubit encoding");
  auto half = [&](std::size_t o) {
    return Octonion::from_quaternion_pair(Quaternion::from_complex_pair(s[o], s[o + 1]),
                                          Quaternion::from_complex_pair(s[o + 2], std::conj(s[o + 3])));
  };
  return {half(0), half(4)};
}

inline PureState decode_three_qubit(const OctonionPair& p) {
  std::vector<Complex> t(8);
  auto half = [&](const Octonion& o, std::size_t off) {
    t[off] = o.lo().c1();
    t[off + 1] = o.lo().c2();
    t[off + 2] = o.hi().c1();
    t[off + 3] = std::conj(o.hi().c2());
  };
  half(p.a, 0);
  half(p.b, 4);
  return PureState(std::move(t));
}

// ---------------------------------------------------------------------------
// Sampling

/// splitmix64 step; used to derive independent per-item seeds from one
/// user seed so batch work gives the same result in any evaluation order.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ index);
}

/// Haar-uniform state on S^(2*2^n - 1): normalized i.i.d. standard Gaussians.
inline PureState random_pure_state(int n, std::uint64_t seed) {
  if (n < 1 || n > 3) throw ValidationError("random_pure_state supports 1..3 qubits, got " + std::to_string(n));
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> amps(std::size_t{1} << n);
  for (auto& a : amps) {
    const double re = normal(gen);
    const double im = normal(gen);
    a = {re, im};
  }
  return PureState::normalized(std::move(amps));
}

}  // namespace hopfq
