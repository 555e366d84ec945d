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

// Seeded random draws of algebra elements and structured states.

#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hopfq/algebra.hpp"
#include "hopfq/states.hpp"

namespace hopfq {

/// Quaternion with i.i.d. standard normal components; unit-normalized when
/// `unit` is set (then Haar on S^3).
inline Quaternion random_quaternion(std::uint64_t seed, bool unit = true) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  Quaternion q;
  q.x0 = normal(gen);
  q.x1 = normal(gen);
  q.x2 = normal(gen);
  q.x3 = normal(gen);
  return unit ? (1.0 / q.norm()) * q : q;
}

inline Octonion random_octonion(std::uint64_t seed, bool unit = true) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  Octonion a;
  for (auto& c : a.u) c = normal(gen);
  return unit ? (1.0 / a.norm()) * a : a;
}

inline double random_angle(std::uint64_t seed, double lo = 0.0, double hi = 2.0 * std::numbers::pi) {
  std::mt19937_64 gen(seed);
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

/// Random product state s1 (x) s2 (x) ... with `n` one-qubit factors.
inline PureState random_product_state(int n, std::uint64_t seed) {
  PureState s = random_pure_state(1, derive_seed(seed, 0));
  for (int k = 1; k < n; ++k) s = tensor_product(s, random_pure_state(1, derive_seed(seed, static_cast<std::uint64_t>(k))));
  return s;
}

/// Three-qubit state with qubit k (1-based) in `single` and the other two
/// qubits, in their original order, in `pair`.
inline PureState embed_separated_qubit(const PureState& single, const PureState& pair, int k) {
  require_qubits(single, 1, "embed_separated_qubit");
  require_qubits(pair, 2, "embed_separated_qubit");
  if (k < 1 || k > 3) throw ValidationError("qubit index must be 1, 2 or 3");
  std::vector<Complex> t(8);
  for (std::size_t l = 0; l < 8; ++l) {
    const std::size_t bits[3] = {(l >> 2) & 1u, (l >> 1) & 1u, l & 1u};
    std::size_t rest = 0;
    for (int q = 0; q < 3; ++q)
      if (q != k - 1) rest = (rest << 1) | bits[q];
    t[l] = single[bits[k - 1]] * pair[rest];
  }
  return PureState::normalized(std::move(t));
}

}  // namespace hopfq
