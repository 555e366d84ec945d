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

// Dense Pauli operators on up to three qubits and their expectation values.

#pragma once

#include <array>
#include <span>
#include <vector>

#include "hopfq/states.hpp"

namespace hopfq {

enum class Pauli { id, x, y, z };

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

inline Matrix2 pauli_matrix(Pauli p) {
  const Complex I{0.0, 1.0};
  switch (p) {
    case Pauli::x: return {{{0.0, 1.0}, {1.0, 0.0}}};
    case Pauli::y: return {{{0.0, -I}, {I, 0.0}}};
    case Pauli::z: return {{{1.0, 0.0}, {0.0, -1.0}}};
    case Pauli::id: break;
  }
  return {{{1.0, 0.0}, {0.0, 1.0}}};
}

/// Applies p_1 (x) p_2 (x) ... to the state vector; factors[0] acts on qubit 1.
inline std::vector<Complex> apply_pauli_string(std::span<const Pauli> factors, std::span<const Complex> psi) {
  const std::size_t n = factors.size();
  const std::size_t dim = std::size_t{1} << n;
  if (psi.size() != dim) throw ValidationError("Pauli string length does not match the state");
  std::vector<Complex> out(dim, Complex{});
  for (std::size_t col = 0; col < dim; ++col) {
    if (psi[col] == Complex{}) continue;
    // Expand one column of the Kronecker product.
    for (std::size_t row = 0; row < dim; ++row) {
      Complex m{1.0, 0.0};
      for (std::size_t q = 0; q < n && m != Complex{}; ++q) {
        const std::size_t shift = n - 1 - q;
        const auto r = (row >> shift) & 1u;
        const auto c = (col >> shift) & 1u;
        m *= pauli_matrix(factors[q])[r][c];
      }
      out[row] += m * psi[col];
    }
  }
  return out;
}

/// <psi| P |psi> for a Pauli string.
inline Complex expectation(const PureState& s, std::span<const Pauli> factors) {
  const auto phi = apply_pauli_string(factors, s.amplitudes());
  Complex acc{};
  for (std::size_t l = 0; l < phi.size(); ++l) acc += std::conj(s[l]) * phi[l];
  return acc;
}

inline Complex expectation(const PureState& s, std::initializer_list<Pauli> factors) {
  return expectation(s, std::span<const Pauli>(factors.begin(), factors.size()));
}

}  // namespace hopfq
