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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "circle_fit.hpp"
#include "hopfq/hopfq.hpp"

namespace {

using namespace hopfq;
using std::numbers::pi;

struct Outcome {
  bool passed = true;
  double worst = 0.0;
  std::string note;

  void residual(double r, double tol) {
    worst = std::max(worst, r);
    if (!(r < tol)) passed = false;
  }
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (note.empty()) note = what;
    }
  }
};

double max_diff(const BasePoint& b, const std::vector<double>& e) {
  if (b.coords.size() != e.size()) return INFINITY;
  double m = 0.0;
  for (std::size_t l = 0; l < e.size(); ++l) m = std::max(m, std::abs(b[l] - e[l]));
  return m;
}

double max_diff(const BasePoint& a, const BasePoint& b) { return max_diff(a, b.coords); }

PureState state(std::vector<Complex> a) { return PureState(std::move(a)); }

// Octonion basis products e_row * e_col, transcribed from the published
// multiplication table; entry is a signed basis index, with -8 standing for -e0.
constexpr std::array<std::array<int, 8>, 8> kPublishedTable{{
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, -8, 3, -2, 5, -4, -7, 6},
    {2, -3, -8, 1, 6, 7, -4, -5},
    {3, 2, -1, -8, 7, -6, 5, -4},
    {4, -5, -6, -7, -8, 1, 2, 3},
    {5, 4, -7, 6, -1, -8, -3, 2},
    {6, 7, 4, -5, -2, 3, -8, -1},
    {7, -6, 5, 4, -3, -2, 1, -8},
}};

Outcome algebra_tables() {
  Outcome o;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const int e = kPublishedTable[r][c];
      Octonion expected;
      if (e == -8) {
        expected.u[0] = -1.0;
      } else {
        expected.u[static_cast<std::size_t>(std::abs(e))] = e < 0 ? -1.0 : 1.0;
      }
      o.require(oct_mul(Octonion::basis(r), Octonion::basis(c)) == expected,
                "table entry e" + std::to_string(r) + " e" + std::to_string(c));
    }
  }
  const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k(), m1{-1, 0, 0, 0};
  o.require(i * i == m1 && j * j == m1 && k * k == m1 && i * j * k == m1, "i^2 = j^2 = k^2 = ijk = -1");
  o.require(i * j == k && j * k == i && k * i == j && j * i == -1.0 * k, "ij = k cyclic");
  for (std::uint64_t s = 0; s < 10000; ++s) {
    const Quaternion p = random_quaternion(derive_seed(s, 0), false), q = random_quaternion(derive_seed(s, 1), false);
    o.residual(std::abs((p * q).norm() - p.norm() * q.norm()), 1e-12);
    const Octonion a = random_octonion(derive_seed(s, 2), false), b = random_octonion(derive_seed(s, 3), false);
    o.residual(std::abs((a * b).norm() - a.norm() * b.norm()), 1e-12);
  }
  return o;
}

Outcome fiber_invariance() {
  Outcome o;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const PureState one = random_pure_state(1, derive_seed(s, 0));
    o.residual(max_diff(hopf_s3(one.with_global_phase(random_angle(derive_seed(s, 1)))), hopf_s3(one)), 1e-10);

    const PureState two = random_pure_state(2, derive_seed(s, 2));
    const Quaternion q = random_quaternion(derive_seed(s, 3));
    const QuaternionPair p = encode_two_qubit(two);
    const PureState moved = decode_two_qubit({p.q1 * q, p.q2 * q, p.grouping});
    o.residual(max_diff(hopf_s7(moved), hopf_s7(two)), 1e-10);

    const BasePoint b8 = hopf_s15(random_pure_state(3, derive_seed(s, 4)));
    o.residual(max_diff(hopf_s15(fiber_point_s15(b8, random_octonion(derive_seed(s, 5)))), b8), 1e-10);
  }
  return o;
}

Outcome base_normalization() {
  Outcome o;
  for (std::uint64_t s = 0; s < 10000; ++s) {
    o.residual(std::abs(hopf_s3(random_pure_state(1, derive_seed(s, 1))).norm2() - 1.0), 1e-10);
    o.residual(std::abs(hopf_s7(random_pure_state(2, derive_seed(s, 2))).norm2() - 1.0), 1e-10);
    o.residual(std::abs(hopf_s15(random_pure_state(3, derive_seed(s, 3))).norm2() - 1.0), 1e-10);
  }
  return o;
}

Outcome closed_form_checkpoints() {
  Outcome o;
  const double r2 = 1.0 / std::sqrt(2.0), r3 = 1.0 / std::sqrt(3.0);
  const PureState bell = state({r2, 0, 0, r2});
  o.residual(max_diff(hopf_s7(bell), {0, 0, 0, 1, 0}), 1e-10);
  o.residual(std::abs(concurrence(bell) - 1.0), 1e-10);
  o.residual(max_diff(hopf_s7(state({1, 0, 0, 0})), {1, 0, 0, 0, 0}), 1e-10);
  o.residual(max_diff(hopf_s15(state({r2, 0, 0, 0, 0, 0, 0, r2})), {0, 0, 0, 0, 0, 0, 0, 1, 0}), 1e-10);
  const PureState w = state({0, r3, r3, 0, r3, 0, 0, 0});
  o.residual(max_diff(hopf_s15(w), {1.0 / 3, 0, 0, -2.0 / 3, 0, -2.0 / 3, 0, 0, 0}), 1e-10);
  const BlochRadii r = partial_bloch_radii(w);
  for (double x : {r.r1, r.r2, r.r3}) o.residual(std::abs(x - 1.0 / 3), 1e-10);
  return o;
}

Outcome concurrence_law() {
  Outcome o;
  for (int k = 0; k < 100; ++k) {
    const double eps = (pi / 2) * k / 99;
    const Quaternion f = random_quaternion(derive_seed(7, static_cast<std::uint64_t>(k)));
    for (Ray ray : {Ray::x_ray, Ray::z_ray}) {
      o.residual(std::abs(concurrence(epsilon_path(eps, f.c1(), f.c2(), ray)) - std::sin(eps)), 1e-10);
    }
  }
  for (std::uint64_t s = 0; s < 10000; ++s) {
    const PureState st = random_pure_state(2, s);
    const double c = concurrence(st);
    o.residual(std::abs(reduced_density(st, 1).det().real() - c * c / 4.0), 1e-12);
  }
  return o;
}

Outcome entanglor_identity() {
  Outcome o;
  for (std::uint64_t s = 0; s < 10000; ++s) {
    const PureState st = random_pure_state(2, s);
    const Complex a = st[0], b = st[1], g = st[2], d = st[3];
    // sigma_y (x) sigma_y applied by hand: (-delta, gamma, beta, -alpha).
    const std::array<Complex, 4> yy{-d, g, b, -a};
    Complex e{};
    for (std::size_t l = 0; l < 4; ++l) e -= st[l] * yy[l];
    o.residual(std::abs(e - 2.0 * (a * d - b * g)), 1e-12);
    o.residual(std::abs(entanglor_expectation(st) - e), 1e-12);
  }
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const Quaternion f = random_quaternion(derive_seed(s, 0));
    const PureState mes = mes_state(f.c1(), f.c2());
    const double w = random_angle(derive_seed(s, 1));
    const BasePoint b0 = hopf_s7(mes), b1 = hopf_s7(mes.with_global_phase(w));
    const Complex z0{b0[3], b0[4]}, z1{b1[3], b1[4]};
    o.residual(std::abs(z1 - z0 * std::polar(1.0, 2 * w)), 1e-10);
  }
  return o;
}

Outcome separability_stratification() {
  Outcome o;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const BasePoint b = hopf_s7(tensor_product(random_pure_state(1, derive_seed(s, 0)), random_pure_state(1, derive_seed(s, 1))));
    o.residual(std::max(std::abs(b[3]), std::abs(b[4])), 1e-10);

    const PureState t = tensor_product(random_pure_state(1, derive_seed(s, 2)), random_pure_state(2, derive_seed(s, 3)));
    const BlochRadii r = partial_bloch_radii(t);
    o.residual(std::abs(r.r1 - 1.0), 1e-10);
    o.residual(std::abs(r.r2 - r.r3), 1e-10);
    const BasePoint b8 = hopf_s15(t);
    for (std::size_t l = 3; l < 9; ++l) o.residual(std::abs(b8[l]), 1e-10);
  }
  return o;
}

Outcome so3_identification() {
  Outcome o;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const Quaternion f = random_quaternion(s);
    const PureState a = mes_state(f.c1(), f.c2()), b = mes_state(-f.c1(), -f.c2());
    Complex overlap{};
    for (std::size_t l = 0; l < 4; ++l) overlap += std::conj(a[l]) * b[l];
    o.residual(1.0 - std::abs(overlap), 1e-12);
    o.require(projective_equal(a, b, 1e-12), "projective_equal(mes(f), mes(-f))");
  }
  return o;
}

Outcome figure_scene() {
  Outcome o;
  const std::vector<double> heights{0.5, 0.0, -0.5};
  const FibrationScene scene = render_latitude_scene(heights, 12, 64);
  o.require(scene.fibers.size() == 37, "3 x 12 fibers plus the pole fiber");
  std::size_t open = 0;
  for (const auto& f : scene.fibers) {
    if (f.closed) {
      o.residual(hopfq::test::circle_fit_residual(f.samples), 1e-8);
    } else {
      ++open;
      o.residual(collinearity_residual(f.samples), 1e-8);
    }
    o.residual(mapback_residual(f, scene.pole), 1e-8);
  }
  o.require(open == 1, "exactly one open pole fiber");
  return o;
}

Outcome cross_path_s15() {
  Outcome o;
  for (std::uint64_t s = 0; s < 10000; ++s) {
    const PureState st = random_pure_state(3, s);
    o.residual(max_diff(hopf_s15(st), hopf_s15_closed_form(st)), 1e-10);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"algebra tables, Hamilton relations, composition", algebra_tables},
      {"fiber invariance (S3, S7) and S15 round trip", fiber_invariance},
      {"base points have unit norm", base_normalization},
      {"closed-form checkpoints (Bell, |00>, GHZ, W)", closed_form_checkpoints},
      {"concurrence law on paths, det rho1 = c^2/4", concurrence_law},
      {"entanglor identity and MES phase rotation", entanglor_identity},
      {"separability stratification", separability_stratification},
      {"SO(3) identification of MES", so3_identification},
      {"S3 fibration scene", figure_scene},
      {"S15 octonion path = T-concurrence path", cross_path_s15},
  };
  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note = e.what();
    }
    std::printf("%s %2zu %s (max residual %.3g)%s%s\n", o.passed ? "PASS" : "FAIL", c + 1, criteria[c].first.c_str(),
                o.worst, o.note.empty() ? "" : ": ", o.note.c_str());
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
