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

// Self-check: runs the library's invariants on seeded random inputs and
// reports the worst residual of each.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "hopfq/algebra.hpp"
#include "hopfq/entanglement.hpp"
#include "hopfq/fibers.hpp"
#include "hopfq/hopf.hpp"
#include "hopfq/operators.hpp"
#include "hopfq/sampling.hpp"
#include "hopfq/scene.hpp"
#include "hopfq/states.hpp"

namespace hopfq {

struct CheckConfig {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  // Basis table used by every table-driven octonion product in the suite.
  OctonionTable table = kOctonionTable;
};

struct CheckResult {
  std::string module;
  std::string name;
  std::size_t samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct CheckReport {
  std::vector<CheckResult> results;

  bool all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
  }
  double max_residual() const {
    double m = 0.0;
    for (const auto& r : results) m = std::max(m, r.max_residual);
    return m;
  }
};

namespace detail {

inline double max_diff(const BasePoint& a, const BasePoint& b) {
  if (a.coords.size() != b.coords.size()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t l = 0; l < a.coords.size(); ++l) m = std::max(m, std::abs(a[l] - b[l]));
  return m;
}

template <std::size_t N>
double max_diff(const std::array<double, N>& a, const std::array<double, N>& b) {
  double m = 0.0;
  for (std::size_t l = 0; l < N; ++l) m = std::max(m, std::abs(a[l] - b[l]));
  return m;
}

inline double max_diff(const PureState& a, const PureState& b) {
  double m = 0.0;
  for (std::size_t l = 0; l < a.dimension(); ++l) m = std::max(m, std::abs(a[l] - b[l]));
  return m;
}

class CheckRunner {
 public:
  explicit CheckRunner(const CheckConfig& cfg) : cfg_(cfg) {}

  /// Runs f(seed_i) for n items and records the worst residual. A NaN
  /// residual counts as a failure.
  template <class F>
  void run(const char* module, const char* name, std::size_t n, double tol, F&& f) {
    const std::uint64_t base = derive_seed(cfg_.seed, counter_++);
    CheckResult r{module, name, n, 0.0, tol, true};
    for (std::size_t i = 0; i < n; ++i) {
      const double res = f(derive_seed(base, i));
      if (std::isnan(res)) {
        r.max_residual = res;
        break;
      }
      r.max_residual = std::max(r.max_residual, res);
    }
    r.passed = !std::isnan(r.max_residual) && r.max_residual <= tol;
    report_.results.push_back(std::move(r));
  }

  CheckReport take() { return std::move(report_); }

 private:
  const CheckConfig& cfg_;
  std::uint64_t counter_ = 0;
  CheckReport report_;
};

inline double abs_vec(std::initializer_list<double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace detail

inline CheckReport check_suite(const CheckConfig& cfg = {}) {
  using detail::max_diff;
  detail::CheckRunner run(cfg);
  const std::size_t n = cfg.samples;
  const OctonionTable& table = cfg.table;

  // -- algebra ---------------------------------------------------------------
  run.run("algebra", "quaternion composition |pq| = |p||q|", n, 1e-12, [](std::uint64_t s) {
    const Quaternion p = random_quaternion(derive_seed(s, 0), false), q = random_quaternion(derive_seed(s, 1), false);
    return std::abs(quat_mul(p, q).norm() - p.norm() * q.norm());
  });
  run.run("algebra", "octonion composition |ab| = |a||b|", n, 1e-12, [&](std::uint64_t s) {
    const Octonion a = random_octonion(derive_seed(s, 0), false), b = random_octonion(derive_seed(s, 1), false);
    return std::abs(oct_mul(a, b, table).norm() - a.norm() * b.norm());
  });
  run.run("algebra", "octonion alternativity", n, 1e-12, [&](std::uint64_t s) {
    const Octonion a = random_octonion(derive_seed(s, 0)), b = random_octonion(derive_seed(s, 1));
    const Octonion left = oct_mul(oct_mul(a, a, table), b, table) - oct_mul(a, oct_mul(a, b, table), table);
    const Octonion right = oct_mul(oct_mul(b, a, table), a, table) - oct_mul(b, oct_mul(a, a, table), table);
    return std::max(left.norm(), right.norm());
  });
  run.run("algebra", "quaternion conj(pq) = conj(q) conj(p)", n, 1e-12, [](std::uint64_t s) {
    const Quaternion p = random_quaternion(derive_seed(s, 0), false), q = random_quaternion(derive_seed(s, 1), false);
    return (conj(quat_mul(p, q)) - quat_mul(conj(q), conj(p))).norm();
  });
  run.run("algebra", "quaternion pair rule = Hamilton rule", n, 1e-12, [](std::uint64_t s) {
    const Quaternion p = random_quaternion(derive_seed(s, 0), false), q = random_quaternion(derive_seed(s, 1), false);
    return (quat_mul_pairs(p, q) - quat_mul(p, q)).norm();
  });
  run.run("algebra", "octonion basis table = pair rule", 64, 0.0, [&, k = 0](std::uint64_t) mutable {
    const int r = k / 8, c = k % 8;
    ++k;
    const Octonion er = Octonion::basis(r), ec = Octonion::basis(c);
    return (oct_mul(er, ec, table) - oct_mul_pairs(er, ec)).norm();
  });

  // -- states ----------------------------------------------------------------
  run.run("states", "encode/decode round trip", n, 0.0, [](std::uint64_t s) {
    const PureState s2 = random_pure_state(2, derive_seed(s, 0)), s3 = random_pure_state(3, derive_seed(s, 1));
    return std::max({max_diff(decode_two_qubit(encode_two_qubit(s2, Grouping::standard)), s2),
                     max_diff(decode_two_qubit(encode_two_qubit(s2, Grouping::alternate)), s2),
                     max_diff(decode_three_qubit(encode_three_qubit(s3)), s3)});
  });
  run.run("states", "encoding preserves norm", n, 1e-12, [](std::uint64_t s) {
    const PureState s2 = random_pure_state(2, derive_seed(s, 0)), s3 = random_pure_state(3, derive_seed(s, 1));
    const QuaternionPair q = encode_two_qubit(s2);
    const OctonionPair o = encode_three_qubit(s3);
    return std::max(std::abs(q.q1.norm2() + q.q2.norm2() - s2.norm2()), std::abs(o.a.norm2() + o.b.norm2() - s3.norm2()));
  });
  run.run("states", "alternate grouping = standard of swapped state", n, 0.0, [](std::uint64_t s) {
    const PureState st = random_pure_state(2, s);
    const QuaternionPair a = encode_two_qubit(st, Grouping::alternate), b = encode_two_qubit(swap_qubits(st));
    return std::max((a.q1 - b.q1).norm(), (a.q2 - b.q2).norm());
  });

  // -- hopf ------------------------------------------------------------------
  run.run("hopf", "S3 map: h2 o h1 = Bloch coordinates", n, 1e-10, [](std::uint64_t s) {
    const PureState st = random_pure_state(1, s);
    return max_diff(hopf_s3(st), bloch_coordinates(st));
  });
  run.run("hopf", "S3 fiber invariance under e^{iw}", n, 1e-10, [](std::uint64_t s) {
    const PureState st = random_pure_state(1, derive_seed(s, 0));
    return max_diff(hopf_s3(st.with_global_phase(random_angle(derive_seed(s, 1)))), hopf_s3(st));
  });
  run.run("hopf", "S7 fiber invariance under right unit quaternions", n, 1e-10, [](std::uint64_t s) {
    const PureState st = random_pure_state(2, derive_seed(s, 0));
    const Quaternion q = random_quaternion(derive_seed(s, 1));
    QuaternionPair p = encode_two_qubit(st);
    p.q1 = quat_mul(p.q1, q);
    p.q2 = quat_mul(p.q2, q);
    return max_diff(hopf_s7(decode_two_qubit(p)), hopf_s7(st));
  });
  run.run("hopf", "S7 map: h2 o h1 = (C1, C2) closed form", n, 1e-10, [](std::uint64_t s) {
    const PureState st = random_pure_state(2, s);
    return std::max(max_diff(hopf_s7(st), hopf_s7_closed_form(st)),
                    max_diff(hopf_s7(st, Grouping::alternate), hopf_s7_closed_form(st, Grouping::alternate)));
  });
  run.run("hopf", "base points have unit norm (S2, S4, S8)", n, 1e-10, [](std::uint64_t s) {
    return std::max({std::abs(hopf_s3(random_pure_state(1, derive_seed(s, 0))).norm2() - 1.0),
                     std::abs(hopf_s7(random_pure_state(2, derive_seed(s, 1))).norm2() - 1.0),
                     std::abs(hopf_s15(random_pure_state(3, derive_seed(s, 2))).norm2() - 1.0)});
  });
  run.run("hopf", "product states flatten to x3 = x4 = 0", n, 1e-10, [](std::uint64_t s) {
    const BasePoint b = hopf_s7(random_product_state(2, s));
    return detail::abs_vec({b[3], b[4]});
  });
  run.run("hopf", "(x3, x4) independent of grouping", n, 1e-12, [](std::uint64_t s) {
    const PureState st = random_pure_state(2, s);
    const BasePoint a = hopf_s7(st), b = hopf_s7(st, Grouping::alternate);
    return detail::abs_vec({a[3] - b[3], a[4] - b[4]});
  });
  run.run("hopf", "S15 octonion route = T-concurrence route", n, 1e-10, [](std::uint64_t s) {
    const PureState st = random_pure_state(3, s);
    return max_diff(hopf_s15(st), hopf_s15_closed_form(st));
  });
  run.run("hopf", "x0, x1, x2 = <sigma_z,x,y on qubit 1>", n, 1e-12, [](std::uint64_t s) {
    using P = Pauli;
    const PureState a = random_pure_state(1, derive_seed(s, 0));
    const PureState b = random_pure_state(2, derive_seed(s, 1));
    const PureState c = random_pure_state(3, derive_seed(s, 2));
    const BasePoint ba = hopf_s3(a), bb = hopf_s7(b), bc = hopf_s15(c);
    return detail::abs_vec({ba[0] - expectation(a, {P::z}).real(), ba[1] - expectation(a, {P::x}).real(),
                            ba[2] - expectation(a, {P::y}).real(), bb[0] - expectation(b, {P::z, P::id}).real(),
                            bb[1] - expectation(b, {P::x, P::id}).real(), bb[2] - expectation(b, {P::y, P::id}).real(),
                            bc[0] - expectation(c, {P::z, P::id, P::id}).real(),
                            bc[1] - expectation(c, {P::x, P::id, P::id}).real(),
                            bc[2] - expectation(c, {P::y, P::id, P::id}).real()});
  });
  run.run("hopf", "entanglor <E> = 2 (alpha delta - beta gamma)", n, 1e-12, [](std::uint64_t s) {
    const PureState st = random_pure_state(2, s);
    return std::abs(entanglor_expectation(st) - 2.0 * c2_term(st));
  });

  // -- entanglement ----------------------------------------------------------
  run.run("entanglement", "det rho1 = c^2 / 4", n, 1e-12, [](std::uint64_t s) {
    const PureState st = random_pure_state(2, s);
    const double c = concurrence(st);
    const DensityMatrix2 rho = reduced_density(st, 1);
    rho.validate();
    return std::abs(rho.det() - c * c / 4.0);
  });
  run.run("entanglement", "separated qubit: r_k = 1, other radii equal", n, 1e-10, [](std::uint64_t s) {
    const int k = static_cast<int>(s % 3) + 1;
    const PureState st =
        embed_separated_qubit(random_pure_state(1, derive_seed(s, 0)), random_pure_state(2, derive_seed(s, 1)), k);
    const BlochRadii r = partial_bloch_radii(st);
    const int i = k % 3 + 1, j = (k + 1) % 3 + 1;
    double res = std::max(std::abs(r[k] - 1.0), std::abs(r[i] - r[j]));
    if (k == 1) {
      const BasePoint b = hopf_s15(st);
      for (std::size_t l = 3; l < 9; ++l) res = std::max(res, std::abs(b[l]));
    }
    return res;
  });
  run.run("entanglement", "concurrence invariant under phase and grouping swap", n, 1e-12, [](std::uint64_t s) {
    const PureState st = random_pure_state(2, derive_seed(s, 0));
    const double c = concurrence(st);
    return std::max(std::abs(concurrence(st.with_global_phase(random_angle(derive_seed(s, 1)))) - c),
                    std::abs(concurrence(swap_qubits(st)) - c));
  });
  run.run("entanglement", "shell radius = |(x0, x1, x2)|", n, 1e-10, [](std::uint64_t s) {
    const PureState st = random_pure_state(2, s);
    const LeafDescriptor leaf = classify_leaf(st);
    const BasePoint b = hopf_s7(st);
    return std::max(std::abs(leaf.shell_radius - std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2])),
                    std::abs(leaf.shell_radius * leaf.shell_radius + leaf.concurrence * leaf.concurrence - 1.0));
  });

  // -- fibers ----------------------------------------------------------------
  run.run("fibers", "S7 round trip hopf_s7(fiber_point_s7(B, q)) = B", n, 1e-10, [](std::uint64_t s) {
    const BasePoint b = hopf_s7(random_pure_state(2, derive_seed(s, 0)));
    return max_diff(hopf_s7(fiber_point_s7(b, random_quaternion(derive_seed(s, 1)))), b);
  });
  run.run("fibers", "S15 round trip hopf_s15(fiber_point_s15(B, c)) = B", n, 1e-10, [](std::uint64_t s) {
    const BasePoint b = hopf_s15(random_pure_state(3, derive_seed(s, 0)));
    return max_diff(hopf_s15(fiber_point_s15(b, random_octonion(derive_seed(s, 1)))), b);
  });
  run.run("fibers", "fiber points differ by a right unit quaternion", n, 1e-10, [](std::uint64_t s) {
    const BasePoint b = hopf_s7(random_pure_state(2, derive_seed(s, 0)));
    const PureState s1 = fiber_point_s7(b, random_quaternion(derive_seed(s, 1)));
    const PureState s2 = fiber_point_s7(b, random_quaternion(derive_seed(s, 2)));
    const Quaternion q = fiber_transition(s1, s2);
    const QuaternionPair p1 = encode_two_qubit(s1), p2 = encode_two_qubit(s2);
    return std::max({(quat_mul(p1.q1, q) - p2.q1).norm(), (quat_mul(p1.q2, q) - p2.q2).norm(), std::abs(q.norm() - 1.0)});
  });
  run.run("fibers", "global phase w turns MES base by 2w, fiber returns at w = pi", n, 1e-10, [](std::uint64_t s) {
    const Quaternion f = random_quaternion(derive_seed(s, 0));
    const PureState mes = mes_state(f.c1(), f.c2());
    const double w = random_angle(derive_seed(s, 1));
    const BasePoint b0 = hopf_s7(mes), bw = hopf_s7(mes.with_global_phase(w));
    const Complex expected = std::polar(1.0, 2.0 * w) * Complex{b0[3], b0[4]};
    return std::max(std::abs(Complex{bw[3], bw[4]} - expected),
                    max_diff(hopf_s7(mes.with_global_phase(std::numbers::pi)), b0));
  });
  run.run("fibers", "gauge C2 >= 0 gives x4 = 0, x3 >= 0, v = c / sin(theta)", n, 1e-10, [](std::uint64_t s) {
    const PureState st = entanglement_gauge(random_pure_state(2, s));
    const BasePoint b = hopf_s7(st);
    const FiberFrame f = fiber_frame(b);
    return detail::abs_vec({b[4], std::min(b[3], 0.0), f.v.imag(), f.v.real() - concurrence(st) / std::sin(f.theta)});
  });
  run.run("fibers", "fibers over x3 = x4 = 0 are product states", n, 1e-10, [](std::uint64_t s) {
    const BasePoint one = hopf_s3(random_pure_state(1, derive_seed(s, 0)));
    const BasePoint b = BasePoint::checked({one[0], one[1], one[2], 0.0, 0.0});
    const PureState st = fiber_point_s7(b, random_quaternion(derive_seed(s, 1)));
    return separability_check(st, 1) ? 2.0 * std::abs(c2_term(st)) : 1.0;
  });
  run.run("fibers", "mes_state(f) ~ mes_state(-f)", n, 1e-12, [](std::uint64_t s) {
    const Quaternion f = random_quaternion(s);
    const PureState a = mes_state(f.c1(), f.c2()), b = mes_state(-f.c1(), -f.c2());
    Complex overlap{};
    for (std::size_t l = 0; l < 4; ++l) overlap += std::conj(a[l]) * b[l];
    return 1.0 - std::abs(overlap);
  });

  // -- scene -----------------------------------------------------------------
  {
    const std::array<double, 3> heights{0.5, 0.0, -0.5};
    const FibrationScene scene = render_latitude_scene(heights, 12, 64);
    run.run("cli", "rendered fibers are circles or lines and map back to their base", scene.fibers.size(), 1e-8,
            [&, k = std::size_t{0}](std::uint64_t) mutable {
              const SceneFiber& f = scene.fibers[k++];
              const double shape = f.closed ? circle_residual(f.samples) : collinearity_residual(f.samples);
              return std::max(shape, mapback_residual(f, scene.pole));
            });
  }

  return run.take();
}

}  // namespace hopfq
