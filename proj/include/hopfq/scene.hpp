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

// Data export for plotting: sampled S^3 Hopf fibers drawn in R^3 by
// stereographic projection, and Monte Carlo samples of the two- and
// three-qubit foliations.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "hopfq/entanglement.hpp"
#include "hopfq/errors.hpp"
#include "hopfq/hopf.hpp"
#include "hopfq/states.hpp"
#include "hopfq/tolerance.hpp"

namespace hopfq {

/// One fiber: its Bloch-sphere base (x0, x1, x2) = (Z, X, Y) and the
/// projected samples. Closed fibers are circles; the fiber through the
/// projection pole is an open line.
struct SceneFiber {
  Vec3 base{};
  std::vector<Vec3> samples;
  bool closed = true;
};

struct FibrationScene {
  Vec4 pole = kDefaultPole;
  std::vector<SceneFiber> fibers;
};

/// A representative (alpha, beta) over a Bloch point, with alpha real >= 0.
inline PureState lift_s2(const Vec3& base) {
  const double theta = std::atan2(std::hypot(base[1], base[2]), base[0]);
  const double phi = std::atan2(base[2], base[1]);
  return PureState::normalized({std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)});
}

/// Bases on circles of constant Z (latitudes), `per_latitude` evenly spaced
/// in longitude.
inline std::vector<Vec3> latitude_bases(std::span<const double> heights, int per_latitude) {
  if (per_latitude < 1) throw ValidationError("need at least one base per latitude");
  std::vector<Vec3> out;
  for (double z : heights) {
    if (!(z > -1.0 && z < 1.0)) throw ValidationError("latitude height must lie strictly inside (-1, 1)");
    const double rho = std::sqrt(1.0 - z * z);
    for (int k = 0; k < per_latitude; ++k) {
      const double lon = 2.0 * std::numbers::pi * k / per_latitude;
      out.push_back({z, rho * std::cos(lon), rho * std::sin(lon)});
    }
  }
  return out;
}

/// Bloch point of the fiber through the projection pole.
inline Vec3 pole_base(const Vec4& pole) {
  const BasePoint b = hopf_s3(from_r4(pole));
  return {b[0], b[1], b[2]};
}

/// Samples the fiber (alpha e^{iw}, beta e^{iw}) at w = 2 pi k / samples for
/// every base and projects it stereographically from `pole`. A base whose
/// fiber contains the pole is emitted as an open line without the sample at
/// the pole itself.
inline FibrationScene render_fibration_scene(std::span<const Vec3> bases, int samples_per_fiber,
                                             const Vec4& pole = kDefaultPole) {
  if (samples_per_fiber < 3) throw ValidationError("samples_per_fiber must be at least 3");
  require_unit(pole, "pole");
  const Vec3 through_pole = pole_base(pole);
  FibrationScene scene;
  scene.pole = pole;
  for (Vec3 b : bases) {
    const double n = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    if (!(std::abs(n - 1.0) <= tol::kInputNorm)) throw ValidationError("scene base is off the unit S^2");
    for (double& x : b) x /= n;

    SceneFiber fiber;
    fiber.base = b;
    const double gap = std::hypot(b[0] - through_pole[0], b[1] - through_pole[1], b[2] - through_pole[2]);
    PureState seed_state = lift_s2(b);
    if (gap <= tol::kPole) {
      fiber.closed = false;
      seed_state = from_r4(pole);
    }
    for (int k = 0; k < samples_per_fiber; ++k) {
      const double w = 2.0 * std::numbers::pi * k / samples_per_fiber;
      const auto y = stereo_project_s3(to_r4(seed_state.with_global_phase(w)), pole);
      if (y) fiber.samples.push_back(*y);
    }
    scene.fibers.push_back(std::move(fiber));
  }
  return scene;
}

/// Scene for `heights` x `per_latitude` bases plus the fiber through the pole.
inline FibrationScene render_latitude_scene(std::span<const double> heights, int per_latitude,
                                            int samples_per_fiber, const Vec4& pole = kDefaultPole) {
  auto bases = latitude_bases(heights, per_latitude);
  require_unit(pole, "pole");
  bases.push_back(pole_base(pole));
  return render_fibration_scene(bases, samples_per_fiber, pole);
}

// ---------------------------------------------------------------------------
// Scene geometry residuals

namespace detail {
inline Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double len(const Vec3& a) { return std::sqrt(dot3(a, a)); }
}  // namespace detail

/// Largest deviation of the samples from the circle through three of them
/// (first, one third, two thirds along): max of off-plane distance and
/// |distance to centre - radius|. Needs at least three samples.
inline double circle_residual(std::span<const Vec3> pts) {
  using namespace detail;
  if (pts.size() < 3) throw ValidationError("circle_residual needs three points");
  const Vec3& p0 = pts[0];
  const Vec3 a = sub(pts[pts.size() / 3], p0);
  const Vec3 b = sub(pts[2 * pts.size() / 3], p0);
  const Vec3 n = cross(a, b);
  const double n2 = dot3(n, n);
  if (n2 == 0.0) return std::numeric_limits<double>::infinity();
  const Vec3 ta = cross(b, n), tb = cross(n, a);
  Vec3 c{};
  for (std::size_t m = 0; m < 3; ++m) c[m] = p0[m] + (dot3(a, a) * ta[m] + dot3(b, b) * tb[m]) / (2.0 * n2);
  const double r = len(sub(p0, c));
  const double nn = std::sqrt(n2);
  double worst = 0.0;
  for (const auto& p : pts) {
    const Vec3 d = sub(p, c);
    worst = std::max({worst, std::abs(dot3(d, n)) / nn, std::abs(len(d) - r)});
  }
  return worst;
}

/// Largest distance of the samples from the line through the first sample
/// and the sample farthest from it.
inline double collinearity_residual(std::span<const Vec3> pts) {
  using namespace detail;
  if (pts.size() < 2) return 0.0;
  std::size_t far = 0;
  for (std::size_t l = 1; l < pts.size(); ++l)
    if (len(sub(pts[l], pts[0])) > len(sub(pts[far], pts[0]))) far = l;
  Vec3 dir = sub(pts[far], pts[0]);
  const double dl = len(dir);
  if (dl == 0.0) return 0.0;
  for (double& x : dir) x /= dl;
  double worst = 0.0;
  for (const auto& p : pts) worst = std::max(worst, len(cross(sub(p, pts[0]), dir)));
  return worst;
}

/// Largest distance between a fiber's base and the Bloch image of its
/// samples pulled back to S^3.
inline double mapback_residual(const SceneFiber& fiber, const Vec4& pole) {
  double worst = 0.0;
  for (const auto& y : fiber.samples) {
    const BasePoint b = hopf_s3(from_r4(inverse_stereo_s3(y, pole)));
    worst = std::max(worst, std::hypot(b[0] - fiber.base[0], b[1] - fiber.base[1], b[2] - fiber.base[2]));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Foliation sampling

struct FoliationRow {
  int n_qubits = 2;
  LeafDescriptor leaf;  // two qubits
  BlochRadii radii;     // three qubits
};

inline FoliationRow foliation_row(const PureState& s, double tol = tol::kClassify) {
  FoliationRow row;
  row.n_qubits = s.n_qubits();
  if (row.n_qubits == 2) {
    row.leaf = classify_leaf(s, tol);
  } else if (row.n_qubits == 3) {
    row.radii = partial_bloch_radii(s);
  } else {
    throw ValidationError("foliation rows need 2 or 3 qubits");
  }
  return row;
}

/// Haar samples; item i is drawn with seed derive_seed(seed, i).
inline std::vector<FoliationRow> foliation_sample(std::size_t n_states, int n_qubits, std::uint64_t seed,
                                                  double tol = tol::kClassify) {
  if (n_qubits != 2 && n_qubits != 3) throw ValidationError("foliation supports 2 or 3 qubits");
  if (n_states < 1) throw ValidationError("foliation needs at least one state");
  std::vector<FoliationRow> rows;
  rows.reserve(n_states);
  for (std::size_t i = 0; i < n_states; ++i) rows.push_back(foliation_row(random_pure_state(n_qubits, derive_seed(seed, i)), tol));
  return rows;
}

}  // namespace hopfq
