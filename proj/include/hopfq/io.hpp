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

// JSON and CSV encodings used by the command-line tool.
//
//   state:      {"n": 2, "amplitudes": [[re, im], ...]}   (basis order)
//   base point: {"dim": 4, "coords": [x0, ...]}
//   scene:      {"pole": [4], "fibers": [{"base": [3], "closed": b, "samples": [[3], ...]}]}
//
// Numbers are written in shortest round-trip decimal form, so output is
// byte-stable for fixed inputs.

#pragma once

#include <charconv>
#include <cmath>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfq/check.hpp"
#include "hopfq/entanglement.hpp"
#include "hopfq/errors.hpp"
#include "hopfq/hopf.hpp"
#include "hopfq/scene.hpp"
#include "hopfq/states.hpp"
#include "hopfq/tolerance.hpp"

namespace hopfq::io {

using nlohmann::json;

/// Folds -0 into 0 so equal values always print the same way.
inline double canonical(double x) { return x == 0.0 ? 0.0 : x; }

/// Shortest decimal string that parses back to exactly `x`.
inline std::string format_double(double x) {
  x = canonical(x);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// States

/// Parses the state format. Inputs off the unit sphere by more than
/// tol::kInputNorm are rejected unless `renormalize` is set; anything
/// accepted is normalized exactly.
inline PureState state_from_json(const json& j, bool renormalize = false) {
  if (!j.is_object() || !j.contains("n") || !j.contains("amplitudes")) {
    throw ValidationError(R"(state JSON needs "n" and "amplitudes")");
  }
  if (!j["n"].is_number_integer()) throw ValidationError(R"("n" must be an integer)");
  const int n = j["n"].get<int>();
  if (n < 1 || n > 3) throw ValidationError("n must be 1, 2 or 3");
  const json& arr = j["amplitudes"];
  if (!arr.is_array()) throw ValidationError(R"("amplitudes" must be an array)");
  if (arr.size() != (std::size_t{1} << n)) {
    throw ValidationError("expected " + std::to_string(1 << n) + " amplitudes, got " + std::to_string(arr.size()));
  }
  std::vector<Complex> amps;
  amps.reserve(arr.size());
  for (const auto& a : arr) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
      throw ValidationError("each amplitude must be a [re, im] pair of numbers");
    }
    amps.emplace_back(a[0].get<double>(), a[1].get<double>());
  }
  const double n2 = PureState::norm2_of(amps);
  if (!std::isfinite(n2)) throw ValidationError("amplitudes must be finite");
  const double err = std::abs(n2 - 1.0);
  if (err > tol::kInputNorm && !renormalize) {
    throw ValidationError("state norm^2 is off by " + format_double(err) + " (pass --renormalize to accept)");
  }
  return PureState::normalized(std::move(amps));
}

inline PureState parse_state(const std::string& text, bool renormalize = false) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return state_from_json(j, renormalize);
}

inline json to_json(const PureState& s) {
  json amps = json::array();
  for (const auto& a : s.amplitudes()) amps.push_back({canonical(a.real()), canonical(a.imag())});
  return {{"n", s.n_qubits()}, {"amplitudes", std::move(amps)}};
}

inline void write_csv(std::ostream& os, const PureState& s) {
  os << "index,re,im\n";
  for (std::size_t l = 0; l < s.dimension(); ++l) {
    os << l << ',' << format_double(s[l].real()) << ',' << format_double(s[l].imag()) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Base points

inline json to_json(const BasePoint& b) {
  json coords = json::array();
  for (double x : b.coords) coords.push_back(canonical(x));
  return {{"dim", b.dim()}, {"coords", std::move(coords)}};
}

inline void write_csv(std::ostream& os, const BasePoint& b) {
  for (std::size_t l = 0; l < b.coords.size(); ++l) os << (l ? "," : "") << 'x' << l;
  os << '\n';
  for (std::size_t l = 0; l < b.coords.size(); ++l) os << (l ? "," : "") << format_double(b[l]);
  os << '\n';
}

/// Reads user-supplied coordinates with the same acceptance rule as states.
inline BasePoint base_from_values(std::vector<double> coords, bool renormalize = false) {
  double n2 = 0.0;
  for (double x : coords) n2 += x * x;
  if (!std::isfinite(n2)) throw ValidationError("base coordinates must be finite");
  if (std::abs(n2 - 1.0) > tol::kInputNorm && !renormalize) {
    throw ValidationError("base point is off the unit sphere (pass --renormalize to accept)");
  }
  return BasePoint::normalized(std::move(coords));
}

// ---------------------------------------------------------------------------
// Entanglement summaries

inline json to_json(const LeafDescriptor& d) {
  return {{"concurrence", d.concurrence}, {"shell_radius", d.shell_radius}, {"label", std::string(to_string(d.label))}};
}

inline json to_json(const BlochRadii& r) { return {{"r1", r.r1}, {"r2", r.r2}, {"r3", r.r3}, {"avg", r.average}}; }

inline json to_json(const DensityMatrix2& m) {
  auto c = [](Complex z) { return json::array({z.real(), z.imag()}); };
  return {{"rho", {{c(m.r00), c(m.r01)}, {c(m.r10), c(m.r11)}}}, {"det", m.det().real()},
          {"bloch_vector", m.bloch_vector()}};
}

inline constexpr const char* kLeafCsvHeader = "concurrence,shell_radius,label";
inline constexpr const char* kRadiiCsvHeader = "r1,r2,r3,avg";

inline std::string csv_row(const LeafDescriptor& d) {
  return format_double(d.concurrence) + ',' + format_double(d.shell_radius) + ',' + std::string(to_string(d.label));
}

inline std::string csv_row(const BlochRadii& r) {
  return format_double(r.r1) + ',' + format_double(r.r2) + ',' + format_double(r.r3) + ',' + format_double(r.average);
}

inline void write_csv(std::ostream& os, const DensityMatrix2& m) {
  os << "row,col,re,im\n";
  const Complex e[2][2] = {{m.r00, m.r01}, {m.r10, m.r11}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      os << r << ',' << c << ',' << format_double(e[r][c].real()) << ',' << format_double(e[r][c].imag()) << '\n';
}

// ---------------------------------------------------------------------------
// Scenes and foliation rows

inline json to_json(const FibrationScene& scene) {
  json fibers = json::array();
  for (const auto& f : scene.fibers) {
    json samples = json::array();
    for (const auto& p : f.samples) samples.push_back({canonical(p[0]), canonical(p[1]), canonical(p[2])});
    fibers.push_back({{"base", f.base}, {"closed", f.closed}, {"samples", std::move(samples)}});
  }
  return {{"pole", scene.pole}, {"fibers", std::move(fibers)}};
}

inline void write_csv(std::ostream& os, const FibrationScene& scene) {
  os << "fiber,sample,closed,base_x0,base_x1,base_x2,x,y,z\n";
  for (std::size_t f = 0; f < scene.fibers.size(); ++f) {
    const auto& fb = scene.fibers[f];
    for (std::size_t k = 0; k < fb.samples.size(); ++k) {
      os << f << ',' << k << ',' << (fb.closed ? "true" : "false");
      for (double b : fb.base) os << ',' << format_double(b);
      for (double y : fb.samples[k]) os << ',' << format_double(y);
      os << '\n';
    }
  }
}

inline json to_json(const FoliationRow& row) {
  json j = row.n_qubits == 2 ? to_json(row.leaf) : to_json(row.radii);
  j["n"] = row.n_qubits;
  return j;
}

inline json to_json(std::span<const FoliationRow> rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

inline void write_csv(std::ostream& os, std::span<const FoliationRow> rows, int n_qubits) {
  os << (n_qubits == 2 ? kLeafCsvHeader : kRadiiCsvHeader) << '\n';
  for (const auto& r : rows) os << (r.n_qubits == 2 ? csv_row(r.leaf) : csv_row(r.radii)) << '\n';
}

// ---------------------------------------------------------------------------
// Self-check report

inline json to_json(const CheckReport& report) {
  json checks = json::array();
  for (const auto& r : report.results) {
    checks.push_back({{"module", r.module},
                      {"name", r.name},
                      {"samples", r.samples},
                      {"max_residual", r.max_residual},
                      {"tolerance", r.tolerance},
                      {"passed", r.passed}});
  }
  return {{"passed", report.all_passed()}, {"max_residual", report.max_residual()}, {"checks", std::move(checks)}};
}

inline void write_csv(std::ostream& os, const CheckReport& report) {
  os << "module,name,samples,max_residual,tolerance,passed\n";
  for (const auto& r : report.results) {
    os << r.module << ",\"" << r.name << "\"," << r.samples << ',' << format_double(r.max_residual) << ','
       << format_double(r.tolerance) << ',' << (r.passed ? "true" : "false") << '\n';
  }
}

}  // namespace hopfq::io
