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

// hopfq: command-line front end for the Hopf-fibration geometry of one-,
// two- and three-qubit pure states.
//
// Exit codes: 0 success, 1 validation error, 2 internal-consistency failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfq/hopfq.hpp"
#include "hopfq/io.hpp"

namespace {

using hopfq::io::json;

constexpr int kExitValidation = 1;
constexpr int kExitConsistency = 2;

struct Common {
  std::string input = "-";
  std::string format = "json";
  bool renormalize = false;
};

void add_common(CLI::App* cmd, Common& c, bool reads_state) {
  if (reads_state) {
    cmd->add_option("input", c.input, "State JSON file, or - for stdin")->capture_default_str();
    cmd->add_flag("--renormalize", c.renormalize, "Accept and normalize states off the unit sphere");
  }
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw hopfq::ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

hopfq::PureState load_state(const Common& c) { return hopfq::io::parse_state(read_all(c.input), c.renormalize); }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

/// Tolerance precedence: --tol, then HOPFQ_TOL, then the library default.
double classification_tol(double flag) {
  if (flag > 0.0) return flag;
  if (const char* env = std::getenv("HOPFQ_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) throw hopfq::ValidationError("HOPFQ_TOL must be a positive number");
    return v;
  }
  return hopfq::tol::kClassify;
}

hopfq::Complex to_complex(const std::vector<double>& v, const char* name) {
  if (v.size() != 2) throw hopfq::ValidationError(std::string(name) + " takes re,im");
  return {v[0], v[1]};
}

template <class T>
void emit(const T& value, const Common& c) {
  if (c.format == "csv") {
    hopfq::io::write_csv(std::cout, value);
  } else {
    emit(hopfq::io::to_json(value));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hopf-fibration geometry of 1-, 2- and 3-qubit pure states"};
  app.require_subcommand(1);

  Common common;
  double tol_flag = 0.0;

  auto* bloch = app.add_subcommand("bloch", "S3 -> S2 base point (Bloch vector) of a 1-qubit state");
  add_common(bloch, common, true);

  std::string grouping = "standard";
  auto* hopf2 = app.add_subcommand("hopf2", "S7 -> S4 base point of a 2-qubit state");
  add_common(hopf2, common, true);
  hopf2->add_option("--grouping", grouping, "Quaternion grouping")
      ->check(CLI::IsMember({"standard", "alternate"}))
      ->capture_default_str();

  auto* hopf3 = app.add_subcommand("hopf3", "S15 -> S8 base point of a 3-qubit state");
  add_common(hopf3, common, true);

  auto* conc = app.add_subcommand("concurrence", "Concurrence and foliation leaf of a 2-qubit state");
  add_common(conc, common, true);
  conc->add_option("--tol", tol_flag, "Leaf classification tolerance (default HOPFQ_TOL or 1e-9)");

  auto* radii = app.add_subcommand("radii", "Partial Bloch radii of a 3-qubit state");
  add_common(radii, common, true);

  int qubit = 1;
  auto* rho = app.add_subcommand("rho", "Reduced one-qubit density matrix");
  add_common(rho, common, true);
  rho->add_option("--qubit", qubit, "Qubit kept by the partial trace (1-based)")->capture_default_str();

  auto* sep = app.add_subcommand("separable", "Is a qubit separated from the rest?");
  add_common(sep, common, true);
  sep->add_option("--qubit", qubit, "Qubit to test (1-based)")->capture_default_str();
  sep->add_option("--tol", tol_flag, "Tolerance (default HOPFQ_TOL or 1e-9)");

  std::vector<double> base, quat, oct;
  bool base_renormalize = false;
  auto* fiber2 = app.add_subcommand("fiber2", "2-qubit state on the S3 fiber over an S4 base point");
  add_common(fiber2, common, false);
  fiber2->add_option("--base", base, "x0,x1,x2,x3,x4")->delimiter(',')->required()->expected(5);
  fiber2->add_option("--q", quat, "Unit quaternion q0,q1,q2,q3 (f_a + f_b j)")->delimiter(',')->expected(4);
  fiber2->add_flag("--renormalize", base_renormalize, "Normalize an off-sphere base point");

  auto* fiber3 = app.add_subcommand("fiber3", "3-qubit state on the S7 fiber over an S8 base point");
  add_common(fiber3, common, false);
  fiber3->add_option("--base", base, "x0,..,x8")->delimiter(',')->required()->expected(9);
  fiber3->add_option("--c", oct, "Unit octonion u0,..,u7")->delimiter(',')->expected(8);
  fiber3->add_flag("--renormalize", base_renormalize, "Normalize an off-sphere base point");

  std::vector<double> fa{1.0, 0.0}, fb{0.0, 0.0};
  auto* mes = app.add_subcommand("mes", "Maximally entangled state (f_a, f_b, -conj f_b, conj f_a)/sqrt2");
  add_common(mes, common, false);
  mes->add_option("--fa", fa, "re,im")->delimiter(',')->expected(2);
  mes->add_option("--fb", fb, "re,im")->delimiter(',')->expected(2);

  std::string ray = "x";
  double eps = 0.0;
  auto* path = app.add_subcommand("path", "State at angle eps on a ray of the generalized Bloch ball");
  add_common(path, common, false);
  path->add_option("--ray", ray, "x: from (0,1,0) to the centre, z: from (1,0,0)")
      ->check(CLI::IsMember({"x", "z"}))
      ->capture_default_str();
  path->add_option("--eps", eps, "Angle in [0, pi/2]")->required();
  path->add_option("--fa", fa, "re,im")->delimiter(',')->expected(2);
  path->add_option("--fb", fb, "re,im")->delimiter(',')->expected(2);

  std::vector<double> latitudes{0.5, 0.0, -0.5};
  std::vector<double> pole{1.0, 0.0, 0.0, 0.0};
  int per_latitude = 12;
  int samples = 64;
  auto* render = app.add_subcommand("render-s3", "Stereographic scene of S3 Hopf fibers over latitude circles");
  add_common(render, common, false);
  render->add_option("--latitudes", latitudes, "Z heights of the base circles")->delimiter(',')->capture_default_str();
  render->add_option("--per-latitude", per_latitude, "Bases per latitude")->capture_default_str();
  render->add_option("--samples", samples, "Samples per fiber")->capture_default_str();
  render->add_option("--pole", pole, "Projection pole on S3")->delimiter(',')->expected(4);

  int fol_n = 2;
  std::size_t count = 1000;
  std::uint64_t seed = 1;
  auto* foliate = app.add_subcommand("foliate", "Sample Haar states and tabulate their foliation coordinates");
  add_common(foliate, common, false);
  foliate->add_option("--n", fol_n, "Qubit count")->check(CLI::IsMember({2, 3}))->capture_default_str();
  foliate->add_option("--count", count, "Number of states")->capture_default_str();
  foliate->add_option("--seed", seed, "Seed")->capture_default_str();
  foliate->add_option("--tol", tol_flag, "Leaf classification tolerance (default HOPFQ_TOL or 1e-9)");

  std::size_t check_samples = hopfq::CheckConfig{}.samples;
  auto* check = app.add_subcommand("check", "Run the library self-check");
  add_common(check, common, false);
  check->add_option("--samples", check_samples, "Random samples per check")->capture_default_str();
  check->add_option("--seed", seed, "Seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*bloch) {
      const auto s = load_state(common);
      hopfq::require_qubits(s, 1, "bloch");
      emit(hopfq::hopf_s3(s), common);
    } else if (*hopf2) {
      const auto g = grouping == "alternate" ? hopfq::Grouping::alternate : hopfq::Grouping::standard;
      emit(hopfq::hopf_s7(load_state(common), g), common);
    } else if (*hopf3) {
      emit(hopfq::hopf_s15(load_state(common)), common);
    } else if (*conc) {
      const auto leaf = hopfq::classify_leaf(load_state(common), classification_tol(tol_flag));
      if (common.format == "csv") {
        std::cout << hopfq::io::kLeafCsvHeader << '\n' << hopfq::io::csv_row(leaf) << '\n';
      } else {
        emit(hopfq::io::to_json(leaf));
      }
    } else if (*radii) {
      const auto r = hopfq::partial_bloch_radii(load_state(common));
      if (common.format == "csv") {
        std::cout << hopfq::io::kRadiiCsvHeader << '\n' << hopfq::io::csv_row(r) << '\n';
      } else {
        emit(hopfq::io::to_json(r));
      }
    } else if (*rho) {
      const auto m = hopfq::reduced_density(load_state(common), qubit);
      m.validate();
      emit(m, common);
    } else if (*sep) {
      const bool result = hopfq::separability_check(load_state(common), qubit, classification_tol(tol_flag));
      if (common.format == "csv") {
        std::cout << "qubit,separable\n" << qubit << ',' << (result ? "true" : "false") << '\n';
      } else {
        emit(json{{"qubit", qubit}, {"separable", result}});
      }
    } else if (*fiber2) {
      const auto b = hopfq::io::base_from_values(base, base_renormalize);
      const hopfq::Quaternion q = quat.empty() ? hopfq::Quaternion::one()
                                               : hopfq::Quaternion(quat[0], quat[1], quat[2], quat[3]);
      emit(hopfq::fiber_point_s7(b, q), common);
    } else if (*fiber3) {
      const auto b = hopfq::io::base_from_values(base, base_renormalize);
      hopfq::Octonion c(1.0);
      if (!oct.empty()) std::copy(oct.begin(), oct.end(), c.u.begin());
      emit(hopfq::fiber_point_s15(b, c), common);
    } else if (*mes) {
      emit(hopfq::mes_state(to_complex(fa, "--fa"), to_complex(fb, "--fb")), common);
    } else if (*path) {
      const auto r = ray == "z" ? hopfq::Ray::z_ray : hopfq::Ray::x_ray;
      emit(hopfq::epsilon_path(eps, to_complex(fa, "--fa"), to_complex(fb, "--fb"), r), common);
    } else if (*render) {
      const hopfq::Vec4 p{pole[0], pole[1], pole[2], pole[3]};
      emit(hopfq::render_latitude_scene(latitudes, per_latitude, samples, p), common);
    } else if (*foliate) {
      const auto rows = hopfq::foliation_sample(count, fol_n, seed, classification_tol(tol_flag));
      if (common.format == "csv") {
        hopfq::io::write_csv(std::cout, rows, fol_n);
      } else {
        emit(hopfq::io::to_json(rows));
      }
    } else if (*check) {
      hopfq::CheckConfig cfg;
      cfg.samples = check_samples;
      cfg.seed = seed;
      const auto report = hopfq::check_suite(cfg);
      emit(report, common);
      return report.all_passed() ? 0 : kExitConsistency;
    }
  } catch (const hopfq::ConsistencyError& e) {
    std::cerr << "hopfq: internal consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hopfq: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "hopfq: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "hopfq: unexpected failure: " << e.what() << '\n';
    return kExitConsistency;
  }
  return 0;
}
