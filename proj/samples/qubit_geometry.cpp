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

// A short tour of the library: base points of the three Hopf maps, the
// two-qubit foliation and an explicit fiber.

#include <cmath>
#include <cstdio>

#include "hopfq/hopfq.hpp"

namespace {

void print(const char* label, const hopfq::BasePoint& b) {
  std::printf("%-28s (", label);
  for (std::size_t l = 0; l < b.coords.size(); ++l) std::printf("%s%.4f", l ? ", " : "", b[l] + 0.0);
  std::printf(")\n");
}

}  // namespace

int main() {
  const double r2 = 1.0 / std::sqrt(2.0), r3 = 1.0 / std::sqrt(3.0);

  print("|+> on the Bloch sphere", hopfq::hopf_s3(hopfq::PureState({r2, r2})));
  print("Bell state on S4", hopfq::hopf_s7(hopfq::PureState({r2, 0.0, 0.0, r2})));
  print("W state on S8", hopfq::hopf_s15(hopfq::PureState({0, r3, r3, 0, r3, 0, 0, 0})));

  std::printf("\nconcurrence along the x ray:\n");
  for (double eps : {0.0, 0.3, 0.6, 0.9, 1.2, 1.5707963267948966}) {
    const auto leaf = hopfq::classify_leaf(hopfq::epsilon_path(eps, 1.0, 0.0, hopfq::Ray::x_ray));
    std::printf("  eps %.3f  c %.4f  radius %.4f  %s\n", eps, leaf.concurrence, leaf.shell_radius,
                std::string(hopfq::to_string(leaf.label)).c_str());
  }

  const hopfq::BasePoint base{{0.0, 0.6, 0.0, 0.8, 0.0}};
  const auto s = hopfq::fiber_point_s7(base, hopfq::random_quaternion(7));
  std::printf("\nrandom point on the fiber over (0, 0.6, 0, 0.8, 0):\n");
  print("  its base point", hopfq::hopf_s7(s));
  std::printf("  concurrence %.4f\n", hopfq::concurrence(s));
  return 0;
}
