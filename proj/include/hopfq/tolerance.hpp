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

#pragma once

namespace hopfq::tol {

// Component-wise equality for algebra results.
inline constexpr double kAlgebra = 1e-12;

// Unit-norm invariant of PureState, BasePoint and the encoding pairs.
inline constexpr double kNorm = 1e-10;

// File inputs whose norm is off by more than this are rejected unless the
// caller asks for renormalization; smaller errors are normalized silently.
inline constexpr double kInputNorm = 1e-6;

// Default leaf classification / separability threshold (HOPFQ_TOL overrides
// it in the CLI).
inline constexpr double kClassify = 1e-9;

// sin(theta) at or below this means the base point is a pole.
inline constexpr double kPole = 1e-12;

// sin(phi) at or below this means Q' is real and the axis t falls back to i.
inline constexpr double kAxis = 1e-12;

// Concurrence may exceed 1 by roundoff; anything beyond this is a bug.
inline constexpr double kConcurrenceSlack = 1e-8;

// Negative eigenvalue slack for reduced density matrices.
inline constexpr double kEigenSlack = 1e-10;

// Overlap slack used by projective_equal when no tolerance is given.
inline constexpr double kProjective = 1e-10;

// Geometry residuals for rendered fibration scenes.
inline constexpr double kScene = 1e-8;

}  // namespace hopfq::tol
