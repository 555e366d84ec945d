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

#include <stdexcept>
#include <string>

namespace hopfq {

/// Input violates a documented precondition (bad qubit count, off-sphere
/// point, wrong partition). The CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Inverse requested for the zero element of a division algebra.
class ZeroDivisorError : public std::domain_error {
 public:
  explicit ZeroDivisorError(const std::string& what) : std::domain_error(what) {}
};

/// Base point sits on a pole of the sphere, where the fiber frame is undefined.
class PoleError : public std::domain_error {
 public:
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// A computed quantity left its mathematically allowed range by more than
/// roundoff. The CLI maps this to exit code 2.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hopfq
