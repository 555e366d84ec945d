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

// Umbrella header.

#pragma once

#include "hopfq/algebra.hpp"
#include "hopfq/check.hpp"
#include "hopfq/entanglement.hpp"
#include "hopfq/errors.hpp"
#include "hopfq/fibers.hpp"
#include "hopfq/hopf.hpp"
#include "hopfq/operators.hpp"
#include "hopfq/sampling.hpp"
#include "hopfq/scene.hpp"
#include "hopfq/states.hpp"
#include "hopfq/tolerance.hpp"
