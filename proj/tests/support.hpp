// Copyright 2026 The lopsim Authors
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

// Shared fixtures for the unit tests.

#pragma once

#include <gtest/gtest.h>

#include "lop/fock.hpp"
#include "lop/linalg.hpp"
#include "lop/representation.hpp"

namespace lop::testing {

/// [[1/sqrt2, i/sqrt2, 0], [0, 0, 1], [i/sqrt2, 1/sqrt2, 0]]
Matrix reference_matrix();
ModeUnitary reference_network();

/// Brute-force sum over all permutations.
Complex permanent_by_permutations(const Matrix& x);

Rng seeded_rng(std::uint64_t salt);

::testing::AssertionResult matrices_near(const Matrix& a, const Matrix& b, double tol);

}  // namespace lop::testing
