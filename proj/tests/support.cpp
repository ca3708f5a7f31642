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

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace lop::testing {

Matrix reference_matrix() {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  Matrix m(3, 3);
  m << h, i * h, 0.0,
       0.0, 0.0, 1.0,
       i * h, h, 0.0;
  return m;
}

ModeUnitary reference_network() { return ModeUnitary(reference_matrix()); }

Complex permanent_by_permutations(const Matrix& x) {
  const auto n = static_cast<int>(x.rows());
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex total = 0.0;
  do {
    Complex term = 1.0;
    for (int r = 0; r < n; ++r) term *= x(r, sigma[static_cast<std::size_t>(r)]);
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

Rng seeded_rng(std::uint64_t salt) { return Rng(kDefaultSeed ^ (salt * 0x9e3779b97f4a7c15ULL)); }

::testing::AssertionResult matrices_near(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return ::testing::AssertionFailure() << "shape " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
                                         << b.cols();
  }
  const double d = max_abs_diff(a, b);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max |a - b| = " << d << " > " << tol;
}

}  // namespace lop::testing
