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

#include <cmath>
#include <random>
#include <stdexcept>

#include "lop/permanent.hpp"
#include "support.hpp"

namespace lop {
namespace {

using testing::permanent_by_permutations;

Matrix random_complex(int n, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = Complex(g(rng), g(rng));
  return m;
}

TEST(Permanent, AllOnesThreeByThree) {
  EXPECT_NEAR(std::abs(permanent(Matrix::Ones(3, 3)) - 6.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(permanent(Matrix::Ones(5, 5)) - 120.0), 0.0, 1e-10);
}

TEST(Permanent, EmptyAndIdentity) {
  EXPECT_EQ(permanent(Matrix(0, 0)), Complex(1.0));
  EXPECT_NEAR(std::abs(permanent(Matrix::Identity(4, 4)) - 1.0), 0.0, 1e-14);
}

TEST(Permanent, MatchesPermutationSum) {
  Rng rng = testing::seeded_rng(1);
  for (int n = 1; n <= 7; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix m = random_complex(n, rng);
      const Complex expected = permanent_by_permutations(m);
      EXPECT_LE(std::abs(permanent(m) - expected), 1e-10 * std::max(1.0, std::abs(expected))) << "n=" << n;
    }
  }
}

TEST(Permanent, InvariantUnderRowAndColumnPermutation) {
  Rng rng = testing::seeded_rng(2);
  const Matrix m = random_complex(5, rng);
  Eigen::PermutationMatrix<Eigen::Dynamic> p(5);
  p.indices() << 3, 0, 4, 1, 2;
  const Complex base = permanent(m);
  EXPECT_LE(std::abs(permanent(p * m) - base), 1e-11);
  EXPECT_LE(std::abs(permanent(m * p) - base), 1e-11);
  EXPECT_LE(std::abs(permanent(m.transpose()) - base), 1e-11);
}

TEST(Permanent, RowScalingIsMultiplicative) {
  Rng rng = testing::seeded_rng(3);
  Matrix m = random_complex(4, rng);
  const Complex base = permanent(m);
  const Complex s(0.3, -1.7);
  m.row(2) *= s;
  EXPECT_LE(std::abs(permanent(m) - s * base), 1e-11);
}

TEST(Permanent, RejectsNonSquare) { EXPECT_THROW(permanent(Matrix::Ones(2, 3)), std::invalid_argument); }

}  // namespace
}  // namespace lop
