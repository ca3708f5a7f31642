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
#include <stdexcept>

#include "lop/circuit.hpp"
#include "support.hpp"

namespace lop {
namespace {

using testing::matrices_near;

TEST(ElementMatrix, BeamSplitterBlock) {
  const double t = 0.37, p = 1.2;
  const Matrix m = element_matrix(BeamSplitter{1, 3, t, p}, 3).matrix();
  Matrix expected = Matrix::Identity(3, 3);
  expected(0, 0) = std::cos(t);
  expected(0, 2) = std::polar(std::sin(t), p);
  expected(2, 0) = -std::polar(std::sin(t), -p);
  expected(2, 2) = std::cos(t);
  EXPECT_TRUE(matrices_near(m, expected, 1e-15));
}

TEST(ElementMatrix, ZeroPhaseIsIdentityAndSwapPermutes) {
  EXPECT_TRUE(matrices_near(element_matrix(PhaseShifter{1, 0.0}, 3).matrix(), Matrix::Identity(3, 3), 0.0));
  Matrix p = Matrix::Zero(3, 3);
  p(0, 0) = p(1, 2) = p(2, 1) = 1.0;
  EXPECT_TRUE(matrices_near(element_matrix(Swap{2, 3}, 3).matrix(), p, 0.0));
}

TEST(ElementMatrix, RejectsBadLabels) {
  EXPECT_THROW(element_matrix(BeamSplitter{0, 1, 0.1, 0.0}, 3), std::invalid_argument);
  EXPECT_THROW(element_matrix(BeamSplitter{2, 2, 0.1, 0.0}, 3), std::invalid_argument);
  EXPECT_THROW(element_matrix(PhaseShifter{4, 0.1}, 3), std::invalid_argument);
  EXPECT_THROW(element_matrix(Swap{1, 5}, 3), std::invalid_argument);
}

TEST(Recompose, EmptyCircuitIsIdentity) {
  EXPECT_TRUE(matrices_near(recompose(Circuit{4, {}}).matrix(), Matrix::Identity(4, 4), 0.0));
}

TEST(Recompose, BalancedSplitterThenSwapGivesReferenceNetwork) {
  const Circuit c{3, {BeamSplitter{1, 2, M_PI / 4, M_PI / 2}, Swap{2, 3}}};
  EXPECT_TRUE(matrices_near(recompose(c).matrix(), testing::reference_matrix(), 1e-14));
}

TEST(Recompose, SingleElementIsItsOwnMatrix) {
  const CircuitElement e = BeamSplitter{2, 3, 0.8, -0.4};
  EXPECT_TRUE(matrices_near(recompose(Circuit{3, {e}}).matrix(), element_matrix(e, 3).matrix(), 0.0));
}

TEST(Decompose, IdentityGivesEmptyCircuit) {
  EXPECT_TRUE(decompose(ModeUnitary::identity(4)).elements.empty());
}

TEST(Decompose, ReferenceNetworkRoundTrip) {
  const ModeUnitary m = testing::reference_network();
  const Circuit c = decompose(m);
  EXPECT_TRUE(matrices_near(recompose(c).matrix(), m.matrix(), 1e-10));
  EXPECT_LE(count_beam_splitters(c), 3u);
}

TEST(Decompose, RandomUnitariesRoundTripWithinElementBudget) {
  Rng rng = testing::seeded_rng(20);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const ModeUnitary m(random_unitary(n, rng));
      const Circuit c = decompose(m);
      EXPECT_TRUE(matrices_near(recompose(c).matrix(), m.matrix(), 1e-10)) << "N=" << n;
      EXPECT_LE(count_beam_splitters(c), static_cast<std::size_t>(n * (n - 1) / 2));
      EXPECT_LE(c.elements.size() - count_beam_splitters(c), static_cast<std::size_t>(n));
    }
  }
}

TEST(Decompose, PermutationMatrices) {
  Matrix p = Matrix::Zero(4, 4);
  p(0, 3) = p(1, 0) = p(2, 1) = p(3, 2) = 1.0;
  const ModeUnitary m(p);
  EXPECT_TRUE(matrices_near(recompose(decompose(m)).matrix(), p, 1e-12));
}

}  // namespace
}  // namespace lop
