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
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "lop/errors.hpp"
#include "lop/permanent.hpp"
#include "lop/representation.hpp"
#include "support.hpp"

namespace lop {
namespace {

using testing::matrices_near;

Matrix random_anti_hermitian(int n, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix h(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) h(r, c) = Complex(g(rng), g(rng));
  return (h - h.adjoint()) / 2.0;
}

// <out| Upsilon(M) |in> from the textbook formula with explicit row/column
// repetition: perm(M[out, in]) / sqrt(prod out! prod in!).
Complex lifted_entry(const Matrix& m, const OccupationVector& out, const OccupationVector& in) {
  std::vector<Eigen::Index> rows, cols;
  for (std::size_t i = 0; i < out.modes(); ++i)
    for (unsigned k = 0; k < out[i]; ++k) rows.push_back(static_cast<Eigen::Index>(i));
  for (std::size_t j = 0; j < in.modes(); ++j)
    for (unsigned k = 0; k < in[j]; ++k) cols.push_back(static_cast<Eigen::Index>(j));
  Matrix sub(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      sub(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(rows[r], cols[c]);
  return testing::permanent_by_permutations(sub) / std::sqrt(out.factorial_product() * in.factorial_product());
}

TEST(ModeUnitary, RejectsNonUnitaryWithDeviation) {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = 0.5;
  try {
    ModeUnitary bad(m);
    FAIL() << "accepted a non-unitary matrix";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("max |M^dag M - I|"), std::string::npos);
  }
}

TEST(AlgebraElement, RejectsHermitianPart) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 1) = 1.0;
  EXPECT_THROW(AlgebraElement bad(a), std::invalid_argument);
}

TEST(Lift, SectorZeroIsOneByOneIdentity) {
  Rng rng = testing::seeded_rng(10);
  const auto l = lift_unitary(ModeUnitary(random_unitary(3, rng)), 0);
  ASSERT_EQ(l.matrix().rows(), 1);
  EXPECT_NEAR(std::abs(l.matrix()(0, 0) - 1.0), 0.0, 1e-15);
}

TEST(Lift, OnePhotonSectorIsTheMatrixItself) {
  Rng rng = testing::seeded_rng(11);
  const Matrix m = random_unitary(4, rng);
  EXPECT_TRUE(matrices_near(lift_unitary(ModeUnitary(m), 1).matrix(), m, 1e-14));
}

TEST(Lift, MatchesRepeatedIndexPermanentFormula) {
  Rng rng = testing::seeded_rng(12);
  const Matrix m = random_unitary(3, rng);
  const auto l = lift_unitary(ModeUnitary(m), 3);
  const auto& b = l.basis();
  for (std::size_t r = 0; r < b.size(); ++r) {
    for (std::size_t c = 0; c < b.size(); ++c) {
      const Complex expected = lifted_entry(m, b[r], b[c]);
      EXPECT_LE(std::abs(l.matrix()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) - expected), 1e-12);
    }
  }
}

TEST(Lift, TwoPhotonSu2ClosedForm) {
  const double r2 = std::sqrt(2.0);
  const Complex a = std::polar(std::cos(0.4), 0.9);
  const Complex b = std::polar(std::sin(0.4), -1.3);
  Matrix m(2, 2);
  m << a, b, -std::conj(b), std::conj(a);
  Matrix expected(3, 3);
  expected << a * a, r2 * a * b, b * b,
              -r2 * a * std::conj(b), std::norm(a) - std::norm(b), r2 * std::conj(a) * b,
              std::conj(b) * std::conj(b), -r2 * std::conj(a) * std::conj(b), std::conj(a) * std::conj(a);
  EXPECT_TRUE(matrices_near(lift_unitary(ModeUnitary(m), 2).matrix(), expected, 1e-14));

  const PureState out = apply(lift_unitary(ModeUnitary(m), 2), PureState::basis_state({1, 1}));
  EXPECT_LE(std::abs(out.amplitude({2, 0}) - r2 * a * b), 1e-14);
  EXPECT_LE(std::abs(out.amplitude({1, 1}) - (std::norm(a) - std::norm(b))), 1e-14);
  EXPECT_LE(std::abs(out.amplitude({0, 2}) + r2 * std::conj(a) * std::conj(b)), 1e-14);
}

TEST(Lift, IsUnitaryAndHomomorphic) {
  Rng rng = testing::seeded_rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const ModeUnitary m1(random_unitary(4, rng));
    const ModeUnitary m2(random_unitary(4, rng));
    for (unsigned n = 0; n <= 3; ++n) {
      const Matrix l1 = lift_unitary(m1, n).matrix();
      EXPECT_LE(unitarity_defect(l1), 1e-12);
      EXPECT_TRUE(matrices_near(lift_unitary(m1 * m2, n).matrix(), l1 * lift_unitary(m2, n).matrix(), 1e-12));
      EXPECT_TRUE(matrices_near(lift_unitary(ModeUnitary(m1.matrix().adjoint()), n).matrix(), l1.adjoint(), 1e-12));
    }
  }
}

TEST(Lift, DiagonalPhasesCountPhotons) {
  const double th[] = {0.3, -1.1, 2.4};
  Matrix d = Matrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i) d(i, i) = std::polar(1.0, th[i]);
  const auto l = lift_unitary(ModeUnitary(d), 3);
  for (std::size_t r = 0; r < l.basis().size(); ++r) {
    const auto& occ = l.basis()[r];
    double phase = 0.0;
    for (std::size_t k = 0; k < 3; ++k) phase += occ[k] * th[k];
    const auto idx = static_cast<Eigen::Index>(r);
    EXPECT_LE(std::abs(l.matrix()(idx, idx) - std::polar(1.0, phase)), 1e-14);
  }
  EXPECT_TRUE(matrices_near(l.matrix(), Matrix(l.matrix().diagonal().asDiagonal()), 1e-15));
}

TEST(Lift, ApplyRejectsOtherSector) {
  const auto l = lift_unitary(ModeUnitary::identity(2), 2);
  EXPECT_THROW(apply(l, PureState::basis_state({1, 0})), BasisMismatch);
}

TEST(NumberTransfer, CommutationRelations) {
  const FockBasis b(3, 3);
  Matrix d[3][3];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) d[i][j] = number_transfer_matrix(b, i, j);
  const auto n = static_cast<Eigen::Index>(b.size());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int h = 0; h < 3; ++h)
        for (int k = 0; k < 3; ++k) {
          const Matrix lhs = d[i][j] * d[h][k] - d[h][k] * d[i][j];
          Matrix rhs = Matrix::Zero(n, n);
          if (h == j) rhs += d[i][k];
          if (i == k) rhs -= d[h][j];
          EXPECT_TRUE(matrices_near(lhs, rhs, 1e-13)) << i << j << h << k;
        }
}

TEST(NumberTransfer, DiagonalIsNumberOperator) {
  const FockBasis b(3, 2);
  const Matrix n0 = number_transfer_matrix(b, 0, 0);
  for (std::size_t r = 0; r < b.size(); ++r) {
    const auto idx = static_cast<Eigen::Index>(r);
    EXPECT_NEAR(n0(idx, idx).real(), b[r][0], 1e-15);
  }
  EXPECT_THROW(number_transfer_matrix(b, 0, 3), std::invalid_argument);
}

TEST(JsMap, PhaseGeneratorOnFirstMode) {
  Matrix a = Matrix::Zero(3, 3);
  a(0, 0) = Complex(0.0, 1.0);
  const Matrix js = js_operator_matrix(AlgebraElement(a), 2);
  const FockBasis b(3, 2);
  Matrix expected = Matrix::Zero(6, 6);
  for (std::size_t r = 0; r < b.size(); ++r) {
    const auto idx = static_cast<Eigen::Index>(r);
    expected(idx, idx) = Complex(0.0, b[r][0]);
  }
  EXPECT_TRUE(matrices_near(js, expected, 1e-15));
}

TEST(JsMap, PreservesCommutators) {
  Rng rng = testing::seeded_rng(14);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix a = random_anti_hermitian(3, rng);
    const Matrix b = random_anti_hermitian(3, rng);
    const Matrix ja = js_operator_matrix(AlgebraElement(a), 3);
    const Matrix jb = js_operator_matrix(AlgebraElement(b), 3);
    const Matrix jab = js_operator_matrix(AlgebraElement(a * b - b * a), 3);
    EXPECT_TRUE(matrices_near(ja * jb - jb * ja, jab, 1e-11));
    EXPECT_LE(anti_hermiticity_defect(ja), 1e-13);
  }
}

TEST(PrincipalLog, ExponentiatesBack) {
  Rng rng = testing::seeded_rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_unitary(4, rng);
    const Matrix a = principal_log(ModeUnitary(m)).matrix();
    EXPECT_LE(anti_hermiticity_defect(a), 1e-12);
    EXPECT_TRUE(matrices_near(a.exp(), m, 1e-10));
  }
}

TEST(ExponentialRoute, AgreesWithPermanents) {
  Rng rng = testing::seeded_rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    const ModeUnitary m(random_unitary(n, rng));
    for (unsigned photons = 0; photons <= 4; ++photons) {
      EXPECT_TRUE(matrices_near(lift_via_js_exponential(m, photons).matrix(), lift_unitary(m, photons).matrix(), 1e-9));
    }
  }
}

TEST(ExponentialRoute, HandlesEigenvalueMinusOne) {
  Matrix swap = Matrix::Zero(3, 3);
  swap(0, 1) = swap(1, 0) = swap(2, 2) = 1.0;
  const Matrix diag = Eigen::Vector3cd(-1.0, 1.0, -1.0).asDiagonal();
  for (const Matrix& m : {swap, diag, testing::reference_matrix()}) {
    for (unsigned photons = 1; photons <= 3; ++photons) {
      EXPECT_TRUE(matrices_near(lift_via_js_exponential(ModeUnitary(m), photons).matrix(),
                                lift_unitary(ModeUnitary(m), photons).matrix(), 1e-9));
    }
  }
}

}  // namespace
}  // namespace lop
