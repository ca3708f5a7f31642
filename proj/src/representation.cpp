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

#include "lop/representation.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "lop/errors.hpp"
#include "lop/permanent.hpp"

namespace lop {

ModeUnitary::ModeUnitary(Matrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw std::invalid_argument("ModeUnitary: matrix must be square and non-empty");
  }
  const double defect = unitarity_defect(m_);
  if (!(defect <= tol)) {
    std::ostringstream os;
    os << "ModeUnitary: matrix is not unitary (max |M^dag M - I| = " << defect << ")";
    throw NumericalError(os.str());
  }
}

ModeUnitary ModeUnitary::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return ModeUnitary(Matrix::Identity(k, k));
}

ModeUnitary ModeUnitary::operator*(const ModeUnitary& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("ModeUnitary: size mismatch in product");
  return ModeUnitary(m_ * rhs.m_);
}

AlgebraElement::AlgebraElement(Matrix a, double tol) : a_(std::move(a)) {
  if (a_.rows() != a_.cols() || a_.rows() == 0) {
    throw std::invalid_argument("AlgebraElement: matrix must be square and non-empty");
  }
  if (!(anti_hermiticity_defect(a_) <= tol)) {
    throw std::invalid_argument("AlgebraElement: matrix is not anti-Hermitian");
  }
}

LiftedUnitary::LiftedUnitary(BasisPtr basis, Matrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(basis_->size());
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw std::invalid_argument("LiftedUnitary: matrix shape does not match the basis");
  }
}

namespace {

// Row/column index list with index i repeated occ[i] times.
std::vector<Eigen::Index> repeated_indices(const OccupationVector& occ) {
  std::vector<Eigen::Index> idx;
  idx.reserve(occ.total());
  for (std::size_t i = 0; i < occ.modes(); ++i)
    for (unsigned r = 0; r < occ[i]; ++r) idx.push_back(static_cast<Eigen::Index>(i));
  return idx;
}

}  // namespace

LiftedUnitary lift_unitary(const ModeUnitary& m, unsigned photons) {
  auto basis = make_basis(m.size(), photons);
  const auto d = static_cast<Eigen::Index>(basis->size());
  Matrix out(d, d);
  std::vector<std::vector<Eigen::Index>> reps;
  std::vector<double> norms;
  reps.reserve(basis->size());
  for (const auto& occ : basis->states()) {
    reps.push_back(repeated_indices(occ));
    norms.push_back(occ.factorial_product());
  }
  const auto k = static_cast<Eigen::Index>(photons);
  Matrix sub(k, k);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const auto& rows = reps[static_cast<std::size_t>(r)];
      const auto& cols = reps[static_cast<std::size_t>(c)];
      for (Eigen::Index a = 0; a < k; ++a)
        for (Eigen::Index b = 0; b < k; ++b)
          sub(a, b) = m.matrix()(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]);
      out(r, c) = permanent(sub) /
                  std::sqrt(norms[static_cast<std::size_t>(r)] * norms[static_cast<std::size_t>(c)]);
    }
  }
  return LiftedUnitary(std::move(basis), std::move(out));
}

Matrix number_transfer_matrix(const FockBasis& basis, std::size_t i, std::size_t j) {
  if (i >= basis.modes() || j >= basis.modes()) {
    throw std::invalid_argument("number_transfer_matrix: mode index out of range");
  }
  const auto d = static_cast<Eigen::Index>(basis.size());
  Matrix out = Matrix::Zero(d, d);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const OccupationVector& in = basis[col];
    if (in[j] == 0) continue;
    std::vector<unsigned> occ = in.counts();
    // a_j |..n_j..> = sqrt(n_j) |..n_j-1..>, then a_i^dag multiplies by
    // sqrt(n_i' + 1) with n_i' the count after the annihilation.
    double amp = std::sqrt(static_cast<double>(occ[j]));
    occ[j] -= 1;
    amp *= std::sqrt(static_cast<double>(occ[i] + 1));
    occ[i] += 1;
    const auto row = basis.require_index(OccupationVector(std::move(occ)));
    out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amp;
  }
  return out;
}

Matrix js_operator_matrix(const AlgebraElement& a, unsigned photons) {
  const FockBasis basis(a.size(), photons);
  const auto d = static_cast<Eigen::Index>(basis.size());
  Matrix out = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const Complex coeff = a.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (coeff == Complex(0.0)) continue;
      out += coeff * number_transfer_matrix(basis, i, j);
    }
  }
  return out;
}

AlgebraElement principal_log(const ModeUnitary& m) {
  // A unitary is normal, so its complex Schur form is diagonal up to rounding.
  Eigen::ComplexSchur<Matrix> schur(m.matrix());
  if (schur.info() != Eigen::Success) throw NumericalError("principal_log: Schur decomposition failed");
  const Matrix& q = schur.matrixU();
  const Matrix& t = schur.matrixT();
  Vector logs(t.rows());
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    const Complex lambda = t(i, i) / std::abs(t(i, i));
    logs(i) = Complex(0.0, std::arg(lambda));
  }
  Matrix a = q * logs.asDiagonal() * q.adjoint();
  a = (a - a.adjoint()) / 2.0;
  const double err = max_abs_diff(a.exp(), m.matrix());
  if (!(err <= 1e-9)) {
    std::ostringstream os;
    os << "principal_log: logarithm branch failure (|exp(log M) - M| = " << err << ")";
    throw NumericalError(os.str());
  }
  return AlgebraElement(std::move(a));
}

LiftedUnitary lift_via_js_exponential(const ModeUnitary& m, unsigned photons) {
  Eigen::ComplexEigenSolver<Matrix> es(m.matrix(), false);
  const Vector eig = es.eigenvalues();
  auto distance_to_cut = [&](double delta) {
    double best = INFINITY;
    for (Eigen::Index i = 0; i < eig.size(); ++i)
      best = std::min(best, std::abs(std::polar(1.0, delta) * eig(i) + 1.0));
    return best;
  };

  double delta = 0.0;
  if (distance_to_cut(0.0) < 1e-12) {
    // Rotate the spectrum away from -1; N eigenvalues block at most N of the
    // candidate rotations, so one of 2N + 1 evenly spaced ones is clear.
    const int candidates = 2 * static_cast<int>(m.size()) + 1;
    double best = -1.0;
    for (int c = 1; c <= candidates; ++c) {
      const double trial = M_PI * c / (candidates + 1);
      const double dist = distance_to_cut(trial);
      if (dist > best) {
        best = dist;
        delta = trial;
      }
    }
  }

  const ModeUnitary shifted = delta == 0.0 ? m : ModeUnitary(std::polar(1.0, delta) * m.matrix());
  const AlgebraElement a = principal_log(shifted);
  Matrix u = js_operator_matrix(a, photons).exp();
  if (delta != 0.0) u *= std::polar(1.0, -delta * photons);
  return LiftedUnitary(make_basis(m.size(), photons), std::move(u));
}

PureState apply(const LiftedUnitary& l, const PureState& s) {
  if (!(l.basis() == s.basis())) throw BasisMismatch("apply: state and operator live on different sectors");
  return PureState(l.basis_ptr(), l.matrix() * s.amplitudes());
}

}  // namespace lop
