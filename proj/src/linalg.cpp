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

#include "lop/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace lop {

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  if (m.size() == 0) return 0.0;
  const Matrix id = Matrix::Identity(m.rows(), m.cols());
  return max_abs_diff(m.adjoint() * m, id);
}

double anti_hermiticity_defect(const Matrix& a) {
  if (a.rows() != a.cols()) return INFINITY;
  if (a.size() == 0) return 0.0;
  return (a + a.adjoint()).cwiseAbs().maxCoeff();
}

Matrix random_unitary(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    const Complex ph = mag > 0 ? r(j, j) / mag : Complex(1.0);
    q.col(j) *= ph;
  }
  return q;
}

Vector random_unit_vector(int n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

Matrix complete_to_unitary(const Matrix& leading_columns) {
  const int n = static_cast<int>(leading_columns.rows());
  const int k = static_cast<int>(leading_columns.cols());
  if (k > n) throw std::invalid_argument("complete_to_unitary: more columns than rows");
  Matrix out(n, n);
  out.leftCols(k) = leading_columns;
  int filled = k;
  // Pick, at each step, the standard basis vector with the largest residual.
  while (filled < n) {
    int best = -1;
    double best_norm = -1.0;
    Vector best_vec;
    for (int e = 0; e < n; ++e) {
      Vector v = Vector::Unit(n, e);
      for (int pass = 0; pass < 2; ++pass) {
        for (int c = 0; c < filled; ++c) v -= out.col(c) * out.col(c).dot(v);
      }
      const double nv = v.norm();
      if (nv > best_norm) {
        best_norm = nv;
        best = e;
        best_vec = v;
      }
    }
    if (best < 0 || best_norm < 1e-8) {
      throw std::runtime_error("complete_to_unitary: leading columns are not orthonormal");
    }
    out.col(filled++) = best_vec / best_norm;
  }
  return out;
}

}  // namespace lop
