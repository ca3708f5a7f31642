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

// The action of a passive linear-optical network on n-photon states.
//
// A network on N modes is a unitary M acting on the mode operators,
// b_i = M_ij a_j. It lifts to a unitary on every photon-number sector,
// computed here two ways:
//
//   * lift_unitary: multi-photon amplitudes as permanents,
//       <m| U |n> = perm(M[m|n]) / sqrt(prod m_i! prod n_j!),
//     where M[m|n] repeats row i m_i times and column j n_j times;
//   * lift_via_js_exponential: U = exp(sum_ij A_ij a_i^dag a_j) with
//     A = log M.
//
// Both satisfy lift(M, 1) == M and lift(M1 M2) == lift(M1) lift(M2).

#pragma once

#include <cstddef>

#include "lop/fock.hpp"
#include "lop/linalg.hpp"

namespace lop {

/// N x N unitary acting on mode operators. Unitarity is checked on
/// construction.
class ModeUnitary {
 public:
  explicit ModeUnitary(Matrix m, double tol = kTolerance);

  static ModeUnitary identity(std::size_t n);

  std::size_t size() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  ModeUnitary operator*(const ModeUnitary& rhs) const;

 private:
  Matrix m_;
};

/// Element of u(N): an anti-Hermitian N x N matrix.
class AlgebraElement {
 public:
  explicit AlgebraElement(Matrix a, double tol = kTolerance);

  std::size_t size() const { return static_cast<std::size_t>(a_.rows()); }
  const Matrix& matrix() const { return a_; }

 private:
  Matrix a_;
};

/// Lifted unitary restricted to one photon-number sector.
class LiftedUnitary {
 public:
  LiftedUnitary(BasisPtr basis, Matrix matrix);

  const FockBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  BasisPtr basis_;
  Matrix matrix_;
};

/// Permanent route.
LiftedUnitary lift_unitary(const ModeUnitary& m, unsigned photons);

/// Matrix of a_i^dag a_j on `basis` (modes are 0-based here).
Matrix number_transfer_matrix(const FockBasis& basis, std::size_t i, std::size_t j);

/// sum_ij A_ij a_i^dag a_j on the n-photon sector.
Matrix js_operator_matrix(const AlgebraElement& a, unsigned photons);

/// Principal logarithm of a unitary via its Schur form. Throws
/// NumericalError if exp(log M) fails to reproduce M.
AlgebraElement principal_log(const ModeUnitary& m);

/// Exponential route. When an eigenvalue of M sits within 1e-12 of -1 the
/// branch cut is moved by a global phase e^{i delta}, and the n-photon phase
/// e^{-i n delta} is removed from the result.
LiftedUnitary lift_via_js_exponential(const ModeUnitary& m, unsigned photons);

/// L |s>. Throws BasisMismatch unless s lives on L's sector.
PureState apply(const LiftedUnitary& l, const PureState& s);

}  // namespace lop
