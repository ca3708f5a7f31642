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

#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace lop {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Global tolerance for invariant checks.
inline constexpr double kTolerance = 1e-10;

/// Default seed for every randomized routine.
inline constexpr std::uint64_t kDefaultSeed = 0x4c4f50ULL;

using Rng = std::mt19937_64;

/// max_ij |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// max_ij |(M^dagger M - I)_ij|.
double unitarity_defect(const Matrix& m);

/// max_ij |(A + A^dagger)_ij|.
double anti_hermiticity_defect(const Matrix& a);

/// Haar-distributed unitary (QR of a complex Ginibre matrix with the phase
/// of R's diagonal divided out).
Matrix random_unitary(int n, Rng& rng);

/// Uniformly distributed unit vector in C^n.
Vector random_unit_vector(int n, Rng& rng);

/// Completes the leading columns of `m` (assumed orthonormal) to a unitary
/// by Gram-Schmidt against the standard basis.
Matrix complete_to_unitary(const Matrix& leading_columns);

}  // namespace lop
