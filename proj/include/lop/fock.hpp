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

// Fock bases of N bosonic modes and the state containers built on them.
//
// A FockBasis is either a single photon-number sector H^(N)_n or, for the
// conditional states produced by imperfect detectors, a direct sum of
// consecutive sectors. Within a sector states are ordered
// anti-lexicographically (mode 1 descending, then mode 2, ...), so for two
// modes and two photons the order is |20>, |11>, |02>. Sectors in a direct
// sum are listed from the highest photon number down.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lop/linalg.hpp"

namespace lop {

/// Photon counts per mode, e.g. |2,0,1>.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<unsigned> counts) : counts_(std::move(counts)) {}
  OccupationVector(std::initializer_list<unsigned> counts) : counts_(counts) {}

  std::size_t modes() const { return counts_.size(); }
  unsigned total() const;
  unsigned operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<unsigned>& counts() const { return counts_; }

  /// Concatenation: this state followed by `tail` on additional modes.
  OccupationVector append(const OccupationVector& tail) const;
  /// The first `k` modes.
  OccupationVector head(std::size_t k) const;
  /// Modes `k..N-1`.
  OccupationVector tail_from(std::size_t k) const;

  /// Product of factorials of the counts.
  double factorial_product() const;

  std::string to_string() const;  // "|2,0,1>"

  auto operator<=>(const OccupationVector&) const = default;

 private:
  std::vector<unsigned> counts_;
};

/// dim H^(N)_n = (n+N-1)! / (n! (N-1)!), via the multiplicative binomial
/// recurrence. Throws std::invalid_argument for N = 0 and std::overflow_error
/// if the result does not fit in 64 bits.
std::uint64_t dimension(std::size_t modes, unsigned photons);

class FockBasis {
 public:
  /// The single sector with exactly `photons` photons.
  FockBasis(std::size_t modes, unsigned photons);

  /// Direct sum of the sectors min_photons..max_photons (highest first).
  static FockBasis truncated(std::size_t modes, unsigned min_photons, unsigned max_photons);

  std::size_t modes() const { return modes_; }
  /// Photon number of a single sector; the top sector of a direct sum.
  unsigned photons() const { return max_photons_; }
  unsigned min_photons() const { return min_photons_; }
  unsigned max_photons() const { return max_photons_; }
  bool is_sector() const { return min_photons_ == max_photons_; }

  std::size_t size() const { return states_.size(); }
  const std::vector<OccupationVector>& states() const { return states_; }
  const OccupationVector& operator[](std::size_t i) const { return states_[i]; }

  std::optional<std::size_t> index_of(const OccupationVector& occ) const;
  /// Like index_of but throws std::invalid_argument when absent.
  std::size_t require_index(const OccupationVector& occ) const;

  bool operator==(const FockBasis& other) const {
    return modes_ == other.modes_ && min_photons_ == other.min_photons_ &&
           max_photons_ == other.max_photons_;
  }

 private:
  FockBasis(std::size_t modes, unsigned min_photons, unsigned max_photons);

  std::size_t modes_;
  unsigned min_photons_;
  unsigned max_photons_;
  std::vector<OccupationVector> states_;
  std::map<OccupationVector, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

/// Canonically ordered basis of H^(N)_n.
FockBasis enumerate_basis(std::size_t modes, unsigned photons);
BasisPtr make_basis(std::size_t modes, unsigned photons);

/// A possibly unnormalized state vector (squared norm at most 1 + tol).
class PureState {
 public:
  PureState(BasisPtr basis, Vector amplitudes, double tol = kTolerance);

  /// The number state |occ>.
  static PureState basis_state(const OccupationVector& occ);
  static PureState zero(BasisPtr basis);

  const FockBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const Vector& amplitudes() const { return amplitudes_; }
  std::size_t size() const { return static_cast<std::size_t>(amplitudes_.size()); }

  Complex amplitude(const OccupationVector& occ) const;
  double norm_squared() const { return amplitudes_.squaredNorm(); }

  /// Throws NumericalError for the zero vector.
  PureState normalized() const;

 private:
  BasisPtr basis_;
  Vector amplitudes_;
};

/// Density matrix: Hermitian, positive semidefinite, trace at most 1 + tol.
class MixedState {
 public:
  MixedState(BasisPtr basis, Matrix matrix, double tol = kTolerance);

  static MixedState from_pure(const PureState& s);

  const FockBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const Matrix& matrix() const { return matrix_; }
  double trace() const { return matrix_.trace().real(); }

 private:
  BasisPtr basis_;
  Matrix matrix_;
};

/// |psi> -> |psi>|m>: appends one mode holding `m` photons.
PureState tensor_with_ancilla(const PureState& state, unsigned m);
/// Appends several ancilla modes with the given occupations.
PureState tensor_with_ancillas(const PureState& state, const OccupationVector& ancillas);

/// <s1|s2>, conjugate-linear in the first argument.
Complex overlap(const PureState& s1, const PureState& s2);

/// Re-expresses `state` on a larger basis that contains its basis states
/// (e.g. a sector inside a truncated direct sum).
PureState embed(const PureState& state, BasisPtr target);

/// Unnormalized branch <pattern|_anc |state> for the last
/// `pattern.modes()` modes, as a state on the remaining modes. The photon
/// count of the result is state.photons() - pattern.total(); requesting more
/// ancilla photons than the sector holds is an std::invalid_argument.
PureState project_ancillas(const PureState& state, const OccupationVector& pattern);

}  // namespace lop
