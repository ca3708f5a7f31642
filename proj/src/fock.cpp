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

#include "lop/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lop/errors.hpp"

namespace lop {

unsigned OccupationVector::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0u);
}

OccupationVector OccupationVector::append(const OccupationVector& tail) const {
  std::vector<unsigned> out = counts_;
  out.insert(out.end(), tail.counts_.begin(), tail.counts_.end());
  return OccupationVector(std::move(out));
}

OccupationVector OccupationVector::head(std::size_t k) const {
  if (k > counts_.size()) throw std::invalid_argument("OccupationVector::head: k out of range");
  return OccupationVector(std::vector<unsigned>(counts_.begin(), counts_.begin() + k));
}

OccupationVector OccupationVector::tail_from(std::size_t k) const {
  if (k > counts_.size()) throw std::invalid_argument("OccupationVector::tail_from: k out of range");
  return OccupationVector(std::vector<unsigned>(counts_.begin() + k, counts_.end()));
}

double OccupationVector::factorial_product() const {
  double p = 1.0;
  for (unsigned c : counts_)
    for (unsigned i = 2; i <= c; ++i) p *= i;
  return p;
}

std::string OccupationVector::to_string() const {
  std::ostringstream os;
  os << '|';
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) os << ',';
    os << counts_[i];
  }
  os << '>';
  return os.str();
}

std::uint64_t dimension(std::size_t modes, unsigned photons) {
  if (modes == 0) throw std::invalid_argument("dimension: number of modes must be positive");
  // C(n + N - 1, k) with k = min(n, N - 1); each partial product is itself a
  // binomial coefficient, so the division is exact.
  const std::uint64_t top = static_cast<std::uint64_t>(photons) + modes - 1;
  const std::uint64_t k = std::min<std::uint64_t>(photons, modes - 1);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t factor = (top - k + i) / (i / g);
    r /= g;
    if (r > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("dimension: result exceeds 64 bits");
    }
    r *= factor;
  }
  return r;
}

namespace {

void enumerate_sector(std::size_t modes, unsigned photons, std::vector<unsigned>& prefix,
                      std::vector<OccupationVector>& out) {
  if (prefix.size() + 1 == modes) {
    prefix.push_back(photons);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned c = photons + 1; c-- > 0;) {
    prefix.push_back(c);
    enumerate_sector(modes, photons - c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

FockBasis::FockBasis(std::size_t modes, unsigned photons) : FockBasis(modes, photons, photons) {}

FockBasis::FockBasis(std::size_t modes, unsigned min_photons, unsigned max_photons)
    : modes_(modes), min_photons_(min_photons), max_photons_(max_photons) {
  if (modes == 0) throw std::invalid_argument("FockBasis: number of modes must be positive");
  if (min_photons > max_photons) throw std::invalid_argument("FockBasis: empty photon range");
  std::uint64_t total = 0;
  for (unsigned n = min_photons; n <= max_photons; ++n) total += dimension(modes, n);
  if (total > 10000) {
    throw std::invalid_argument("FockBasis: dimension " + std::to_string(total) +
                                " exceeds the supported limit of 10000");
  }
  states_.reserve(total);
  std::vector<unsigned> prefix;
  for (unsigned n = max_photons + 1; n-- > min_photons;) enumerate_sector(modes, n, prefix, states_);
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

FockBasis FockBasis::truncated(std::size_t modes, unsigned min_photons, unsigned max_photons) {
  return FockBasis(modes, min_photons, max_photons);
}

std::optional<std::size_t> FockBasis::index_of(const OccupationVector& occ) const {
  auto it = index_.find(occ);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FockBasis::require_index(const OccupationVector& occ) const {
  auto idx = index_of(occ);
  if (!idx) throw std::invalid_argument("FockBasis: " + occ.to_string() + " is not in the basis");
  return *idx;
}

FockBasis enumerate_basis(std::size_t modes, unsigned photons) { return FockBasis(modes, photons); }

BasisPtr make_basis(std::size_t modes, unsigned photons) {
  return std::make_shared<const FockBasis>(modes, photons);
}

// --- PureState ---------------------------------------------------------------

PureState::PureState(BasisPtr basis, Vector amplitudes, double tol)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (!basis_) throw std::invalid_argument("PureState: null basis");
  if (static_cast<std::size_t>(amplitudes_.size()) != basis_->size()) {
    throw std::invalid_argument("PureState: amplitude count does not match the basis size");
  }
  if (!amplitudes_.allFinite()) throw std::invalid_argument("PureState: non-finite amplitude");
  if (amplitudes_.squaredNorm() > 1.0 + tol) {
    throw std::invalid_argument("PureState: squared norm exceeds 1");
  }
}

PureState PureState::basis_state(const OccupationVector& occ) {
  auto basis = make_basis(occ.modes(), occ.total());
  Vector v = Vector::Zero(static_cast<Eigen::Index>(basis->size()));
  v(static_cast<Eigen::Index>(basis->require_index(occ))) = 1.0;
  return PureState(basis, std::move(v));
}

PureState PureState::zero(BasisPtr basis) {
  const auto n = static_cast<Eigen::Index>(basis->size());
  return PureState(std::move(basis), Vector::Zero(n));
}

Complex PureState::amplitude(const OccupationVector& occ) const {
  auto idx = basis_->index_of(occ);
  return idx ? amplitudes_(static_cast<Eigen::Index>(*idx)) : Complex(0.0);
}

PureState PureState::normalized() const {
  const double n = amplitudes_.norm();
  if (n == 0.0) throw NumericalError("PureState::normalized: zero vector");
  return PureState(basis_, amplitudes_ / n);
}

// --- MixedState --------------------------------------------------------------

MixedState::MixedState(BasisPtr basis, Matrix matrix, double tol)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  if (!basis_) throw std::invalid_argument("MixedState: null basis");
  const auto d = static_cast<Eigen::Index>(basis_->size());
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw std::invalid_argument("MixedState: matrix shape does not match the basis size");
  }
  if (d == 0) return;
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw NumericalError("MixedState: matrix is not Hermitian");
  }
  const Matrix herm = (matrix_ + matrix_.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) {
    throw NumericalError("MixedState: matrix is not positive semidefinite");
  }
  if (trace() > 1.0 + tol || trace() < -tol) {
    throw NumericalError("MixedState: trace outside [0, 1]");
  }
}

MixedState MixedState::from_pure(const PureState& s) {
  return MixedState(s.basis_ptr(), s.amplitudes() * s.amplitudes().adjoint());
}

// --- state algebra -----------------------------------------------------------

PureState tensor_with_ancillas(const PureState& state, const OccupationVector& ancillas) {
  const FockBasis& in = state.basis();
  if (!in.is_sector()) throw std::invalid_argument("tensor_with_ancillas: input must be a single sector");
  auto out = make_basis(in.modes() + ancillas.modes(), in.photons() + ancillas.total());
  Vector v = Vector::Zero(static_cast<Eigen::Index>(out->size()));
  for (std::size_t i = 0; i < in.size(); ++i) {
    const auto j = out->require_index(in[i].append(ancillas));
    v(static_cast<Eigen::Index>(j)) = state.amplitudes()(static_cast<Eigen::Index>(i));
  }
  return PureState(out, std::move(v));
}

PureState tensor_with_ancilla(const PureState& state, unsigned m) {
  return tensor_with_ancillas(state, OccupationVector{m});
}

Complex overlap(const PureState& s1, const PureState& s2) {
  if (!(s1.basis() == s2.basis())) throw BasisMismatch("overlap: states live on different bases");
  return s1.amplitudes().dot(s2.amplitudes());
}

PureState embed(const PureState& state, BasisPtr target) {
  if (target->modes() != state.basis().modes()) throw BasisMismatch("embed: mode count differs");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(target->size()));
  for (std::size_t i = 0; i < state.size(); ++i) {
    auto j = target->index_of(state.basis()[i]);
    if (!j) throw BasisMismatch("embed: " + state.basis()[i].to_string() + " not in target basis");
    v(static_cast<Eigen::Index>(*j)) = state.amplitudes()(static_cast<Eigen::Index>(i));
  }
  return PureState(std::move(target), std::move(v));
}

PureState project_ancillas(const PureState& state, const OccupationVector& pattern) {
  const FockBasis& in = state.basis();
  if (!in.is_sector()) throw std::invalid_argument("project_ancillas: input must be a single sector");
  if (pattern.modes() == 0 || pattern.modes() >= in.modes()) {
    throw std::invalid_argument("project_ancillas: ancilla count must be in [1, modes)");
  }
  if (pattern.total() > in.photons()) {
    throw std::invalid_argument("project_ancillas: outcome has more photons than the state");
  }
  const std::size_t kept = in.modes() - pattern.modes();
  auto out = make_basis(kept, in.photons() - pattern.total());
  Vector v(static_cast<Eigen::Index>(out->size()));
  for (std::size_t i = 0; i < out->size(); ++i) {
    const auto j = in.require_index((*out)[i].append(pattern));
    v(static_cast<Eigen::Index>(i)) = state.amplitudes()(static_cast<Eigen::Index>(j));
  }
  return PureState(out, std::move(v));
}

}  // namespace lop
