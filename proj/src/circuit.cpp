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

#include "lop/circuit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lop {

namespace {

void check_mode(std::size_t mode, std::size_t modes) {
  if (mode < 1 || mode > modes) {
    throw std::invalid_argument("circuit element: mode " + std::to_string(mode) +
                                " outside [1, " + std::to_string(modes) + "]");
  }
}

void check_pair(std::size_t a, std::size_t b, std::size_t modes) {
  check_mode(a, modes);
  check_mode(b, modes);
  if (a == b) throw std::invalid_argument("circuit element: the two modes must differ");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Left-multiplies rows (i, j) of `w` by the 2x2 block `b`.
void rotate_rows(Matrix& w, Eigen::Index i, Eigen::Index j, const Eigen::Matrix2cd& b) {
  const Eigen::RowVectorXcd ri = w.row(i);
  const Eigen::RowVectorXcd rj = w.row(j);
  w.row(i) = b(0, 0) * ri + b(0, 1) * rj;
  w.row(j) = b(1, 0) * ri + b(1, 1) * rj;
}

Eigen::Matrix2cd beam_splitter_block(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2cd b;
  b << c, std::polar(s, phi), -std::polar(s, -phi), c;
  return b;
}

}  // namespace

ModeUnitary element_matrix(const CircuitElement& e, std::size_t modes) {
  const auto n = static_cast<Eigen::Index>(modes);
  Matrix m = Matrix::Identity(n, n);
  std::visit(Overloaded{
                 [&](const BeamSplitter& bs) {
                   check_pair(bs.mode_a, bs.mode_b, modes);
                   const auto i = static_cast<Eigen::Index>(bs.mode_a - 1);
                   const auto j = static_cast<Eigen::Index>(bs.mode_b - 1);
                   const Eigen::Matrix2cd b = beam_splitter_block(bs.theta, bs.phi);
                   m(i, i) = b(0, 0);
                   m(i, j) = b(0, 1);
                   m(j, i) = b(1, 0);
                   m(j, j) = b(1, 1);
                 },
                 [&](const PhaseShifter& ps) {
                   check_mode(ps.mode, modes);
                   const auto i = static_cast<Eigen::Index>(ps.mode - 1);
                   m(i, i) = std::polar(1.0, ps.phase);
                 },
                 [&](const Swap& sw) {
                   check_pair(sw.mode_a, sw.mode_b, modes);
                   const auto i = static_cast<Eigen::Index>(sw.mode_a - 1);
                   const auto j = static_cast<Eigen::Index>(sw.mode_b - 1);
                   m(i, i) = 0.0;
                   m(j, j) = 0.0;
                   m(i, j) = 1.0;
                   m(j, i) = 1.0;
                 },
             },
             e);
  return ModeUnitary(std::move(m));
}

ModeUnitary recompose(const Circuit& c) {
  if (c.modes == 0) throw std::invalid_argument("recompose: circuit has no modes");
  const auto n = static_cast<Eigen::Index>(c.modes);
  Matrix m = Matrix::Identity(n, n);
  for (const auto& e : c.elements) m = element_matrix(e, c.modes).matrix() * m;
  return ModeUnitary(std::move(m));
}

Circuit decompose(const ModeUnitary& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Matrix w = m.matrix();
  std::vector<BeamSplitter> found;

  // Null the sub-diagonal column by column, bottom-up, with B^dagger on
  // adjacent rows (r-1, r). Then B_1 ... B_K D = M with D diagonal.
  for (Eigen::Index col = 0; col + 1 < n; ++col) {
    for (Eigen::Index r = n - 1; r > col; --r) {
      const Complex u = w(r - 1, col);
      const Complex v = w(r, col);
      if (std::abs(v) <= 1e-15) continue;
      const double theta = std::atan2(std::abs(v), std::abs(u));
      // e^{-i phi} sin(theta) u + cos(theta) v = 0
      const double phi = std::abs(u) == 0.0 ? 0.0 : std::remainder(std::arg(u) - std::arg(v) + M_PI, 2 * M_PI);
      rotate_rows(w, r - 1, r, beam_splitter_block(theta, phi).adjoint());
      found.push_back({static_cast<std::size_t>(r), static_cast<std::size_t>(r + 1), theta, phi});
    }
  }

  Circuit out;
  out.modes = m.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double phase = std::arg(w(i, i));
    if (std::abs(phase) > 1e-14) out.elements.emplace_back(PhaseShifter{static_cast<std::size_t>(i + 1), phase});
  }
  for (auto it = found.rbegin(); it != found.rend(); ++it) out.elements.emplace_back(*it);
  return out;
}

std::size_t count_beam_splitters(const Circuit& c) {
  std::size_t k = 0;
  for (const auto& e : c.elements) k += std::holds_alternative<BeamSplitter>(e) ? 1 : 0;
  return k;
}

}  // namespace lop
