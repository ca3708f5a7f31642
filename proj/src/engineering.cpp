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

#include "lop/engineering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lop/errors.hpp"
#include "lop/optimize.hpp"

namespace lop {

namespace {

const double kSqrt2 = std::sqrt(2.0);

using Vec2 = Eigen::Vector2cd;

// Inner product conj(a) . b.
Complex inner(const Vec2& a, const Vec2& b) { return a.dot(b); }

void require_qutrit(const PureState& s, const char* who) {
  if (s.basis().modes() != 2 || !s.basis().is_sector() || s.basis().photons() != 2) {
    throw std::invalid_argument(std::string(who) + ": state must live on two modes with two photons");
  }
}

struct Factorization {
  Vec2 first;   // unit vector (alpha, beta) direction
  Vec2 second;  // (gamma, delta) for the unit `first`
};

// All ways of writing A/sqrt2 x^2 + B xy + C/sqrt2 y^2 as a product of linear
// forms (f0 x + f1 y)(g0 x + g1 y) with |f| = 1. The ratio t = f1/f0 solves
// A t^2 - sqrt2 B t + C = 0; its roots are kept in projective form
// [num : den] so that vanishing A or C needs no special case.
std::vector<Factorization> factorizations(Complex a, Complex b, Complex c) {
  const Complex lin = -kSqrt2 * b;
  const Complex disc = std::sqrt(lin * lin - 4.0 * a * c);
  const Complex plus = lin + disc;
  const Complex minus = lin - disc;
  const Complex q = -0.5 * (std::abs(plus) >= std::abs(minus) ? plus : minus);

  std::vector<std::pair<Complex, Complex>> roots;  // t = num / den
  if (std::abs(q) > 0.0 || std::abs(a) > 0.0) roots.emplace_back(q, a);
  if (std::abs(c) > 0.0 || std::abs(q) > 0.0) roots.emplace_back(c, q);
  if (roots.size() == 1) roots.push_back(roots.front());  // double root

  std::vector<Factorization> out;
  for (const auto& [num, den] : roots) {
    Vec2 f(den, num);
    const double nf = f.norm();
    if (nf == 0.0) continue;
    f /= nf;
    Vec2 g;
    if (std::abs(f(0)) >= std::abs(f(1))) {
      g(0) = a / (kSqrt2 * f(0));
      g(1) = (b - f(1) * g(0)) / f(0);
    } else {
      g(1) = c / (kSqrt2 * f(1));
      g(0) = (b - f(0) * g(1)) / f(1);
    }
    out.push_back({f, g});
  }
  return out;
}

double constraint_residual(const ExtensionParams& p, Complex a, Complex b, Complex c) {
  return std::max({std::abs(kSqrt2 * p.alpha * p.gamma - a), std::abs(p.alpha * p.delta + p.beta * p.gamma - b),
                   std::abs(kSqrt2 * p.beta * p.delta - c)});
}

double overlap_modulus(const PureState& a, const PureState& b) { return std::abs(overlap(a, b)); }

}  // namespace

double normalization_residual(const ExtensionParams& p) {
  return 2.0 * std::norm(p.alpha * p.gamma) + std::norm(p.alpha * p.delta + p.beta * p.gamma) +
         2.0 * std::norm(p.beta * p.delta) - 1.0;
}

ExtensionMatrix build_extension_matrix(const ExtensionParams& p, double tol) {
  const double s = std::norm(p.alpha) + std::norm(p.beta);
  if (s > 1.0 + tol) throw std::invalid_argument("build_extension_matrix: |alpha|^2 + |beta|^2 exceeds 1");
  const Complex ip = std::conj(p.alpha) * p.gamma + std::conj(p.beta) * p.delta;

  Matrix cols = Matrix::Zero(3, 2);
  double k = 0.0;
  bool boundary = false;
  if (1.0 - s <= tol) {
    boundary = true;
    k = std::sqrt(std::norm(p.gamma) + std::norm(p.delta));
    if (k == 0.0) throw std::invalid_argument("build_extension_matrix: gamma and delta both vanish");
    if (std::abs(ip) > 1e-10 * std::max(1.0, k)) {
      std::ostringstream os;
      os << "build_extension_matrix: |alpha|^2 + |beta|^2 = 1 requires alpha* gamma + beta* delta = 0 (got |.| = "
         << std::abs(ip) << ")";
      throw InfeasibleError(os.str());
    }
    cols(0, 0) = p.alpha;
    cols(1, 0) = p.beta;
    cols(0, 1) = p.gamma / k;
    cols(1, 1) = p.delta / k;
  } else {
    const double e1 = std::sqrt(1.0 - s);
    const Complex e2 = -ip / e1;
    k = std::sqrt(std::norm(p.gamma) + std::norm(p.delta) + std::norm(e2));
    if (k == 0.0) throw std::invalid_argument("build_extension_matrix: gamma and delta both vanish");
    cols(0, 0) = p.alpha;
    cols(1, 0) = p.beta;
    cols(2, 0) = e1;
    cols(0, 1) = p.gamma / k;
    cols(1, 1) = p.delta / k;
    cols(2, 1) = e2 / k;
  }
  return {ModeUnitary(complete_to_unitary(cols)), k, boundary};
}

double extension_k_squared(const ExtensionParams& p, double tol) {
  const double k = build_extension_matrix(p, tol).k;
  return k * k;
}

double success_probability(const ExtensionParams& p, double tol) {
  const double res = normalization_residual(p);
  if (!(std::abs(res) <= tol)) {
    std::ostringstream os;
    os << "success_probability: normalization condition violated by " << res;
    throw std::invalid_argument(os.str());
  }
  return 1.0 / extension_k_squared(p);
}

PureState qutrit_state(Complex a, Complex b, Complex c) {
  Vector v(3);
  v << a, b, c;
  return PureState(make_basis(2, 2), std::move(v));
}

// --- post-selection ----------------------------------------------------------

PostSelection postselect(const ModeUnitary& u, const PureState& input, const OccupationVector& ancilla_in,
                         const OccupationVector& ancilla_out) {
  if (input.basis().modes() + ancilla_in.modes() != u.size()) {
    throw std::invalid_argument("postselect: input modes plus ancilla modes must equal the network size");
  }
  if (ancilla_out.modes() != ancilla_in.modes()) {
    throw std::invalid_argument("postselect: ancilla outcome has the wrong number of modes");
  }
  const PureState extended = tensor_with_ancillas(input, ancilla_in);
  if (ancilla_out.total() > extended.basis().photons()) {
    throw std::invalid_argument("postselect: outcome has more photons than the input");
  }
  const PureState evolved = apply(lift_unitary(u, extended.basis().photons()), extended);
  PureState branch = project_ancillas(evolved, ancilla_out);
  const double prob = branch.norm_squared();
  const bool heralded = prob > 1e-24;
  PureState state = heralded ? branch.normalized() : PureState::zero(branch.basis_ptr());
  return {std::move(branch), std::move(state), heralded ? prob : 0.0, heralded};
}

PostSelection postselect(const ModeUnitary& u, const PureState& input, unsigned ancilla_in, unsigned ancilla_out) {
  return postselect(u, input, OccupationVector{ancilla_in}, OccupationVector{ancilla_out});
}

std::vector<KrausBranch> kraus_branches(const ModeUnitary& u, unsigned ancilla_in, unsigned total_photons) {
  if (u.size() < 2) throw std::invalid_argument("kraus_branches: need at least one computational mode");
  if (ancilla_in > total_photons) throw std::invalid_argument("kraus_branches: ancilla holds more than the sector");
  const std::size_t comp = u.size() - 1;
  const LiftedUnitary lifted = lift_unitary(u, total_photons);
  const FockBasis& big = lifted.basis();
  auto in_basis = make_basis(comp, total_photons - ancilla_in);
  const OccupationVector anc_in{ancilla_in};

  std::vector<KrausBranch> out;
  for (unsigned m_out = 0; m_out <= total_photons; ++m_out) {
    auto out_basis = make_basis(comp, total_photons - m_out);
    const OccupationVector anc_out{m_out};
    Matrix op(static_cast<Eigen::Index>(out_basis->size()), static_cast<Eigen::Index>(in_basis->size()));
    for (std::size_t c = 0; c < in_basis->size(); ++c) {
      const auto col = big.require_index((*in_basis)[c].append(anc_in));
      for (std::size_t r = 0; r < out_basis->size(); ++r) {
        const auto row = big.require_index((*out_basis)[r].append(anc_out));
        op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            lifted.matrix()(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
      }
    }
    out.push_back({m_out, in_basis, std::move(out_basis), std::move(op), std::nullopt});
  }
  return out;
}

std::vector<KrausBranch> kraus_branches(const ModeUnitary& u, const PureState& input, unsigned ancilla_in) {
  if (input.basis().modes() + 1 != u.size()) {
    throw std::invalid_argument("kraus_branches: input must cover all but the last mode");
  }
  auto branches = kraus_branches(u, ancilla_in, input.basis().photons() + ancilla_in);
  for (auto& b : branches) b.probability = (b.op * input.amplitudes()).squaredNorm();
  return branches;
}

Matrix kraus_completeness(const std::vector<KrausBranch>& branches) {
  if (branches.empty()) return Matrix();
  const auto d = branches.front().op.cols();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& b : branches) sum += b.op.adjoint() * b.op;
  return sum;
}

// --- target compilation ------------------------------------------------------

EngineeringSolution solve_target(const PureState& target, double tol) {
  require_qutrit(target, "solve_target");
  if (!(std::abs(target.norm_squared() - 1.0) <= tol)) {
    throw std::invalid_argument("solve_target: target must be normalized");
  }
  const Complex a = target.amplitudes()(0);
  const Complex b = target.amplitudes()(1);
  const Complex c = target.amplitudes()(2);
  const PureState input = PureState::basis_state({1, 1});

  std::optional<EngineeringSolution> best;
  double best_distance = INFINITY;
  for (const auto& f : factorizations(a, b, c)) {
    // With |first| = 1: k^2(s) = v/s + w/(1 - s), s = |alpha|^2 + |beta|^2,
    // minimized at s = sqrt v / (sqrt v + sqrt w); w = 0 puts the optimum on
    // the boundary s = 1.
    const double v = f.second.squaredNorm();
    const double w = std::norm(inner(f.first, f.second));
    const double s = (w <= 1e-24 * v) ? 1.0 : std::sqrt(v) / (std::sqrt(v) + std::sqrt(w));
    const double root_s = std::sqrt(s);

    for (int quarter = 0; quarter < 4; ++quarter) {
      const Complex phase = std::polar(1.0, M_PI / 2 * quarter);
      const Vec2 first = f.first * (root_s * phase);
      const Vec2 second = f.second / (root_s * phase);
      const ExtensionParams params{first(0), first(1), second(0), second(1)};
      const ExtensionMatrix ext = build_extension_matrix(params);
      const double prob = 1.0 / (ext.k * ext.k);
      const double distance =
          (ext.matrix.matrix() - Matrix::Identity(3, 3)).norm();

      const bool better = !best || prob > best->success_probability + 1e-12 ||
                          (prob > best->success_probability - 1e-12 && distance < best_distance - 1e-12);
      if (!better) continue;
      best_distance = distance;
      best = EngineeringSolution{ext.matrix, params, ext.k, 0, 0, prob, target, target,
                                 constraint_residual(params, a, b, c)};
    }
  }
  if (!best) throw NumericalError("solve_target: no factorization found");

  if (!(best->constraint_residual <= tol)) {
    std::ostringstream os;
    os << "solve_target: constraint residual " << best->constraint_residual << " above tolerance";
    throw NumericalError(os.str());
  }
  if (!(std::abs(normalization_residual(best->params)) <= tol)) {
    throw NumericalError("solve_target: normalization condition violated");
  }
  // End-to-end check by simulation.
  const PostSelection sim = postselect(best->mode_unitary, input, 0, 0);
  if (!sim.heralded || std::abs(sim.probability - best->success_probability) > 1e-10 ||
      overlap_modulus(sim.state, target) < 1.0 - tol) {
    throw NumericalError("solve_target: simulated post-selection does not reproduce the target");
  }
  best->achieved_state = sim.state;
  return *best;
}

// --- multi-ancilla search ----------------------------------------------------

namespace {

struct BoundCandidate {
  std::size_t factorization;
  double log_ratio;  // log(q / p)
  double scale;      // fraction of the largest admissible scale, (0, 1]
  double phase_a;
  double phase_b;
};

// Builds a network on 2 + ancillas modes whose computational 2x2 block is
// [p e^{i a} f, q e^{i b} g]. The all-vacuum branch depends on nothing else.
// Returns nullopt when no unitary dilation with that many ancillas exists.
std::optional<ModeUnitary> dilate(const Factorization& fac, const BoundCandidate& cand, unsigned ancillas) {
  const double ratio = std::exp(cand.log_ratio);
  Eigen::Matrix2cd x;
  x.col(0) = fac.first * std::polar(1.0, cand.phase_a);
  x.col(1) = fac.second.normalized() * std::polar(ratio, cand.phase_b);
  const double sigma_max = Eigen::JacobiSVD<Eigen::Matrix2cd>(x).singularValues()(0);
  x *= cand.scale / sigma_max;

  // [X; Z] has orthonormal columns iff Z^dagger Z = I - X^dagger X.
  const Eigen::Matrix2cd defect = Eigen::Matrix2cd::Identity() - x.adjoint() * x;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(defect);
  const auto& d = es.eigenvalues();  // ascending
  const int needed = (d(0) > 1e-12 ? 1 : 0) + (d(1) > 1e-12 ? 1 : 0);
  if (needed > static_cast<int>(ancillas)) return std::nullopt;

  const auto n = static_cast<Eigen::Index>(2 + ancillas);
  Matrix cols = Matrix::Zero(n, 2);
  cols.topRows(2) = x;
  Eigen::Index row = 2;
  for (int i = 1; i >= 0 && row < n; --i) {
    if (d(i) <= 1e-12) continue;
    cols.row(row++) = std::sqrt(d(i)) * es.eigenvectors().col(i).adjoint();
  }
  try {
    return ModeUnitary(complete_to_unitary(cols));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

BoundSearchResult multi_ancilla_bound_check(const PureState& target, unsigned ancillas, std::size_t budget,
                                            std::uint64_t seed) {
  require_qutrit(target, "multi_ancilla_bound_check");
  if (ancillas < 1) throw std::invalid_argument("multi_ancilla_bound_check: need at least one ancilla");
  if (budget < 1) throw std::invalid_argument("multi_ancilla_bound_check: budget must be positive");
  const PureState goal = target.normalized();
  const auto facs = factorizations(goal.amplitudes()(0), goal.amplitudes()(1), goal.amplitudes()(2));
  if (facs.empty()) throw NumericalError("multi_ancilla_bound_check: no factorization found");

  const PureState input = PureState::basis_state({1, 1});
  const OccupationVector vacuum(std::vector<unsigned>(ancillas, 0u));
  BoundSearchResult result;

  auto score = [&](const BoundCandidate& cand, std::optional<ModeUnitary>* keep) {
    ++result.evaluations;
    auto u = dilate(facs[cand.factorization], cand, ancillas);
    if (!u) return 0.0;
    const PostSelection sel = postselect(*u, input, vacuum, vacuum);
    if (!sel.heralded || overlap_modulus(sel.state, goal) < 1.0 - 1e-9) return 0.0;
    if (keep) *keep = std::move(u);
    return sel.probability;
  };

  Rng rng(seed);
  std::uniform_real_distribution<double> log_ratio(-3.0, 3.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::uniform_int_distribution<std::size_t> pick(0, facs.size() - 1);

  std::vector<std::pair<double, BoundCandidate>> scored;
  scored.reserve(budget);
  for (std::size_t i = 0; i < budget; ++i) {
    BoundCandidate cand;
    if (i == 0) {
      cand = {0, 0.0, 1.0, 0.0, 0.0};  // balanced, full scale
    } else {
      cand.factorization = pick(rng);
      cand.log_ratio = log_ratio(rng);
      cand.scale = ancillas == 1 ? 1.0 : std::max(1e-6, unit(rng));
      cand.phase_a = angle(rng);
      cand.phase_b = angle(rng);
    }
    scored.emplace_back(score(cand, nullptr), cand);
  }
  std::stable_sort(scored.begin(), scored.end(), [](const auto& l, const auto& r) { return l.first > r.first; });

  const std::size_t refine = std::min<std::size_t>(8, scored.size());
  for (std::size_t i = 0; i < refine; ++i) {
    const BoundCandidate base = scored[i].second;
    auto unpack = [&](const std::vector<double>& x) {
      BoundCandidate c = base;
      c.log_ratio = x[0];
      if (ancillas > 1) c.scale = std::clamp(x[1], 1e-6, 1.0);
      return c;
    };
    std::vector<double> start{base.log_ratio};
    if (ancillas > 1) start.push_back(base.scale);
    NelderMeadOptions opts;
    opts.initial_step = 0.05;
    opts.max_evaluations = 600;
    const auto nm = nelder_mead([&](const std::vector<double>& x) { return -score(unpack(x), nullptr); }, start, opts);

    std::optional<ModeUnitary> u;
    const double p = score(unpack(nm.x), &u);
    if (u && p > result.best_probability) {
      result.best_probability = p;
      result.best_unitary = std::move(u);
    }
  }
  // The unrefined samples can still win if refinement stalled.
  for (std::size_t i = 0; i < refine; ++i) {
    if (scored[i].first <= result.best_probability) continue;
    std::optional<ModeUnitary> u;
    const double p = score(scored[i].second, &u);
    if (u && p > result.best_probability) {
      result.best_probability = p;
      result.best_unitary = std::move(u);
    }
  }
  return result;
}

}  // namespace lop
