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

#include "lop/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "lop/circuit.hpp"
#include "lop/detector.hpp"
#include "lop/engineering.hpp"
#include "lop/fock.hpp"
#include "lop/representation.hpp"

namespace lop {

namespace {

struct Check {
  bool passed = true;
  std::ostringstream detail;
};

// The three-mode network that heralds |20> from |11>|0> with probability 1/2.
ModeUnitary reference_network() {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  Matrix m(3, 3);
  m << h, i * h, 0.0,
       0.0, 0.0, 1.0,
       i * h, h, 0.0;
  return ModeUnitary(m);
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  const auto tol = [&](double pinned) { return opts.tolerance_override.value_or(pinned); };
  std::vector<CriterionResult> results;

  auto run = [&](int id, const std::string& name, const std::function<void(Check&)>& body) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(check);
    } catch (const std::exception& e) {
      check.passed = false;
      check.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back({id, name, check.passed, check.detail.str(), secs});
  };
  auto expect = [](Check& c, bool ok, const std::string& what) {
    if (!ok) {
      c.passed = false;
      c.detail << what << "; ";
    }
  };

  run(1, "optimal |11> -> |20> preparation", [&](Check& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto sol = solve_target(qutrit_state(1.0, 0.0, 0.0));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.detail << std::setprecision(15) << "P = " << sol.success_probability << "; ";
    expect(c, std::abs(sol.success_probability - 0.5) <= tol(1e-6), "probability off 0.5");
    expect(c, secs < 10.0, "runtime above 10 s");
  });

  run(2, "reference network on |110>, vacuum outcome", [&](Check& c) {
    const auto sel = postselect(reference_network(), PureState::basis_state({1, 1}), 0, 0);
    const double ov = std::abs(overlap(sel.state, PureState::basis_state({2, 0})));
    c.detail << std::setprecision(15) << "P = " << sel.probability << ", |<20|out>| = " << ov << "; ";
    expect(c, ov >= 1.0 - tol(1e-10), "output is not |20>");
    expect(c, std::abs(sel.probability - 0.5) <= tol(1e-10), "probability off 0.5");
  });

  run(3, "reference network on |201>, one-photon outcome", [&](Check& c) {
    const auto sel = postselect(reference_network(), PureState::basis_state({2, 0}), 1, 1);
    const double ov = std::abs(overlap(sel.state, PureState::basis_state({1, 1})));
    c.detail << std::setprecision(15) << "P = " << sel.probability << ", |<11|out>| = " << ov << "; ";
    expect(c, ov >= 1.0 - tol(1e-10), "output is not |11>");
    expect(c, std::abs(sel.probability - 0.5) <= tol(1e-10), "probability off 0.5");
  });

  run(4, "representation homomorphism on U(3), n <= 3", [&](Check& c) {
    Rng rng(opts.seed + 4);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const ModeUnitary m1(random_unitary(3, rng));
      const ModeUnitary m2(random_unitary(3, rng));
      for (unsigned n = 0; n <= 3; ++n) {
        const Matrix lhs = lift_unitary(m1 * m2, n).matrix();
        const Matrix rhs = lift_unitary(m1, n).matrix() * lift_unitary(m2, n).matrix();
        worst = std::max(worst, max_abs_diff(lhs, rhs));
      }
    }
    c.detail << "max deviation " << worst << "; ";
    expect(c, worst <= tol(1e-10), "homomorphism violated");
  });

  run(5, "permanent lift vs exp(JS(log M))", [&](Check& c) {
    Rng rng(opts.seed + 5);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n_modes = 2 + trial % 3;
      const ModeUnitary m(random_unitary(n_modes, rng));
      for (unsigned n = 0; n <= 4; ++n) {
        worst = std::max(worst, max_abs_diff(lift_unitary(m, n).matrix(), lift_via_js_exponential(m, n).matrix()));
      }
    }
    c.detail << "max deviation " << worst << "; ";
    expect(c, worst <= tol(1e-8), "routes disagree");
  });

  run(6, "two-photon lift of SU(2) matches the closed form", [&](Check& c) {
    Rng rng(opts.seed + 6);
    std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
    const double r2 = std::sqrt(2.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const double theta = ang(rng);
      const Complex a = std::polar(std::cos(theta), ang(rng));
      const Complex b = std::polar(std::sin(theta), ang(rng));
      Matrix m(2, 2);
      m << a, b, -std::conj(b), std::conj(a);
      Matrix expected(3, 3);
      expected << a * a, r2 * a * b, b * b,
                  -r2 * a * std::conj(b), std::norm(a) - std::norm(b), r2 * std::conj(a) * b,
                  std::conj(b) * std::conj(b), -r2 * std::conj(a) * std::conj(b), std::conj(a) * std::conj(a);
      worst = std::max(worst, max_abs_diff(lift_unitary(ModeUnitary(m), 2).matrix(), expected));
    }
    c.detail << "max deviation " << worst << "; ";
    expect(c, worst <= tol(1e-12), "closed form mismatch");
  });

  run(7, "basis size equals (n+N-1)!/(n!(N-1)!)", [&](Check& c) {
    int checked = 0;
    for (std::size_t modes = 1; modes <= 5; ++modes) {
      for (unsigned n = 0; n <= 6; ++n) {
        const auto expected = factorial(n + static_cast<unsigned>(modes) - 1) /
                              (factorial(n) * factorial(static_cast<unsigned>(modes) - 1));
        const auto size = enumerate_basis(modes, n).size();
        ++checked;
        if (size != expected || dimension(modes, n) != expected) {
          expect(c, false, "N=" + std::to_string(modes) + " n=" + std::to_string(n));
        }
      }
    }
    c.detail << checked << " sectors; ";
  });

  run(8, "Kraus completeness on U(3), m = 0, 1", [&](Check& c) {
    Rng rng(opts.seed + 8);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const ModeUnitary u(random_unitary(3, rng));
      for (unsigned m = 0; m <= 1; ++m) {
        const Matrix s = kraus_completeness(kraus_branches(u, m, 2 + m));
        worst = std::max(worst, max_abs_diff(s, Matrix::Identity(s.rows(), s.cols())));
      }
    }
    c.detail << "max deviation " << worst << "; ";
    expect(c, worst <= tol(1e-10), "sum A^dag A != I");
  });

  run(9, "detector identities F P0 = P0ideal, F P1 = eta P1ideal", [&](Check& c) {
    Rng rng(opts.seed + 9);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const ModeUnitary u(random_unitary(3, rng));
      const PureState psi = apply(lift_unitary(u, 2), PureState::basis_state({1, 1, 0}));
      const auto branches = ancilla_branches(psi);
      const double ideal0 = branches[0].norm_squared();
      const double ideal1 = branches[1].norm_squared();
      for (int e = 1; e <= 9; ++e) {
        const double eta = 0.1 * e;
        const auto nc = conditional_no_click(psi, eta);
        const auto cl = conditional_click(psi, eta);
        if (!nc.state || !cl.state) {
          expect(c, false, "impossible heralding event");
          continue;
        }
        worst = std::max(worst, std::abs(fidelity_to_branch(*nc.state, branches[0]) * nc.probability - ideal0));
        worst = std::max(worst, std::abs(fidelity_to_branch(*cl.state, branches[1]) * cl.probability - eta * ideal1));
      }
    }
    c.detail << "max deviation " << worst << "; ";
    expect(c, worst <= tol(1e-10), "trade-off identity violated");
  });

  run(10, "no-click trade-off of the reference network", [&](Check& c) {
    const auto pts = tradeoff_sweep(reference_network(), OccupationVector{1, 1, 0}, Protocol::NoClick, {0.0, 0.5, 1.0});
    const double f_exp[] = {0.5, 0.8, 1.0};
    const double p_exp[] = {1.0, 0.625, 0.5};
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      worst = std::max({worst, std::abs(pts[i].fidelity - f_exp[i]), std::abs(pts[i].probability - p_exp[i])});
      c.detail << std::setprecision(12) << "eta=" << pts[i].eta << " P=" << pts[i].probability
               << " F=" << pts[i].fidelity << "; ";
    }
    expect(c, worst <= tol(1e-9), "sweep values off");
  });

  run(11, "two vacuum ancillas do not beat one", [&](Check& c) {
    const auto start = std::chrono::steady_clock::now();
    const auto res = multi_ancilla_bound_check(qutrit_state(1.0, 0.0, 0.0), 2, 2000, opts.seed + 11);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.detail << std::setprecision(15) << "best P = " << res.best_probability << " over " << res.evaluations
             << " evaluations; ";
    expect(c, res.best_probability <= 0.5 + tol(1e-6), "multi-ancilla search beat 1/2");
    expect(c, secs < 60.0, "runtime above 60 s");
  });

  run(12, "U(2) orbit of |11> misses |20>", [&](Check& c) {
    const OccupationVector out{2, 0};
    const FockBasis basis(2, 2);
    const auto row = static_cast<Eigen::Index>(basis.require_index(out));
    const auto col = static_cast<Eigen::Index>(basis.require_index({1, 1}));
    double best = 0.0;
    const int n_theta = 181, n_phase = 24;
    for (int t = 0; t < n_theta; ++t) {
      const double theta = M_PI / 2 * t / (n_theta - 1);
      for (int x = 0; x < n_phase; ++x) {
        for (int y = 0; y < n_phase; ++y) {
          const Complex a = std::polar(std::cos(theta), 2 * M_PI * x / n_phase);
          const Complex b = std::polar(std::sin(theta), 2 * M_PI * y / n_phase);
          Matrix m(2, 2);
          m << a, b, -std::conj(b), std::conj(a);
          best = std::max(best, std::norm(lift_unitary(ModeUnitary(m), 2).matrix()(row, col)));
        }
      }
    }
    c.detail << std::setprecision(15) << "grid max = " << best << "; ";
    expect(c, std::abs(best - 0.5) <= tol(1e-3), "grid max off 1/2");
    expect(c, best < 1.0, "orbit reaches |20>");
  });

  run(13, "decompose/recompose round trip", [&](Check& c) {
    Rng rng(opts.seed + 13);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 2 + trial % 3;
      const ModeUnitary m(random_unitary(n, rng));
      const Circuit circ = decompose(m);
      worst = std::max(worst, max_abs_diff(recompose(circ).matrix(), m.matrix()));
      expect(c, count_beam_splitters(circ) <= static_cast<std::size_t>(n * (n - 1) / 2), "too many beam splitters");
    }
    c.detail << "max deviation " << worst << "; ";
    expect(c, worst <= tol(1e-10), "round trip error");
  });

  return results;
}

void print_acceptance_report(std::ostream& os, const std::vector<CriterionResult>& results) {
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    os << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << ". " << r.name << " (" << std::fixed
       << std::setprecision(3) << r.seconds << " s)" << std::defaultfloat;
    if (!r.detail.empty()) os << " -- " << r.detail;
    os << '\n';
  }
  os << passed << "/" << results.size() << " criteria passed\n";
}

}  // namespace lop
