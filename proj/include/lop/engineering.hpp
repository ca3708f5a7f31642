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

// Heralded preparation of two-photon two-mode (qutrit) states.
//
// The qutrit |11> is extended with ancilla modes, sent through a passive
// network M, and accepted when the ancilla detectors see a chosen photon
// pattern. With one vacuum ancilla and
//
//         [ alpha  gamma/k  e3 ]
//     M = [ beta   delta/k  e4 ]
//         [ e1     e2/k     e5 ]
//
// the accepted (unnormalized) state is
//
//     (1/k) ( sqrt2 alpha gamma |20> + (alpha delta + beta gamma) |11>
//             + sqrt2 beta delta |02> ),
//
// and with 2|alpha gamma|^2 + |alpha delta + beta gamma|^2 + 2|beta delta|^2 = 1
// the acceptance probability is 1/k^2, where
//
//     k^2 = |gamma|^2 + |delta|^2 + |alpha* gamma + beta* delta|^2 / (1 - |alpha|^2 - |beta|^2).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lop/fock.hpp"
#include "lop/representation.hpp"

namespace lop {

struct ExtensionParams {
  Complex alpha;
  Complex beta;
  Complex gamma;
  Complex delta;
};

struct ExtensionMatrix {
  ModeUnitary matrix;
  double k;
  /// |alpha|^2 + |beta|^2 == 1: e1 = e2 = 0 and k = sqrt(|gamma|^2 + |delta|^2).
  bool boundary;
};

/// 2|ag|^2 + |ad + bg|^2 + 2|bd|^2 - 1.
double normalization_residual(const ExtensionParams& p);

/// k^2 for the given parameters (either branch). Throws like
/// build_extension_matrix.
double extension_k_squared(const ExtensionParams& p, double tol = 1e-12);

/// Unitary completion with first column (alpha, beta, e1) and second column
/// (gamma, delta, e2)/k; the third column comes from Gram-Schmidt.
///
/// Throws std::invalid_argument if |alpha|^2 + |beta|^2 > 1 + tol or
/// gamma = delta = 0, and InfeasibleError on the boundary branch when
/// alpha* gamma + beta* delta != 0.
ExtensionMatrix build_extension_matrix(const ExtensionParams& p, double tol = 1e-12);

/// 1/k^2. Throws std::invalid_argument unless the normalization condition
/// holds within `tol`.
double success_probability(const ExtensionParams& p, double tol = 1e-9);

/// (A, B, C) -> A|20> + B|11> + C|02>.
PureState qutrit_state(Complex a, Complex b, Complex c);

struct PostSelection {
  PureState branch;  // unnormalized <out|_anc U (input x |in>)
  PureState state;   // normalized branch; zero vector when not heralded
  double probability;
  bool heralded;     // false when the branch vanishes
};

/// Runs `input` (on the computational modes) through `u` with the ancilla
/// modes (the last u.size() - input modes) prepared in `ancilla_in`, and
/// conditions on detecting `ancilla_out`.
PostSelection postselect(const ModeUnitary& u, const PureState& input,
                         const OccupationVector& ancilla_in, const OccupationVector& ancilla_out);

/// Single-ancilla form.
PostSelection postselect(const ModeUnitary& u, const PureState& input, unsigned ancilla_in,
                         unsigned ancilla_out);

/// A_{m'} = <m'| U |m> between computational sectors.
struct KrausBranch {
  unsigned outcome;
  BasisPtr input_basis;
  BasisPtr output_basis;
  Matrix op;  // output_basis.size() x input_basis.size()
  std::optional<double> probability;
};

/// One branch per ancilla outcome m' = 0..total_photons for a network whose
/// last mode is the ancilla, prepared with `ancilla_in` photons. The
/// computational input sector holds total_photons - ancilla_in photons.
std::vector<KrausBranch> kraus_branches(const ModeUnitary& u, unsigned ancilla_in, unsigned total_photons);

/// Same, with branch probabilities for a given computational input.
std::vector<KrausBranch> kraus_branches(const ModeUnitary& u, const PureState& input, unsigned ancilla_in);

/// sum_{m'} A^dagger A; the identity for a complete set.
Matrix kraus_completeness(const std::vector<KrausBranch>& branches);

struct EngineeringSolution {
  ModeUnitary mode_unitary;
  ExtensionParams params;
  double k;
  unsigned ancilla_in;
  unsigned postselect_outcome;
  double success_probability;
  PureState target;
  PureState achieved_state;
  double constraint_residual;  // max over the three amplitude equations
};

/// Highest-probability single-ancilla network taking |11>|0> to `target`
/// on vacuum detection. The target must be normalized within `tol`.
///
/// The accepted state is the product of the linear forms
/// (alpha x + beta y)(gamma x + delta y), so the constraints fix the two
/// factors up to a rescaling lambda, 1/lambda. For each factorization the
/// remaining one-dimensional problem in |lambda| is convex and solved in
/// closed form; the result is checked by full simulation. Among equally
/// good networks the one closest to the identity (Frobenius) is returned.
EngineeringSolution solve_target(const PureState& target, double tol = 1e-9);

struct BoundSearchResult {
  double best_probability = 0.0;
  std::optional<ModeUnitary> best_unitary;
  std::size_t evaluations = 0;
};

/// Searches networks on 2 + `ancillas` modes with vacuum ancillas that
/// herald `target` from |11> on all-vacuum detection, and returns the best
/// acceptance probability found. `budget` random candidates are drawn and
/// the best few refined locally; every candidate is scored by full
/// simulation.
BoundSearchResult multi_ancilla_bound_check(const PureState& target, unsigned ancillas, std::size_t budget,
                                            std::uint64_t seed = kDefaultSeed);

}  // namespace lop
