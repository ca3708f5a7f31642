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

// Linear-optical circuits as sequences of two-mode elements.
//
// Mode labels are 1-based, as in optics diagrams. A circuit lists its
// elements in the order light passes through them, so the mode unitary of
// [e1, e2, ..., ek] is E_k ... E_2 E_1.
//
// Beam splitter (i, j, theta, phi) acts on modes (i, j) with the block
//
//     [  cos(theta)                e^{i phi} sin(theta) ]
//     [ -e^{-i phi} sin(theta)     cos(theta)           ]
//
// Any extra phase on the diagonal is realized with phase shifters.

#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "lop/representation.hpp"

namespace lop {

struct BeamSplitter {
  std::size_t mode_a;
  std::size_t mode_b;
  double theta;
  double phi;
};

struct PhaseShifter {
  std::size_t mode;
  double phase;
};

struct Swap {
  std::size_t mode_a;
  std::size_t mode_b;
};

using CircuitElement = std::variant<BeamSplitter, PhaseShifter, Swap>;

struct Circuit {
  std::size_t modes = 0;
  std::vector<CircuitElement> elements;
};

/// Embedding of one element into U(N). Throws std::invalid_argument for
/// repeated or out-of-range mode labels.
ModeUnitary element_matrix(const CircuitElement& e, std::size_t modes);

/// E_k ... E_1 for the circuit [E_1, ..., E_k]; identity when empty.
ModeUnitary recompose(const Circuit& c);

/// Triangular (Reck-style) factorization into at most N(N-1)/2 beam
/// splitters on adjacent modes plus at most N phase shifters. Beam splitters
/// and phase shifters that would act trivially are omitted.
Circuit decompose(const ModeUnitary& m);

std::size_t count_beam_splitters(const Circuit& c);

}  // namespace lop
