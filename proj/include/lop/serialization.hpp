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

// JSON forms of the library types. Complex numbers are [re, im] pairs;
// matrices are row-major arrays of rows.
//
//   state    {"modes": N, "photons": n, "amplitudes": [[re, im], ...]}
//   mixed    {"modes": N, "photons": n, "matrix": [[[re, im], ...], ...]}
//            (a truncated basis adds "min_photons")
//   unitary  {"size": N, "matrix": [[[re, im], ...], ...]}
//   circuit  {"modes": N, "elements": [{"kind": "bs", "modes": [i, j], "theta": t, "phi": p},
//                                      {"kind": "ps", "mode": i, "phase": p},
//                                      {"kind": "swap", "modes": [i, j]}]}
//   target   {"A": [re, im], "B": [re, im], "C": [re, im]}
//
// Readers throw std::invalid_argument on malformed input.

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lop/circuit.hpp"
#include "lop/engineering.hpp"
#include "lop/fock.hpp"
#include "lop/representation.hpp"

namespace lop {

using json = nlohmann::json;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

json to_json(const PureState& s);
PureState pure_state_from_json(const json& j);

json to_json(const MixedState& s);
MixedState mixed_state_from_json(const json& j);

json to_json(const ModeUnitary& m);
ModeUnitary mode_unitary_from_json(const json& j, double tol = kTolerance);

json to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

/// Accepts either a circuit or a unitary document.
ModeUnitary network_from_json(const json& j, double tol = kTolerance);

json target_to_json(const PureState& target);
PureState target_from_json(const json& j);

json to_json(const EngineeringSolution& s);
EngineeringSolution solution_from_json(const json& j);

/// Command-line complex numbers: "re", "re+imi", "re-imi", "imi", "i",
/// "re,im". Throws std::invalid_argument otherwise.
Complex parse_complex(const std::string& text);

}  // namespace lop
