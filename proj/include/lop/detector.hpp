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

// On/off (non photon-number-resolving) detection of the ancilla mode with
// quantum efficiency eta:
//
//     Pi_0(eta) = sum_k (1 - eta)^k |k><k|,    Pi_1(eta) = I - Pi_0(eta).
//
// The ancilla is always the last mode of the state. Writing the output as
// sum_k |phi_k>|k>, the conditional states are
//
//     rho_0 = (1/P_0) sum_k (1 - eta)^k |phi_k><phi_k|       (no click)
//     rho_1 = (1/P_1) sum_k (1 - (1 - eta)^k) |phi_k><phi_k|  (click)
//
// over k = 0..n. The branches |phi_k> carry n - k photons, so the
// conditional states live on the direct sum of computational sectors 0..n.

#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lop/fock.hpp"
#include "lop/representation.hpp"

namespace lop {

class DetectorModel {
 public:
  /// Throws std::invalid_argument unless 0 <= eta <= 1.
  explicit DetectorModel(double eta);

  double eta() const { return eta_; }
  double no_click_weight(unsigned photons) const;
  double click_weight(unsigned photons) const { return 1.0 - no_click_weight(photons); }

 private:
  double eta_;
};

/// (1 - eta)^k for k = 0..max_photons.
std::vector<double> povm_no_click(double eta, unsigned max_photons);
/// 1 - (1 - eta)^k for k = 0..max_photons.
std::vector<double> povm_click(double eta, unsigned max_photons);

enum class Protocol { NoClick, Click };

std::string to_string(Protocol p);
/// "no-click" or "click"; throws std::invalid_argument otherwise.
Protocol parse_protocol(const std::string& s);

struct ConditionalState {
  std::optional<MixedState> state;  // nullopt when the event is impossible
  double probability;
};

/// Unnormalized branches |phi_k>, k = 0..n, with the last mode as ancilla.
std::vector<PureState> ancilla_branches(const PureState& psi);

/// Requires a normalized psi (within 1e-10).
ConditionalState conditional_no_click(const PureState& psi, double eta);
ConditionalState conditional_click(const PureState& psi, double eta);

/// <phi|rho|phi> / <phi|phi>. The branch is embedded into rho's basis.
/// Throws std::invalid_argument for a zero-norm branch.
double fidelity_to_branch(const MixedState& rho, const PureState& branch);

struct TradeoffPoint {
  double eta;
  double probability;
  double fidelity;  // NaN when the heralding event has probability zero
};

/// One point per eta. `psi` is the full output state (computational modes
/// plus the ancilla, last). The fidelity is taken against branch
/// `target_branch`, defaulting to 0 for NoClick and 1 for Click.
std::vector<TradeoffPoint> tradeoff_sweep(const PureState& psi, Protocol protocol, const std::vector<double>& etas,
                                          std::optional<unsigned> target_branch = std::nullopt);

/// Convenience form: lifts `network` onto `input` (all modes, ancilla last).
std::vector<TradeoffPoint> tradeoff_sweep(const ModeUnitary& network, const OccupationVector& input,
                                          Protocol protocol, const std::vector<double>& etas,
                                          std::optional<unsigned> target_branch = std::nullopt);

/// `steps` evenly spaced values from eta_min to eta_max; a single step
/// yields eta_max.
std::vector<double> eta_grid(double eta_min, double eta_max, std::size_t steps);

/// Header "eta,probability,fidelity", 12 significant digits, LF endings.
void write_tradeoff_csv(std::ostream& os, const std::vector<TradeoffPoint>& points);
std::vector<TradeoffPoint> read_tradeoff_csv(std::istream& is);

}  // namespace lop
