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

#include "lop/detector.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "lop/errors.hpp"

namespace lop {

DetectorModel::DetectorModel(double eta) : eta_(eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("DetectorModel: efficiency must lie in [0, 1]");
}

double DetectorModel::no_click_weight(unsigned photons) const {
  return std::pow(1.0 - eta_, static_cast<double>(photons));
}

std::vector<double> povm_no_click(double eta, unsigned max_photons) {
  const DetectorModel det(eta);
  std::vector<double> w(max_photons + 1);
  for (unsigned k = 0; k <= max_photons; ++k) w[k] = det.no_click_weight(k);
  return w;
}

std::vector<double> povm_click(double eta, unsigned max_photons) {
  const DetectorModel det(eta);
  std::vector<double> w(max_photons + 1);
  for (unsigned k = 0; k <= max_photons; ++k) w[k] = det.click_weight(k);
  return w;
}

std::string to_string(Protocol p) { return p == Protocol::NoClick ? "no-click" : "click"; }

Protocol parse_protocol(const std::string& s) {
  if (s == "no-click") return Protocol::NoClick;
  if (s == "click") return Protocol::Click;
  throw std::invalid_argument("unknown protocol '" + s + "' (expected no-click or click)");
}

std::vector<PureState> ancilla_branches(const PureState& psi) {
  if (psi.basis().modes() < 2) throw std::invalid_argument("ancilla_branches: need an ancilla and at least one more mode");
  if (!psi.basis().is_sector()) throw std::invalid_argument("ancilla_branches: input must be a single sector");
  std::vector<PureState> out;
  for (unsigned k = 0; k <= psi.basis().photons(); ++k) out.push_back(project_ancillas(psi, OccupationVector{k}));
  return out;
}

namespace {

ConditionalState conditional(const PureState& psi, const std::vector<double>& weights) {
  if (!(std::abs(psi.norm_squared() - 1.0) <= kTolerance)) {
    throw std::invalid_argument("conditional state: input must be normalized");
  }
  const auto branches = ancilla_branches(psi);
  auto basis = std::make_shared<const FockBasis>(
      FockBasis::truncated(psi.basis().modes() - 1, 0, psi.basis().photons()));
  const auto d = static_cast<Eigen::Index>(basis->size());
  Matrix rho = Matrix::Zero(d, d);
  double prob = 0.0;
  for (std::size_t k = 0; k < branches.size(); ++k) {
    if (weights[k] == 0.0) continue;
    const Vector v = embed(branches[k], basis).amplitudes();
    rho += weights[k] * (v * v.adjoint());
    prob += weights[k] * v.squaredNorm();
  }
  if (prob <= 1e-24) return {std::nullopt, 0.0};
  return {MixedState(basis, rho / prob), prob};
}

}  // namespace

ConditionalState conditional_no_click(const PureState& psi, double eta) {
  return conditional(psi, povm_no_click(eta, psi.basis().photons()));
}

ConditionalState conditional_click(const PureState& psi, double eta) {
  return conditional(psi, povm_click(eta, psi.basis().photons()));
}

double fidelity_to_branch(const MixedState& rho, const PureState& branch) {
  const double nn = branch.norm_squared();
  if (nn == 0.0) throw std::invalid_argument("fidelity_to_branch: branch has zero norm");
  const Vector v = embed(branch, rho.basis_ptr()).amplitudes();
  return v.dot(rho.matrix() * v).real() / nn;
}

std::vector<TradeoffPoint> tradeoff_sweep(const PureState& psi, Protocol protocol, const std::vector<double>& etas,
                                          std::optional<unsigned> target_branch) {
  const unsigned target = target_branch.value_or(protocol == Protocol::NoClick ? 0u : 1u);
  if (target > psi.basis().photons()) throw std::invalid_argument("tradeoff_sweep: target branch out of range");
  const PureState ideal = project_ancillas(psi, OccupationVector{target});

  std::vector<TradeoffPoint> out;
  out.reserve(etas.size());
  for (double eta : etas) {
    const ConditionalState cond =
        protocol == Protocol::NoClick ? conditional_no_click(psi, eta) : conditional_click(psi, eta);
    double fid = std::numeric_limits<double>::quiet_NaN();
    if (cond.state) fid = fidelity_to_branch(*cond.state, ideal);
    out.push_back({eta, cond.probability, fid});
  }
  return out;
}

std::vector<TradeoffPoint> tradeoff_sweep(const ModeUnitary& network, const OccupationVector& input,
                                          Protocol protocol, const std::vector<double>& etas,
                                          std::optional<unsigned> target_branch) {
  if (input.modes() != network.size()) throw std::invalid_argument("tradeoff_sweep: input size differs from network");
  const PureState in = PureState::basis_state(input);
  const PureState out = apply(lift_unitary(network, input.total()), in);
  return tradeoff_sweep(out, protocol, etas, target_branch);
}

std::vector<double> eta_grid(double eta_min, double eta_max, std::size_t steps) {
  if (!(eta_min >= 0.0 && eta_min <= eta_max && eta_max <= 1.0)) {
    throw std::invalid_argument("eta_grid: need 0 <= eta_min <= eta_max <= 1");
  }
  if (steps < 1) throw std::invalid_argument("eta_grid: steps must be at least 1");
  if (steps == 1) return {eta_max};
  std::vector<double> out(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    out[i] = eta_min + (eta_max - eta_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  out.back() = eta_max;
  return out;
}

void write_tradeoff_csv(std::ostream& os, const std::vector<TradeoffPoint>& points) {
  os << "eta,probability,fidelity\n";
  char buf[96];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", p.eta, p.probability, p.fidelity);
    os << buf;
  }
}

std::vector<TradeoffPoint> read_tradeoff_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "eta,probability,fidelity") {
    throw std::invalid_argument("read_tradeoff_csv: missing or wrong header");
  }
  std::vector<TradeoffPoint> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    double v[3];
    for (double& x : v) {
      if (!std::getline(row, cell, ',')) throw std::invalid_argument("read_tradeoff_csv: short row");
      x = std::strtod(cell.c_str(), nullptr);
    }
    out.push_back({v[0], v[1], v[2]});
  }
  return out;
}

}  // namespace lop
