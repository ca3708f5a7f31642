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

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lop/detector.hpp"
#include "lop/engineering.hpp"
#include "support.hpp"

namespace lop {
namespace {

PureState reference_output() {
  return apply(lift_unitary(testing::reference_network(), 2), PureState::basis_state({1, 1, 0}));
}

PureState random_output(Rng& rng, const OccupationVector& input) {
  const ModeUnitary u(random_unitary(static_cast<int>(input.modes()), rng));
  return apply(lift_unitary(u, input.total()), PureState::basis_state(input));
}

TEST(DetectorModel, Weights) {
  const DetectorModel d(0.3);
  EXPECT_NEAR(d.no_click_weight(0), 1.0, 1e-15);
  EXPECT_NEAR(d.no_click_weight(2), 0.49, 1e-15);
  EXPECT_NEAR(d.click_weight(2), 0.51, 1e-15);
  EXPECT_THROW(DetectorModel(-0.1), std::invalid_argument);
  EXPECT_THROW(DetectorModel(1.5), std::invalid_argument);
  EXPECT_THROW(DetectorModel(std::nan("")), std::invalid_argument);
}

TEST(DetectorModel, PovmElementsSumToIdentity) {
  for (double eta : {0.0, 0.25, 0.9, 1.0}) {
    const auto nc = povm_no_click(eta, 5);
    const auto cl = povm_click(eta, 5);
    for (unsigned k = 0; k <= 5; ++k) EXPECT_NEAR(nc[k] + cl[k], 1.0, 1e-15);
    EXPECT_EQ(cl[0], 0.0);
  }
  const auto ideal = povm_no_click(1.0, 3);
  EXPECT_EQ(ideal[0], 1.0);
  EXPECT_EQ(ideal[1], 0.0);
}

TEST(Protocol, ParseAndPrint) {
  EXPECT_EQ(parse_protocol("no-click"), Protocol::NoClick);
  EXPECT_EQ(parse_protocol("click"), Protocol::Click);
  EXPECT_EQ(to_string(Protocol::Click), "click");
  EXPECT_THROW(parse_protocol("maybe"), std::invalid_argument);
}

TEST(Conditional, ReferenceNoClickProbability) {
  const PureState psi = reference_output();
  for (double eta : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    const auto nc = conditional_no_click(psi, eta);
    ASSERT_TRUE(nc.state.has_value());
    EXPECT_NEAR(nc.probability, 0.5 + (1 - eta) * (1 - eta) / 2, 1e-14);
    EXPECT_NEAR(nc.state->trace(), 1.0, 1e-12);
  }
}

TEST(Conditional, ClickOnReferenceOneAncillaRun) {
  const PureState psi = apply(lift_unitary(testing::reference_network(), 3), PureState::basis_state({2, 0, 1}));
  const auto pts = tradeoff_sweep(psi, Protocol::Click, {1.0}, 1u);
  EXPECT_NEAR(pts[0].fidelity * pts[0].probability, 0.5, 1e-12);
}

TEST(Conditional, NoClickAndClickProbabilitiesSumToOne) {
  Rng rng = testing::seeded_rng(40);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState psi = random_output(rng, {1, 1, 1});
    for (double eta : {0.0, 0.3, 0.7, 1.0}) {
      const auto nc = conditional_no_click(psi, eta);
      const auto cl = conditional_click(psi, eta);
      EXPECT_NEAR(nc.probability + cl.probability, 1.0, 1e-12);
    }
  }
}

TEST(Conditional, ClickWithBlindDetectorIsImpossible) {
  const auto cl = conditional_click(reference_output(), 0.0);
  EXPECT_FALSE(cl.state.has_value());
  EXPECT_EQ(cl.probability, 0.0);
  const auto pts = tradeoff_sweep(reference_output(), Protocol::Click, {0.0});
  EXPECT_TRUE(std::isnan(pts[0].fidelity));
}

TEST(Conditional, RequiresNormalizedInput) {
  Vector v = Vector::Zero(6);
  v(0) = 0.5;
  EXPECT_THROW(conditional_no_click(PureState(make_basis(3, 2), v), 0.5), std::invalid_argument);
}

TEST(Conditional, BranchesAreOrthogonalSectors) {
  Rng rng = testing::seeded_rng(41);
  const PureState psi = random_output(rng, {1, 1, 1});
  const auto branches = ancilla_branches(psi);
  ASSERT_EQ(branches.size(), 4u);
  double total = 0.0;
  for (std::size_t k = 0; k < branches.size(); ++k) {
    EXPECT_EQ(branches[k].basis().photons(), 3u - k);
    total += branches[k].norm_squared();
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

// F P0 = ideal P0 and F P1 = eta ideal P1, for every efficiency.
TEST(Tradeoff, FidelityProbabilityIdentities) {
  Rng rng = testing::seeded_rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState psi = random_output(rng, trial % 2 ? OccupationVector{1, 1, 0} : OccupationVector{1, 1, 1});
    const auto branches = ancilla_branches(psi);
    const auto etas = eta_grid(0.0, 1.0, 11);
    const auto nc = tradeoff_sweep(psi, Protocol::NoClick, etas);
    const auto cl = tradeoff_sweep(psi, Protocol::Click, etas);
    for (std::size_t i = 0; i < etas.size(); ++i) {
      EXPECT_NEAR(nc[i].fidelity * nc[i].probability, branches[0].norm_squared(), 1e-12);
      if (etas[i] > 0.0) EXPECT_NEAR(cl[i].fidelity * cl[i].probability, etas[i] * branches[1].norm_squared(), 1e-12);
    }
  }
}

TEST(Tradeoff, ReferenceGrid) {
  const auto pts =
      tradeoff_sweep(testing::reference_network(), OccupationVector{1, 1, 0}, Protocol::NoClick, eta_grid(0, 1, 3));
  ASSERT_EQ(pts.size(), 3u);
  const double f[] = {0.5, 0.8, 1.0}, p[] = {1.0, 0.625, 0.5};
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(pts[static_cast<std::size_t>(i)].fidelity, f[i], 1e-12);
    EXPECT_NEAR(pts[static_cast<std::size_t>(i)].probability, p[i], 1e-12);
  }
}

TEST(Tradeoff, PerfectDetectorRecoversIdealBranch) {
  const auto pts = tradeoff_sweep(reference_output(), Protocol::NoClick, eta_grid(0.0, 1.0, 1));
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_NEAR(pts[0].fidelity, 1.0, 1e-14);
}

// The no-click fidelity is monotone in eta and reaches 1 at eta = 1 for any
// network; the click fidelity does not in general. Both curves are logged
// for inspection.
TEST(Tradeoff, NoClickVersusClickQualitative) {
  Rng rng = testing::seeded_rng(43);
  const PureState psi = random_output(rng, {1, 1, 0});
  const auto etas = eta_grid(0.0, 1.0, 6);
  const auto nc = tradeoff_sweep(psi, Protocol::NoClick, etas);
  const auto cl = tradeoff_sweep(psi, Protocol::Click, etas);
  for (std::size_t i = 0; i < etas.size(); ++i) {
    std::cout << "eta " << etas[i] << "  no-click F " << nc[i].fidelity << "  click F " << cl[i].fidelity << '\n';
    if (i > 0) EXPECT_GE(nc[i].fidelity, nc[i - 1].fidelity - 1e-12);
  }
  EXPECT_NEAR(nc.back().fidelity, 1.0, 1e-12);
}

TEST(EtaGrid, EndpointsAndValidation) {
  const auto g = eta_grid(0.2, 0.8, 4);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_DOUBLE_EQ(g.front(), 0.2);
  EXPECT_DOUBLE_EQ(g.back(), 0.8);
  EXPECT_NEAR(g[1], 0.4, 1e-15);
  EXPECT_THROW(eta_grid(0.8, 0.2, 3), std::invalid_argument);
  EXPECT_THROW(eta_grid(0.0, 1.2, 3), std::invalid_argument);
  EXPECT_THROW(eta_grid(0.0, 1.0, 0), std::invalid_argument);
}

TEST(Csv, RoundTrip) {
  const auto pts =
      tradeoff_sweep(testing::reference_network(), OccupationVector{1, 1, 0}, Protocol::NoClick, eta_grid(0, 1, 5));
  std::stringstream ss;
  write_tradeoff_csv(ss, pts);
  const auto back = read_tradeoff_csv(ss);
  ASSERT_EQ(back.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_NEAR(back[i].eta, pts[i].eta, 1e-12);
    EXPECT_NEAR(back[i].probability, pts[i].probability, 1e-12);
    EXPECT_NEAR(back[i].fidelity, pts[i].fidelity, 1e-12);
  }
  std::istringstream bad("eta,p\n");
  EXPECT_THROW(read_tradeoff_csv(bad), std::invalid_argument);
}

}  // namespace
}  // namespace lop
