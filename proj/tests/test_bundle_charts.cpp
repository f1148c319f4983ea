// Copyright 2026 The qubit-bundle Authors
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

#include "oracles.hpp"

#include <qubit_bundle/bundle_charts.hpp>
#include <qubit_bundle/properties.hpp>
#include <qubit_bundle/sampling.hpp>

#include <gtest/gtest.h>

using namespace qbundle;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

Ket apply(const Mat2& m, const Ket& k) { return {m(0, 0) * k[0] + m(0, 1) * k[1], m(1, 0) * k[0] + m(1, 1) * k[1]}; }

// Bloch ket with the north-gauge phase: (cos t/2, e^{i phi} sin t/2).
Ket bloch_ket(double theta, double phi) {
  return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)};
}

double ket_deviation(const Ket& a, const Ket& b) {
  const cplx ip = std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
  return 1.0 - std::norm(ip);
}

}  // namespace

TEST(Charts, Names) {
  for (Chart c : kAllCharts) EXPECT_EQ(chart_from_string(to_string(c)), c);
  EXPECT_EQ(to_string(make_chart(Hemisphere::S, Hemisphere::N)), "SN");
  EXPECT_EQ(first_patch(Chart::SN), Hemisphere::S);
  EXPECT_EQ(second_patch(Chart::SN), Hemisphere::N);
  EXPECT_THROW(chart_from_string("XY"), Error);
}

TEST(Charts, PatchesExcludeOnePole) {
  EXPECT_TRUE(in_patch(Hemisphere::N, 0.0));
  EXPECT_FALSE(in_patch(Hemisphere::N, kPi));
  EXPECT_TRUE(in_patch(Hemisphere::S, kPi));
  EXPECT_FALSE(in_patch(Hemisphere::S, 0.0));
  EXPECT_TRUE(in_patch(Hemisphere::N, kPi - 1e-3));
  EXPECT_FALSE(in_patch(Hemisphere::N, -0.1));
}

TEST(ChartOperators, NorthMapsPlusToBlochKet) {
  const Ket up{1.0, 0.0};
  const Ket got = apply(t_north(kPi / 2.0, 0.0).matrix(), up);
  EXPECT_NEAR(got[0].real(), kR, 1e-15);
  EXPECT_NEAR(got[1].real(), kR, 1e-15);
  Sampler rng(101);
  for (int i = 0; i < 500; ++i) {
    const double theta = rng.uniform(0.0, kPi - 1e-3);
    const double phi = rng.uniform(0.0, kTwoPi);
    EXPECT_LT(ket_deviation(apply(t_north(theta, phi).matrix(), up), bloch_ket(theta, phi)), 1e-13);
    // exactly the north-gauge ket, no extra phase
    const Ket g = apply(t_north(theta, phi).matrix(), up);
    EXPECT_NEAR(std::abs(g[0] - std::cos(theta / 2.0)), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(g[1] - std::polar(std::sin(theta / 2.0), phi)), 0.0, 1e-13);
  }
}

TEST(ChartOperators, SouthIsNorthTimesPiRotationAboutConjugatedY) {
  // T_S = T_N * e^{-i sz phi/2} e^{+i sy pi/2} e^{+i sz phi/2}
  Sampler rng(103);
  for (int i = 0; i < 200; ++i) {
    const double theta = rng.uniform(0.0, kPi);
    const double phi = rng.uniform(0.0, kTwoPi);
    const Mat2 want = t_north(theta, phi).matrix() * rotation_z(phi) * rotation_y(-kPi) * rotation_z(-phi);
    EXPECT_LE(max_abs_diff(t_south(theta, phi).matrix(), want), 1e-14);
    EXPECT_LT(ket_deviation(apply(t_south(theta, phi).matrix(), {0.0, 1.0}), bloch_ket(theta, phi)), 1e-13);
  }
  const Mat2 ts = t_south(kPi / 2.0, 0.0).matrix();
  EXPECT_LE(max_abs_diff(ts, Mat2{kR, kR, -kR, kR}), 1e-15);
}

TEST(Reconstruct, FrozenExample) {
  // (T_N(pi/2, 0) (x) I) psi0(pi/3)
  BundleCoords c;
  c.chart = Chart::NN;
  c.eta = kPi / 3.0;
  c.base1 = {kPi / 2.0, 0.0};
  c.base2 = {0.0, 0.0};
  c.gamma = 0.0;
  const TwoQubitState s = reconstruct(c);
  const double a = std::sqrt(6.0) / 4.0;
  const double b = std::sqrt(2.0) / 4.0;
  const TwoQubitState want(a, -b, a, b);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(s[i] - want[i]), 0.0, 1e-15) << i;
}

TEST(Reconstruct, StandardStateAtNorthPoles) {
  for (double eta : {0.2, 0.9, 1.4}) {
    BundleCoords c;
    c.eta = eta;
    EXPECT_LT(projective_deviation(reconstruct(c), standard_state(eta)), 1e-15);
  }
}

TEST(Reconstruct, ConcurrenceIsSinEtaInEveryChart) {
  Sampler rng(107);
  for (int i = 0; i < 300; ++i) {
    for (Chart chart : kAllCharts) {
      BundleCoords c;
      c.chart = chart;
      c.eta = rng.uniform(0.01, kPi / 2.0 - 0.01);
      c.base1 = {rng.uniform(0.01, kPi - 0.01), rng.uniform(0.0, kTwoPi)};
      c.base2 = {rng.uniform(0.01, kPi - 0.01), rng.uniform(0.0, kTwoPi)};
      c.gamma = rng.uniform(-kPi, kPi);
      EXPECT_NEAR(concurrence(reconstruct(c)), std::sin(c.eta), 1e-12);
    }
  }
}

TEST(Reconstruct, RejectsExcludedPole) {
  BundleCoords c;
  c.chart = Chart::NN;
  c.eta = 0.5;
  c.base1 = {kPi, 0.0};
  try {
    reconstruct(c);
    FAIL() << "expected chart domain error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ChartDomain);
    EXPECT_NE(std::string(e.what()).find("chart domain violation"), std::string::npos);
  }
  c.chart = Chart::SN;
  EXPECT_NO_THROW(reconstruct(c));
  c.base2 = {0.0, 0.0};
  c.chart = Chart::SS;
  EXPECT_THROW(reconstruct(c), Error);
}

TEST(Extract, StandardState) {
  const BundleCoords c = extract(standard_state(kPi / 4.0));
  EXPECT_EQ(c.chart, Chart::NN);
  EXPECT_NEAR(c.eta, kPi / 4.0, 1e-15);
  EXPECT_NEAR(c.base1.theta, 0.0, 1e-15);
  EXPECT_NEAR(c.base2.theta, 0.0, 1e-15);
  EXPECT_NEAR(c.gamma, 0.0, 1e-15);
}

TEST(Extract, PicksChartFromHemispheres) {
  // Flip both qubits: base points at the south poles.
  const TwoQubitState s = apply_kron(pauli_x(), pauli_x(), standard_state(0.7));
  const BundleCoords c = extract(s);
  EXPECT_EQ(c.chart, Chart::SS);
  EXPECT_NEAR(c.base1.theta, kPi, 1e-15);
  EXPECT_LT(projective_deviation(reconstruct(c), s), 1e-14);
}

TEST(Extract, RejectsOtherStrata) {
  EXPECT_THROW(extract(TwoQubitState(1.0, 0.0, 0.0, 0.0)), Error);
  EXPECT_THROW(extract(TwoQubitState(0.0, kR, -kR, 0.0)), Error);
  try {
    extract(TwoQubitState(0.0, kR, -kR, 0.0));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongStratum);
  }
}

TEST(Extract, ForcedChartMustContainBasePoints) {
  EXPECT_THROW(extract(standard_state(0.5), default_tolerances(), Chart::SN), Error);
}

TEST(Extract, RoundTrip) {
  const auto r = props::bundle_round_trip(109, 5000);
  EXPECT_TRUE(r.passed()) << r.observed;
}

TEST(Extract, CoordinatesRoundTripAwayFromPoles) {
  Sampler rng(113);
  for (int i = 0; i < 500; ++i) {
    for (Chart chart : kAllCharts) {
      BundleCoords c;
      c.chart = chart;
      c.eta = rng.uniform(0.05, kPi / 2.0 - 0.05);
      c.base1 = {rng.uniform(0.05, kPi - 0.05), rng.uniform(0.0, kTwoPi)};
      c.base2 = {rng.uniform(0.05, kPi - 0.05), rng.uniform(0.0, kTwoPi)};
      c.gamma = rng.uniform(-kPi, kPi);
      const BundleCoords back = extract(reconstruct(c), default_tolerances(), chart);
      EXPECT_NEAR(back.eta, c.eta, 1e-9);
      EXPECT_NEAR(back.base1.theta, c.base1.theta, 1e-9);
      EXPECT_NEAR(back.base2.theta, c.base2.theta, 1e-9);
      EXPECT_NEAR(circle_distance(back.base1.phi, c.base1.phi), 0.0, 1e-9);
      EXPECT_NEAR(circle_distance(back.base2.phi, c.base2.phi), 0.0, 1e-9);
      EXPECT_NEAR(circle_distance(back.gamma, c.gamma), 0.0, 1e-9);
    }
  }
}

TEST(Transition, FrozenExample) {
  BundleCoords c;
  c.chart = Chart::NN;
  c.eta = 0.6;
  c.base1 = {kPi / 2.0, kPi / 4.0};
  c.base2 = {kPi / 2.0, 0.3};
  c.gamma = 0.0;
  EXPECT_NEAR(transition(c, Chart::SN).gamma, -kPi / 2.0, 1e-15);
  EXPECT_NEAR(transition(c, Chart::NS).gamma, -0.6, 1e-15);
  EXPECT_NEAR(transition(c, Chart::SS).gamma, -kPi / 2.0 - 0.6, 1e-15);
  EXPECT_NEAR(transition(transition(c, Chart::SN), Chart::NN).gamma, 0.0, 1e-15);
}

TEST(Transition, FactorsAreUnitModulusAndInverse) {
  Sampler rng(127);
  for (int i = 0; i < 100; ++i) {
    const double p1 = rng.uniform(0.0, kTwoPi);
    const double p2 = rng.uniform(0.0, kTwoPi);
    for (Chart a : kAllCharts)
      for (Chart b : kAllCharts) {
        const cplx ab = transition_factor(a, b, p1, p2).value;
        const cplx ba = transition_factor(b, a, p1, p2).value;
        EXPECT_NEAR(std::abs(ab), 1.0, 1e-15);
        EXPECT_NEAR(std::abs(ab * ba - 1.0), 0.0, 1e-14);
      }
  }
}

TEST(Transition, RejectsPointsOutsideOverlap) {
  BundleCoords c;
  c.eta = 0.4;
  try {
    transition(c, Chart::SS);
    FAIL() << "expected chart domain error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ChartDomain);
  }
}

TEST(Transition, AgreesWithDirectExtraction) {
  const auto r = props::transition_transport(131, 1000);
  EXPECT_TRUE(r.passed()) << r.observed;
}

TEST(Transition, Cocycle) {
  const auto r = props::transition_cocycle(137, 1000);
  EXPECT_TRUE(r.passed()) << r.observed;
}

TEST(Transition, EveryFlippedLawIsDetected) {
  const TransitionLaw good = kBundleTransitions;
  for (int k = 0; k < 4; ++k) {
    TransitionLaw bad = good;
    PhaseExponents* e[] = {&bad.nn_sn, &bad.nn_ns, &bad.nn_ss, &bad.ns_sn};
    *e[k] = detail::negate(*e[k]);
    EXPECT_FALSE(props::transition_transport(139, 100, bad).passed()) << k;
  }
}

TEST(FibreAction, GammaShiftIsRotationAboutBasePoint) {
  const auto r = props::fibre_action(149, 1000);
  EXPECT_TRUE(r.passed()) << r.observed;
}

TEST(BundleCoords, SixRealParameters) {
  static_assert(BundleCoords::kRealParameters == 6);
  BundleCoords c{Chart::NS, 0.1, {0.2, 0.3}, {0.4, 0.5}, 0.6};
  const auto p = c.parameters();
  EXPECT_EQ(p, (std::array<double, 6>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6}));
}
