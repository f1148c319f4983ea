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

#include <qubit_bundle/entanglement.hpp>
#include <qubit_bundle/sampling.hpp>

#include <gtest/gtest.h>

using namespace qbundle;

namespace {

void expect_state_near(const TwoQubitState& got, const TwoQubitState& want, double tol = 1e-12) {
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(got[i].real(), want[i].real(), tol) << "i=" << i << " (real)";
    EXPECT_NEAR(got[i].imag(), want[i].imag(), tol) << "i=" << i << " (imag)";
  }
}

void expect_mat_near(const Mat2& got, const Mat2& want, double tol = 1e-12) {
  EXPECT_LE(max_abs_diff(got, want), tol);
}

const double kR = 1.0 / std::sqrt(2.0);

}  // namespace

// ---------- normalize ----------
TEST(Normalize, ScalesToUnitNorm) {
  expect_state_near(normalize(TwoQubitState(2.0, 0.0, 0.0, 0.0)), TwoQubitState(1.0, 0.0, 0.0, 0.0));
  const TwoQubitState bell(kR, 0.0, 0.0, -kR);
  expect_state_near(normalize(bell), bell);
  // norm of (1,1,1,1) is 2
  expect_state_near(normalize(TwoQubitState(1.0, 1.0, 1.0, 1.0)), TwoQubitState(0.5, 0.5, 0.5, 0.5));
}

TEST(Normalize, RejectsZeroNorm) {
  try {
    normalize(TwoQubitState(0.0, 0.0, 0.0, 0.0));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateState);
    EXPECT_NE(std::string(e.what()).find("degenerate state"), std::string::npos);
  }
}

// ---------- fidelity ----------
TEST(Fidelity, KnownValues) {
  const TwoQubitState pp(1.0, 0.0, 0.0, 0.0);
  const TwoQubitState mm(0.0, 0.0, 0.0, 1.0);
  EXPECT_DOUBLE_EQ(fidelity(pp, pp), 1.0);
  EXPECT_DOUBLE_EQ(fidelity(pp, mm), 0.0);
  EXPECT_NEAR(fidelity(pp, TwoQubitState(kR, 0.0, 0.0, kR)), 0.5, 1e-15);
}

TEST(Fidelity, SymmetricAndPhaseBlind) {
  Sampler rng(7);
  for (int i = 0; i < 200; ++i) {
    const TwoQubitState a = rng.state();
    const TwoQubitState b = rng.state();
    EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-15);
    auto amps = a.amplitudes();
    const cplx phase = std::polar(1.0, rng.uniform(-kPi, kPi));
    for (cplx& c : amps) c *= phase;
    EXPECT_NEAR(fidelity(a, TwoQubitState(amps)), 1.0, 1e-14);
  }
}

// ---------- apply_local ----------
TEST(ApplyLocal, IdentityAndFlip) {
  Sampler rng(3);
  const TwoQubitState s = rng.state();
  expect_state_near(apply_local({}, s), s);

  const LocalUnitaryPair flip{SingleQubitUnitary(pauli_x()), SingleQubitUnitary()};
  expect_state_near(apply_local(flip, TwoQubitState(1.0, 0.0, 0.0, 0.0)), TwoQubitState(0.0, 0.0, 1.0, 0.0));
}

TEST(ApplyLocal, MatchesExplicitKroneckerProduct) {
  Sampler rng(11);
  for (int i = 0; i < 100; ++i) {
    const LocalUnitaryPair p = rng.local_pair();
    const TwoQubitState s = rng.state();
    Mat4 k;
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t c = 0; c < 2; ++c)
          for (std::size_t d = 0; d < 2; ++d)
            k(2 * a + c, 2 * b + d) = p.first.matrix()(a, b) * p.second.matrix()(c, d);
    const TwoQubitState got = apply_local(p, s);
    expect_state_near(got, oracle::apply4(k, s), 1e-14);
    EXPECT_NEAR(got.norm(), 1.0, 1e-12);
  }
}

TEST(ApplyLocal, RandomPairKeepsSingletMaximallyEntangled) {
  Sampler rng(5);
  const TwoQubitState singlet(0.0, kR, -kR, 0.0);
  for (int i = 0; i < 500; ++i) {
    EXPECT_NEAR(concurrence(apply_local(rng.local_pair(), singlet)), 1.0, 1e-12);
  }
}

TEST(ApplyLocal, PreservesOverlaps) {
  Sampler rng(99);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const TwoQubitState a = rng.state();
    const TwoQubitState b = rng.state();
    const LocalUnitaryPair p = rng.local_pair();
    worst = std::max(worst, std::abs(fidelity(apply_local(p, a), apply_local(p, b)) - fidelity(a, b)));
  }
  EXPECT_LT(worst, 1e-10);
}

// ---------- su2_from_axis_angle ----------
TEST(Su2FromAxisAngle, KnownMatrices) {
  expect_mat_near(su2_from_axis_angle({0.0, 0.0, 1.0}, 0.0).matrix(), Mat2::identity());
  expect_mat_near(su2_from_axis_angle({0.0, 0.0, 1.0}, 2.0 * kPi).matrix(), cplx(-1.0) * Mat2::identity());
  // exp(-i sigma_x pi/2) = -i sigma_x
  expect_mat_near(su2_from_axis_angle({1.0, 0.0, 0.0}, kPi).matrix(), Mat2{0.0, -kI, -kI, 0.0});
}

TEST(Su2FromAxisAngle, MatchesTaylorSeriesAndIsSpecialUnitary) {
  Sampler rng(17);
  for (int i = 0; i < 300; ++i) {
    const Vec3 n = rng.unit_vector();
    const double angle = rng.uniform(-3.0 * kPi, 3.0 * kPi);
    const Mat2 u = su2_from_axis_angle(n, angle).matrix();
    const Mat2 ns = cplx(n[0]) * pauli_x() + cplx(n[1]) * pauli_y() + cplx(n[2]) * pauli_z();
    expect_mat_near(u, oracle::expm_minus_i(ns, angle / 2.0), 1e-12);
    EXPECT_NEAR(std::abs(det(u) - 1.0), 0.0, 1e-10);
  }
}

TEST(Su2FromAxisAngle, RejectsNonUnitAxis) {
  EXPECT_THROW(su2_from_axis_angle({1.0, 1.0, 0.0}, 0.3), Error);
  EXPECT_THROW(su2_from_axis_angle({0.0, 0.0, 0.0}, 0.3), Error);
}

TEST(SingleQubitUnitary, RejectsNonUnitary) {
  EXPECT_THROW(SingleQubitUnitary(Mat2{1.0, 1.0, 0.0, 1.0}), Error);
}

// ---------- coefficient_matrix ----------
TEST(CoefficientMatrix, Reshape) {
  expect_mat_near(coefficient_matrix(TwoQubitState(1.0, 0.0, 0.0, 0.0)), Mat2{1.0, 0.0, 0.0, 0.0});
  expect_mat_near(coefficient_matrix(TwoQubitState(0.0, kR, -kR, 0.0)), Mat2{0.0, kR, -kR, 0.0});
  const TwoQubitState s(cplx(1, 2), cplx(3, 4), cplx(5, 6), cplx(7, 8));
  expect_mat_near(coefficient_matrix(s), Mat2{cplx(1, 2), cplx(3, 4), cplx(5, 6), cplx(7, 8)});
  expect_state_near(state_from_coefficients(coefficient_matrix(s)), s);
}

// ---------- Bloch points ----------
TEST(BlochPointOfKet, PolesAndEquator) {
  EXPECT_EQ(bloch_point_of_ket({1.0, 0.0}), (BlochPoint{0.0, 0.0}));
  const BlochPoint south = bloch_point_of_ket({0.0, 1.0});
  EXPECT_DOUBLE_EQ(south.theta, kPi);
  EXPECT_DOUBLE_EQ(south.phi, 0.0);
  const BlochPoint p = bloch_point_of_ket({kR, cplx(0.0, kR)});
  EXPECT_NEAR(p.theta, kPi / 2.0, 1e-15);
  EXPECT_NEAR(p.phi, kPi / 2.0, 1e-15);
}

TEST(BlochPointOfKet, IgnoresGlobalPhaseAndScale) {
  const Ket k{cplx(0.6, 0.0), cplx(0.0, 0.8)};
  const Ket scaled{k[0] * std::polar(3.0, 1.1), k[1] * std::polar(3.0, 1.1)};
  const BlochPoint a = bloch_point_of_ket(k);
  const BlochPoint b = bloch_point_of_ket(scaled);
  EXPECT_NEAR(a.theta, b.theta, 1e-14);
  EXPECT_NEAR(a.phi, b.phi, 1e-14);
}

TEST(BlochPointOfKet, PhiCanonicalAtPoles) {
  const BlochPoint p = bloch_point_of_ket({std::polar(1.0, 0.3), std::polar(1e-12, 2.0)});
  EXPECT_EQ(p.phi, 0.0);
}

TEST(BlochPointOfKet, RejectsZeroKet) { EXPECT_THROW(bloch_point_of_ket({0.0, 0.0}), Error); }

TEST(BlochPoint, RoundTripAwayFromPolesAndUnitCartesian) {
  Sampler rng(23);
  for (int i = 0; i < 1000; ++i) {
    const BlochPoint p = make_bloch_point(rng.uniform(1e-3, kPi - 1e-3), rng.uniform(0.0, kTwoPi));
    const BlochPoint q = bloch_point_of_ket(ket_of_bloch(p));
    EXPECT_NEAR(p.theta, q.theta, 1e-9);
    EXPECT_NEAR(circle_distance(p.phi, q.phi), 0.0, 1e-9);
    EXPECT_NEAR(norm(p.cartesian()), 1.0, 1e-12);
  }
}

TEST(Angles, Wrapping) {
  EXPECT_DOUBLE_EQ(wrap_two_pi(-kPi / 2.0), 1.5 * kPi);
  EXPECT_DOUBLE_EQ(wrap_pi(-kPi), kPi);
  EXPECT_NEAR(wrap_pi(3.0 * kPi + 0.25), -kPi + 0.25, 1e-14);
  EXPECT_NEAR(circle_distance(0.1, kTwoPi - 0.1), 0.2, 1e-14);
}
