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

#pragma once

// Randomized property checks over every module. Each check reports the
// worst observed statistic against a fixed threshold. Shared by the CLI
// `verify` subcommand and the acceptance suite.

#include <qubit_bundle/dynamics.hpp>
#include <qubit_bundle/sampling.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace qbundle::props {

/// Below: pass iff observed < threshold. Above: pass iff observed > threshold.
enum class Bound { Below, Above };

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  double observed = 0.0;
  double threshold = 0.0;
  Bound bound = Bound::Below;

  [[nodiscard]] bool passed() const {
    return bound == Bound::Below ? observed < threshold : observed > threshold;
  }
};

inline TwoQubitState random_partial_state(Sampler& rng, const Tolerances& tol = default_tolerances()) {
  for (;;) {
    TwoQubitState s = rng.state();
    if (classify(s, tol).stratum == Stratum::Partial) return s;
  }
}

inline AxisAngleRotation random_rotation(Sampler& rng) {
  return make_rotation(rng.unit_vector(), rng.uniform(0.0, kPi));
}

/// Gaussian Hermitian matrix with entries of order `scale`.
inline HermitianGenerator random_hamiltonian(Sampler& rng, double scale = 1.0) {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, i) = scale * rng.gaussian();
    for (std::size_t j = i + 1; j < 4; ++j) {
      m(i, j) = scale * rng.complex_gaussian() / std::sqrt(2.0);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return HermitianGenerator(m);
}

// --- linalg-core -------------------------------------------------------------

inline PropertyResult overlap_invariance(std::uint64_t seed, std::size_t trials) {
  Sampler rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const TwoQubitState a = rng.state();
    const TwoQubitState b = rng.state();
    const LocalUnitaryPair p = rng.local_pair();
    worst = std::max(worst, std::abs(fidelity(apply_local(p, a), apply_local(p, b)) - fidelity(a, b)));
  }
  return {"overlap invariance under local unitaries", trials, worst, 1e-10};
}

inline PropertyResult su2_special_unitary(std::uint64_t seed, std::size_t trials) {
  Sampler rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const Mat2 u = su2_from_axis_angle(rng.unit_vector(), rng.uniform(-4.0 * kPi, 4.0 * kPi)).matrix();
    worst = std::max({worst, std::abs(det(u) - 1.0), max_abs_diff(u.adjoint() * u, Mat2::identity())});
  }
  return {"su2_from_axis_angle is special unitary", trials, worst, 1e-10};
}

inline PropertyResult bloch_round_trip(std::uint64_t seed, std::size_t trials) {
  Sampler rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const BlochPoint p = make_bloch_point(rng.uniform(1e-3, kPi - 1e-3), rng.uniform(0.0, kTwoPi));
    const BlochPoint q = bloch_point_of_ket(ket_of_bloch(p));
    worst = std::max({worst, std::abs(p.theta - q.theta), circle_distance(p.phi, q.phi)});
  }
  return {"Bloch point round trip", trials, worst, 1e-9};
}

// --- entanglement ------------------------------------------------------------

inline PropertyResult concurrence_lu_invariance(std::uint64_t seed, std::size_t trials) {
  Sampler rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const TwoQubitState s = rng.state();
    const LocalUnitaryPair p = rng.local_pair();
    worst = std::max(worst, std::abs(concurrence(apply_local(p, s)) - concurrence(s)));
  }
  return {"concurrence invariant under local unitaries", trials, worst, 1e-10};
}

inline PropertyResult section_identity(std::size_t grid) {
  double worst = 0.0;
  for (std::size_t k = 0; k < grid; ++k) {
    const double eta = (kPi / 2.0) * static_cast<double>(k) / static_cast<double>(std::max<std::size_t>(grid - 1, 1));
    worst = std::max(worst, std::abs(concurrence(standard_state(eta)) - std::sin(eta)));
  }
  return {"concurrence(standard_state(eta)) = sin(eta)", grid, worst, 1e-12};
}

inline PropertyResult schmidt_consistency(std::uint64_t seed, std::size_t trials) {
  Sampler rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const TwoQubitState s = rng.state();
    const SchmidtData sd = schmidt(s);
    worst = std::max({worst, projective_deviation(sd.reassemble(), s),
                      std::abs(2.0 * sd.lambda1 * sd.lambda2 - concurrence(s))});
  }
  return {"Schmidt reassembly and 2 l1 l2 = C", trials, worst, 1e-9};
}

// --- stabilizers -------------------------------------------------------------

inline PropertyResult stabilizer_unentangled(std::uint64_t seed, std::size_t trials) {
  Sampler rng(seed);
  const TwoQubitState s = standard_state(0.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const double a = rng.uniform(-kPi, kPi);
    const double b = rng.uniform(-kPi, kPi);
    worst = std::max({worst, projective_deviation(apply_kron(rotation_z(a), Mat2::identity(), s), s),
                      projective_deviation(apply_kron(Mat2::identity(), rotation_z(b), s), s),
                      projective_deviation(apply_kron(rotation_z(a), rotation_z(b), s), s)});
  }
  return {"z rotations on either qubit fix |++>", trials, worst, 1e-10};
}

inline PropertyResult stabilizer_partial(std::uint64_t seed, std::size_t trials) {
  Sampler rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const TwoQubitState s = standard_state(rng.uniform(1e-3, kPi / 2.0 - 1e-3));
    const double a = rng.uniform(-kPi, kPi);
    worst = std::max(worst, projective_deviation(apply_kron(rotation_z(a), rotation_z(-a), s), s));
  }
  return {"opposite z rotations fix partial standard states", trials, worst, 1e-10};
}

/// Negative control: the same-sign z pair moves generic partial states.
inline PropertyResult stabilizer_partial_negative(std::uint64_t seed, std::size_t trials) {
  Sampler rng(seed);
  double least = 1.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const TwoQubitState s = standard_state(rng.uniform(0.2, kPi / 2.0 - 0.2));
    const double a = rng.uniform(0.2, kPi - 0.2) * (rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0);
    least = std::min(least, projective_deviation(apply_kron(rotation_z(a), rotation_z(a), s), s));
  }
  return {"same-sign z rotations move partial states (control)", trials, least, 1e-3, Bound::Above};
}

/// For every U there is a partner V (the complex conjugate) with U (x) V
/// fixing the maximally entangled standard state; likewise U (x) U fixes the
/// singlet.
inline PropertyResult stabilizer_full(std::uint64_t seed, std::size_t trials) {
  Sampler rng(seed);
  const TwoQubitState phi_plus = standard_state(kPi / 2.0);
  const TwoQubitState sing = singlet();
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const Mat2 u = rng.su2().matrix();
    worst = std::max({worst, projective_deviation(apply_kron(u, u.conjugate(), phi_plus), phi_plus),
                      projective_deviation(apply_kron(u, u, sing), sing)});
  }
  return {"U (x) conj(U) fixes the standard state; U (x) U fixes the singlet", trials, worst, 1e-10};
}

/// Negative control: only the singlet is invariant under identical
/// rotations of both qubits.
inline PropertyResult singlet_uniqueness_negative(std::uint64_t seed, std::size_t trials) {
  Sampler rng(seed);
  const TwoQubitState bell_x = state_from_rotation(make_rotation({1.0, 0.0, 0.0}, kPi));
  double bell_worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const Mat2 u = rng.su2().matrix();
    bell_worst = std::max(bell_worst, projective_deviation(apply_kron(u, u, bell_x), bell_x));
  }
  // Each random non-singlet fully entangled state must be moved by some draw.
  double least_of_max = 1.0;
  const std::size_t states = std::max<std::size_t>(1, trials / 100);
  for (std::size_t i = 0; i < states; ++i) {
    AxisAngleRotation r = random_rotation(rng);
    if (r.angle < 0.2) r = make_rotation(r.axis, 0.2);
    const TwoQubitState s = state_from_rotation(r);
    double m = 0.0;
    for (int k = 0; k < 32; ++k) {
      const Mat2 u = rng.su2().matrix();
      m = std::max(m, projective_deviation(apply_kron(u, u, s), s));
    }
    least_of_max = std::min(least_of_max, m);
  }
  return {"U (x) U moves non-singlet fully entangled states (control)", trials + 32 * states,
          std::min(bell_worst, least_of_max), 1e-3, Bound::Above};
}

// --- bundle charts -----------------------------------------------------------

inline PropertyResult bundle_round_trip(std::uint64_t seed, std::size_t trials,
                                        const Tolerances& tol = default_tolerances()) {
  Sampler rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const TwoQubitState s = random_partial_state(rng, tol);
    worst = std::max(worst, projective_deviation(reconstruct(extract(s, tol), tol), s));
  }
  return {"bundle round trip reconstruct(extract(s)) = s", trials, worst, 1e-9};
}

/// gamma transported between every ordered chart pair agrees with direct
/// extraction in the target chart (compared as e^{i gamma}).
inline PropertyResult transition_transport(std::uint64_t seed, std::size_t trials,
                                           const TransitionLaw& law = kBundleTransitions,
                                           const Tolerances& tol = default_tolerances()) {
  Sampler rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const TwoQubitState s = random_partial_state(rng, tol);
    std::array<BundleCoords, 4> direct;
    for (std::size_t k = 0; k < 4; ++k) direct[k] = extract(s, tol, kAllCharts[k]);
    for (const BundleCoords& from : direct) {
      for (const BundleCoords& to : direct) {
        const BundleCoords moved = transition(from, to.chart, tol, law);
        worst = std::max(worst, std::abs(std::polar(1.0, moved.gamma) - std::polar(1.0, to.gamma)));
      }
    }
  }
  return {"transition functions match direct extraction", trials, worst, 1e-8};
}

/// t_{a,c} = t_{a,b} t_{b,c} for every chart triple.
inline PropertyResult transition_cocycle(std::uint64_t seed, std::size_t trials,
                                         const TransitionLaw& law = kBundleTransitions) {
  Sampler rng(seed);
  // t_{a,b} relates gamma_a = t_{a,b} gamma_b: source b, target a.
  auto t = [&law](Chart a, Chart b, double p1, double p2) { return transition_factor(b, a, p1, p2, law).value; };
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const double p1 = rng.uniform(0.0, kTwoPi);
    const double p2 = rng.uniform(0.0, kTwoPi);
    for (Chart a : kAllCharts)
      for (Chart b : kAllCharts)
        for (Chart c : kAllCharts) {
          worst = std::max(worst, std::abs(t(a, c, p1, p2) - t(a, b, p1, p2) * t(b, c, p1, p2)));
          worst = std::max(worst, std::abs(std::abs(t(a, b, p1, p2)) - 1.0));
        }
  }
  return {"transition cocycle t_ac = t_ab t_bc", trials, worst, 1e-10};
}

/// Shifting gamma by d equals rotating qubit 1 by d about its base-point
/// axis, in every chart.
inline PropertyResult fibre_action(std::uint64_t seed, std::size_t trials,
                                   const Tolerances& tol = default_tolerances()) {
  Sampler rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const TwoQubitState s = random_partial_state(rng, tol);
    const double d = rng.uniform(-kPi, kPi);
    for (Chart chart : kAllCharts) {
      const BundleCoords c = extract(s, tol, chart);
      BundleCoords shifted = c;
      shifted.gamma += d;
      const TwoQubitState rotated =
          apply_kron(su2_from_axis_angle(c.base1.cartesian(), d).matrix(), Mat2::identity(), reconstruct(c));
      worst = std::max(worst, projective_deviation(reconstruct(shifted, tol), rotated));
    }
  }
  return {"gamma shift acts as rotation about the base point", trials, worst, 1e-10};
}

// --- class extremes ----------------------------------------------------------

inline PropertyResult unentangled_round_trip(std::uint64_t seed, std::size_t trials,
                                             const Tolerances& tol = default_tolerances()) {
  Sampler rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const TwoQubitState s = compose_unentangled({rng.bloch_point(), rng.bloch_point()});
    worst = std::max({worst, concurrence(s), projective_deviation(compose_unentangled(factor_unentangled(s, tol)), s)});
  }
  return {"product state round trip", trials, worst, 1e-10};
}

inline PropertyResult so3_round_trip(std::uint64_t seed, std::size_t trials,
                                     const Tolerances& tol = default_tolerances()) {
  Sampler rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const AxisAngleRotation r = random_rotation(rng);
    const TwoQubitState s = state_from_rotation(r);
    worst = std::max(worst, rotation_distance(rotation_from_state(s, tol), r));
    // The other SU(2) lift, (-n, 2pi - a) = -U, is the same physical state.
    const Vec3 neg{-r.axis[0], -r.axis[1], -r.axis[2]};
    const Mat2 other = su2_from_axis_angle(neg, kTwoPi - r.angle).matrix();
    worst = std::max(worst, projective_deviation(apply_kron(other, Mat2::identity(), singlet()), s));
  }
  return {"rotation <-> state round trip (rotation distance)", trials, worst, 1e-8};
}

inline PropertyResult bell_assignments() {
  const auto table = bell_table();
  const double r = 1.0 / std::sqrt(2.0);
  const double e1 = projective_deviation(table[0].state, singlet());
  const double e2 = projective_deviation(table[1].state, TwoQubitState(r, 0.0, 0.0, -r));
  const double e3 = rotation_distance(rotation_from_state(singlet()), AxisAngleRotation{});
  const double e4 = rotation_distance(rotation_from_state(TwoQubitState(r, 0.0, 0.0, -r)),
                                      make_rotation({1.0, 0.0, 0.0}, kPi));
  return {"singlet <-> identity, (|++> - |-->)/sqrt2 <-> pi about x", 4, std::max({e1, e2, e3, e4}), 1e-10};
}

inline PropertyResult axis_invariance(std::uint64_t seed, std::size_t trials) {
  Sampler rng(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const AxisAngleRotation r = random_rotation(rng);
    const TwoQubitState s = state_from_rotation(r);
    const Mat2 u = su2_from_axis_angle(r.axis, rng.uniform(-kPi, kPi)).matrix();
    worst = std::max(worst, projective_deviation(apply_kron(u, u, s), s));
  }
  return {"identical rotations about the axis fix its state", trials, worst, 1e-10};
}

// --- dynamics ----------------------------------------------------------------

inline PropertyResult local_evolution_concurrence(std::uint64_t seed, std::size_t steps) {
  Sampler rng(seed);
  auto hermitian2 = [&rng]() {
    const double a = rng.gaussian();
    const double d = rng.gaussian();
    const cplx b = rng.complex_gaussian();
    return Mat2{a, b, std::conj(b), d};
  };
  const HermitianGenerator h = HermitianGenerator::local(hermitian2(), hermitian2());
  const TwoQubitState s = random_partial_state(rng);
  const double c0 = concurrence(s);
  const auto states = evolve(h, s, 0.0, 10.0, 10.0 / static_cast<double>(steps));
  double worst = 0.0;
  for (const TrajectoryPoint& p : coordinate_trajectory(states)) {
    worst = std::max(worst, std::abs(p.concurrence - c0));
  }
  return {"local Hamiltonian keeps concurrence constant", states.size() - 1, worst, 1e-9};
}

struct ContinuityRun {
  double min_fidelity = 1.0;
  ContinuityReport report;
  std::size_t steps = 0;
};

/// Generic Hermitian evolution on a grid from continuity_time_step(); the
/// successive-fidelity gap is reported alongside.
inline ContinuityRun continuity_run(std::uint64_t seed, double t1 = 10.0) {
  Sampler rng(seed);
  const HermitianGenerator h = random_hamiltonian(rng);
  const TwoQubitState psi0 = rng.state();
  const auto states = evolve(h, psi0, 0.0, t1, continuity_time_step(h, psi0, 0.0, t1));
  ContinuityRun run;
  for (std::size_t i = 1; i < states.size(); ++i) {
    run.min_fidelity = std::min(run.min_fidelity, fidelity(states[i - 1].state, states[i].state));
  }
  run.report = check_continuity(coordinate_trajectory(states));
  run.steps = states.size() - 1;
  return run;
}

inline std::vector<PropertyResult> dynamics_continuity(std::uint64_t seed, std::size_t runs) {
  double fid_gap = 0.0;
  double step = 0.0;
  double jump = 0.0;
  std::size_t steps = 0;
  for (std::size_t i = 0; i < runs; ++i) {
    const ContinuityRun r = continuity_run(seed + i);
    fid_gap = std::max(fid_gap, 1.0 - r.min_fidelity);
    step = std::max(step, r.report.max_step);
    jump = std::max(jump, r.report.max_switch_error);
    steps += r.steps;
  }
  return {{"trajectory step fidelity gap", steps, fid_gap, 1e-4},
          {"within-chart coordinate step", steps, step, 0.1},
          {"chart-switch gamma discontinuity", steps, jump, 1e-6}};
}

// --- suite -------------------------------------------------------------------

/// Runs every property with `n` random trials each (dynamics scaled down).
inline std::vector<PropertyResult> run_suite(std::uint64_t seed, std::size_t n,
                                             const Tolerances& tol = default_tolerances(),
                                             const TransitionLaw& law = kBundleTransitions) {
  std::vector<PropertyResult> out{
      overlap_invariance(seed + 1, n),
      su2_special_unitary(seed + 2, n),
      bloch_round_trip(seed + 3, n),
      concurrence_lu_invariance(seed + 4, n),
      section_identity(std::max<std::size_t>(n, 2)),
      schmidt_consistency(seed + 5, n),
      stabilizer_unentangled(seed + 6, n),
      stabilizer_partial(seed + 7, n),
      stabilizer_partial_negative(seed + 8, n),
      stabilizer_full(seed + 9, n),
      singlet_uniqueness_negative(seed + 10, n),
      bundle_round_trip(seed + 11, n, tol),
      transition_transport(seed + 12, n, law, tol),
      transition_cocycle(seed + 13, n, law),
      fibre_action(seed + 14, n, tol),
      unentangled_round_trip(seed + 15, n, tol),
      so3_round_trip(seed + 16, n, tol),
      bell_assignments(),
      axis_invariance(seed + 17, n),
      local_evolution_concurrence(seed + 18, std::max<std::size_t>(n, 1000)),
  };
  for (PropertyResult& r : dynamics_continuity(seed + 19, std::max<std::size_t>(1, n / 1000))) {
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qbundle::props
