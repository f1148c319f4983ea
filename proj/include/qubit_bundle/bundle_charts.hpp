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

// Partially entangled states at fixed concurrence form an S^1 bundle over
// S^2 x S^2. Each qubit's Bloch sphere is covered by two patches, N (south
// pole deleted) and S (north pole deleted); the four product patches carry
// their own fibre coordinate gamma, related by U(1) transition functions.

#include <qubit_bundle/entanglement.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace qbundle {

enum class Hemisphere { N, S };

enum class Chart { NN, NS, SN, SS };

inline constexpr Hemisphere first_patch(Chart c) {
  return (c == Chart::NN || c == Chart::NS) ? Hemisphere::N : Hemisphere::S;
}

inline constexpr Hemisphere second_patch(Chart c) {
  return (c == Chart::NN || c == Chart::SN) ? Hemisphere::N : Hemisphere::S;
}

inline constexpr Chart make_chart(Hemisphere first, Hemisphere second) {
  if (first == Hemisphere::N) return second == Hemisphere::N ? Chart::NN : Chart::NS;
  return second == Hemisphere::N ? Chart::SN : Chart::SS;
}

inline constexpr std::string_view to_string(Chart c) {
  switch (c) {
    case Chart::NN: return "NN";
    case Chart::NS: return "NS";
    case Chart::SN: return "SN";
    case Chart::SS: return "SS";
  }
  return "?";
}

inline Chart chart_from_string(std::string_view s) {
  if (s == "NN") return Chart::NN;
  if (s == "NS") return Chart::NS;
  if (s == "SN") return Chart::SN;
  if (s == "SS") return Chart::SS;
  throw Error(ErrorKind::Parse, "unknown chart '" + std::string(s) + "'");
}

inline constexpr std::array<Chart, 4> kAllCharts{Chart::NN, Chart::NS, Chart::SN, Chart::SS};

/// Patch membership with the excluded-pole guard.
inline bool in_patch(Hemisphere h, double theta, const Tolerances& tol = default_tolerances()) {
  if (!(theta >= 0.0 && theta <= kPi)) return false;
  return h == Hemisphere::N ? theta <= kPi - tol.pole_guard : theta >= tol.pole_guard;
}

/// Coordinates of a partially entangled state: eta, two base points and the
/// fibre coordinate gamma of the given chart. Exactly six real parameters.
struct BundleCoords {
  Chart chart = Chart::NN;
  double eta = 0.0;
  BlochPoint base1;
  BlochPoint base2;
  double gamma = 0.0;  // reported in (-pi, pi]

  static constexpr std::size_t kRealParameters = 6;

  [[nodiscard]] std::array<double, kRealParameters> parameters() const {
    return {eta, base1.theta, base1.phi, base2.theta, base2.phi, gamma};
  }

  [[nodiscard]] bool in_domain(const Tolerances& tol = default_tolerances()) const {
    return in_patch(first_patch(chart), base1.theta, tol) &&
           in_patch(second_patch(chart), base2.theta, tol);
  }
};

// ---------------------------------------------------------------------------
// Chart operators

/// e^{-i sz phi/2} e^{-i sy theta/2} e^{i sz phi/2}. Maps |+> to the Bloch
/// ket at (theta, phi); smooth away from the south pole.
inline SingleQubitUnitary t_north(double theta, double phi) {
  return SingleQubitUnitary(rotation_z(phi) * rotation_y(theta) * rotation_z(-phi));
}

/// e^{-i sz phi/2} e^{-i sy (theta - pi)/2} e^{i sz phi/2}; smooth away from
/// the north pole.
inline SingleQubitUnitary t_south(double theta, double phi) {
  return SingleQubitUnitary(rotation_z(phi) * rotation_y(theta - kPi) * rotation_z(-phi));
}

namespace detail {

/// Qubit-1 operator of the chart formula, including the fibre rotation.
/// N: T_N e^{-i sz gamma/2};  S: T_S e^{+i sz gamma/2} e^{-i sy pi/2}.
inline Mat2 first_factor(Hemisphere h, const BlochPoint& p, double gamma) {
  if (h == Hemisphere::N) return t_north(p.theta, p.phi).matrix() * rotation_z(gamma);
  return t_south(p.theta, p.phi).matrix() * rotation_z(-gamma) * rotation_y(kPi);
}

/// Qubit-2 operator of the chart formula. N: T_N;  S: T_S e^{-i sy pi/2}.
inline Mat2 second_factor(Hemisphere h, const BlochPoint& p) {
  if (h == Hemisphere::N) return t_north(p.theta, p.phi).matrix();
  return t_south(p.theta, p.phi).matrix() * rotation_y(kPi);
}

inline void require_domain(const BundleCoords& c, const Tolerances& tol) {
  if (!c.in_domain(tol)) {
    throw Error(ErrorKind::ChartDomain, "chart domain violation: base point outside chart " +
                                            std::string(to_string(c.chart)));
  }
}

}  // namespace detail

/// Evaluates the chart's ket formula on the standard state |psi0(eta)>.
inline TwoQubitState reconstruct(const BundleCoords& c, const Tolerances& tol = default_tolerances()) {
  detail::require_domain(c, tol);
  const Mat2 a = detail::first_factor(first_patch(c.chart), c.base1, c.gamma);
  const Mat2 b = detail::second_factor(second_patch(c.chart), c.base2);
  return normalize(apply_kron(a, b, standard_state(c.eta)));
}

/// Inverse of reconstruct. The base points are the Bloch points of the
/// dominant Schmidt kets of each qubit; the chart is N for a qubit whose
/// Bloch z >= 0 and S otherwise, unless `chart` forces one.
inline BundleCoords extract(const TwoQubitState& state, const Tolerances& tol = default_tolerances(),
                            std::optional<Chart> chart = std::nullopt) {
  const TwoQubitState s = normalize(state);
  if (classify(s, tol).stratum != Stratum::Partial) {
    throw Error(ErrorKind::WrongStratum, "bundle coordinates need a partially entangled state");
  }
  const SchmidtData sd = schmidt(s);

  BundleCoords c;
  c.eta = 2.0 * std::atan2(sd.lambda2, sd.lambda1);
  c.base1 = bloch_point_of_ket(sd.basis1[0], tol);
  c.base2 = bloch_point_of_ket(sd.basis2[0], tol);
  auto pick = [](const BlochPoint& p) { return p.cartesian()[2] >= 0.0 ? Hemisphere::N : Hemisphere::S; };
  c.chart = chart.value_or(make_chart(pick(c.base1), pick(c.base2)));
  detail::require_domain(c, tol);

  // Undo every chart operator with gamma = 0. For S patches the printed
  // e^{+i sz gamma/2} sits left of e^{-i sy pi/2}; moving it right flips its
  // sign, so in every chart the residual is e^{-i sz gamma/2} (x) I |psi0>.
  const Mat2 a0 = detail::first_factor(first_patch(c.chart), c.base1, 0.0);
  const Mat2 b0 = detail::second_factor(second_patch(c.chart), c.base2);
  const TwoQubitState r = apply_kron(a0.adjoint(), b0.adjoint(), s);
  if (std::abs(r[1]) > tol.residual || std::abs(r[2]) > tol.residual) {
    throw Error(ErrorKind::Internal, "bundle extraction residual has off-diagonal support");
  }
  c.gamma = wrap_pi(std::arg(r[3] * std::conj(r[0])));
  return c;
}

// ---------------------------------------------------------------------------
// Transition functions

/// t = exp(i (phi1_mult * phi1 + phi2_mult * phi2)).
struct PhaseExponents {
  int phi1_mult = 0;
  int phi2_mult = 0;
};

/// Transition functions t_{a,b}, defined by e^{i gamma_a} = t_{a,b} e^{i gamma_b}.
/// Reverse directions are complex conjugates.
struct TransitionLaw {
  PhaseExponents nn_sn;  // t_{NN,SN} = t_{NS,SS}
  PhaseExponents nn_ns;  // t_{NN,NS} = t_{SN,SS}
  PhaseExponents nn_ss;  // t_{NN,SS}
  PhaseExponents ns_sn;  // t_{NS,SN}
};

#ifdef QBUNDLE_CANARY_FLIP_NN_SN
// Deliberately corrupted build used to prove the verification suite is not
// vacuous; see README.
inline constexpr TransitionLaw kBundleTransitions{{-2, 0}, {0, 2}, {2, 2}, {2, -2}};
#else
inline constexpr TransitionLaw kBundleTransitions{{2, 0}, {0, 2}, {2, 2}, {2, -2}};
#endif

/// Unit-modulus factor with e^{i gamma_target} = value * e^{i gamma_source}.
struct TransitionFactor {
  cplx value{1.0, 0.0};
  Chart source = Chart::NN;
  Chart target = Chart::NN;
};

namespace detail {

inline PhaseExponents negate(PhaseExponents e) { return {-e.phi1_mult, -e.phi2_mult}; }

/// Exponents of t_{a,b}.
inline PhaseExponents transition_exponents(Chart a, Chart b, const TransitionLaw& law) {
  if (a == b) return {};
  auto is = [a, b](Chart x, Chart y) { return a == x && b == y; };
  if (is(Chart::NN, Chart::SN) || is(Chart::NS, Chart::SS)) return law.nn_sn;
  if (is(Chart::NN, Chart::NS) || is(Chart::SN, Chart::SS)) return law.nn_ns;
  if (is(Chart::NN, Chart::SS)) return law.nn_ss;
  if (is(Chart::NS, Chart::SN)) return law.ns_sn;
  return negate(transition_exponents(b, a, law));
}

}  // namespace detail

inline TransitionFactor transition_factor(Chart source, Chart target, double phi1, double phi2,
                                          const TransitionLaw& law = kBundleTransitions) {
  const PhaseExponents e = detail::transition_exponents(target, source, law);
  return {std::polar(1.0, e.phi1_mult * phi1 + e.phi2_mult * phi2), source, target};
}

/// Re-expresses coordinates in another chart. Base point and eta are
/// unchanged; only gamma moves.
inline BundleCoords transition(const BundleCoords& coords, Chart target,
                               const Tolerances& tol = default_tolerances(),
                               const TransitionLaw& law = kBundleTransitions) {
  BundleCoords out = coords;
  out.chart = target;
  if (!coords.in_domain(tol) || !out.in_domain(tol)) {
    throw Error(ErrorKind::ChartDomain, "chart domain violation: base point outside the overlap of " +
                                            std::string(to_string(coords.chart)) + " and " +
                                            std::string(to_string(target)));
  }
  const TransitionFactor t =
      transition_factor(coords.chart, target, coords.base1.phi, coords.base2.phi, law);
  out.gamma = wrap_pi(coords.gamma + std::arg(t.value));
  return out;
}

}  // namespace qbundle
