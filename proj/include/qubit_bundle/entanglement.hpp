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

// Concurrence, stratum classification, Schmidt data and the standard
// representative of each entanglement class.

#include <qubit_bundle/linalg.hpp>

#include <string_view>

namespace qbundle {

enum class Stratum { Unentangled, Partial, Full };

inline constexpr std::string_view to_string(Stratum s) {
  switch (s) {
    case Stratum::Unentangled: return "unentangled";
    case Stratum::Partial: return "partial";
    case Stratum::Full: return "full";
  }
  return "?";
}

struct EntanglementClass {
  double concurrence = 0.0;  // in [0, 1]
  double eta = 0.0;          // asin(concurrence), in [0, pi/2]
  Stratum stratum = Stratum::Unentangled;
};

/// C = 2 |c_{++} c_{--} - c_{+-} c_{-+}| for a normalized state.
/// Overshoot above 1 is clamped only up to 1e-12; anything larger means the
/// input was not normalized.
inline double concurrence(const TwoQubitState& s) {
  const double c = 2.0 * std::abs(s[0] * s[3] - s[1] * s[2]);
  if (!(c <= 1.0 + 1e-12)) {
    throw Error(ErrorKind::InvalidArgument, "concurrence above 1: state is not normalized");
  }
  return std::min(c, 1.0);
}

inline Stratum stratum_of(double concurrence, double eps) {
  if (concurrence <= eps) return Stratum::Unentangled;
  if (concurrence >= 1.0 - eps) return Stratum::Full;
  return Stratum::Partial;
}

inline EntanglementClass classify(const TwoQubitState& s,
                                  const Tolerances& tol = default_tolerances()) {
  const double c = concurrence(s);
  return {c, std::asin(c), stratum_of(c, tol.eps_class)};
}

/// cos(eta/2)|++> + sin(eta/2)|-->, eta in [0, pi/2].
inline TwoQubitState standard_state(double eta) {
  if (!(eta >= 0.0 && eta <= kPi / 2.0)) {
    throw Error(ErrorKind::InvalidArgument, "eta outside [0, pi/2]");
  }
  return TwoQubitState(std::cos(eta / 2.0), 0.0, 0.0, std::sin(eta / 2.0));
}

/// state = sum_k lambda_k |basis1[k]> (x) |basis2[k]> up to a global phase.
///
/// basis1[0], basis1[1] and basis2[0] have their first non-negligible
/// component real and positive; basis2[1] carries the remaining relative
/// phase so the reassembly stays exact.
struct SchmidtData {
  double lambda1 = 1.0;
  double lambda2 = 0.0;
  std::array<Ket, 2> basis1{};
  std::array<Ket, 2> basis2{};

  [[nodiscard]] TwoQubitState reassemble() const {
    const TwoQubitState a = tensor(basis1[0], basis2[0]);
    const TwoQubitState b = tensor(basis1[1], basis2[1]);
    TwoQubitState::Amplitudes out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = lambda1 * a[i] + lambda2 * b[i];
    return TwoQubitState(out);
  }
};

namespace detail {

inline Ket orthogonal_complement(const Ket& k) { return {-std::conj(k[1]), std::conj(k[0])}; }

inline Ket normalized(const Ket& k) {
  const double n = norm(k);
  return {k[0] / n, k[1] / n};
}

/// Phase that makes the first component with modulus > 1e-12 real positive.
inline cplx canonical_phase(const Ket& k) {
  for (const cplx& c : k) {
    if (std::abs(c) > 1e-12) return std::conj(c) / std::abs(c);
  }
  return 1.0;
}

}  // namespace detail

/// Closed-form singular value decomposition of the 2x2 coefficient matrix.
inline SchmidtData schmidt(const TwoQubitState& state) {
  const TwoQubitState s = normalize(state);
  const Mat2 m = coefficient_matrix(s);
  const Mat2 h = m * m.adjoint();

  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const cplx b = h(0, 1);
  const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
  const double top = 0.5 * (a + d) + half_gap;

  // Eigenvector of h for the top eigenvalue; the two algebraic candidates
  // degrade in opposite regimes so take the longer one.
  const Ket cand1{b, cplx(top - a)};
  const Ket cand2{cplx(top - d), std::conj(b)};
  const Ket best = norm(cand1) >= norm(cand2) ? cand1 : cand2;
  Ket u1 = norm(best) > 0.0 ? detail::normalized(best) : Ket{1.0, 0.0};
  Ket u2 = detail::orthogonal_complement(u1);

  const double sigma1 = std::sqrt(top);
  const double sigma2 = std::abs(det(m)) / sigma1;

  // Right factors: b_k = M^T conj(u_k) / sigma_k.
  auto right = [&m](const Ket& u) -> Ket {
    return {m(0, 0) * std::conj(u[0]) + m(1, 0) * std::conj(u[1]),
            m(0, 1) * std::conj(u[0]) + m(1, 1) * std::conj(u[1])};
  };
  Ket b1 = detail::normalized(right(u1));
  // b2 is orthogonal to b1 up to the phase fixed by M^T conj(u2).
  Ket b2 = detail::orthogonal_complement(b1);
  const Ket raw2 = right(u2);
  const cplx overlap = std::conj(b2[0]) * raw2[0] + std::conj(b2[1]) * raw2[1];
  if (std::abs(overlap) > 0.0) {
    const cplx phase = overlap / std::abs(overlap);
    b2 = {b2[0] * phase, b2[1] * phase};
  }

  // state = sigma1 u1 (x) b1 + sigma2 u2 (x) b2; now fix phases.
  const cplx p1 = detail::canonical_phase(u1);
  const cplx p2 = detail::canonical_phase(u2);
  const cplx q1 = detail::canonical_phase(b1);
  const cplx q2 = p1 * q1 / p2;
  u1 = {u1[0] * p1, u1[1] * p1};
  u2 = {u2[0] * p2, u2[1] * p2};
  b1 = {b1[0] * q1, b1[1] * q1};
  b2 = {b2[0] * q2, b2[1] * q2};

  SchmidtData out;
  out.lambda1 = sigma1;
  out.lambda2 = sigma2;
  out.basis1 = {u1, u2};
  out.basis2 = {b1, b2};
  return out;
}

}  // namespace qbundle
