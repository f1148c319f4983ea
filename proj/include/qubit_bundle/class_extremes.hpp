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

// Coordinates for the two boundary strata. Product states are a pair of
// Bloch points; maximally entangled states correspond one-to-one with SO(3)
// through (U (x) I)|singlet>.

#include <qubit_bundle/entanglement.hpp>

#include <string>
#include <vector>

namespace qbundle {

struct BlochPair {
  BlochPoint first;
  BlochPoint second;

  static constexpr std::size_t kRealParameters = 4;

  [[nodiscard]] std::array<double, kRealParameters> parameters() const {
    return {first.theta, first.phi, second.theta, second.phi};
  }
};

/// Counterclockwise rotation by `angle` in [0, pi] about unit `axis`.
/// Canonical form: axis = z at angle 0; at angle pi the first component of
/// the axis with |value| > 1e-9 is positive.
struct AxisAngleRotation {
  Vec3 axis{0.0, 0.0, 1.0};
  double angle = 0.0;

  static constexpr std::size_t kRealParameters = 3;

  /// angle * axis; determines the rotation uniquely.
  [[nodiscard]] std::array<double, kRealParameters> rotation_vector() const {
    return {angle * axis[0], angle * axis[1], angle * axis[2]};
  }

  /// Unit quaternion (w, x, y, z) with w >= 0 of the SU(2) lift.
  [[nodiscard]] std::array<double, 4> quaternion() const {
    const double s = std::sin(angle / 2.0);
    return {std::cos(angle / 2.0), s * axis[0], s * axis[1], s * axis[2]};
  }
};

namespace detail {

inline AxisAngleRotation canonical_rotation(Vec3 axis, double angle) {
  constexpr double kAngleSnap = 1e-12;
  if (angle <= kAngleSnap) return {};
  if (angle >= kPi - kAngleSnap) {
    angle = kPi;
    for (double c : axis) {
      if (std::abs(c) > 1e-9) {
        if (c < 0.0) axis = {-axis[0], -axis[1], -axis[2]};
        break;
      }
    }
  }
  return {axis, angle};
}

}  // namespace detail

/// Builds a canonical rotation from any axis/angle pair; angles outside
/// [0, pi] are folded using (n, a) ~ (-n, -a) ~ (n, a + 2pi).
inline AxisAngleRotation make_rotation(const Vec3& axis, double angle,
                                       const Tolerances& tol = default_tolerances()) {
  const double n = norm(axis);
  if (!std::isfinite(angle) || std::abs(n - 1.0) > tol.unit_axis) {
    throw Error(ErrorKind::InvalidArgument, "rotation axis is not a unit vector");
  }
  Vec3 unit{axis[0] / n, axis[1] / n, axis[2] / n};
  double a = wrap_pi(angle);
  if (a < 0.0) {
    a = -a;
    unit = {-unit[0], -unit[1], -unit[2]};
  }
  return detail::canonical_rotation(unit, a);
}

inline AxisAngleRotation rotation_from_vector(const Vec3& v) {
  const double a = norm(v);
  if (a == 0.0) return {};
  return make_rotation({v[0] / a, v[1] / a, v[2] / a}, a);
}

/// Angle of the relative rotation a^{-1} b, in [0, pi].
inline double rotation_distance(const AxisAngleRotation& a, const AxisAngleRotation& b) {
  const auto p = a.quaternion();
  const auto q = b.quaternion();
  // conj(p) * q
  const double w = p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
  const Vec3 v{p[0] * q[1] - q[0] * p[1] - (p[2] * q[3] - p[3] * q[2]),
               p[0] * q[2] - q[0] * p[2] - (p[3] * q[1] - p[1] * q[3]),
               p[0] * q[3] - q[0] * p[3] - (p[1] * q[2] - p[2] * q[1])};
  return 2.0 * std::atan2(norm(v), std::abs(w));
}

// ---------------------------------------------------------------------------
// Unentangled stratum

inline BlochPair factor_unentangled(const TwoQubitState& state,
                                    const Tolerances& tol = default_tolerances()) {
  const TwoQubitState s = normalize(state);
  if (classify(s, tol).stratum != Stratum::Unentangled) {
    throw Error(ErrorKind::WrongStratum, "not a product state");
  }
  // Rank-one part of the coefficient matrix via the dominant singular pair.
  const SchmidtData sd = schmidt(s);
  return {bloch_point_of_ket(sd.basis1[0], tol), bloch_point_of_ket(sd.basis2[0], tol)};
}

inline TwoQubitState compose_unentangled(const BlochPair& pair) {
  return tensor(ket_of_bloch(pair.first), ket_of_bloch(pair.second));
}

// ---------------------------------------------------------------------------
// Fully entangled stratum

/// (|+-> - |-+>) / sqrt(2).
inline TwoQubitState singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  return TwoQubitState(0.0, r, -r, 0.0);
}

inline TwoQubitState state_from_rotation(const AxisAngleRotation& rot,
                                         const Tolerances& tol = default_tolerances()) {
  const SingleQubitUnitary u = su2_from_axis_angle(rot.axis, rot.angle, tol);
  return apply_kron(u.matrix(), Mat2::identity(), singlet());
}

inline AxisAngleRotation rotation_from_state(const TwoQubitState& state,
                                             const Tolerances& tol = default_tolerances()) {
  const TwoQubitState s = normalize(state);
  if (classify(s, tol).stratum != Stratum::Full) {
    throw Error(ErrorKind::WrongStratum, "rotation coordinates need a fully entangled state");
  }
  // (U (x) I)|singlet> has coefficient matrix U * M_singlet, so
  // U = M * M_singlet^{-1} with M_singlet^{-1} = sqrt(2) [[0, -1], [1, 0]].
  const double r2 = std::sqrt(2.0);
  const Mat2 singlet_inverse{0.0, -r2, r2, 0.0};
  Mat2 u = coefficient_matrix(s) * singlet_inverse;
  u = (1.0 / std::sqrt(det(u))) * u;
  if (u.trace().real() < 0.0) u = cplx(-1.0) * u;

  // u = w I - i v.sigma; read (w, v) and renormalize onto the unit quaternions.
  const Mat2 k = cplx(0.0, 0.5) * (u - u.adjoint());
  double w = 0.5 * u.trace().real();
  Vec3 v{0.5 * (k(1, 0) + k(0, 1)).real(), 0.5 * (k(1, 0) - k(0, 1)).imag(),
         0.5 * (k(0, 0) - k(1, 1)).real()};
  const double vn = norm(v);
  const double qn = std::hypot(w, vn);
  w /= qn;
  if (vn == 0.0) return {};
  const double angle = 2.0 * std::atan2(vn / qn, w);
  return detail::canonical_rotation({v[0] / vn, v[1] / vn, v[2] / vn}, angle);
}

struct BellEntry {
  std::string name;        // "singlet", "pi-x", "pi-y", "pi-z"
  std::string bell_label;  // computed: phi+, phi-, psi+ or psi-
  AxisAngleRotation rotation;
  TwoQubitState state;
};

/// The four Bell basis states: the singlet (identity rotation) and pi
/// rotations about x, y and z.
inline std::vector<BellEntry> bell_table() {
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<std::pair<const char*, TwoQubitState>, 4> canonical{{
      {"phi+", TwoQubitState(r, 0.0, 0.0, r)},
      {"phi-", TwoQubitState(r, 0.0, 0.0, -r)},
      {"psi+", TwoQubitState(0.0, r, r, 0.0)},
      {"psi-", TwoQubitState(0.0, r, -r, 0.0)},
  }};
  auto label_of = [&canonical](const TwoQubitState& s) {
    std::string best;
    double best_f = -1.0;
    for (const auto& [name, ref] : canonical) {
      const double f = fidelity(s, ref);
      if (f > best_f) {
        best_f = f;
        best = name;
      }
    }
    return best;
  };

  std::vector<BellEntry> table;
  const std::array<std::pair<const char*, AxisAngleRotation>, 4> rows{{
      {"singlet", AxisAngleRotation{}},
      {"pi-x", make_rotation({1.0, 0.0, 0.0}, kPi)},
      {"pi-y", make_rotation({0.0, 1.0, 0.0}, kPi)},
      {"pi-z", make_rotation({0.0, 0.0, 1.0}, kPi)},
  }};
  for (const auto& [name, rot] : rows) {
    const TwoQubitState s = state_from_rotation(rot);
    table.push_back({name, label_of(s), rot, s});
  }
  return table;
}

}  // namespace qbundle
