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

// Fixed-size dense complex linear algebra for single-qubit (2x2) and
// two-qubit (4x4) objects.

#include <qubit_bundle/error.hpp>
#include <qubit_bundle/tolerances.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>

namespace qbundle {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;
/// Single-qubit ket, component 0 is |+>.
using Ket = std::array<cplx, 2>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// Row-major N x N complex matrix with value semantics.
template <std::size_t N>
class Matrix {
 public:
  using Column = std::array<cplx, N>;

  constexpr Matrix() = default;

  /// Row-major entries; missing trailing entries are zero.
  constexpr Matrix(std::initializer_list<cplx> entries) {
    std::size_t k = 0;
    for (const cplx& e : entries) {
      if (k == N * N) break;
      data_[k++] = e;
    }
  }

  static constexpr Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  constexpr cplx& operator()(std::size_t row, std::size_t col) {
    return data_[row * N + col];
  }
  constexpr const cplx& operator()(std::size_t row, std::size_t col) const {
    return data_[row * N + col];
  }

  [[nodiscard]] Matrix adjoint() const {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  [[nodiscard]] Matrix conjugate() const {
    Matrix m;
    for (std::size_t k = 0; k < N * N; ++k) m.data_[k] = std::conj(data_[k]);
    return m;
  }

  [[nodiscard]] cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend Column operator*(const Matrix& a, const Column& v) {
    Column out{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend Matrix operator*(cplx s, const Matrix& a) {
    Matrix m = a;
    for (cplx& e : m.data_) e *= s;
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (std::size_t k = 0; k < N * N; ++k) m.data_[k] += b.data_[k];
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (std::size_t k = 0; k < N * N; ++k) m.data_[k] -= b.data_[k];
    return m;
  }

  /// Largest entrywise modulus of a - b.
  friend double max_abs_diff(const Matrix& a, const Matrix& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < N * N; ++k)
      d = std::max(d, std::abs(a.data_[k] - b.data_[k]));
    return d;
  }

 private:
  std::array<cplx, N * N> data_{};
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

inline cplx det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

inline const Mat2& pauli_x() {
  static const Mat2 m{0.0, 1.0, 1.0, 0.0};
  return m;
}
inline const Mat2& pauli_y() {
  static const Mat2 m{0.0, -kI, kI, 0.0};
  return m;
}
inline const Mat2& pauli_z() {
  static const Mat2 m{1.0, 0.0, 0.0, -1.0};
  return m;
}

/// exp(-i sigma_z angle / 2).
inline Mat2 rotation_z(double angle) {
  const cplx e = std::polar(1.0, -angle / 2.0);
  return Mat2{e, 0.0, 0.0, std::conj(e)};
}

/// exp(-i sigma_y angle / 2), a real rotation matrix.
inline Mat2 rotation_y(double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  return Mat2{c, -s, s, c};
}

// ---------------------------------------------------------------------------
// Angles and small vectors

/// Wraps into [0, 2pi).
inline double wrap_two_pi(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

/// Wraps into (-pi, pi].
inline double wrap_pi(double a) {
  double w = std::remainder(a, kTwoPi);
  if (w <= -kPi) w += kTwoPi;
  return w;
}

/// Distance between two angles measured on the circle, in [0, pi].
inline double circle_distance(double a, double b) { return std::abs(wrap_pi(a - b)); }

inline double norm(const Vec3& v) { return std::hypot(v[0], v[1], v[2]); }

inline double norm(const Ket& k) { return std::sqrt(std::norm(k[0]) + std::norm(k[1])); }

// ---------------------------------------------------------------------------
// States

/// Pure two-qubit state: amplitudes (c_{++}, c_{+-}, c_{-+}, c_{--}).
/// Projective semantics: overall amplitude and phase carry no meaning, so
/// comparisons go through fidelity().
class TwoQubitState {
 public:
  using Amplitudes = std::array<cplx, 4>;

  constexpr TwoQubitState() : amps_{1.0, 0.0, 0.0, 0.0} {}
  constexpr explicit TwoQubitState(const Amplitudes& amps) : amps_(amps) {}
  constexpr TwoQubitState(cplx pp, cplx pm, cplx mp, cplx mm) : amps_{pp, pm, mp, mm} {}

  [[nodiscard]] constexpr const Amplitudes& amplitudes() const { return amps_; }
  [[nodiscard]] constexpr cplx operator[](std::size_t i) const { return amps_[i]; }

  [[nodiscard]] double norm() const {
    double s = 0.0;
    for (const cplx& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

 private:
  Amplitudes amps_;
};

/// Rescales to unit norm. Throws DegenerateState for zero (or non-finite) norm.
inline TwoQubitState normalize(const TwoQubitState& state) {
  const double n = state.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::DegenerateState, "degenerate state: zero norm");
  }
  TwoQubitState::Amplitudes a = state.amplitudes();
  for (cplx& c : a) c /= n;
  return TwoQubitState(a);
}

/// <a|b>.
inline cplx inner(const TwoQubitState& a, const TwoQubitState& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// |<a|b>|^2 for normalized inputs, clamped to [0, 1].
inline double fidelity(const TwoQubitState& a, const TwoQubitState& b) {
  return std::clamp(std::norm(inner(a, b)), 0.0, 1.0);
}

/// 1 - fidelity; zero iff projectively equal.
inline double projective_deviation(const TwoQubitState& a, const TwoQubitState& b) {
  return 1.0 - fidelity(a, b);
}

inline bool projectively_equal(const TwoQubitState& a, const TwoQubitState& b,
                               const Tolerances& tol = default_tolerances()) {
  return projective_deviation(a, b) <= tol.projective;
}

/// M[i][j] = c_{ij}, qubit-1 index first.
inline Mat2 coefficient_matrix(const TwoQubitState& s) { return Mat2{s[0], s[1], s[2], s[3]}; }

inline TwoQubitState state_from_coefficients(const Mat2& m) {
  return TwoQubitState(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

/// |a> (x) |b>.
inline TwoQubitState tensor(const Ket& a, const Ket& b) {
  return TwoQubitState(a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]);
}

/// (a (x) b)|s> for arbitrary 2x2 factors.
inline TwoQubitState apply_kron(const Mat2& a, const Mat2& b, const TwoQubitState& s) {
  // (a (x) b) acting on the coefficient matrix is a M b^T.
  Mat2 m = coefficient_matrix(s);
  Mat2 bt{b(0, 0), b(1, 0), b(0, 1), b(1, 1)};
  return state_from_coefficients(a * m * bt);
}

// ---------------------------------------------------------------------------
// Single-qubit unitaries

/// 2x2 unitary, validated on construction (U^dagger U = I entrywise).
class SingleQubitUnitary {
 public:
  SingleQubitUnitary() : m_(Mat2::identity()) {}

  explicit SingleQubitUnitary(const Mat2& m, const Tolerances& tol = default_tolerances())
      : m_(m) {
    if (max_abs_diff(m.adjoint() * m, Mat2::identity()) > tol.unitarity) {
      throw Error(ErrorKind::InvalidArgument, "matrix is not unitary");
    }
  }

  [[nodiscard]] const Mat2& matrix() const { return m_; }
  [[nodiscard]] SingleQubitUnitary adjoint() const { return SingleQubitUnitary(m_.adjoint()); }

  friend SingleQubitUnitary operator*(const SingleQubitUnitary& a, const SingleQubitUnitary& b) {
    return SingleQubitUnitary(a.m_ * b.m_);
  }

 private:
  Mat2 m_;
};

struct LocalUnitaryPair {
  SingleQubitUnitary first;
  SingleQubitUnitary second;
};

/// (u1 (x) u2)|state>.
inline TwoQubitState apply_local(const LocalUnitaryPair& pair, const TwoQubitState& state) {
  return apply_kron(pair.first.matrix(), pair.second.matrix(), state);
}

/// exp(-i (n . sigma) angle / 2): counterclockwise rotation by `angle`
/// about `axis`, lifted to SU(2).
inline SingleQubitUnitary su2_from_axis_angle(const Vec3& axis, double angle,
                                              const Tolerances& tol = default_tolerances()) {
  if (std::abs(norm(axis) - 1.0) > tol.unit_axis) {
    throw Error(ErrorKind::InvalidArgument, "rotation axis is not a unit vector");
  }
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const Mat2 n_sigma = cplx(axis[0]) * pauli_x() + cplx(axis[1]) * pauli_y() +
                       cplx(axis[2]) * pauli_z();
  return SingleQubitUnitary(cplx(c) * Mat2::identity() + cplx(0.0, -s) * n_sigma, tol);
}

// ---------------------------------------------------------------------------
// Bloch sphere

/// Polar angle theta in [0, pi], azimuth phi in [0, 2pi); phi is 0 at poles.
struct BlochPoint {
  double theta = 0.0;
  double phi = 0.0;

  [[nodiscard]] Vec3 cartesian() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  }

  friend bool operator==(const BlochPoint&, const BlochPoint&) = default;
};

/// Validates theta, wraps phi and applies the pole convention.
inline BlochPoint make_bloch_point(double theta, double phi,
                                   const Tolerances& tol = default_tolerances()) {
  if (!std::isfinite(theta) || !std::isfinite(phi) || theta < -tol.pole_snap ||
      theta > kPi + tol.pole_snap) {
    throw Error(ErrorKind::InvalidArgument, "Bloch polar angle outside [0, pi]");
  }
  theta = std::clamp(theta, 0.0, kPi);
  if (theta <= tol.pole_snap || theta >= kPi - tol.pole_snap) phi = 0.0;
  return BlochPoint{theta, wrap_two_pi(phi)};
}

/// (cos(theta/2), e^{i phi} sin(theta/2)).
inline Ket ket_of_bloch(const BlochPoint& p) {
  return {cplx(std::cos(p.theta / 2.0)), std::polar(std::sin(p.theta / 2.0), p.phi)};
}

inline BlochPoint bloch_point_of_ket(const Ket& ket, const Tolerances& tol = default_tolerances()) {
  const double n = norm(ket);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::DegenerateState, "degenerate ket: zero norm");
  }
  const double theta = 2.0 * std::atan2(std::abs(ket[1]), std::abs(ket[0]));
  const double phi = std::arg(ket[1] * std::conj(ket[0]));
  return make_bloch_point(theta, phi, tol);
}

/// Great-circle angle between two Bloch points.
inline double sphere_distance(const BlochPoint& a, const BlochPoint& b) {
  const Vec3 u = a.cartesian();
  const Vec3 v = b.cartesian();
  const Vec3 cross{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                   u[0] * v[1] - u[1] * v[0]};
  const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  return std::atan2(norm(cross), dot);
}

}  // namespace qbundle
