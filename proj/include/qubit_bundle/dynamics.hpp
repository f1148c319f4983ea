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

// Unitary evolution under a time-independent Hamiltonian and conversion of
// the resulting state sequence into stratum-appropriate coordinates with
// chart bookkeeping.

#include <qubit_bundle/bundle_charts.hpp>
#include <qubit_bundle/class_extremes.hpp>

#include <Eigen/Dense>

#include <optional>
#include <variant>
#include <vector>

namespace qbundle {

/// a (x) b as a 4x4 matrix in the (++, +-, -+, --) basis.
inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

/// Hermitian 4x4 generator (hbar = 1), validated on construction.
class HermitianGenerator {
 public:
  HermitianGenerator() = default;

  explicit HermitianGenerator(const Mat4& h, const Tolerances& tol = default_tolerances()) : h_(h) {
    if (max_abs_diff(h, h.adjoint()) > tol.hermiticity) {
      throw Error(ErrorKind::InvalidArgument, "Hamiltonian is not Hermitian");
    }
  }

  /// a (x) I + I (x) b: generates local unitaries only.
  static HermitianGenerator local(const Mat2& a, const Mat2& b,
                                  const Tolerances& tol = default_tolerances()) {
    return HermitianGenerator(kron(a, Mat2::identity()) + kron(Mat2::identity(), b), tol);
  }

  [[nodiscard]] const Mat4& matrix() const { return h_; }

 private:
  Mat4 h_;
};

struct TimedState {
  double t = 0.0;
  TwoQubitState state;
};

/// exp(-i H tau) via the spectral decomposition of H.
class Propagator {
 public:
  explicit Propagator(const HermitianGenerator& h) {
    Eigen::Matrix4cd m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = h.matrix()(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m);
    vectors_ = solver.eigenvectors();
    values_ = solver.eigenvalues();
  }

  [[nodiscard]] TwoQubitState apply(const TwoQubitState& psi, double tau) const {
    Eigen::Vector4cd v;
    for (int i = 0; i < 4; ++i) v(i) = psi[static_cast<std::size_t>(i)];
    Eigen::Vector4cd c = vectors_.adjoint() * v;
    for (int i = 0; i < 4; ++i) c(i) *= std::polar(1.0, -values_(i) * tau);
    const Eigen::Vector4cd out = vectors_ * c;
    return TwoQubitState(out(0), out(1), out(2), out(3));
  }

 private:
  Eigen::Matrix4cd vectors_;
  Eigen::Vector4d values_;
};

/// States exp(-i H (t - t0))|initial> on the grid t0, t0 + dt, ..., with the
/// final point clamped to t1.
inline std::vector<TimedState> evolve(const HermitianGenerator& h, const TwoQubitState& initial,
                                      double t0, double t1, double dt) {
  if (!(dt > 0.0) || !(t1 > t0) || !std::isfinite(t1 - t0)) {
    throw Error(ErrorKind::InvalidArgument, "evolve needs dt > 0 and t1 > t0");
  }
  const TwoQubitState psi0 = normalize(initial);
  const Propagator u(h);
  const auto steps = static_cast<std::size_t>(std::ceil((t1 - t0) / dt - 1e-9));
  std::vector<TimedState> out;
  out.reserve(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = k == steps ? t1 : t0 + static_cast<double>(k) * dt;
    out.push_back({t, u.apply(psi0, t - t0)});
  }
  return out;
}

/// Grid spacing that keeps coordinate steps along exp(-iHt)|initial> under
/// `max_step`. Near product states gamma moves like |dpsi| / lambda2, near
/// maximal entanglement the base points move like |dpsi| / (lambda1^2 -
/// lambda2^2); a fidelity bound alone does not control either. The distance
/// m to both boundaries is taken from a coarse pass (singular values are
/// Lipschitz, so m is lowered by the coarse step), then dt = max_step * m /
/// (2 |H|), floored at m = `min_margin`.
inline double continuity_time_step(const HermitianGenerator& h, const TwoQubitState& initial, double t0,
                                   double t1, double max_step = 0.1, double min_margin = 1e-3) {
  Eigen::Matrix4cd m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = h.matrix()(i, j);
  const Eigen::Vector4d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(m, Eigen::EigenvaluesOnly).eigenvalues();
  // Speed of the ray in projective space is bounded by half the spectral spread.
  const double speed = std::max(0.5 * (ev.maxCoeff() - ev.minCoeff()), 1e-12);
  if (!(t1 > t0)) throw Error(ErrorKind::InvalidArgument, "continuity_time_step needs t1 > t0");

  const double coarse_move = 2e-4;
  const Propagator u(h);
  const TwoQubitState psi0 = normalize(initial);
  const double coarse_dt = coarse_move / speed;
  double margin = 1.0;
  for (double t = t0;; t = std::min(t + coarse_dt, t1)) {
    const SchmidtData sd = schmidt(u.apply(psi0, t - t0));
    margin = std::min({margin, sd.lambda2, sd.lambda1 * sd.lambda1 - sd.lambda2 * sd.lambda2});
    if (t >= t1) break;
  }
  margin = std::max(margin - 3.0 * coarse_move, min_margin);
  return std::min(max_step * margin / (2.0 * speed), 5e-3 / speed);
}

// ---------------------------------------------------------------------------
// Coordinate trajectories

using StratumCoords = std::variant<BlochPair, BundleCoords, AxisAngleRotation>;

/// Recorded when the bundle chart changes between consecutive points.
/// `gamma_from` is the fibre coordinate of the same state in the old chart
/// (absent if the state already left the old chart's domain).
struct ChartSwitch {
  Chart from = Chart::NN;
  std::optional<double> gamma_from;
};

struct TrajectoryPoint {
  double t = 0.0;
  Stratum stratum = Stratum::Unentangled;
  double concurrence = 0.0;
  StratumCoords coords;
  /// Inside the widened trajectory band but outside the strict class band.
  bool near_boundary = false;
  /// Stratum differs from the previous point.
  bool stratum_changed = false;
  std::optional<ChartSwitch> chart_switch;
};

namespace detail {

/// Hysteresis: keep the current patch until the base point crosses the
/// switch band or violates the pole guard.
inline Hemisphere next_patch(Hemisphere current, const BlochPoint& p, const Tolerances& tol) {
  const double z = p.cartesian()[2];
  if (current == Hemisphere::N) {
    if (z < -tol.chart_switch_z || !in_patch(Hemisphere::N, p.theta, tol)) return Hemisphere::S;
  } else {
    if (z > tol.chart_switch_z || !in_patch(Hemisphere::S, p.theta, tol)) return Hemisphere::N;
  }
  return current;
}

}  // namespace detail

inline std::vector<TrajectoryPoint> coordinate_trajectory(const std::vector<TimedState>& states,
                                                          const Tolerances& tol = default_tolerances()) {
  Tolerances band = tol;
  band.eps_class = tol.eps_band;

  std::vector<TrajectoryPoint> out;
  out.reserve(states.size());
  for (const TimedState& ts : states) {
    const TwoQubitState s = normalize(ts.state);
    TrajectoryPoint p;
    p.t = ts.t;
    p.concurrence = concurrence(s);
    p.stratum = stratum_of(p.concurrence, band.eps_class);
    p.near_boundary = stratum_of(p.concurrence, tol.eps_class) != p.stratum;
    const TrajectoryPoint* prev = out.empty() ? nullptr : &out.back();
    p.stratum_changed = prev != nullptr && prev->stratum != p.stratum;

    switch (p.stratum) {
      case Stratum::Unentangled:
        p.coords = factor_unentangled(s, band);
        break;
      case Stratum::Full:
        p.coords = rotation_from_state(s, band);
        break;
      case Stratum::Partial: {
        BundleCoords natural = extract(s, band);
        const BundleCoords* last = prev != nullptr ? std::get_if<BundleCoords>(&prev->coords) : nullptr;
        if (last == nullptr) {
          p.coords = natural;
          break;
        }
        const Chart chart = make_chart(detail::next_patch(first_patch(last->chart), natural.base1, band),
                                       detail::next_patch(second_patch(last->chart), natural.base2, band));
        p.coords = chart == natural.chart ? natural : extract(s, band, chart);
        if (chart != last->chart) {
          ChartSwitch sw{last->chart, std::nullopt};
          BundleCoords old = natural;
          old.chart = last->chart;
          if (old.in_domain(band)) sw.gamma_from = extract(s, band, last->chart).gamma;
          p.chart_switch = sw;
        }
        break;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

struct ContinuityReport {
  /// Largest per-component step between consecutive points of one chart
  /// (eta, great-circle motion of each base point, gamma on the circle;
  /// rotation distance for fully entangled points).
  double max_step = 0.0;
  /// Largest |e^{i gamma_new} - t * e^{i gamma_old}| at chart switches.
  double max_switch_error = 0.0;
  std::size_t chart_switches = 0;
  std::size_t stratum_changes = 0;
  std::size_t steps_checked = 0;
};

inline ContinuityReport check_continuity(const std::vector<TrajectoryPoint>& points,
                                         const TransitionLaw& law = kBundleTransitions) {
  ContinuityReport r;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const TrajectoryPoint& a = points[i - 1];
    const TrajectoryPoint& b = points[i];
    if (b.stratum_changed || a.coords.index() != b.coords.index()) {
      ++r.stratum_changes;
      continue;
    }
    double step = 0.0;
    if (const auto* pa = std::get_if<BlochPair>(&a.coords)) {
      const auto& pb = std::get<BlochPair>(b.coords);
      step = std::max(sphere_distance(pa->first, pb.first), sphere_distance(pa->second, pb.second));
    } else if (const auto* ra = std::get_if<AxisAngleRotation>(&a.coords)) {
      step = rotation_distance(*ra, std::get<AxisAngleRotation>(b.coords));
    } else {
      const auto& ca = std::get<BundleCoords>(a.coords);
      const auto& cb = std::get<BundleCoords>(b.coords);
      double gamma_b = cb.gamma;
      if (b.chart_switch) {
        ++r.chart_switches;
        if (!b.chart_switch->gamma_from) continue;
        gamma_b = *b.chart_switch->gamma_from;
        const TransitionFactor t = transition_factor(b.chart_switch->from, cb.chart, cb.base1.phi,
                                                     cb.base2.phi, law);
        r.max_switch_error = std::max(
            r.max_switch_error, std::abs(std::polar(1.0, cb.gamma) - t.value * std::polar(1.0, gamma_b)));
      }
      step = std::max({std::abs(ca.eta - cb.eta), sphere_distance(ca.base1, cb.base1),
                       sphere_distance(ca.base2, cb.base2), circle_distance(ca.gamma, gamma_b)});
    }
    r.max_step = std::max(r.max_step, step);
    ++r.steps_checked;
  }
  return r;
}

}  // namespace qbundle
