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

namespace qbundle {

/// Numerical thresholds shared by every module. Passed by const reference;
/// callers override individual fields (the CLI threads --tol into
/// `eps_class`).
struct Tolerances {
  /// Two states are projectively equal iff 1 - fidelity <= projective.
  double projective = 1e-9;
  /// Stratum threshold on concurrence: C <= eps_class is unentangled,
  /// C >= 1 - eps_class is fully entangled.
  double eps_class = 1e-9;
  /// Widened stratum band used along trajectories.
  double eps_band = 1e-6;
  /// Excluded-pole guard for the N/S chart domains (radians).
  double pole_guard = 1e-6;
  /// Maximum off-diagonal residual magnitude accepted by bundle extraction.
  double residual = 1e-8;
  /// Trajectory chart hysteresis: an N chart is kept while the Bloch z
  /// coordinate stays >= -chart_switch_z, an S chart while z <= chart_switch_z.
  double chart_switch_z = 0.5;
  /// Entrywise unitarity / Hermiticity checks.
  double unitarity = 1e-10;
  double hermiticity = 1e-10;
  /// |axis| = 1 check for rotation axes.
  double unit_axis = 1e-9;
  /// Bloch polar angle within this of 0 or pi is treated as a pole.
  double pole_snap = 1e-9;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace qbundle
