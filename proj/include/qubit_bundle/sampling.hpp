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

// Seeded random draws: Haar-uniform states and SU(2) elements.

#include <qubit_bundle/linalg.hpp>

#include <cstdint>
#include <random>

namespace qbundle {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  double gaussian() { return normal_(rng_); }

  cplx complex_gaussian() { return {gaussian(), gaussian()}; }

  /// Haar-uniform pure state: normalized complex Gaussian quadruple.
  TwoQubitState state() {
    return normalize(TwoQubitState(complex_gaussian(), complex_gaussian(), complex_gaussian(),
                                   complex_gaussian()));
  }

  /// Uniform point on the unit 2-sphere.
  Vec3 unit_vector() {
    for (;;) {
      Vec3 v{gaussian(), gaussian(), gaussian()};
      const double n = norm(v);
      if (n > 1e-12) return {v[0] / n, v[1] / n, v[2] / n};
    }
  }

  BlochPoint bloch_point() {
    const Vec3 v = unit_vector();
    return make_bloch_point(std::acos(std::clamp(v[2], -1.0, 1.0)), std::atan2(v[1], v[0]));
  }

  /// Haar-uniform SU(2): a normalized Gaussian quaternion (w, x, y, z)
  /// mapped to w I - i (x sigma_x + y sigma_y + z sigma_z).
  SingleQubitUnitary su2() {
    double q[4];
    double n = 0.0;
    do {
      for (double& c : q) c = gaussian();
      n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    } while (n < 1e-12);
    for (double& c : q) c /= n;
    return SingleQubitUnitary(Mat2{cplx(q[0], -q[3]), cplx(-q[2], -q[1]), cplx(q[2], -q[1]),
                                   cplx(q[0], q[3])});
  }

  LocalUnitaryPair local_pair() { return {su2(), su2()}; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qbundle
