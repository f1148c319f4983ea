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

// Walks one state through each stratum: builds a partially entangled state
// from chart coordinates, moves its fibre coordinate between charts, then
// evolves it under an Ising coupling and summarizes the trajectory.

#include <qubit_bundle/qubit_bundle.hpp>

#include <cstdio>

using namespace qbundle;

int main() {
  BundleCoords c;
  c.chart = Chart::NN;
  c.eta = kPi / 3.0;
  c.base1 = {kPi / 2.0, kPi / 4.0};
  c.base2 = {1.0, 0.5};
  c.gamma = 0.2;

  const TwoQubitState s = reconstruct(c);
  const EntanglementClass k = classify(s);
  std::printf("C = %.12f  eta = %.12f  stratum = %s\n", k.concurrence, k.eta,
              std::string(to_string(k.stratum)).c_str());

  for (Chart target : kAllCharts) {
    const BundleCoords moved = transition(c, target);
    const BundleCoords direct = extract(s, default_tolerances(), target);
    std::printf("  %s  gamma via transition % .12f  direct % .12f\n", std::string(to_string(target)).c_str(),
                moved.gamma, direct.gamma);
  }

  for (const BellEntry& e : bell_table()) {
    std::printf("  %-8s -> %s  axis (%g, %g, %g) angle %.6f\n", e.name.c_str(), e.bell_label.c_str(),
                e.rotation.axis[0], e.rotation.axis[1], e.rotation.axis[2], e.rotation.angle);
  }

  const HermitianGenerator ising(kron(pauli_z(), pauli_z()));
  const auto points = coordinate_trajectory(evolve(ising, s, 0.0, 3.0, 1e-3));
  const ContinuityReport r = check_continuity(points);
  std::printf("trajectory: %zu points, %zu chart switches, %zu stratum changes, max step %.3e\n",
              points.size(), r.chart_switches, r.stratum_changes, r.max_step);
  return 0;
}
