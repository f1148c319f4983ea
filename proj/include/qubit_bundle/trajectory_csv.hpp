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

#include <qubit_bundle/dynamics.hpp>

#include <ostream>
#include <sstream>
#include <string>

namespace qbundle {

inline constexpr const char* kTrajectoryCsvHeader =
    "t,stratum,concurrence,chart,theta1,phi1,theta2,phi2,gamma,axis_x,axis_y,axis_z,angle";

namespace detail {

inline std::string csv_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace detail

/// One row per point; columns that do not apply to the point's stratum are
/// left empty.
inline void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryPoint>& points) {
  using detail::csv_number;
  os << kTrajectoryCsvHeader << '\n';
  for (const TrajectoryPoint& p : points) {
    // chart, theta1, phi1, theta2, phi2, gamma, axis_x, axis_y, axis_z, angle
    std::array<std::string, 10> cols;
    if (const auto* pair = std::get_if<BlochPair>(&p.coords)) {
      cols[1] = csv_number(pair->first.theta);
      cols[2] = csv_number(pair->first.phi);
      cols[3] = csv_number(pair->second.theta);
      cols[4] = csv_number(pair->second.phi);
    } else if (const auto* b = std::get_if<BundleCoords>(&p.coords)) {
      cols[0] = std::string(to_string(b->chart));
      cols[1] = csv_number(b->base1.theta);
      cols[2] = csv_number(b->base1.phi);
      cols[3] = csv_number(b->base2.theta);
      cols[4] = csv_number(b->base2.phi);
      cols[5] = csv_number(b->gamma);
    } else {
      const auto& r = std::get<AxisAngleRotation>(p.coords);
      cols[6] = csv_number(r.axis[0]);
      cols[7] = csv_number(r.axis[1]);
      cols[8] = csv_number(r.axis[2]);
      cols[9] = csv_number(r.angle);
    }
    os << csv_number(p.t) << ',' << to_string(p.stratum) << ',' << csv_number(p.concurrence);
    for (const std::string& c : cols) os << ',' << c;
    os << '\n';
  }
}

}  // namespace qbundle
