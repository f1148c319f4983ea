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

// JSON wire formats (nlohmann/json). All angles in radians.
//
//   state     {"amplitudes": [[re,im],[re,im],[re,im],[re,im]]}
//   bundle    {"chart":"NN","eta":..,"theta1":..,"phi1":..,"theta2":..,"phi2":..,"gamma":..}
//   rotation  {"axis":[x,y,z],"angle":..}
//   pair      {"q1":{"theta":..,"phi":..},"q2":{"theta":..,"phi":..}}
//   generator {"matrix": 4 rows of 4 [re,im] entries}

#include <qubit_bundle/dynamics.hpp>

#include <json.hpp>

#include <string>

namespace qbundle::io {

using nlohmann::json;

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what) {
  throw Error(ErrorKind::Parse, "malformed input: " + what);
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline double number(const json& j, const char* what) {
  if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
  return j.get<double>();
}

/// Accepts [re, im] or a bare real number.
inline cplx complex_entry(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    parse_fail("complex entries must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json complex_json(cplx c) { return json::array({c.real(), c.imag()}); }

}  // namespace detail

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    detail::parse_fail(e.what());
  }
}

// --- states ----------------------------------------------------------------

inline TwoQubitState state_from_json(const json& j) {
  const json& amps = detail::field(j, "amplitudes");
  if (!amps.is_array() || amps.size() != 4) detail::parse_fail("'amplitudes' must hold 4 entries");
  TwoQubitState::Amplitudes a;
  for (std::size_t i = 0; i < 4; ++i) a[i] = detail::complex_entry(amps[i]);
  try {
    return normalize(TwoQubitState(a));
  } catch (const Error&) {
    detail::parse_fail("state has zero norm");
  }
}

inline json state_to_json(const TwoQubitState& s) {
  json amps = json::array();
  for (const cplx& c : s.amplitudes()) amps.push_back(detail::complex_json(c));
  return json{{"amplitudes", amps}};
}

inline json class_to_json(const EntanglementClass& c) {
  return json{{"concurrence", c.concurrence}, {"eta", c.eta}, {"stratum", std::string(to_string(c.stratum))}};
}

// --- coordinates -------------------------------------------------------------

inline json to_json(const BundleCoords& c) {
  return json{{"chart", std::string(to_string(c.chart))},
              {"eta", c.eta},
              {"theta1", c.base1.theta},
              {"phi1", c.base1.phi},
              {"theta2", c.base2.theta},
              {"phi2", c.base2.phi},
              {"gamma", c.gamma}};
}

inline json to_json(const AxisAngleRotation& r) {
  return json{{"axis", json::array({r.axis[0], r.axis[1], r.axis[2]})}, {"angle", r.angle}};
}

inline json to_json(const BlochPair& p) {
  return json{{"q1", {{"theta", p.first.theta}, {"phi", p.first.phi}}},
              {"q2", {{"theta", p.second.theta}, {"phi", p.second.phi}}}};
}

inline json to_json(const StratumCoords& c) {
  return std::visit([](const auto& v) { return to_json(v); }, c);
}

inline BundleCoords bundle_from_json(const json& j) {
  const json& chart = detail::field(j, "chart");
  if (!chart.is_string()) detail::parse_fail("'chart' must be a string");
  BundleCoords c;
  c.chart = chart_from_string(chart.get<std::string>());
  c.eta = detail::number(detail::field(j, "eta"), "eta");
  // Range problems in the angles are domain errors, not parse errors.
  c.base1 = BlochPoint{detail::number(detail::field(j, "theta1"), "theta1"),
                       detail::number(detail::field(j, "phi1"), "phi1")};
  c.base2 = BlochPoint{detail::number(detail::field(j, "theta2"), "theta2"),
                       detail::number(detail::field(j, "phi2"), "phi2")};
  c.gamma = detail::number(detail::field(j, "gamma"), "gamma");
  return c;
}

inline AxisAngleRotation rotation_from_json(const json& j) {
  const json& axis = detail::field(j, "axis");
  if (!axis.is_array() || axis.size() != 3) detail::parse_fail("'axis' must hold 3 numbers");
  const Vec3 v{detail::number(axis[0], "axis"), detail::number(axis[1], "axis"),
               detail::number(axis[2], "axis")};
  return make_rotation(v, detail::number(detail::field(j, "angle"), "angle"));
}

inline BlochPair pair_from_json(const json& j) {
  auto point = [](const json& q) {
    return make_bloch_point(detail::number(detail::field(q, "theta"), "theta"),
                            detail::number(detail::field(q, "phi"), "phi"));
  };
  return {point(detail::field(j, "q1")), point(detail::field(j, "q2"))};
}

/// Dispatches on the schema's distinguishing key.
inline StratumCoords coords_from_json(const json& j) {
  if (!j.is_object()) detail::parse_fail("coordinates must be a JSON object");
  if (j.contains("chart")) return bundle_from_json(j);
  if (j.contains("axis")) return rotation_from_json(j);
  if (j.contains("q1")) return pair_from_json(j);
  detail::parse_fail("unrecognized coordinate object");
}

// --- generators --------------------------------------------------------------

inline HermitianGenerator generator_from_json(const json& j) {
  const json& rows = detail::field(j, "matrix");
  if (!rows.is_array() || rows.size() != 4) detail::parse_fail("'matrix' must have 4 rows");
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 4) detail::parse_fail("'matrix' rows must have 4 entries");
    for (std::size_t k = 0; k < 4; ++k) m(i, k) = detail::complex_entry(rows[i][k]);
  }
  return HermitianGenerator(m);
}

inline json generator_to_json(const HermitianGenerator& h) {
  json rows = json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < 4; ++k) row.push_back(detail::complex_json(h.matrix()(i, k)));
    rows.push_back(row);
  }
  return json{{"matrix", rows}};
}

}  // namespace qbundle::io
