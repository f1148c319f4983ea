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

// Command-line front end. `run_cli` is separate from main() so tests can
// drive it with captured streams.

#include <qubit_bundle/json_io.hpp>
#include <qubit_bundle/properties.hpp>
#include <qubit_bundle/trajectory_csv.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace qbundle::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kDomainError = 3,
  kVerificationFailed = 4,
};

struct Request {
  std::string state;
  std::string coords;
  std::string hamiltonian;
  double t0 = 0.0;
  double t1 = 1.0;
  double dt = 1e-2;
  std::string out = "-";
  std::uint64_t seed = 1;
  std::size_t n = 1000;
  std::optional<double> tol;
};

namespace detail {

/// `--state` and friends take a file path or an inline JSON document.
inline io::json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return io::parse(arg);
  std::ifstream in(arg);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return io::parse(buf.str());
}

inline Tolerances tolerances(const Request& req) {
  Tolerances tol;
  if (req.tol) {
    if (!(*req.tol >= 0.0 && *req.tol < 0.5)) {
      throw Error(ErrorKind::InvalidArgument, "--tol must lie in [0, 0.5)");
    }
    tol.eps_class = *req.tol;
    tol.eps_band = std::max(tol.eps_band, tol.eps_class);
  }
  return tol;
}

inline std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

}  // namespace detail

inline int cmd_classify(const Request& req, std::ostream& out) {
  const Tolerances tol = detail::tolerances(req);
  const TwoQubitState s = io::state_from_json(detail::load_json(req.state));
  out << io::class_to_json(classify(s, tol)).dump() << '\n';
  return kOk;
}

inline StratumCoords coordinates_of(const TwoQubitState& s, const Tolerances& tol) {
  switch (classify(s, tol).stratum) {
    case Stratum::Unentangled: return factor_unentangled(s, tol);
    case Stratum::Partial: return extract(s, tol);
    case Stratum::Full: return rotation_from_state(s, tol);
  }
  throw Error(ErrorKind::Internal, "unreachable stratum");
}

inline int cmd_coords(const Request& req, std::ostream& out) {
  const Tolerances tol = detail::tolerances(req);
  const TwoQubitState s = io::state_from_json(detail::load_json(req.state));
  out << io::to_json(coordinates_of(s, tol)).dump() << '\n';
  return kOk;
}

inline TwoQubitState state_of(const StratumCoords& c, const Tolerances& tol) {
  if (const auto* b = std::get_if<BundleCoords>(&c)) return reconstruct(*b, tol);
  if (const auto* r = std::get_if<AxisAngleRotation>(&c)) return state_from_rotation(*r, tol);
  return compose_unentangled(std::get<BlochPair>(c));
}

inline int cmd_reconstruct(const Request& req, std::ostream& out) {
  const Tolerances tol = detail::tolerances(req);
  const StratumCoords c = io::coords_from_json(detail::load_json(req.coords));
  out << io::state_to_json(state_of(c, tol)).dump() << '\n';
  return kOk;
}

inline int cmd_bell(const Request& req, std::ostream& out) {
  (void)detail::tolerances(req);
  out << "[\n";
  const auto table = bell_table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const BellEntry& e = table[i];
    io::json row = io::to_json(e.rotation);
    row["name"] = e.name;
    row["bell"] = e.bell_label;
    row["amplitudes"] = io::state_to_json(e.state)["amplitudes"];
    out << "  " << row.dump() << (i + 1 < table.size() ? ",\n" : "\n");
  }
  out << "]\n";
  return kOk;
}

inline int cmd_evolve(const Request& req, std::ostream& out) {
  const Tolerances tol = detail::tolerances(req);
  const HermitianGenerator h = io::generator_from_json(detail::load_json(req.hamiltonian));
  const TwoQubitState s = io::state_from_json(detail::load_json(req.state));
  const auto points = coordinate_trajectory(evolve(h, s, req.t0, req.t1, req.dt), tol);
  if (req.out == "-") {
    write_trajectory_csv(out, points);
  } else {
    std::ofstream file(req.out);
    if (!file) throw Error(ErrorKind::Parse, "cannot write '" + req.out + "'");
    write_trajectory_csv(file, points);
  }
  return kOk;
}

inline int cmd_verify(const Request& req, std::ostream& out) {
  if (req.n < 1) throw Error(ErrorKind::InvalidArgument, "--n must be at least 1");
  const Tolerances tol = detail::tolerances(req);
  const auto results = props::run_suite(req.seed, req.n, tol);
  std::size_t failed = 0;
  for (const props::PropertyResult& r : results) {
    if (!r.passed()) ++failed;
    out << (r.passed() ? "PASS  " : "FAIL  ") << r.name << "  trials=" << r.trials
        << (r.bound == props::Bound::Below ? "  max=" : "  observed=") << detail::sci(r.observed)
        << (r.bound == props::Bound::Below ? " < " : " > ") << detail::sci(r.threshold) << '\n';
  }
  out << (results.size() - failed) << "/" << results.size() << " properties passed (seed " << req.seed
      << ", n " << req.n << ")\n";
  return failed == 0 ? kOk : kVerificationFailed;
}

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::DegenerateState: return kParseError;
    case ErrorKind::ChartDomain:
    case ErrorKind::WrongStratum:
    case ErrorKind::InvalidArgument: return kDomainError;
    case ErrorKind::Internal: return kFailure;
  }
  return kFailure;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit pure-state geometry: entanglement class and stratum coordinates", "qubit_bundle"};
  app.require_subcommand(1, 1);
  Request req;
  double tol_value = 0.0;
  auto* tol_opt = app.add_option("--tol", tol_value, "Stratum threshold on concurrence")
                      ->envname("QUBIT_BUNDLE_TOL");

  auto* classify_cmd = app.add_subcommand("classify", "Concurrence, eta and stratum of a state");
  classify_cmd->add_option("--state", req.state, "State JSON (file or inline)")->required();

  auto* coords_cmd = app.add_subcommand("coords", "Stratum-appropriate coordinates of a state");
  coords_cmd->add_option("--state", req.state, "State JSON (file or inline)")->required();

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "State from coordinates");
  reconstruct_cmd->add_option("--coords", req.coords, "Coordinate JSON (file or inline)")->required();

  auto* bell_cmd = app.add_subcommand("bell", "Bell states and their rotations");

  auto* evolve_cmd = app.add_subcommand("evolve", "Coordinate trajectory CSV under exp(-iHt)");
  evolve_cmd->add_option("--hamiltonian", req.hamiltonian, "Hamiltonian JSON (file or inline)")->required();
  evolve_cmd->add_option("--state", req.state, "Initial state JSON (file or inline)")->required();
  evolve_cmd->add_option("--t0", req.t0, "Start time")->capture_default_str();
  evolve_cmd->add_option("--t1", req.t1, "End time")->capture_default_str();
  evolve_cmd->add_option("--dt", req.dt, "Time step")->capture_default_str();
  evolve_cmd->add_option("--out", req.out, "Output CSV path, '-' for stdout")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized property suite");
  verify_cmd->add_option("--seed", req.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--n", req.n, "Trials per property")->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  if (tol_opt->count() > 0) req.tol = tol_value;

  try {
    if (*classify_cmd) return cmd_classify(req, out);
    if (*coords_cmd) return cmd_coords(req, out);
    if (*reconstruct_cmd) return cmd_reconstruct(req, out);
    if (*bell_cmd) return cmd_bell(req, out);
    if (*evolve_cmd) return cmd_evolve(req, out);
    if (*verify_cmd) return cmd_verify(req, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kFailure;
}

}  // namespace qbundle::cli
