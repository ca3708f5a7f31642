// Copyright 2026 The lopsim Authors
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

// lopctl: command-line front end.
//
//   lopctl prepare A B C            optimal single-ancilla preparation from |11>
//   lopctl simulate --circuit F n1 .. nN --outcome m'
//   lopctl sweep --circuit F --input n1 .. nN --protocol no-click|click
//   lopctl decompose --matrix F     unitary -> beam splitters and phases
//   lopctl bound A B C --ancillas a multi-ancilla search
//   lopctl selftest                 acceptance suite
//
// Exit codes: 0 success, 2 usage error, 3 numerical failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lop/acceptance.hpp"
#include "lop/circuit.hpp"
#include "lop/detector.hpp"
#include "lop/engineering.hpp"
#include "lop/errors.hpp"
#include "lop/serialization.hpp"

namespace {

using namespace lop;

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  double tolerance = kTolerance;
  bool tolerance_set = false;
  Format format = Format::Json;
  bool format_set = false;
  std::string output;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string format_complex(Complex z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

void print_state_text(std::ostream& os, const PureState& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Complex a = s.amplitudes()(static_cast<Eigen::Index>(i));
    if (std::abs(a) > 1e-12) os << "  " << s.basis()[i].to_string() << "  " << format_complex(a) << '\n';
  }
}

PureState read_target(const std::vector<std::string>& triple) {
  Vector v(3);
  for (int i = 0; i < 3; ++i) v(i) = parse_complex(triple[static_cast<std::size_t>(i)]);
  const double norm = v.norm();
  if (norm == 0.0) throw UsageError("target amplitudes are all zero");
  if (std::abs(norm * norm - 1.0) > 1e-9) {
    std::cerr << "warning: target not normalized (norm^2 = " << norm * norm << "); normalizing\n";
    v /= norm;
  }
  return qutrit_state(v(0), v(1), v(2));
}

int cmd_prepare(const RunConfig& cfg, const std::vector<std::string>& triple, unsigned ancilla) {
  if (ancilla != 0) throw UsageError("prepare: only a vacuum ancilla (--ancilla 0) is supported");
  const PureState target = read_target(triple);
  const EngineeringSolution sol = cfg.tolerance_set ? solve_target(target, cfg.tolerance) : solve_target(target);
  Sink sink(cfg.output);
  auto& os = sink.os();
  if (cfg.format == Format::Text) {
    os << "probability " << std::setprecision(12) << sol.success_probability << '\n'
       << "ancilla in " << sol.ancilla_in << ", outcome " << sol.postselect_outcome << '\n'
       << "matrix\n";
    const Matrix& m = sol.mode_unitary.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      os << ' ';
      for (Eigen::Index c = 0; c < m.cols(); ++c) os << ' ' << format_complex(m(r, c));
      os << '\n';
    }
    os << "circuit\n" << to_json(decompose(sol.mode_unitary)).dump(2) << '\n';
  } else {
    os << to_json(sol).dump(2) << '\n';
  }
  return 0;
}

int cmd_simulate(const RunConfig& cfg, const std::string& circuit_path, const std::vector<unsigned>& input,
                 unsigned outcome) {
  const ModeUnitary u = network_from_json(read_json_file(circuit_path), cfg.tolerance);
  if (input.size() != u.size()) {
    throw UsageError("simulate: input has " + std::to_string(input.size()) + " modes, network has " +
                     std::to_string(u.size()));
  }
  if (u.size() < 2) throw UsageError("simulate: network needs an ancilla mode");
  const OccupationVector occ(input);
  const PureState comp = PureState::basis_state(occ.head(u.size() - 1));
  const PostSelection sel = postselect(u, comp, occ[u.size() - 1], outcome);

  Sink sink(cfg.output);
  auto& os = sink.os();
  if (cfg.format == Format::Text) {
    os << "probability " << std::setprecision(12) << sel.probability << '\n';
    if (sel.heralded) {
      os << "state\n";
      print_state_text(os, sel.state);
    } else {
      os << "outcome never occurs\n";
    }
  } else {
    json j{{"outcome", outcome}, {"probability", sel.probability}, {"heralded", sel.heralded}};
    j["state"] = sel.heralded ? to_json(sel.state) : json(nullptr);
    os << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::string& circuit_path, const std::vector<unsigned>& input,
              const std::string& protocol, double eta_min, double eta_max, std::size_t steps, int branch) {
  const ModeUnitary u = network_from_json(read_json_file(circuit_path), cfg.tolerance);
  std::vector<double> etas;
  Protocol proto;
  try {
    etas = eta_grid(eta_min, eta_max, steps);
    proto = parse_protocol(protocol);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::optional<unsigned> target;
  if (branch >= 0) target = static_cast<unsigned>(branch);
  const auto points = tradeoff_sweep(u, OccupationVector(input), proto, etas, target);

  Sink sink(cfg.output);
  auto& os = sink.os();
  if (cfg.format == Format::Json) {
    json rows = json::array();
    for (const auto& p : points) {
      rows.push_back({{"eta", p.eta}, {"probability", p.probability},
                      {"fidelity", std::isnan(p.fidelity) ? json(nullptr) : json(p.fidelity)}});
    }
    os << rows.dump(2) << '\n';
  } else {
    write_tradeoff_csv(os, points);
  }
  return 0;
}

int cmd_decompose(const RunConfig& cfg, const std::string& matrix_path) {
  const json doc = read_json_file(matrix_path);
  const ModeUnitary m = mode_unitary_from_json(doc, cfg.tolerance);
  const Circuit c = decompose(m);
  const double err = max_abs_diff(recompose(c).matrix(), m.matrix());
  if (err > 1e-10) {
    throw NumericalError("decompose: round trip error " + std::to_string(err));
  }
  Sink sink(cfg.output);
  sink.os() << to_json(c).dump(2) << '\n';
  return 0;
}

int cmd_bound(const RunConfig& cfg, const std::vector<std::string>& triple, unsigned ancillas, std::size_t budget) {
  std::cerr << "seed " << cfg.seed << '\n';
  const PureState target = read_target(triple);
  const BoundSearchResult res = multi_ancilla_bound_check(target, ancillas, budget, cfg.seed);
  Sink sink(cfg.output);
  auto& os = sink.os();
  if (cfg.format == Format::Text) {
    os << "best probability " << std::setprecision(12) << res.best_probability << " after " << res.evaluations
       << " evaluations\n";
  } else {
    json j{{"ancillas", ancillas}, {"budget", budget}, {"seed", cfg.seed},
           {"best_probability", res.best_probability}, {"evaluations", res.evaluations}};
    j["matrix"] = res.best_unitary ? to_json(*res.best_unitary) : json(nullptr);
    os << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_selftest(const RunConfig& cfg) {
  std::cerr << "seed " << cfg.seed << '\n';
  AcceptanceOptions opts;
  opts.seed = cfg.seed;
  if (cfg.tolerance_set) opts.tolerance_override = cfg.tolerance;
  const auto results = run_acceptance(opts);
  Sink sink(cfg.output);
  print_acceptance_report(sink.os(), results);
  for (const auto& r : results) {
    if (!r.passed) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Passive linear-optics state engineering toolkit", "lopctl"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json";
  app.add_option("--seed", cfg.seed, "Random seed (64-bit)");
  auto* tol_opt = app.add_option("--tol", cfg.tolerance, "Numerical tolerance")->check(CLI::PositiveNumber);
  auto* fmt_opt = app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", cfg.output, "Write to this file instead of stdout");

  std::vector<std::string> triple;
  unsigned ancilla = 0;
  auto* prepare = app.add_subcommand("prepare", "Optimal preparation of A|20> + B|11> + C|02> from |11>");
  prepare->add_option("amplitudes", triple, "A B C as re, re+imi or re,im")->required()->expected(3);
  prepare->add_option("--ancilla", ancilla, "Ancilla photon number");

  std::string circuit_path;
  std::vector<unsigned> input;
  unsigned outcome = 0;
  auto* simulate = app.add_subcommand("simulate", "Run an occupation state through a network and post-select");
  simulate->add_option("--circuit", circuit_path, "Circuit or unitary JSON")->required();
  simulate->add_option("input", input, "Occupation numbers, ancilla last")->required();
  simulate->add_option("--outcome", outcome, "Detected ancilla photon number")->required();

  std::string protocol = "no-click";
  double eta_min = 0.0, eta_max = 1.0;
  std::size_t steps = 11;
  int branch = -1;
  auto* sweep = app.add_subcommand("sweep", "Detector-efficiency trade-off (CSV)");
  sweep->add_option("--circuit", circuit_path, "Circuit or unitary JSON")->required();
  sweep->add_option("--input", input, "Occupation numbers, ancilla last")->required();
  sweep->add_option("--protocol", protocol, "no-click or click");
  sweep->add_option("--eta-min", eta_min, "Lowest efficiency");
  sweep->add_option("--eta-max", eta_max, "Highest efficiency");
  sweep->add_option("--steps", steps, "Number of grid points");
  sweep->add_option("--branch", branch, "Ideal ancilla outcome used as fidelity reference");

  std::string matrix_path;
  auto* decomp = app.add_subcommand("decompose", "Decompose a unitary into beam splitters and phase shifters");
  decomp->add_option("--matrix", matrix_path, "Unitary JSON")->required();

  unsigned ancillas = 2;
  std::size_t budget = 2000;
  auto* bound = app.add_subcommand("bound", "Best acceptance found with several vacuum ancillas");
  bound->add_option("amplitudes", triple, "A B C")->required()->expected(3);
  bound->add_option("--ancillas", ancillas, "Number of vacuum ancillas")->check(CLI::Range(1u, 4u));
  bound->add_option("--budget", budget, "Random candidates");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.tolerance_set = tol_opt->count() > 0;
  cfg.format_set = fmt_opt->count() > 0;
  cfg.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
  if (!cfg.format_set && sweep->parsed()) cfg.format = Format::Csv;

  try {
    if (prepare->parsed()) return cmd_prepare(cfg, triple, ancilla);
    if (simulate->parsed()) return cmd_simulate(cfg, circuit_path, input, outcome);
    if (sweep->parsed()) return cmd_sweep(cfg, circuit_path, input, protocol, eta_min, eta_max, steps, branch);
    if (decomp->parsed()) return cmd_decompose(cfg, matrix_path);
    if (bound->parsed()) return cmd_bound(cfg, triple, ancillas, budget);
    if (selftest->parsed()) return cmd_selftest(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
