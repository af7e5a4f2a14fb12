// Copyright 2026 The Choquet Authors.
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

#include "choquet/cli.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "choquet/axioms.h"
#include "choquet/errors.h"
#include "choquet/independence.h"
#include "choquet/integral.h"
#include "choquet/io.h"
#include "choquet/oracle.h"
#include "choquet/random.h"
#include "choquet/set_function.h"

namespace choquet::cli {

namespace {

// Maps to the exit-code table; thrown by command bodies.
struct CommandError {
  int code;
  std::string message;
};

struct RunConfig {
  std::string capacity_path;
  std::string point;
  std::string subset;
  std::string family = "choquet";
  std::string axiom;
  std::string kind;
  std::string output;
  std::string format = "text";
  int n = 0;
  int trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tolerance;
  bool lovasz = false;
  bool invert = false;
  bool fixed_witnesses_only = false;
};

bool Structured(const RunConfig& config) { return config.format != "text"; }

SetFunction LoadSetFunction(const RunConfig& config) {
  if (config.capacity_path.empty()) {
    throw CommandError{kExitUsage, "--capacity: a set-function file is required"};
  }
  try {
    return ReadSetFunctionFile(config.capacity_path);
  } catch (const ParseError& e) {
    throw CommandError{kExitUsage, "--capacity " + config.capacity_path + ": " +
                                       e.what()};
  }
}

SignedCapacity RequireGame(SetFunction f, const std::string& path) {
  try {
    return ValidateSignedCapacity(std::move(f));
  } catch (const NotAGame& e) {
    throw CommandError{kExitNotAGame, "--capacity " + path + ": by_subset[\"\"]: " +
                                          e.what()};
  }
}

Point LoadPoint(const RunConfig& config) {
  if (config.point.empty()) {
    throw CommandError{kExitUsage, "--point: a comma-separated point is required"};
  }
  try {
    return ParsePoint(config.point);
  } catch (const ParseError& e) {
    throw CommandError{kExitUsage, std::string("--point: ") + e.what()};
  }
}

void Emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file || !(file << text)) {
    throw CommandError{kExitUsage, "--output: cannot write '" + config.output + "'"};
  }
}

std::string JoinOrder(const SortPermutation& perm) {
  std::string s;
  for (int e : perm.order) {
    if (!s.empty()) s += ',';
    s += std::to_string(e);
  }
  return s;
}

CheckOptions MakeCheckOptions(const RunConfig& config) {
  CheckOptions options;
  if (config.tolerance) {
    if (!(*config.tolerance > 0.0)) {
      throw CommandError{kExitUsage, "--tolerance: must be positive"};
    }
    options.tolerance.relative = *config.tolerance;
  }
  return options;
}

int CmdEval(const RunConfig& config, std::ostream& out) {
  SetFunction f = LoadSetFunction(config);
  const Point x = LoadPoint(config);
  if (x.size() != f.n()) {
    throw CommandError{kExitDimension,
                       "--point: has " + std::to_string(x.size()) +
                           " coordinates, the capacity has n = " +
                           std::to_string(f.n())};
  }
  const EvaluationResult result =
      config.lovasz ? LovaszExtension(f, x)
                    : Choquet(RequireGame(std::move(f), config.capacity_path), x);
  if (Structured(config)) {
    Json doc = Json::object();
    doc["mode"] = config.lovasz ? "lovasz" : "choquet";
    doc["value"] = result.value;
    doc["permutation"] = result.permutation_used.order;
    out << doc.dump(2) << '\n';
  } else {
    out << FormatDouble(result.value) << '\n'
        << "permutation: " << JoinOrder(result.permutation_used) << '\n';
  }
  return kExitOk;
}

int CmdMobius(const RunConfig& config, std::ostream& out) {
  const SetFunction f = LoadSetFunction(config);
  if (config.invert) {
    const MobiusRepresentation m(f.n(), {f.values().begin(), f.values().end()});
    Emit(config, WriteSetFunction(ZetaTransform(m)), out);
  } else {
    Emit(config, WriteMobiusRepresentation(MobiusTransform(f)), out);
  }
  return kExitOk;
}

int CmdCheck(const RunConfig& config, std::ostream& out) {
  Axiom axiom;
  Family family;
  try {
    axiom = ParseAxiom(config.axiom);
    family = ParseFamily(config.family);
  } catch (const std::invalid_argument& e) {
    throw CommandError{kExitUsage, e.what()};
  }
  const bool needs_capacity =
      !IsBasisAxiom(axiom) && axiom != Axiom::kLinearityInCapacity;
  std::optional<SignedCapacity> v;
  int n = config.n;
  if (!config.capacity_path.empty()) {
    v = RequireGame(LoadSetFunction(config), config.capacity_path);
    if (n != 0 && n != v->n()) {
      throw CommandError{kExitDimension, "--n: " + std::to_string(n) +
                                             " disagrees with the capacity (n = " +
                                             std::to_string(v->n()) + ")"};
    }
    n = v->n();
  } else if (needs_capacity) {
    throw CommandError{kExitUsage, "--capacity: required for " + config.axiom};
  }
  if (n < 1 || n > kMaxGroundSetSize) {
    throw CommandError{kExitUsage, "--n: give a ground-set size in [1, 20] or "
                                   "a --capacity file"};
  }
  std::optional<SubsetMask> subset;
  if (!config.subset.empty()) {
    try {
      subset = ParseSubsetLiteral(config.subset, n);
    } catch (const ParseError& e) {
      throw CommandError{kExitUsage, std::string("--subset: ") + e.what()};
    }
  }
  std::optional<Aggregator> agg;
  try {
    agg.emplace(family, n);
  } catch (const UnsupportedGroundSet& e) {
    throw CommandError{kExitDimension, std::string("--family: ") + e.what()};
  }
  const SignedCapacity game = v ? *v : UnanimityGame(n, FullMask(n));
  const AxiomReport report = CheckAxiom(axiom, *agg, game, subset, config.trials,
                                        config.seed, MakeCheckOptions(config));
  out << (Structured(config) ? AxiomReportToJson(report).dump(2) + "\n"
                             : FormatAxiomReportText(report));
  return report.falsified() ? kExitFalsified : kExitOk;
}

int CmdIndependence(const RunConfig& config, std::ostream& out) {
  IndependenceOptions options;
  options.trials = config.trials;
  options.seed = config.seed;
  options.fixed_witnesses_only = config.fixed_witnesses_only;
  options.check = MakeCheckOptions(config);
  const IndependenceResult result = RunIndependenceSuite(options);
  if (Structured(config)) {
    Json doc = Json::object();
    Json cells = Json::array();
    for (const IndependenceCell& cell : result.cells) {
      Json c = {{"family", FamilyName(cell.family)},
                {"condition", AxiomName(cell.condition)},
                {"expected", cell.expected_falsified ? "falsified"
                                                     : "satisfied-on-samples"},
                {"verdict", cell.falsified ? "falsified"
                                           : "satisfied-on-samples"},
                {"samples_run", cell.samples_run}};
      if (cell.witness) {
        c["witness"] = {{"inputs", SampleInputsToJson(cell.witness->inputs)},
                        {"lhs", cell.witness->lhs},
                        {"rhs", cell.witness->rhs},
                        {"discrepancy", cell.witness->discrepancy()}};
      } else {
        c["witness"] = nullptr;
      }
      cells.push_back(std::move(c));
    }
    Json witnesses = Json::array();
    for (const WitnessCheck& w : result.witnesses) {
      witnesses.push_back({{"family", FamilyName(w.known.family)},
                           {"condition", AxiomName(w.known.axiom)},
                           {"inputs", SampleInputsToJson(w.known.inputs)},
                           {"lhs", w.replayed.lhs},
                           {"rhs", w.replayed.rhs},
                           {"expected_lhs", w.known.expected_lhs},
                           {"expected_rhs", w.known.expected_rhs},
                           {"exact", w.exact}});
    }
    doc["cells"] = std::move(cells);
    doc["witnesses"] = std::move(witnesses);
    doc["seed"] = config.seed;
    doc["trials"] = config.trials;
    doc["fixed_witnesses_only"] = config.fixed_witnesses_only;
    doc["passed"] = result.passed();
    out << doc.dump(2) << '\n';
  } else {
    out << FormatIndependenceMatrix(result);
  }
  return result.passed() ? kExitOk : kExitFalsified;
}

int CmdRandomCapacity(const RunConfig& config, std::ostream& out) {
  try {
    const CapacityKind kind = ParseCapacityKind(config.kind);
    const SignedCapacity v = RandomCapacity(config.n, kind, config.seed);
    Emit(config, WriteSetFunction(v.function()), out);
  } catch (const std::invalid_argument& e) {
    throw CommandError{kExitUsage, e.what()};
  }
  return kExitOk;
}

int CmdOracle(const RunConfig& config, std::ostream& out) {
  const SetFunction f = LoadSetFunction(config);
  Json doc = Json::object();
  try {
    const MobiusRepresentation m = oracle::MobiusNaive(f);
    doc["mobius_naive"] = SetFunctionToJson(m.n(), m.coefficients());
    if (!config.point.empty()) {
      const Point x = LoadPoint(config);
      doc["choquet_all_permutations"] = oracle::ChoquetAllPermutations(
          RequireGame(f, config.capacity_path), x);
    }
  } catch (const GroundSetTooLarge& e) {
    throw CommandError{kExitDimension, e.what()};
  } catch (const DimensionMismatch& e) {
    throw CommandError{kExitDimension, std::string("--point: ") + e.what()};
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Signed Choquet integrals, Lovasz extensions and Mobius "
               "transforms on finite ground sets"};
  app.name(args.empty() ? "choquet" : args.front());
  app.require_subcommand(1);
  RunConfig config;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "structured"}))
        ->capture_default_str();
  };
  auto add_sampling = [&](CLI::App* cmd) {
    cmd->add_option("--trials", config.trials, "Samples per check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--tolerance", config.tolerance,
                    "Relative tolerance for passing samples (default 1e-9)");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate the signed Choquet "
                                          "integral at a point");
  eval->add_option("--capacity", config.capacity_path, "Set-function file")
      ->required();
  eval->add_option("--point", config.point, "Point, e.g. 4,0,2")->required();
  eval->add_flag("--lovasz", config.lovasz,
                 "Evaluate the Lovasz extension (v(empty) may be nonzero)");
  add_format(eval);

  auto* mobius = app.add_subcommand("mobius", "Write the Mobius transform");
  mobius->add_option("--capacity", config.capacity_path, "Set-function file")
      ->required();
  mobius->add_flag("--invert", config.invert,
                   "Apply the zeta transform (input holds Mobius coefficients)");
  mobius->add_option("--output", config.output, "Output path (default stdout)");

  auto* check = app.add_subcommand("check", "Sample-check an axiom");
  check->add_option("--capacity", config.capacity_path, "Set-function file");
  check->add_option("--n", config.n, "Ground-set size when no capacity is given");
  check->add_option("--axiom", config.axiom,
                    "comonotonic-additivity, positive-homogeneity, "
                    "comonotonic-affinity, interval-scale, zero-on-basis or "
                    "linearity-in-capacity")
      ->required();
  check->add_option("--family", config.family,
                    "choquet, weighted-mean, multilinear or vstar-patch")
      ->capture_default_str();
  check->add_option("--subset", config.subset,
                    "Subset S for basis axioms, e.g. 1,2 (default: every S)");
  add_sampling(check);
  add_format(check);

  auto* suite = app.add_subcommand(
      "independence-suite", "Check that each counterexample family fails "
                            "exactly its one condition");
  suite->add_flag("--paper-witnesses-only", config.fixed_witnesses_only,
                  "Use only the fixed witnesses and grid, no random sampling");
  add_sampling(suite);
  add_format(suite);

  auto* random = app.add_subcommand("random-capacity",
                                    "Write a random capacity file");
  random->add_option("--n", config.n, "Ground-set size (1..20)")->required();
  random->add_option("--kind", config.kind,
                     "signed, monotone or normalized-monotone")
      ->required();
  random->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
  random->add_option("--output", config.output, "Output path (default stdout)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference values");
  oracle_cmd->group("");
  oracle_cmd->add_option("--capacity", config.capacity_path, "Set-function file")
      ->required();
  oracle_cmd->add_option("--point", config.point, "Point, e.g. 4,0,2");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return CmdEval(config, out);
    if (mobius->parsed()) return CmdMobius(config, out);
    if (check->parsed()) return CmdCheck(config, out);
    if (suite->parsed()) return CmdIndependence(config, out);
    if (random->parsed()) return CmdRandomCapacity(config, out);
    if (oracle_cmd->parsed()) return CmdOracle(config, out);
  } catch (const CommandError& e) {
    err << app.get_name() << ": " << e.message << '\n';
    return e.code;
  } catch (const DimensionMismatch& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitDimension;
  } catch (const std::exception& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.get_name() << ": no command\n";
  return kExitUsage;
}

}  // namespace choquet::cli
