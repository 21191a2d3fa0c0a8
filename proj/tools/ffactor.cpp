// Copyright 2026 The ffactor Authors.
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

// Command-line entry point.
//
// Exit codes: 0 success / property true, 1 property false, 2 input error,
// 3 no perfect factor, 4 suite violation, 5 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ffactor/errors.hpp"
#include "ffactor/io.hpp"
#include "ffactor/obstruction.hpp"
#include "ffactor/properties.hpp"
#include "ffactor/stream.hpp"
#include "ffactor/suite.hpp"
#include "ffactor/trails.hpp"
#include "ffactor/universe.hpp"

namespace {

using namespace ffactor;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitNoFactor = 3;
constexpr int kExitViolation = 4;
constexpr int kExitBudget = 5;

struct GlobalOptions {
  std::uint64_t budget_nodes = 0;    // 0: env var or default
  std::uint64_t budget_factors = 0;  // 0: default
  std::string out;

  Budgets budgets() const {
    Budgets b;
    if (budget_nodes != 0) {
      b.max_nodes = budget_nodes;
    } else if (const char* env = std::getenv("FFACTOR_BUDGET_NODES")) {
      try {
        b.max_nodes = std::stoull(env);
      } catch (const std::exception&) {
        throw ParseError("FFACTOR_BUDGET_NODES is not a number");
      }
    }
    if (budget_factors != 0) b.max_factors = budget_factors;
    return b;
  }
};

void emit(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw ParseError("cannot write '" + g.out + "'");
  file << text << "\n";
}

PropertyId property_arg(const std::string& text) {
  auto id = parse_property_id(text);
  if (!id) throw ParseError("unknown property '" + text + "' (use p1..p4)");
  return *id;
}

int cmd_solve(const GlobalOptions& g, const std::string& path, bool verify) {
  const FactorProblem problem = io::load_instance(path);
  const auto factor = solve_by_augmentation(problem);
  if (verify) {
    const auto oracle = perfect_factor_bruteforce(problem, g.budgets().enumeration());
    const bool agrees = oracle.has_value() == factor.has_value() &&
                        (!factor || problem.is_perfect(*factor));
    if (!agrees) {
      std::cerr << "verification failed: solver and subset oracle disagree\n";
      return kExitViolation;
    }
    std::cerr << "verified against subset oracle\n";
  }
  if (!factor) {
    emit(g, "null");
    return kExitNoFactor;
  }
  emit(g, io::factor_to_json(problem, *factor).dump());
  return kExitOk;
}

int cmd_rank(const GlobalOptions& g, const std::string& path, bool witness) {
  const FactorProblem problem = io::load_instance(path);
  const auto options = g.budgets().obstruction();
  io::Json out = io::rank_to_json(obstruction_rank(problem, options));
  if (witness) {
    const auto w = obstruction_witness(problem, options);
    out["witness"] = w ? io::witness_to_json(problem, *w) : io::Json(nullptr);
  }
  emit(g, out.dump());
  return kExitOk;
}

int cmd_check(const GlobalOptions& g, const std::string& property,
              const std::string& path) {
  const FactorProblem problem = io::load_instance(path);
  const bool holds = check_property(property_arg(property), problem, g.budgets());
  emit(g, holds ? "true" : "false");
  return holds ? kExitOk : kExitFalse;
}

int cmd_hereditary_sample(const GlobalOptions& g, const std::string& property,
                          std::size_t max_vertices) {
  const PropertyId id = property_arg(property);
  const Budgets budgets = g.budgets();
  std::uint64_t instances = 0;
  std::uint64_t holding = 0;
  std::uint64_t vertices = 0;
  std::uint64_t counterexamples = 0;
  std::string first;
  universe::for_each_small_instance(max_vertices, [&](const FactorProblem& p) {
    ++instances;
    if (!check_property(id, p, budgets)) return;
    ++holding;
    const auto report = hereditary_step(id, p, budgets);
    vertices += report.entries.size();
    counterexamples += report.counterexamples();
    if (report.counterexamples() > 0 && first.empty()) first = io::format_instance(p);
  });
  std::string table;
  table += "property            " + std::string(to_string(id)) + "\n";
  table += "max vertices        " + std::to_string(max_vertices) + "\n";
  table += "instances           " + std::to_string(instances) + "\n";
  table += "property holds      " + std::to_string(holding) + "\n";
  table += "vertices tested     " + std::to_string(vertices) + "\n";
  table += "counterexamples     " + std::to_string(counterexamples);
  if (!first.empty()) table += "\nfirst counterexample " + first;
  emit(g, table);
  // P3 counterexamples are a measurement; for the others they are bugs.
  if (counterexamples > 0 && id != PropertyId::kP3) return kExitViolation;
  return kExitOk;
}

int cmd_stream(const GlobalOptions& g, const std::string& family,
               const std::string& f_text, std::size_t steps) {
  const Capacity f = io::parse_capacity(
      f_text == "omega" ? io::Json("omega") : io::Json::parse(f_text), "--f");
  const auto source = stream::make_family(family, f);
  const auto check = stream::verify_schedule(*source, steps);
  if (!check.ok) {
    std::cerr << "schedule check failed: " << check.diagnostic << "\n";
    return kExitViolation;
  }
  auto chooser = stream::known_factor_chooser(stream::declared_factor(*source));
  const auto report = stream::stream_factor(*source, *chooser, steps);
  emit(g, io::stream_report_to_json(report, *source, *chooser).dump());
  return report.clean() ? kExitOk : kExitViolation;
}

int cmd_export_dot(const GlobalOptions& g, const std::string& path) {
  const FactorProblem problem = io::load_instance(path);
  emit(g, io::to_dot(problem, solve_by_augmentation(problem)));
  return kExitOk;
}

int cmd_suite(const GlobalOptions& g, suite::RunConfig config,
              const std::string& config_path, const std::string& fault) {
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw ParseError("cannot open '" + config_path + "'");
    io::Json doc;
    try {
      doc = io::Json::parse(in);
    } catch (const io::Json::parse_error& e) {
      throw ParseError(e.what());
    }
    try {
      config.seed = doc.value("seed", config.seed);
      config.workers = doc.value("workers", config.workers);
      config.max_vertices = doc.value("max_vertices", config.max_vertices);
      config.random_instances = doc.value("random_instances", config.random_instances);
      config.trail_instances = doc.value("trail_instances", config.trail_instances);
      config.stream_instances = doc.value("stream_instances", config.stream_instances);
      config.budgets.max_nodes = doc.value("budget_nodes", config.budgets.max_nodes);
      config.budgets.max_factors = doc.value("budget_factors", config.budgets.max_factors);
      config.budgets.max_edges = doc.value("max_edges", config.budgets.max_edges);
      if (doc.value("fault", std::string("none")) == "bad-flip") {
        config.fault = suite::Fault::kBadFlip;
      }
    } catch (const io::Json::exception& e) {
      throw ParseError(config_path + ": " + e.what());
    }
  }
  if (fault == "bad-flip") {
    config.fault = suite::Fault::kBadFlip;
  } else if (!fault.empty() && fault != "none") {
    throw ParseError("unknown fault '" + fault + "'");
  }
  if (g.budget_nodes != 0) config.budgets.max_nodes = g.budget_nodes;
  if (g.budget_factors != 0) config.budgets.max_factors = g.budget_factors;
  const auto report = suite::run_suite(config);
  std::string text = suite::format_report(report);
  text.pop_back();
  emit(g, text);
  return report.passed() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"f-factors: perfect factor search, obstruction ranks, "
               "hereditary properties and countable-graph prefixes"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--budget-nodes", g.budget_nodes,
                 "obstruction search node budget (env FFACTOR_BUDGET_NODES)");
  app.add_option("--budget-factors", g.budget_factors,
                 "cap on enumerated factors");
  app.add_option("--out", g.out, "write output to PATH instead of stdout");

  std::string instance;
  bool verify = false;
  bool witness = false;
  std::string property = "p2";
  std::size_t max_vertices = 4;
  std::string family = "double-ray";
  std::string f_text = "2";
  std::size_t steps = 200;
  suite::RunConfig run_config;
  std::string config_path;
  std::string fault;

  auto* solve = app.add_subcommand("solve", "find a perfect f-factor");
  solve->add_option("instance", instance, "instance JSON")->required();
  solve->add_flag("--verify", verify, "cross-check with the subset oracle");

  auto* rank = app.add_subcommand("rank", "minimal obstruction rank");
  rank->add_option("instance", instance, "instance JSON")->required();
  rank->add_flag("--witness", witness, "attach the witness tree");

  auto* check = app.add_subcommand("check", "decide P1..P4");
  check->add_option("--property", property, "p1, p2, p3 or p4")->required();
  check->add_option("instance", instance, "instance JSON")->required();

  auto* sample = app.add_subcommand(
      "hereditary-sample", "hereditary steps over all small instances");
  sample->add_option("--property", property, "p1, p2, p3 or p4")->required();
  sample->add_option("--max-vertices", max_vertices, "largest vertex count");

  auto* stream_cmd = app.add_subcommand(
      "stream", "greedy prefix construction on a countable family");
  stream_cmd->add_option("--family", family, "double-ray, complete-bipartite, complete, star");
  stream_cmd->add_option("--f", f_text, "capacity (natural or omega)");
  stream_cmd->add_option("--steps", steps, "number of enumeration positions");

  auto* dot = app.add_subcommand("export-dot", "Graphviz view with a perfect factor");
  dot->add_option("instance", instance, "instance JSON")->required();

  auto* suite_cmd = app.add_subcommand("suite", "run the property suite");
  suite_cmd->add_option("--seed", run_config.seed, "random seed");
  suite_cmd->add_option("--workers", run_config.workers, "worker threads");
  suite_cmd->add_option("--config", config_path, "JSON run configuration");
  suite_cmd->add_option("--inject-fault", fault, "none or bad-flip");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*solve) return cmd_solve(g, instance, verify);
    if (*rank) return cmd_rank(g, instance, witness);
    if (*check) return cmd_check(g, property, instance);
    if (*sample) return cmd_hereditary_sample(g, property, max_vertices);
    if (*stream_cmd) return cmd_stream(g, family, f_text, steps);
    if (*dot) return cmd_export_dot(g, instance);
    if (*suite_cmd) return cmd_suite(g, run_config, config_path, fault);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    if (e.kind() == ErrorKind::kChooserFailure ||
        e.kind() == ErrorKind::kDeclarationViolated ||
        e.kind() == ErrorKind::kInternalHereditaryFailure) {
      return kExitViolation;
    }
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
