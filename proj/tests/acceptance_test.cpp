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

// Acceptance run: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ffactor/enumerate.hpp"
#include "ffactor/errors.hpp"
#include "ffactor/io.hpp"
#include "ffactor/obstruction.hpp"
#include "ffactor/properties.hpp"
#include "ffactor/stream.hpp"
#include "ffactor/suite.hpp"
#include "ffactor/trails.hpp"
#include "ffactor/universe.hpp"
#include "test_support.hpp"

using namespace ffactor;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr std::size_t kExhaustiveVertices = 4;
constexpr std::size_t kExhaustiveCount = 3194;
constexpr std::size_t kRandomInstances = 2000;
constexpr std::size_t kTrailInstances = 500;
constexpr std::size_t kStreamInstances = 100;
constexpr std::size_t kRaySteps = 200;
constexpr std::size_t kBipartiteSteps = 100;
constexpr double kStreamSeconds = 10.0;
constexpr double kTotalSeconds = 300.0;
constexpr std::uint64_t kSeed = universe::kDefaultSeed;

const Budgets kBudgets{24, 5'000'000, 20'000'000};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::printf("criterion %d %-28s %s  %s\n", id, name.c_str(),
              o.pass ? "PASS" : "FAIL", o.detail.c_str());
  if (!o.pass) {
    std::printf("    first failure: %s\n", o.first_failure.c_str());
    ++failures;
  }
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

const std::vector<FactorProblem>& exhaustive() {
  static const auto all = universe::small_instances(kExhaustiveVertices);
  return all;
}

const std::vector<FactorProblem>& random_layer() {
  static const auto all = universe::seeded_instances(kSeed, kRandomInstances, 5, 7);
  return all;
}

std::vector<FactorProblem> planted_five(std::size_t count) {
  std::mt19937_64 rng(kSeed ^ 0x5EED5);
  std::vector<FactorProblem> out;
  while (out.size() < count) {
    auto p = universe::random_instance(rng, 5, 0.6, universe::CapacityMode::kPlanted);
    if (perfect_factor_bruteforce(p, kBudgets.enumeration())) out.push_back(std::move(p));
  }
  return out;
}

std::string describe(const FactorProblem& p) { return io::format_instance(p); }

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t n = 0;
  auto visit = [&](const FactorProblem& p, bool direct) {
    const bool oracle = perfect_factor_bruteforce(p, kBudgets.enumeration()).has_value();
    if (direct && oracle != testing::direct_perfect(p).has_value()) {
      o.fail("subset oracles disagree on " + describe(p));
    }
    if (check_p2(p, kBudgets.obstruction()) != oracle) o.fail(describe(p));
    ++n;
  };
  for (const auto& p : exhaustive()) visit(p, true);
  const std::size_t small = n;
  for (const auto& p : random_layer()) visit(p, p.edge_count() <= 14);
  if (small != kExhaustiveCount) o.fail("exhaustive layer has " + std::to_string(small));
  o.detail = std::to_string(small) + " exhaustive + " + std::to_string(n - small) + " seeded";
  return o;
}

Outcome solver_equivalence() {
  Outcome o;
  std::size_t n = 0, solvable = 0;
  auto visit = [&](const FactorProblem& p) {
    const bool oracle = perfect_factor_bruteforce(p, kBudgets.enumeration()).has_value();
    const auto f = solve_by_augmentation(p);
    if (f.has_value() != oracle) o.fail(describe(p));
    if (f) {
      ++solvable;
      for (VertexId x = 0; x < p.vertex_count(); ++x) {
        if (degree(*f, x) != p.capacity(x).value()) o.fail("not perfect: " + describe(p));
      }
    }
    ++n;
  };
  for (const auto& p : exhaustive()) visit(p);
  for (const auto& p : random_layer()) visit(p);
  o.detail = std::to_string(n) + " instances, " + std::to_string(solvable) + " solvable";
  return o;
}

Outcome p4_equivalence() {
  Outcome o;
  for (const auto& p : exhaustive()) {
    const bool oracle = testing::direct_perfect(p).has_value();
    if (check_p4(p, kBudgets.enumeration()) != oracle) o.fail(describe(p));
  }
  o.detail = std::to_string(exhaustive().size()) + " instances";
  return o;
}

Outcome trail_existence() {
  Outcome o;
  std::size_t instances = 0, queries = 0;
  auto visit = [&](const FactorProblem& p) {
    if (!testing::direct_perfect(p)) return;
    ++instances;
    for (const Factor& F : testing::direct_factors(p)) {
      for (VertexId x = 0; x < p.vertex_count(); ++x) {
        if (degree(F, x) >= p.capacity(x).value()) continue;
        ++queries;
        const auto t = find_augmenting_trail(p, F, x);
        if (!t || !testing::oracle_augmenting(p, F, t->vertices)) {
          o.fail(describe(p) + " at " + p.graph().name(x));
        }
      }
    }
  };
  for (const auto& p : exhaustive()) visit(p);
  const std::size_t small = instances;
  const auto planted = planted_five(kTrailInstances);
  for (const auto& p : planted) visit(p);
  if (instances - small != kTrailInstances) o.fail("planted layer incomplete");
  o.detail = std::to_string(small) + " + " + std::to_string(instances - small) +
             " instances, " + std::to_string(queries) + " trail queries";
  return o;
}

Outcome hereditary() {
  Outcome o;
  std::size_t counts[4] = {0, 0, 0, 0};
  std::size_t holding[4] = {0, 0, 0, 0};
  for (const auto& p : exhaustive()) {
    for (PropertyId id : kAllProperties) {
      if (!check_property(id, p, kBudgets)) continue;
      const auto r = hereditary_step(id, p, kBudgets);
      const auto i = static_cast<std::size_t>(id);
      ++holding[i];
      counts[i] += r.counterexamples();
      if (id != PropertyId::kP3 && !r.clean()) {
        o.fail(std::string(to_string(id)) + " on " + describe(p));
      }
    }
  }
  o.detail = "counterexamples p1=" + std::to_string(counts[0]) +
             " p2=" + std::to_string(counts[1]) + " p4=" + std::to_string(counts[3]) +
             " (p3, not gating: " + std::to_string(counts[2]) + " over " +
             std::to_string(holding[2]) + " instances)";
  return o;
}

Outcome fixed_witnesses() {
  Outcome o;
  const auto path = testing::path3(1, 1, 1);
  if (obstruction_rank(path) != Rank::obstruction(1)) o.fail("path rank");
  if (testing::plain_rank(path) != 1) o.fail("path rank, unmemoized oracle");
  if (perfect_factor_bruteforce(path)) o.fail("path has a perfect factor");

  const auto tri = testing::triangle(2);
  if (!check_property(PropertyId::kP1, tri)) o.fail("triangle p1");
  if (check_property(PropertyId::kP3, tri)) o.fail("triangle p3");
  std::size_t perfect = 0;
  for (const Factor& F : testing::direct_factors(tri)) {
    if (tri.is_perfect(F)) {
      ++perfect;
      if (F.size() != 3) o.fail("triangle factor is not the cycle");
    }
  }
  if (perfect != 1) o.fail("triangle has " + std::to_string(perfect) + " perfect factors");

  const auto k2 = testing::k2(1, 0);
  if (obstruction_rank(k2) != Rank::obstruction(0)) o.fail("K2 rank");
  o.detail = "path rank 1, triangle p1 && !p3, K2 rank 0";
  return o;
}

Outcome rank_bound() {
  Outcome o;
  std::size_t obstructions = 0;
  std::uint32_t highest = 0;
  auto visit = [&](const FactorProblem& p) {
    const Rank r = obstruction_rank(p, kBudgets.obstruction());
    if (!r.is_obstruction()) return;
    ++obstructions;
    highest = std::max<std::uint32_t>(highest, r.alpha());
    if (r.alpha() > p.edge_count()) o.fail(describe(p));
  };
  for (const auto& p : exhaustive()) visit(p);
  for (const auto& p : random_layer()) visit(p);
  o.detail = std::to_string(obstructions) + " obstructions, highest rank " +
             std::to_string(highest);
  return o;
}

Outcome streaming() {
  using namespace ffactor::stream;
  Outcome o;
  const auto start = Clock::now();

  {
    const auto ray = double_ray(2);
    if (!verify_schedule(*ray, kRaySteps).ok) o.fail("ray schedule");
    auto chooser = known_factor_chooser(declared_factor(*ray));
    const auto r = stream_factor(*ray, *chooser, kRaySteps);
    if (!r.violations.empty()) o.fail("ray monitors: " + r.violations.front());
    for (std::size_t j = 1; j < r.chain_sizes.size(); ++j) {
      const auto a = r.prefix(j - 1), b = r.prefix(j);
      if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) o.fail("ray chain");
    }
    for (const auto& [v, e] : r.ledger) {
      if (e.occurrences > 0 && e.degree != 2) o.fail("ray ledger at " + v);
      if (e.degree > 2) o.fail("ray overload at " + v);
    }
    for (const auto& e : r.sorted_edges()) {
      if (std::abs(std::stoi(e.first) - std::stoi(e.second)) != 1) o.fail("ray non-edge");
    }
  }
  {
    const auto kn = complete_bipartite(Capacity(1));
    auto chooser = known_factor_chooser(declared_factor(*kn));
    const auto r = stream_factor(*kn, *chooser, kBipartiteSteps);
    if (!r.violations.empty()) o.fail("bipartite monitors");
    std::set<std::string> seen;
    for (const auto& e : r.sorted_edges()) {
      if (e.first[0] != 'a' || e.second[0] != 'b' ||
          e.first.substr(1) != e.second.substr(1)) {
        o.fail("off-diagonal edge " + e.first + e.second);
      }
      if (!seen.insert(e.first).second || !seen.insert(e.second).second) {
        o.fail("not a matching");
      }
    }
  }
  std::size_t agree = 0;
  for (const auto& p : universe::seeded_instances(kSeed + 1, kStreamInstances, 5, 7)) {
    const auto source = finite_source(p);
    auto chooser = hereditary_chooser(PropertyId::kP2, p, kBudgets);
    const bool solvable = solve_by_augmentation(p).has_value();
    bool streamed = false;
    try {
      const auto r = stream_factor(*source, *chooser, p.vertex_count());
      Factor F;
      for (const auto& e : r.sorted_edges()) {
        F.insert(Edge::make(p.graph().index_of(e.first), p.graph().index_of(e.second)));
      }
      streamed = r.clean() && p.is_perfect(F);
      if (!streamed) o.fail("degenerate run not perfect: " + describe(p));
    } catch (const ChooserFailure&) {
    }
    if (streamed == solvable) {
      ++agree;
    } else {
      o.fail("verdict mismatch: " + describe(p));
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kStreamSeconds) o.fail("took " + std::to_string(elapsed) + " s");
  char buf[96];
  std::snprintf(buf, sizeof buf, "ray %zu, bipartite %zu, degeneration %zu/%zu, %.2f s",
                kRaySteps, kBipartiteSteps, agree, kStreamInstances, elapsed);
  o.detail = buf;
  return o;
}

Outcome determinism() {
  Outcome o;
  suite::RunConfig config;
  config.seed = kSeed;
  const auto a = suite::format_report(suite::run_suite(config));
  const auto b = suite::format_report(suite::run_suite(config));
  if (a != b) o.fail("reports differ");
  if (a.empty()) o.fail("empty report");
  o.detail = std::to_string(a.size()) + " bytes, identical";
  return o;
}

Outcome guarded(const std::function<Outcome()>& run) {
  try {
    return run();
  } catch (const std::exception& e) {
    Outcome o;
    o.fail(std::string("exception: ") + e.what());
    return o;
  }
}

}  // namespace

int main() {
  const auto start = Clock::now();
  report(1, "p2-vs-subset-oracle", guarded(oracle_equivalence));
  report(2, "solver-vs-subset-oracle", guarded(solver_equivalence));
  report(3, "p4-vs-subset-oracle", guarded(p4_equivalence));
  report(4, "augmenting-trail-existence", guarded(trail_existence));
  report(5, "hereditary-steps", guarded(hereditary));
  report(6, "fixed-witnesses", guarded(fixed_witnesses));
  report(7, "rank-bound", guarded(rank_bound));
  report(8, "streaming", guarded(streaming));
  report(9, "suite-determinism", guarded(determinism));
  const double total = seconds_since(start);
  std::printf("total %.2f s (limit %.0f s)\n", total, kTotalSeconds);
  if (total >= kTotalSeconds) ++failures;
  std::printf("%s\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
  return failures == 0 ? 0 : 1;
}
