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

#include "ffactor/suite.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "ffactor/errors.hpp"
#include "ffactor/io.hpp"
#include "ffactor/stream.hpp"
#include "ffactor/trails.hpp"

namespace ffactor::suite {
namespace {

enum CheckId : std::size_t {
  kP2Oracle,
  kSolverOracle,
  kRankBound,
  kMemoPlain,
  kP4Oracle,
  kTrailExistence,
  kFlipDeltas,
  kHereditaryP1,
  kHereditaryP2,
  kHereditaryP4,
  kHereditaryP3,
  kP3ImpliesP1,
  kStreamDegeneration,
  kCheckCount,
};

constexpr const char* kNames[kCheckCount] = {
    "p2-iff-oracle",     "solver-matches-oracle", "rank-bound",
    "memo-matches-plain", "p4-iff-oracle",        "trail-existence",
    "flip-degree-deltas", "hereditary-p1",        "hereditary-p2",
    "hereditary-p4",      "hereditary-p3",        "p3-implies-p1",
    "stream-degeneration",
};

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
};

using Outcome = std::array<Tally, kCheckCount>;

// Which layers an instance belongs to.
enum Layer : unsigned {
  kExhaustive = 1,
  kRandom = 2,
  kTrailSample = 4,
  kStreamSample = 8,
};

struct Job {
  FactorProblem problem;
  unsigned layers = 0;
};

void record(Outcome& out, CheckId id, bool ok) {
  ++out[id].checked;
  if (!ok) ++out[id].failures;
}

Factor apply_flip(const FactorProblem& problem, const Factor& factor,
                  const Trail& trail, Fault fault) {
  Factor flipped = flip(problem, factor, trail);
  if (fault == Fault::kBadFlip) {
    const auto edges = trail.edges();
    const Edge last = edges.back();
    if (flipped.contains(last)) {
      flipped.erase(last);
    } else {
      flipped.insert(last);
    }
  }
  return flipped;
}

bool flip_deltas_hold(const FactorProblem& problem, const Factor& before,
                      const Factor& after, const Trail& trail) {
  if (!problem.is_factor(after)) return false;
  const VertexId first = trail.vertices.front();
  const VertexId last = trail.vertices.back();
  for (VertexId x = 0; x < problem.vertex_count(); ++x) {
    std::size_t expected = degree(before, x);
    if (x == first) ++expected;
    if (x == last) ++expected;
    if (degree(after, x) != expected) return false;
  }
  return after.size() == before.size() + 1;
}

// Plain obstruction recursion straight from the definition, no memo.
std::int64_t plain_rank(const FactorProblem& p) {
  std::int64_t best = -1;
  for (VertexId x = 0; x < p.vertex_count(); ++x) {
    if (!p.capacity(x).positive()) continue;
    std::int64_t alpha = 0;
    bool ok = true;
    for (VertexId y : p.graph().neighbors(x)) {
      if (!p.capacity(y).positive()) continue;
      const std::int64_t child = plain_rank(remove_edge(p, x, y));
      if (child < 0) {
        ok = false;
        break;
      }
      alpha = std::max(alpha, child + 1);
    }
    if (ok && (best < 0 || alpha < best)) best = alpha;
  }
  return best;
}

Outcome evaluate(const Job& job, const RunConfig& config) {
  Outcome out{};
  const FactorProblem& p = job.problem;
  const Budgets& b = config.budgets;

  const bool oracle = perfect_factor_bruteforce(p, b.enumeration()).has_value();

  if (job.layers & (kExhaustive | kRandom)) {
    const Rank rank = obstruction_rank(p, b.obstruction());
    record(out, kP2Oracle, !rank.is_obstruction() == oracle);
    if (rank.is_obstruction()) {
      record(out, kRankBound, rank.alpha() <= p.edge_count());
    }
    const auto solved = solve_by_augmentation(p);
    record(out, kSolverOracle,
           solved.has_value() == oracle && (!solved || p.is_perfect(*solved)));
  }

  if (job.layers & kExhaustive) {
    const Rank rank = obstruction_rank(p, b.obstruction());
    const std::int64_t plain = plain_rank(p);
    record(out, kMemoPlain,
           rank.is_obstruction() ? plain == rank.alpha() : plain < 0);
    record(out, kP4Oracle, check_p4(p, b.enumeration()) == oracle);

    const bool p3 = check_property(PropertyId::kP3, p, b);
    record(out, kP3ImpliesP1, !p3 || oracle);

    const std::pair<PropertyId, CheckId> hereditary[] = {
        {PropertyId::kP1, kHereditaryP1},
        {PropertyId::kP2, kHereditaryP2},
        {PropertyId::kP4, kHereditaryP4},
        {PropertyId::kP3, kHereditaryP3},
    };
    for (const auto& [id, check] : hereditary) {
      const bool holds = id == PropertyId::kP1   ? oracle
                         : id == PropertyId::kP3 ? p3
                                                 : check_property(id, p, b);
      if (!holds) continue;
      const auto report = hereditary_step(id, p, b);
      for (const auto& entry : report.entries) {
        record(out, check, entry.witness.has_value());
      }
    }
  }

  if ((job.layers & (kExhaustive | kTrailSample)) && oracle) {
    for_each_factor(p, [&](const Factor& factor) {
      for (VertexId x = 0; x < p.vertex_count(); ++x) {
        if (!p.capacity(x).admits(degree(factor, x) + 1)) continue;
        const auto trail = find_augmenting_trail(p, factor, x);
        record(out, kTrailExistence, trail.has_value());
        if (trail && (job.layers & kExhaustive)) {
          const Factor after = apply_flip(p, factor, *trail, config.fault);
          record(out, kFlipDeltas,
                 is_augmenting(p, factor, *trail) &&
                     flip_deltas_hold(p, factor, after, *trail));
        }
      }
      return true;
    }, b.enumeration());
  }

  if (job.layers & kStreamSample) {
    const auto source = stream::finite_source(p);
    const auto chooser = stream::hereditary_chooser(PropertyId::kP2, p, b);
    bool built = false;
    bool perfect = false;
    try {
      const auto report = stream::stream_factor(*source, *chooser, p.vertex_count());
      built = report.clean();
      Factor factor;
      for (const auto& e : report.sorted_edges()) {
        factor.insert(Edge::make(p.graph().index_of(e.first),
                                 p.graph().index_of(e.second)));
      }
      perfect = p.is_perfect(factor);
    } catch (const ChooserFailure&) {
      built = false;
    }
    const bool solver = solve_by_augmentation(p).has_value();
    record(out, kStreamDegeneration,
           built == solver && (!built || perfect) && built == oracle);
  }
  return out;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const Check& c : checks) {
    if (c.gating && c.failures > 0) return false;
  }
  return true;
}

const Check* SuiteReport::find(const std::string& name) const {
  for (const Check& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

SuiteReport run_suite(const RunConfig& config) {
  std::vector<Job> jobs;
  universe::for_each_small_instance(config.max_vertices, [&](const FactorProblem& p) {
    jobs.push_back({p, kExhaustive});
  });
  const std::size_t universe_size = jobs.size();

  for (auto& p : universe::seeded_instances(config.seed, config.random_instances, 5, 7)) {
    jobs.push_back({std::move(p), kRandom});
  }
  {
    // Planted instances on 5 vertices; every one has a perfect factor.
    std::mt19937_64 rng(config.seed ^ 0x1E77A2);
    for (std::size_t i = 0; i < config.trail_instances; ++i) {
      jobs.push_back({universe::random_instance(rng, 5, 0.5,
                                                universe::CapacityMode::kPlanted),
                      kTrailSample});
    }
  }
  for (auto& p : universe::seeded_instances(config.seed + 1, config.stream_instances, 5, 7)) {
    jobs.push_back({std::move(p), kStreamSample});
  }

  std::vector<Outcome> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      outcomes[i] = evaluate(jobs[i], config);
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, config.workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteReport report;
  report.config = config;
  report.universe_size = universe_size;
  for (std::size_t id = 0; id < kCheckCount; ++id) {
    Check check;
    check.name = kNames[id];
    check.gating = id != kHereditaryP3;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      check.checked += outcomes[i][id].checked;
      check.failures += outcomes[i][id].failures;
      if (outcomes[i][id].failures > 0 && check.first_failure.empty()) {
        check.first_failure = io::format_instance(jobs[i].problem);
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  char seed[32];
  std::snprintf(seed, sizeof seed, "0x%llx",
                static_cast<unsigned long long>(report.config.seed));
  const RunConfig& c = report.config;
  out << "ffactor suite seed=" << seed << "\n";
  out << "exhaustive: " << report.universe_size << " instances on <= "
      << c.max_vertices << " vertices\n";
  out << "random: " << c.random_instances << " instances on 5-7 vertices; trail layer: "
      << c.trail_instances << " planted 5-vertex instances; stream: "
      << c.stream_instances << " finite runs\n";
  if (c.fault == Fault::kBadFlip) out << "fault injected: bad-flip\n";
  for (const Check& check : report.checks) {
    char line[160];
    std::snprintf(line, sizeof line, "%-22s %10llu checked %8llu failures  %s\n",
                  check.name.c_str(),
                  static_cast<unsigned long long>(check.checked),
                  static_cast<unsigned long long>(check.failures),
                  !check.gating ? "INFO"
                  : check.failures == 0 ? "PASS"
                                        : "FAIL");
    out << line;
    if (check.gating && check.failures > 0) {
      out << "  first failing instance: " << check.first_failure << "\n";
    }
  }
  out << "verdict: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace ffactor::suite
