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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ffactor/enumerate.hpp"
#include "ffactor/errors.hpp"
#include "ffactor/stream.hpp"
#include "ffactor/trails.hpp"
#include "ffactor/universe.hpp"
#include "test_support.hpp"

using namespace ffactor;
using namespace ffactor::stream;
using ffactor::testing::make;

namespace {

StreamReport run_known(const CountableGraphSource& source, std::size_t steps) {
  auto chooser = known_factor_chooser(declared_factor(source));
  return stream_factor(source, *chooser, steps);
}

std::set<StreamEdge> as_set(const std::vector<StreamEdge>& edges) {
  return {edges.begin(), edges.end()};
}

// The double ray truncated to -m..m: a path whose ends keep capacity 1.
FactorProblem ray_truncation(int m) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::uint32_t> f;
  for (int i = -m; i <= m; ++i) {
    names.push_back(std::to_string(i));
    f[names.back()] = (i == -m || i == m) ? 1 : 2;
    if (i > -m) edges.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return make(names, edges, f);
}

// Repeats vertex "a" (capacity 1) at every position.
class StuckSource final : public CountableGraphSource {
 public:
  std::string family() const override { return "stuck"; }
  std::optional<Vertex> vertex_at(std::size_t) const override { return Vertex("a"); }
  Capacity capacity(const Vertex&) const override { return Capacity(1); }
  std::optional<Vertex> neighbor_at(const Vertex& v, std::size_t j) const override {
    if (j > 0) return std::nullopt;
    return Vertex(v == "a" ? "b" : "a");
  }
  std::optional<std::size_t> degree(const Vertex&) const override { return 1; }
  bool adjacent(const Vertex& a, const Vertex& b) const override { return a != b; }
  std::size_t gap_bound(std::size_t) const override { return 0; }
};

// Returns a fixed batch regardless of the request.
class ScriptedChooser final : public ExtensionChooser {
 public:
  explicit ScriptedChooser(std::vector<StreamEdge> batch) : batch_(std::move(batch)) {}
  std::string strategy() const override { return "scripted"; }
  std::vector<StreamEdge> extend(const StreamState&, const Vertex&) override {
    return batch_;
  }

 private:
  std::vector<StreamEdge> batch_;
};

}  // namespace

TEST_CASE("zero steps give the empty factor") {
  const auto ray = double_ray(2);
  const auto report = run_known(*ray, 0);
  CHECK(report.steps == 0);
  CHECK(report.edges.empty());
  CHECK(report.clean());
}

TEST_CASE("double ray, f = 2, 10 steps") {
  // Oracle: on finite truncations the full edge set is the only perfect
  // factor, so a valid prefix must consist of consecutive ray edges.
  for (int m = 2; m <= 6; ++m) {
    const auto p = ray_truncation(m);
    const auto perfect = [&] {
      std::vector<Factor> out;
      for_each_perfect_factor(p, [&](const Factor& f) {
        out.push_back(f);
        return true;
      });
      return out;
    }();
    REQUIRE(perfect.size() == 1);
    CHECK(perfect[0].size() == p.edge_count());
  }

  const auto ray = double_ray(2);
  const auto report = run_known(*ray, 10);
  CHECK(report.steps == 10);
  CHECK(report.clean());
  // Positions 0..9 are 0, 1, -1, ..., -4, 5: the first step adds both edges
  // at 0, every later step one more, giving the ray edges {i, i+1} for
  // -5 <= i <= 5.
  std::set<StreamEdge> expected;
  for (int i = -5; i <= 5; ++i) {
    expected.insert(StreamEdge::make(std::to_string(i), std::to_string(i + 1)));
  }
  CHECK(as_set(report.sorted_edges()) == expected);
  for (const auto& [v, entry] : report.ledger) {
    if (entry.occurrences > 0) CHECK(entry.degree == 2);
    CHECK(entry.degree <= 2);
  }
}

TEST_CASE("K_{N,N}, f = 1, follows the diagonal") {
  const auto source = complete_bipartite(Capacity(1));
  const auto report = run_known(*source, 6);
  const std::set<StreamEdge> expected = {StreamEdge::make("a0", "b0"),
                                         StreamEdge::make("a1", "b1"),
                                         StreamEdge::make("a2", "b2")};
  CHECK(as_set(report.sorted_edges()) == expected);
  CHECK(report.clean());
}

TEST_CASE("K_N, f = omega: each visit adds one edge") {
  const auto source = complete_graph();
  auto chooser = known_factor_chooser(declared_factor(*source));
  const auto report = stream_factor(*source, *chooser, 60);
  CHECK(report.clean());
  CHECK(report.edges.size() == 60);
  for (std::size_t k = 0; k < report.chain_sizes.size(); ++k) {
    CHECK(report.chain_sizes[k] == k + 1);
  }
  for (const auto& [v, entry] : report.ledger) {
    CHECK(entry.degree >= entry.occurrences);
  }
}

TEST_CASE("star with an omega hub") {
  const auto source = star();
  CHECK(verify_schedule(*source, 101).ok);
  const auto report = run_known(*source, 101);
  CHECK(report.clean());
  // 51 hub visits, each taking a fresh leaf; the leaf visits add nothing.
  CHECK(report.ledger.at("h").degree == 51);
  CHECK(report.ledger.at("h").occurrences == 51);
  CHECK(report.ledger.at("l0").degree == 1);
}

TEST_CASE("known_factor_chooser accepts the certified factors") {
  for (const auto& [name, f] : std::vector<std::pair<std::string, Capacity>>{
           {"double-ray", Capacity(0)},
           {"double-ray", Capacity(1)},
           {"double-ray", Capacity(2)},
           {"complete-bipartite", Capacity(1)},
           {"complete-bipartite", Capacity::omega()},
           {"complete", Capacity::omega()},
           {"star", Capacity(1)}}) {
    const auto source = make_family(name, f);
    CHECK(verify_schedule(*source, 150).ok);
    const auto report = run_known(*source, 150);
    CHECK(report.clean());
  }
}

TEST_CASE("known_factor_chooser rejects a wrong declaration") {
  const auto ray = double_ray(2);
  // The f = 1 matching is not perfect for f = 2.
  const auto wrong = declared_factor(*double_ray(1));
  auto chooser = known_factor_chooser(wrong);
  CHECK_THROWS_AS(stream_factor(*ray, *chooser, 5), DeclarationViolated);

  // A declared non-edge.
  DeclaredFactor bogus{"bogus", [](const Vertex& v, std::size_t j) -> std::optional<Vertex> {
                         if (j > 0) return std::nullopt;
                         return v == "a0" ? Vertex("a1") : Vertex("a0");
                       }};
  const auto kn = complete_bipartite(Capacity(1));
  auto bad = known_factor_chooser(bogus);
  CHECK_THROWS_AS(stream_factor(*kn, *bad, 1), DeclarationViolated);
}

TEST_CASE("stream_factor rejects chooser output that misses the step") {
  const auto ray = double_ray(2);
  ScriptedChooser nothing({});
  CHECK_THROWS_AS(stream_factor(*ray, nothing, 1), ChooserFailure);
  ScriptedChooser non_edge({StreamEdge::make("0", "5"), StreamEdge::make("0", "1")});
  CHECK_THROWS_AS(stream_factor(*ray, non_edge, 1), ChooserFailure);
  ScriptedChooser elsewhere({StreamEdge::make("3", "4"), StreamEdge::make("4", "5")});
  CHECK_THROWS_AS(stream_factor(*ray, elsewhere, 1), ChooserFailure);

  const auto kn = complete_graph();
  ScriptedChooser two({StreamEdge::make("0", "1"), StreamEdge::make("0", "2")});
  CHECK_THROWS_AS(stream_factor(*kn, two, 1), ChooserFailure);
}

TEST_CASE("verify_schedule") {
  CHECK(verify_schedule(*double_ray(2), 100).ok);
  CHECK(verify_schedule(*complete_graph(), 50).ok);
  const auto stuck = verify_schedule(StuckSource{}, 3);
  CHECK_FALSE(stuck.ok);
  CHECK(stuck.diagnostic.find("repeats") != std::string::npos);
}

TEST_CASE("round-robin positions") {
  // Blocks: (0) (0 1) (0 1 2) (0 1 2 3) ...
  const std::size_t items[] = {0, 0, 1, 0, 1, 2, 0, 1, 2, 3};
  const std::size_t blocks[] = {1, 2, 2, 3, 3, 3, 4, 4, 4, 4};
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(round_robin_item(i) == items[i]);
    CHECK(round_robin_block(i) == blocks[i]);
  }
}

TEST_CASE("long runs: monotone chain, saturation ledger, omega growth") {
  for (const auto& name : family_names()) {
    const Capacity f = name == "complete" || name == "complete-bipartite"
                           ? Capacity::omega()
                           : Capacity(name == "double-ray" ? 2 : 1);
    const auto source = make_family(name, f);
    const auto report = run_known(*source, 300);
    CHECK(report.clean());
    for (std::size_t j = 1; j < report.chain_sizes.size(); ++j) {
      CHECK(report.chain_sizes[j - 1] <= report.chain_sizes[j]);
      const auto earlier = report.prefix(j - 1);
      const auto later = report.prefix(j);
      CHECK(std::includes(later.begin(), later.end(), earlier.begin(), earlier.end()));
    }
    for (const auto& [v, entry] : report.ledger) {
      if (entry.capacity.is_omega()) {
        CHECK(entry.degree >= entry.occurrences);
      } else if (entry.occurrences > 0) {
        CHECK(entry.degree == entry.capacity.value());
      }
    }
  }
}

TEST_CASE("finite degeneration matches the augmentation solver") {
  for (const auto& p : universe::seeded_instances(universe::kDefaultSeed + 1, 100, 5, 7)) {
    const auto source = finite_source(p);
    auto chooser = hereditary_chooser(PropertyId::kP2, p);
    const bool solvable = solve_by_augmentation(p).has_value();
    if (!solvable) {
      CHECK_THROWS_AS(stream_factor(*source, *chooser, p.vertex_count()), ChooserFailure);
      continue;
    }
    const auto report = stream_factor(*source, *chooser, p.vertex_count() + 5);
    CHECK(report.steps == p.vertex_count());
    CHECK(report.clean());
    Factor f;
    for (const auto& e : report.sorted_edges()) {
      f.insert(Edge::make(p.graph().index_of(e.first), p.graph().index_of(e.second)));
    }
    CHECK(p.is_perfect(f));
  }
}
