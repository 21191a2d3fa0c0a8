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

#include "ffactor/trails.hpp"

#include <algorithm>
#include <string>

#include "ffactor/errors.hpp"

namespace ffactor {

std::vector<Edge> Trail::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    out.push_back(Edge::make(vertices[i - 1], vertices[i]));
  }
  return out;
}

bool is_trail(const Graph& graph, const Trail& trail) {
  if (trail.vertices.empty()) return false;
  for (VertexId v : trail.vertices) {
    if (v >= graph.vertex_count()) return false;
  }
  std::vector<Edge> seen;
  for (const Edge& e : trail.edges()) {
    if (e.u == e.v || !graph.has_edge(e)) return false;
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) return false;
    seen.push_back(e);
  }
  return true;
}

bool is_augmenting(const FactorProblem& problem, const Factor& factor,
                   const Trail& trail) {
  const std::size_t k = trail.length();
  if (k <= 1 || k % 2 != 0) return false;
  if (!is_trail(problem.graph(), trail)) return false;
  const auto edges = trail.edges();
  for (std::size_t i = 1; i < k; ++i) {
    if (factor.contains(edges[i - 1]) != (i % 2 == 0)) return false;
  }
  const VertexId first = trail.vertices.front();
  const VertexId last = trail.vertices.back();
  const std::size_t d_first = degree(factor, first);
  if (!problem.capacity(first).admits(d_first + 1)) return false;
  if (first != last) {
    return problem.capacity(last).admits(degree(factor, last) + 1);
  }
  return problem.capacity(last).admits(d_first + 2);
}

Factor flip(const FactorProblem& problem, const Factor& factor,
            const Trail& trail) {
  if (!is_augmenting(problem, factor, trail)) {
    throw NotAugmenting("trail is not F-augmenting");
  }
  return factor.symmetric_difference(trail.edges());
}

namespace {

// Iterative deepening over the (odd) number of trail edges, depth-first in
// neighbor index order, so the first hit is the shortest and then
// lexicographically least augmenting trail.
class TrailSearch {
 public:
  TrailSearch(const FactorProblem& problem, const Factor& factor, VertexId start)
      : problem_(problem), start_(start) {
    const Graph& g = problem.graph();
    const auto edges = g.edges();
    in_factor_.resize(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      in_factor_[i] = factor.contains(edges[i]);
    }
    used_.assign(edges.size(), 0);
    degree_.assign(g.vertex_count(), 0);
    for (const Edge& e : factor) {
      ++degree_[e.u];
      ++degree_[e.v];
    }
    adjacency_.resize(g.vertex_count());
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      for (VertexId y : g.neighbors(x)) {
        adjacency_[x].push_back({y, *g.edge_index(Edge::make(x, y))});
      }
    }
  }

  std::optional<Trail> run() {
    const std::size_t max_edges = problem_.edge_count();
    for (std::size_t limit = 1; limit <= max_edges; limit += 2) {
      reached_limit_ = false;
      path_.assign(1, start_);
      if (dfs(start_, 0, limit)) return Trail{path_};
      if (!reached_limit_) break;
    }
    return std::nullopt;
  }

 private:
  struct Arc {
    VertexId to;
    std::size_t edge;
  };

  bool terminates_at(VertexId v) const {
    const Capacity cap = problem_.capacity(v);
    if (v != start_) return cap.admits(degree_[v] + 1);
    return cap.admits(degree_[v] + 2);
  }

  bool dfs(VertexId at, std::size_t depth, std::size_t limit) {
    if (depth == limit) {
      reached_limit_ = true;
      return terminates_at(at);
    }
    // Edge number depth+1 must lie in F exactly when that number is even.
    const bool want_in_factor = (depth + 1) % 2 == 0;
    for (const Arc& arc : adjacency_[at]) {
      if (used_[arc.edge] || in_factor_[arc.edge] != want_in_factor) continue;
      used_[arc.edge] = 1;
      path_.push_back(arc.to);
      if (dfs(arc.to, depth + 1, limit)) return true;
      path_.pop_back();
      used_[arc.edge] = 0;
    }
    return false;
  }

  const FactorProblem& problem_;
  VertexId start_;
  std::vector<char> in_factor_;
  std::vector<char> used_;
  std::vector<std::size_t> degree_;
  std::vector<std::vector<Arc>> adjacency_;
  std::vector<VertexId> path_;
  bool reached_limit_ = false;
};

bool deficient(const FactorProblem& problem, const std::vector<std::size_t>& d,
               VertexId x) {
  return problem.capacity(x).admits(d[x] + 1);
}

}  // namespace

std::optional<Trail> find_augmenting_trail(const FactorProblem& problem,
                                           const Factor& factor, VertexId x) {
  if (x >= problem.vertex_count()) throw NotDeficient("vertex out of range");
  if (!problem.capacity(x).admits(degree(factor, x) + 1)) {
    throw NotDeficient("vertex '" + problem.graph().name(x) +
                       "' is saturated by the factor");
  }
  return TrailSearch(problem, factor, x).run();
}

std::optional<Factor> solve_by_augmentation(const FactorProblem& problem) {
  if (problem.has_omega()) {
    throw InfiniteCapacityUnsupported(
        "augmentation solver requires finite capacities");
  }
  Factor factor;
  std::vector<std::size_t> d(problem.vertex_count(), 0);
  for (;;) {
    VertexId x = 0;
    while (x < problem.vertex_count() && !deficient(problem, d, x)) ++x;
    if (x == problem.vertex_count()) return factor;
    auto trail = find_augmenting_trail(problem, factor, x);
    if (!trail) return std::nullopt;
    factor = flip(problem, factor, *trail);
    ++d[trail->vertices.front()];
    ++d[trail->vertices.back()];
  }
}

bool check_p4(const FactorProblem& problem, const EnumerationOptions& options) {
  bool holds = true;
  for_each_factor(problem, [&](const Factor& factor) {
    for (VertexId x = 0; x < problem.vertex_count(); ++x) {
      if (!problem.capacity(x).admits(degree(factor, x) + 1)) continue;
      if (!TrailSearch(problem, factor, x).run()) {
        holds = false;
        return false;
      }
    }
    return true;
  }, options);
  return holds;
}

}  // namespace ffactor
