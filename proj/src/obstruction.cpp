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

#include "ffactor/obstruction.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "ffactor/errors.hpp"

namespace ffactor {
namespace {

constexpr std::int64_t kNone = -1;

// Depth-first evaluation of the obstruction recursion over the residual
// states of one problem. A state is the set of surviving edges plus the
// residual capacities; vertex identities never change, so isolated
// zero-capacity vertices contribute a constant to the key.
class RankSearch {
 public:
  RankSearch(const FactorProblem& problem, const ObstructionOptions& options)
      : options_(options), edges_(problem.graph().edges().begin(),
                                  problem.graph().edges().end()) {
    if (problem.has_omega()) {
      throw InfiniteCapacityUnsupported(
          "obstruction rank is only defined here for finite capacities");
    }
    const std::size_t n = problem.vertex_count();
    incident_.resize(n);
    // Incidence lists ordered by neighbor index, for deterministic witnesses.
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[edges_[i].u].push_back(i);
      incident_[edges_[i].v].push_back(i);
    }
    for (VertexId x = 0; x < n; ++x) {
      std::sort(incident_[x].begin(), incident_[x].end(),
                [&](std::size_t a, std::size_t b) {
                  return edges_[a].other(x) < edges_[b].other(x);
                });
    }
    present_.assign(edges_.size(), 1);
    caps_.resize(n);
    for (VertexId x = 0; x < n; ++x) caps_[x] = problem.capacity(x).value();
  }

  std::int64_t rank() { return solve(); }

  ObstructionWitness witness() {
    const std::int64_t r = solve();
    ObstructionWitness w;
    // Pick the least-index vertex realising the minimum.
    for (VertexId x = 0; x < caps_.size(); ++x) {
      if (caps_[x] == 0) continue;
      if (vertex_rank(x, kNone) == r) {
        w.vertex = x;
        w.rank = static_cast<std::uint32_t>(r);
        for (std::size_t ei : incident_[x]) {
          const VertexId y = edges_[ei].other(x);
          if (!present_[ei] || caps_[y] == 0) continue;
          take(ei);
          w.children.push_back({y, witness()});
          untake(ei);
        }
        return w;
      }
    }
    throw std::logic_error("obstruction witness requested for non-obstruction");
  }

 private:
  std::int64_t solve() {
    std::string key;
    if (options_.memoize) {
      key = encode();
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    if (++nodes_ > options_.node_budget) {
      throw BudgetExceeded("obstruction search exceeded node budget of " +
                           std::to_string(options_.node_budget));
    }
    std::int64_t best = kNone;
    // Base clause first: a positive vertex with no positive neighbor.
    for (VertexId x = 0; x < caps_.size() && best != 0; ++x) {
      if (caps_[x] > 0 && positive_neighbors(x) == 0) best = 0;
    }
    for (VertexId x = 0; x < caps_.size() && best != 0; ++x) {
      if (caps_[x] == 0) continue;
      const std::int64_t alpha = vertex_rank(x, best);
      if (alpha != kNone && (best == kNone || alpha < best)) best = alpha;
    }
    if (options_.memoize) memo_.emplace(std::move(key), best);
    return best;
  }

  // sup{beta_y + 1} over positive neighbors y of x, or kNone if some child
  // is not an obstruction. Gives up early (kNone) once the value cannot beat
  // `bound`.
  std::int64_t vertex_rank(VertexId x, std::int64_t bound) {
    std::int64_t alpha = 0;
    for (std::size_t ei : incident_[x]) {
      const VertexId y = edges_[ei].other(x);
      if (!present_[ei] || caps_[y] == 0) continue;
      take(ei);
      const std::int64_t child = solve();
      untake(ei);
      if (child == kNone) return kNone;
      alpha = std::max(alpha, child + 1);
      if (bound != kNone && alpha >= bound) return kNone;
    }
    return alpha;
  }

  std::size_t positive_neighbors(VertexId x) const {
    std::size_t count = 0;
    for (std::size_t ei : incident_[x]) {
      if (present_[ei] && caps_[edges_[ei].other(x)] > 0) ++count;
    }
    return count;
  }

  // Both endpoints have positive capacity whenever this is called, so f_{x,y}
  // is a plain decrement at each end.
  void take(std::size_t ei) {
    present_[ei] = 0;
    --caps_[edges_[ei].u];
    --caps_[edges_[ei].v];
  }
  void untake(std::size_t ei) {
    present_[ei] = 1;
    ++caps_[edges_[ei].u];
    ++caps_[edges_[ei].v];
  }

  std::string encode() const {
    std::string key((edges_.size() + 7) / 8 + caps_.size() * 4, '\0');
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (present_[i]) key[i / 8] = static_cast<char>(key[i / 8] | (1 << (i % 8)));
    }
    std::size_t at = (edges_.size() + 7) / 8;
    for (std::uint32_t c : caps_) {
      for (int b = 0; b < 4; ++b) key[at++] = static_cast<char>((c >> (8 * b)) & 0xff);
    }
    return key;
  }

  ObstructionOptions options_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<char> present_;
  std::vector<std::uint32_t> caps_;
  std::unordered_map<std::string, std::int64_t> memo_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Rank obstruction_rank(const FactorProblem& problem,
                      const ObstructionOptions& options) {
  RankSearch search(problem, options);
  const std::int64_t r = search.rank();
  if (r == kNone) return Rank::not_obstruction();
  return Rank::obstruction(static_cast<std::uint32_t>(r));
}

bool check_p2(const FactorProblem& problem, const ObstructionOptions& options) {
  return !obstruction_rank(problem, options).is_obstruction();
}

std::optional<ObstructionWitness> obstruction_witness(
    const FactorProblem& problem, const ObstructionOptions& options) {
  RankSearch search(problem, options);
  if (search.rank() == kNone) return std::nullopt;
  return search.witness();
}

}  // namespace ffactor
