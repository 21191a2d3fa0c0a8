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

#include "ffactor/enumerate.hpp"

#include <string>

#include "ffactor/errors.hpp"

namespace ffactor {
namespace {

class SubsetSearch {
 public:
  SubsetSearch(const FactorProblem& problem, const EnumerationOptions& options,
               bool perfect_only)
      : options_(options), perfect_only_(perfect_only) {
    if (problem.has_omega()) {
      throw InfiniteCapacityUnsupported(
          "factor enumeration requires finite capacities");
    }
    if (problem.edge_count() > options.max_edges) {
      throw BudgetExceeded("instance has " +
                           std::to_string(problem.edge_count()) +
                           " edges; enumeration cap is " +
                           std::to_string(options.max_edges));
    }
    const auto edges = problem.graph().edges();
    edges_.assign(edges.begin(), edges.end());
    const std::size_t n = problem.vertex_count();
    caps_.resize(n);
    for (VertexId x = 0; x < n; ++x) caps_[x] = problem.capacity(x).value();
    degree_.assign(n, 0);
    undecided_.assign(n, 0);
    for (const Edge& e : edges_) {
      ++undecided_[e.u];
      ++undecided_[e.v];
    }
    chosen_.reserve(edges_.size());
  }

  void run(const FactorVisitor& visit) {
    visit_ = &visit;
    recurse(edges_.size());
  }

 private:
  // Decides edges from the highest index down, "out" before "in", which
  // yields increasing bitmask order.
  bool recurse(std::size_t remaining) {
    if (remaining == 0) {
      if (perfect_only_) {
        for (std::size_t x = 0; x < caps_.size(); ++x) {
          if (degree_[x] != caps_[x]) return true;
        }
      }
      if (++visited_ > options_.max_factors) {
        throw BudgetExceeded("factor enumeration exceeded " +
                             std::to_string(options_.max_factors) +
                             " factors");
      }
      // chosen_ holds edges in decreasing index order; Factor re-sorts.
      return (*visit_)(Factor(chosen_));
    }
    const std::size_t i = remaining - 1;
    const Edge e = edges_[i];
    --undecided_[e.u];
    --undecided_[e.v];
    bool keep_going = true;
    if (!perfect_only_ || (degree_[e.u] + undecided_[e.u] >= caps_[e.u] &&
                           degree_[e.v] + undecided_[e.v] >= caps_[e.v])) {
      keep_going = recurse(i);
    }
    if (keep_going && degree_[e.u] < caps_[e.u] && degree_[e.v] < caps_[e.v]) {
      ++degree_[e.u];
      ++degree_[e.v];
      chosen_.push_back(e);
      keep_going = recurse(i);
      chosen_.pop_back();
      --degree_[e.u];
      --degree_[e.v];
    }
    ++undecided_[e.u];
    ++undecided_[e.v];
    return keep_going;
  }

  EnumerationOptions options_;
  bool perfect_only_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> caps_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::uint32_t> undecided_;
  std::vector<Edge> chosen_;
  const FactorVisitor* visit_ = nullptr;
  std::uint64_t visited_ = 0;
};

}  // namespace

void for_each_factor(const FactorProblem& problem, const FactorVisitor& visit,
                     const EnumerationOptions& options) {
  SubsetSearch(problem, options, /*perfect_only=*/false).run(visit);
}

std::vector<Factor> enumerate_factors(const FactorProblem& problem,
                                      const EnumerationOptions& options) {
  std::vector<Factor> out;
  for_each_factor(problem, [&](const Factor& f) {
    out.push_back(f);
    return true;
  }, options);
  return out;
}

void for_each_perfect_factor(const FactorProblem& problem,
                             const FactorVisitor& visit,
                             const EnumerationOptions& options) {
  SubsetSearch(problem, options, /*perfect_only=*/true).run(visit);
}

std::optional<Factor> perfect_factor_bruteforce(
    const FactorProblem& problem, const EnumerationOptions& options) {
  std::optional<Factor> found;
  for_each_perfect_factor(problem, [&](const Factor& f) {
    found = f;
    return false;
  }, options);
  return found;
}

}  // namespace ffactor
