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

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ffactor/graph.hpp"

namespace ffactor {

// Outcome of the obstruction recursion on a finite problem: either the
// least alpha for which the problem is an alpha-obstruction, or none.
//
// "Is an alpha-obstruction" is a relation; a problem can be one for several
// alpha. We report the minimum, which is the usual well-founded rank. For a
// finite problem every recursive step consumes an edge, so alpha <= |E|.
class Rank {
 public:
  static Rank not_obstruction() { return Rank(); }
  static Rank obstruction(std::uint32_t alpha) { return Rank(alpha); }

  bool is_obstruction() const { return alpha_.has_value(); }
  std::uint32_t alpha() const { return *alpha_; }
  const std::optional<std::uint32_t>& value() const { return alpha_; }

  bool operator==(const Rank&) const = default;

 private:
  Rank() = default;
  explicit Rank(std::uint32_t alpha) : alpha_(alpha) {}
  std::optional<std::uint32_t> alpha_;
};

// A witness tree for an obstruction. At a leaf, `vertex` has positive
// capacity and every neighbor has capacity 0. Otherwise there is one child
// per positive-capacity neighbor y, witnessing that (G - {x,y}, f_{x,y}) is
// itself an obstruction; `rank` is the sup of child ranks plus one.
struct ObstructionWitness {
  struct Child;

  VertexId vertex = 0;
  std::uint32_t rank = 0;
  std::vector<Child> children;

  bool leaf() const { return children.empty(); }
};

struct ObstructionWitness::Child {
  VertexId neighbor = 0;
  ObstructionWitness witness;
};

struct ObstructionOptions {
  // Upper bound on distinct states evaluated before BudgetExceeded.
  std::uint64_t node_budget = 4'000'000;
  // Disabling memoization re-evaluates shared subproblems (test use).
  bool memoize = true;
};

// All of these throw InfiniteCapacityUnsupported on OMEGA capacities and
// BudgetExceeded when the node budget runs out.
Rank obstruction_rank(const FactorProblem& problem,
                      const ObstructionOptions& options = {});
bool check_p2(const FactorProblem& problem,
              const ObstructionOptions& options = {});
std::optional<ObstructionWitness> obstruction_witness(
    const FactorProblem& problem, const ObstructionOptions& options = {});

}  // namespace ffactor
