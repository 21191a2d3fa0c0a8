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

#include <optional>
#include <vector>

#include "ffactor/enumerate.hpp"
#include "ffactor/graph.hpp"

namespace ffactor {

// A vertex sequence (v_0, ..., v_{k-1}) whose consecutive pairs are
// pairwise distinct edges of the graph. Vertices may repeat.
struct Trail {
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.size(); }
  // {v_{i-1}, v_i} for 0 < i < k, in trail order.
  std::vector<Edge> edges() const;

  bool operator==(const Trail&) const = default;
};

// Adjacent consecutive vertices and no repeated edge.
bool is_trail(const Graph& graph, const Trail& trail);

// A finite F-augmenting trail: k > 1 and even, edges alternate out-of-F /
// in-F starting with an edge outside F, v_0 is deficient, and the end is
// either a distinct deficient vertex or v_0 again with room for two more.
// Infinite trails have no finite representation and are not considered.
bool is_augmenting(const FactorProblem& problem, const Factor& factor,
                   const Trail& trail);

// F xor E(T). Throws NotAugmenting unless is_augmenting holds.
Factor flip(const FactorProblem& problem, const Factor& factor,
            const Trail& trail);

// Shortest augmenting trail from x, ties broken lexicographically by vertex
// index. Exhaustive search; throws NotDeficient if d_F(x) >= f(x).
std::optional<Trail> find_augmenting_trail(const FactorProblem& problem,
                                           const Factor& factor, VertexId x);

// Grows F from the empty set by flipping augmenting trails from the
// least-index deficient vertex. Returns a perfect factor or nothing; a
// deficient vertex without an augmenting trail rules a perfect factor out.
std::optional<Factor> solve_by_augmentation(const FactorProblem& problem);

// For every f-factor F and every deficient x an augmenting trail from x
// exists. Enumerates all factors, so `options` bounds the work.
bool check_p4(const FactorProblem& problem,
              const EnumerationOptions& options = {});

}  // namespace ffactor
