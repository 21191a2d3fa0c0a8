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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffactor/enumerate.hpp"
#include "ffactor/graph.hpp"
#include "ffactor/obstruction.hpp"

namespace ffactor {

// The four example properties. On finite capacities P4' coincides with P4.
//   P1  a perfect f-factor exists
//   P2  not an alpha-obstruction for any alpha
//   P3  a perfect f-factor without cycles exists
//   P4  every deficient vertex of every f-factor starts an augmenting trail
enum class PropertyId { kP1, kP2, kP3, kP4 };

inline constexpr PropertyId kAllProperties[] = {
    PropertyId::kP1, PropertyId::kP2, PropertyId::kP3, PropertyId::kP4};

std::string_view to_string(PropertyId id);
// Accepts "p1".."p4" in either case.
std::optional<PropertyId> parse_property_id(std::string_view text);

// Work limits shared by every decider.
struct Budgets {
  std::size_t max_edges = 20;
  std::uint64_t max_factors = 1'000'000;
  std::uint64_t max_nodes = 4'000'000;

  EnumerationOptions enumeration() const { return {max_edges, max_factors}; }
  ObstructionOptions obstruction() const { return {max_nodes, true}; }
};

// True when the subgraph (V, F) has no cycle.
bool is_acyclic(const FactorProblem& problem, const Factor& factor);

bool check_property(PropertyId id, const FactorProblem& problem,
                    const Budgets& budgets = {});

struct HereditaryReport {
  struct Entry {
    VertexId vertex = 0;
    // Least-index positive neighbor y with P on (G - {x,y}, f_{x,y});
    // empty marks a counterexample at `vertex`.
    std::optional<VertexId> witness;
  };

  PropertyId property = PropertyId::kP1;
  std::vector<Entry> entries;

  std::size_t counterexamples() const;
  bool clean() const { return counterexamples() == 0; }
};

// Least-index neighbor y of x with f(y) > 0 such that P survives consuming
// {x,y}, or nothing.
std::optional<VertexId> hereditary_witness(PropertyId id,
                                           const FactorProblem& problem,
                                           VertexId x,
                                           const Budgets& budgets = {});

// One entry per positive-capacity vertex, in index order. Throws
// PropertyDoesNotHold unless P holds on `problem`.
HereditaryReport hereditary_step(PropertyId id, const FactorProblem& problem,
                                 const Budgets& budgets = {});

// Repeated hereditary steps until every vertex of W is saturated. The
// returned F leaves P holding on residual(problem, F). Throws
// PropertyDoesNotHold if P fails up front and InternalHereditaryFailure if
// a step finds no witness (for P1, P2 and P4 that is a bug).
Factor saturate_finite_set(PropertyId id, const FactorProblem& problem,
                           std::span<const VertexId> targets,
                           const Budgets& budgets = {});

}  // namespace ffactor
