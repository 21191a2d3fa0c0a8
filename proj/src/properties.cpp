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

#include "ffactor/properties.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ffactor/errors.hpp"
#include "ffactor/trails.hpp"

namespace ffactor {

std::string_view to_string(PropertyId id) {
  switch (id) {
    case PropertyId::kP1: return "p1";
    case PropertyId::kP2: return "p2";
    case PropertyId::kP3: return "p3";
    case PropertyId::kP4: return "p4";
  }
  return "?";
}

std::optional<PropertyId> parse_property_id(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (PropertyId id : kAllProperties) {
    if (lower == to_string(id)) return id;
  }
  return std::nullopt;
}

bool is_acyclic(const FactorProblem& problem, const Factor& factor) {
  std::vector<VertexId> parent(problem.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : factor) {
    const VertexId a = find(e.u);
    const VertexId b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool check_property(PropertyId id, const FactorProblem& problem,
                    const Budgets& budgets) {
  if (problem.has_omega()) {
    throw InfiniteCapacityUnsupported(
        "properties are decided only for finite capacities");
  }
  switch (id) {
    case PropertyId::kP1:
      return perfect_factor_bruteforce(problem, budgets.enumeration())
          .has_value();
    case PropertyId::kP2:
      return check_p2(problem, budgets.obstruction());
    case PropertyId::kP3: {
      bool found = false;
      for_each_perfect_factor(problem, [&](const Factor& f) {
        found = is_acyclic(problem, f);
        return !found;
      }, budgets.enumeration());
      return found;
    }
    case PropertyId::kP4:
      return check_p4(problem, budgets.enumeration());
  }
  return false;
}

std::size_t HereditaryReport::counterexamples() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(),
                    [](const Entry& e) { return !e.witness.has_value(); }));
}

std::optional<VertexId> hereditary_witness(PropertyId id,
                                           const FactorProblem& problem,
                                           VertexId x,
                                           const Budgets& budgets) {
  if (!problem.capacity(x).positive()) return std::nullopt;
  for (VertexId y : problem.graph().neighbors(x)) {
    if (!problem.capacity(y).positive()) continue;
    if (check_property(id, remove_edge(problem, x, y), budgets)) return y;
  }
  return std::nullopt;
}

HereditaryReport hereditary_step(PropertyId id, const FactorProblem& problem,
                                 const Budgets& budgets) {
  if (!check_property(id, problem, budgets)) {
    throw PropertyDoesNotHold(std::string(to_string(id)) +
                              " does not hold on the instance");
  }
  HereditaryReport report;
  report.property = id;
  for (VertexId x = 0; x < problem.vertex_count(); ++x) {
    if (!problem.capacity(x).positive()) continue;
    report.entries.push_back({x, hereditary_witness(id, problem, x, budgets)});
  }
  return report;
}

Factor saturate_finite_set(PropertyId id, const FactorProblem& problem,
                           std::span<const VertexId> targets,
                           const Budgets& budgets) {
  if (!check_property(id, problem, budgets)) {
    throw PropertyDoesNotHold(std::string(to_string(id)) +
                              " does not hold on the instance");
  }
  std::vector<VertexId> order(targets.begin(), targets.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());

  Factor factor;
  FactorProblem current = problem;
  for (VertexId x : order) {
    while (current.capacity(x).positive()) {
      auto y = hereditary_witness(id, current, x, budgets);
      if (!y) {
        throw InternalHereditaryFailure(
            "no hereditary step for " + std::string(to_string(id)) +
            " at vertex '" + problem.graph().name(x) + "'");
      }
      factor.insert(Edge::make(x, *y));
      current = remove_edge(current, x, *y);
    }
  }
  return factor;
}

}  // namespace ffactor
