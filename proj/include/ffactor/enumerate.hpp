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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "ffactor/graph.hpp"

namespace ffactor {

struct EnumerationOptions {
  // Instances with more edges are refused with BudgetExceeded.
  std::size_t max_edges = 20;
  // Stop with BudgetExceeded after visiting this many factors.
  std::uint64_t max_factors = std::numeric_limits<std::uint64_t>::max();
};

// Return false to stop the enumeration early.
using FactorVisitor = std::function<bool(const Factor&)>;

// Visits every f-factor exactly once, in increasing order of the bitmask
// whose bit i marks edge i of graph().edges(). Finite capacities only.
void for_each_factor(const FactorProblem& problem, const FactorVisitor& visit,
                     const EnumerationOptions& options = {});

std::vector<Factor> enumerate_factors(const FactorProblem& problem,
                                      const EnumerationOptions& options = {});

// Same order as for_each_factor restricted to perfect factors, with
// pruning on vertices that can no longer reach their capacity.
void for_each_perfect_factor(const FactorProblem& problem,
                             const FactorVisitor& visit,
                             const EnumerationOptions& options = {});

// The first perfect factor in enumeration order. This is the subset-search
// oracle the other deciders are checked against.
std::optional<Factor> perfect_factor_bruteforce(
    const FactorProblem& problem, const EnumerationOptions& options = {});

}  // namespace ffactor
