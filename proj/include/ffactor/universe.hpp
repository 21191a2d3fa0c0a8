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
#include <functional>
#include <random>
#include <vector>

#include "ffactor/graph.hpp"

// Instance generators for exhaustive and seeded property checks.
namespace ffactor::universe {

inline constexpr std::uint64_t kDefaultSeed = 0xF4C702;

// Every labeled graph on 1..max_vertices vertices ("v0", "v1", ...) with
// every capacity map satisfying f(x) <= d(x), in a fixed order.
void for_each_small_instance(std::size_t max_vertices,
                             const std::function<void(const FactorProblem&)>& visit);
std::vector<FactorProblem> small_instances(std::size_t max_vertices);

enum class CapacityMode {
  // f(x) uniform in [0, d(x)].
  kUniform,
  // f = d_H for a random spanning subgraph H, so a perfect factor exists.
  kPlanted,
};

FactorProblem random_instance(std::mt19937_64& rng, std::size_t vertices,
                              double edge_probability, CapacityMode mode);

// `count` instances on min..max vertices, alternating uniform and planted
// capacity maps, reproducible from `seed`.
std::vector<FactorProblem> seeded_instances(std::uint64_t seed,
                                            std::size_t count,
                                            std::size_t min_vertices,
                                            std::size_t max_vertices);

}  // namespace ffactor::universe
