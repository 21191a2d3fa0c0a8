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

#include "ffactor/universe.hpp"

namespace ffactor::universe {
namespace {

std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

// Uniform draw in [0, bound] from raw engine output. std distributions are
// implementation-defined; this keeps seeded runs identical across toolchains.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % (bound + 1);
}

bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

void for_each_small_instance(
    std::size_t max_vertices,
    const std::function<void(const FactorProblem&)>& visit) {
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<Edge> pairs;
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) pairs.push_back({a, b});
    }
    const auto names = vertex_names(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) edges.push_back(pairs[i]);
      }
      Graph graph(names, edges);
      // Odometer over f(x) in [0, d(x)].
      std::vector<Capacity> f(n, Capacity(0));
      for (;;) {
        visit(FactorProblem::build(graph, f));
        std::size_t x = 0;
        while (x < n && f[x].value() == graph.degree(static_cast<VertexId>(x))) {
          f[x] = Capacity(0);
          ++x;
        }
        if (x == n) break;
        f[x] = Capacity(f[x].value() + 1);
      }
    }
  }
}

std::vector<FactorProblem> small_instances(std::size_t max_vertices) {
  std::vector<FactorProblem> out;
  for_each_small_instance(max_vertices,
                          [&](const FactorProblem& p) { out.push_back(p); });
  return out;
}

FactorProblem random_instance(std::mt19937_64& rng, std::size_t vertices,
                              double edge_probability, CapacityMode mode) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a < vertices; ++a) {
    for (VertexId b = a + 1; b < vertices; ++b) {
      if (coin(rng, edge_probability)) edges.push_back({a, b});
    }
  }
  Graph graph(vertex_names(vertices), edges);
  std::vector<Capacity> f(vertices, Capacity(0));
  if (mode == CapacityMode::kUniform) {
    for (VertexId x = 0; x < vertices; ++x) {
      f[x] = Capacity(static_cast<std::uint32_t>(draw(rng, graph.degree(x))));
    }
  } else {
    std::vector<std::uint32_t> d(vertices, 0);
    for (const Edge& e : graph.edges()) {
      if (coin(rng, 0.5)) {
        ++d[e.u];
        ++d[e.v];
      }
    }
    for (VertexId x = 0; x < vertices; ++x) f[x] = Capacity(d[x]);
  }
  return FactorProblem::build(std::move(graph), std::move(f));
}

std::vector<FactorProblem> seeded_instances(std::uint64_t seed,
                                            std::size_t count,
                                            std::size_t min_vertices,
                                            std::size_t max_vertices) {
  std::mt19937_64 rng(seed);
  std::vector<FactorProblem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n =
        min_vertices + draw(rng, max_vertices - min_vertices);
    const auto mode = i % 2 == 0 ? CapacityMode::kUniform : CapacityMode::kPlanted;
    out.push_back(random_instance(rng, n, 0.5, mode));
  }
  return out;
}

}  // namespace ffactor::universe
