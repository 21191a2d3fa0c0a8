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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ffactor/capacity.hpp"

namespace ffactor {

// Canonical vertex index, assigned in insertion order.
using VertexId = std::uint32_t;

// An unordered vertex pair stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge make(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  bool incident(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;
};

// A simple undirected graph on a finite, ordered set of named vertices.
// Vertices and edges are indexed in insertion order; adjacency lists are
// sorted by vertex index.
class Graph {
 public:
  Graph() = default;

  // Validates: endpoints in range, no loops, no duplicate edges.
  Graph(std::vector<std::string> names, std::vector<Edge> edges);

  static Graph from_labels(
      const std::vector<std::string>& vertices,
      const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t vertex_count() const { return names_->size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(VertexId x) const { return (*names_)[x]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<VertexId> find(const std::string& name) const;
  VertexId index_of(const std::string& name) const;

  std::span<const Edge> edges() const { return edges_; }
  std::span<const VertexId> neighbors(VertexId x) const { return adjacency_[x]; }
  std::size_t degree(VertexId x) const { return adjacency_[x].size(); }

  bool has_edge(Edge e) const;
  // Position of e in edges(), if present.
  std::optional<std::size_t> edge_index(Edge e) const;

  // Same vertex set, edge set minus `removed` (which need not be a subset).
  Graph without(std::span<const Edge> removed) const;

  std::string describe(Edge e) const;

  bool operator==(const Graph& other) const;

 private:
  Graph(std::shared_ptr<const std::vector<std::string>> names,
        std::shared_ptr<const std::map<std::string, VertexId>> index,
        std::vector<Edge> edges);
  void build_indices();

  std::shared_ptr<const std::vector<std::string>> names_ =
      std::make_shared<const std::vector<std::string>>();
  std::shared_ptr<const std::map<std::string, VertexId>> index_ =
      std::make_shared<const std::map<std::string, VertexId>>();
  std::vector<Edge> edges_;
  std::vector<std::pair<Edge, std::size_t>> lookup_;  // sorted by edge
  std::vector<std::vector<VertexId>> adjacency_;
};

// An edge subset. Whether it is an f-factor depends on the problem it is
// checked against; see FactorProblem::is_factor.
class Factor {
 public:
  Factor() = default;
  explicit Factor(std::vector<Edge> edges);

  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(Edge e) const;

  void insert(Edge e);
  void erase(Edge e);

  Factor symmetric_difference(std::span<const Edge> other) const;
  Factor united(const Factor& other) const;
  bool includes(const Factor& other) const;

  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  bool operator==(const Factor&) const = default;

 private:
  std::vector<Edge> edges_;
};

// d_F(x).
std::size_t degree(const Factor& factor, VertexId x);

// A graph with a capacity per vertex satisfying f(x) <= d_E(x) (class C).
class FactorProblem {
 public:
  // Finite instances: OMEGA is rejected since no finite degree can admit it.
  static FactorProblem build(
      const std::vector<std::string>& vertices,
      const std::vector<std::pair<std::string, std::string>>& edges,
      const std::map<std::string, Capacity>& f);
  static FactorProblem build(Graph graph, std::vector<Capacity> f);

  // A finite window of a countable graph. OMEGA vertices are taken to have
  // infinite degree in the ambient graph, so only finite capacities are
  // checked against the window's degrees.
  static FactorProblem window(Graph graph, std::vector<Capacity> f);

  const Graph& graph() const { return graph_; }
  const std::vector<Capacity>& capacities() const { return f_; }
  Capacity capacity(VertexId x) const { return f_[x]; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  bool has_omega() const;

  // F is a subset of E and d_F(x) <= f(x) everywhere.
  bool is_factor(const Factor& factor) const;
  // Factor with d_F(x) = f(x) everywhere.
  bool is_perfect(const Factor& factor) const;

  bool operator==(const FactorProblem&) const = default;

 private:
  FactorProblem(Graph graph, std::vector<Capacity> f)
      : graph_(std::move(graph)), f_(std::move(f)) {}

  Graph graph_;
  std::vector<Capacity> f_;
};

// (G - {x,y}, f_{x,y}). Throws NoSuchEdge.
FactorProblem remove_edge(const FactorProblem& problem, VertexId x, VertexId y);
// (G - F, f - d_F). Throws NotAFactor.
FactorProblem residual(const FactorProblem& problem, const Factor& factor);

}  // namespace ffactor
