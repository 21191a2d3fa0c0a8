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

#include "ffactor/graph.hpp"

#include <algorithm>
#include <iterator>

#include "ffactor/errors.hpp"

namespace ffactor {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kClassCViolation: return "ClassCViolation";
    case ErrorKind::kMalformedEdge: return "MalformedEdge";
    case ErrorKind::kNoSuchEdge: return "NoSuchEdge";
    case ErrorKind::kNotAFactor: return "NotAFactor";
    case ErrorKind::kInfiniteCapacityUnsupported:
      return "InfiniteCapacityUnsupported";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kNotDeficient: return "NotDeficient";
    case ErrorKind::kNotAugmenting: return "NotAugmenting";
    case ErrorKind::kPropertyDoesNotHold: return "PropertyDoesNotHold";
    case ErrorKind::kInternalHereditaryFailure:
      return "InternalHereditaryFailure";
    case ErrorKind::kChooserFailure: return "ChooserFailure";
    case ErrorKind::kDeclarationViolated: return "DeclarationViolated";
    case ErrorKind::kCapacityUnderflow: return "CapacityUnderflow";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Unknown";
}

Capacity Capacity::minus(std::uint64_t d) const {
  if (omega_) return *this;
  if (d > value_) {
    throw CapacityUnderflow("capacity " + std::to_string(value_) +
                            " cannot absorb degree " + std::to_string(d));
  }
  return Capacity(static_cast<std::uint32_t>(value_ - d));
}

std::string Capacity::to_string() const {
  return omega_ ? std::string("omega") : std::to_string(value_);
}

// ---------------------------------------------------------------- Graph

Graph::Graph(std::vector<std::string> names, std::vector<Edge> edges) {
  std::map<std::string, VertexId> index;
  for (VertexId i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw MalformedEdge("duplicate vertex '" + names[i] + "'");
    }
  }
  const auto n = names.size();
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw MalformedEdge("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw MalformedEdge("loop at '" + names[e.u] + "'");
    }
  }
  for (auto& e : edges) e = Edge::make(e.u, e.v);
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      dup != sorted.end()) {
    throw MalformedEdge("duplicate edge {" + names[dup->u] + "," +
                        names[dup->v] + "}");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  index_ = std::make_shared<const std::map<std::string, VertexId>>(
      std::move(index));
  edges_ = std::move(edges);
  build_indices();
}

Graph::Graph(std::shared_ptr<const std::vector<std::string>> names,
             std::shared_ptr<const std::map<std::string, VertexId>> index,
             std::vector<Edge> edges)
    : names_(std::move(names)),
      index_(std::move(index)),
      edges_(std::move(edges)) {
  build_indices();
}

void Graph::build_indices() {
  adjacency_.assign(names_->size(), {});
  lookup_.clear();
  lookup_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    lookup_.emplace_back(e, i);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  std::sort(lookup_.begin(), lookup_.end());
}

Graph Graph::from_labels(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, VertexId> index;
  for (VertexId i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw MalformedEdge("edge {" + a + "," + b + "} has an unknown endpoint");
    }
    if (ia->second == ib->second) throw MalformedEdge("loop at '" + a + "'");
    resolved.push_back(Edge::make(ia->second, ib->second));
  }
  return Graph(vertices, std::move(resolved));
}

std::optional<VertexId> Graph::find(const std::string& name) const {
  auto it = index_->find(name);
  if (it == index_->end()) return std::nullopt;
  return it->second;
}

VertexId Graph::index_of(const std::string& name) const {
  if (auto id = find(name)) return *id;
  throw MalformedEdge("unknown vertex '" + name + "'");
}

bool Graph::has_edge(Edge e) const { return edge_index(e).has_value(); }

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  e = Edge::make(e.u, e.v);
  auto it = std::lower_bound(
      lookup_.begin(), lookup_.end(), e,
      [](const std::pair<Edge, std::size_t>& entry, const Edge& key) {
        return entry.first < key;
      });
  if (it == lookup_.end() || it->first != e) return std::nullopt;
  return it->second;
}

Graph Graph::without(std::span<const Edge> removed) const {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (auto& e : drop) e = Edge::make(e.u, e.v);
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Graph(names_, index_, std::move(kept));
}

std::string Graph::describe(Edge e) const {
  return "{" + name(e.u) + "," + name(e.v) + "}";
}

bool Graph::operator==(const Graph& other) const {
  // Edge sets compare as sets; insertion order only fixes enumeration order.
  if (*names_ != *other.names_ || lookup_.size() != other.lookup_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < lookup_.size(); ++i) {
    if (lookup_[i].first != other.lookup_[i].first) return false;
  }
  return true;
}

// --------------------------------------------------------------- Factor

Factor::Factor(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& e : edges_) e = Edge::make(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Factor::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge::make(e.u, e.v));
}

void Factor::insert(Edge e) {
  e = Edge::make(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

void Factor::erase(Edge e) {
  e = Edge::make(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) edges_.erase(it);
}

Factor Factor::symmetric_difference(std::span<const Edge> other) const {
  Factor rhs(std::vector<Edge>(other.begin(), other.end()));
  std::vector<Edge> out;
  std::set_symmetric_difference(edges_.begin(), edges_.end(),
                                rhs.edges_.begin(), rhs.edges_.end(),
                                std::back_inserter(out));
  Factor result;
  result.edges_ = std::move(out);
  return result;
}

Factor Factor::united(const Factor& other) const {
  std::vector<Edge> out;
  std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(),
                 other.edges_.end(), std::back_inserter(out));
  Factor result;
  result.edges_ = std::move(out);
  return result;
}

bool Factor::includes(const Factor& other) const {
  return std::includes(edges_.begin(), edges_.end(), other.edges_.begin(),
                       other.edges_.end());
}

std::size_t degree(const Factor& factor, VertexId x) {
  return static_cast<std::size_t>(
      std::count_if(factor.begin(), factor.end(),
                    [x](const Edge& e) { return e.incident(x); }));
}

// -------------------------------------------------------- FactorProblem

namespace {

void check_class_c(const Graph& graph, const std::vector<Capacity>& f,
                   bool allow_omega) {
  if (f.size() != graph.vertex_count()) {
    throw ParseError("capacity map has " + std::to_string(f.size()) +
                     " entries for " + std::to_string(graph.vertex_count()) +
                     " vertices");
  }
  for (VertexId x = 0; x < f.size(); ++x) {
    if (f[x].is_omega()) {
      if (allow_omega) continue;
      throw ClassCViolation("vertex '" + graph.name(x) +
                            "' has capacity omega in a finite graph");
    }
    if (f[x].value() > graph.degree(x)) {
      throw ClassCViolation("vertex '" + graph.name(x) + "' has capacity " +
                            f[x].to_string() + " > degree " +
                            std::to_string(graph.degree(x)));
    }
  }
}

}  // namespace

FactorProblem FactorProblem::build(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges,
    const std::map<std::string, Capacity>& f) {
  Graph graph = Graph::from_labels(vertices, edges);
  std::vector<Capacity> caps(graph.vertex_count());
  std::vector<bool> seen(graph.vertex_count(), false);
  for (const auto& [name, cap] : f) {
    auto id = graph.find(name);
    if (!id) throw ParseError("capacity given for unknown vertex '" + name + "'");
    caps[*id] = cap;
    seen[*id] = true;
  }
  for (VertexId x = 0; x < seen.size(); ++x) {
    if (!seen[x]) {
      throw ParseError("no capacity given for vertex '" + graph.name(x) + "'");
    }
  }
  return build(std::move(graph), std::move(caps));
}

FactorProblem FactorProblem::build(Graph graph, std::vector<Capacity> f) {
  if (graph.vertex_count() == 0) throw ParseError("vertex set is empty");
  check_class_c(graph, f, /*allow_omega=*/false);
  return FactorProblem(std::move(graph), std::move(f));
}

FactorProblem FactorProblem::window(Graph graph, std::vector<Capacity> f) {
  check_class_c(graph, f, /*allow_omega=*/true);
  return FactorProblem(std::move(graph), std::move(f));
}

bool FactorProblem::has_omega() const {
  return std::any_of(f_.begin(), f_.end(),
                     [](const Capacity& c) { return c.is_omega(); });
}

bool FactorProblem::is_factor(const Factor& factor) const {
  std::vector<std::size_t> d(vertex_count(), 0);
  for (const Edge& e : factor) {
    if (!graph_.has_edge(e)) return false;
    ++d[e.u];
    ++d[e.v];
  }
  for (VertexId x = 0; x < d.size(); ++x) {
    if (!f_[x].admits(d[x])) return false;
  }
  return true;
}

bool FactorProblem::is_perfect(const Factor& factor) const {
  if (!is_factor(factor)) return false;
  std::vector<std::size_t> d(vertex_count(), 0);
  for (const Edge& e : factor) {
    ++d[e.u];
    ++d[e.v];
  }
  for (VertexId x = 0; x < d.size(); ++x) {
    if (!f_[x].saturated_by(d[x])) return false;
  }
  return true;
}

FactorProblem remove_edge(const FactorProblem& problem, VertexId x,
                          VertexId y) {
  const Graph& g = problem.graph();
  const Edge e = Edge::make(x, y);
  if (x == y || x >= g.vertex_count() || y >= g.vertex_count() ||
      !g.has_edge(e)) {
    throw NoSuchEdge("no edge between the given vertices");
  }
  std::vector<Capacity> f = problem.capacities();
  f[x] = f[x].decremented();
  f[y] = f[y].decremented();
  const Edge removed[] = {e};
  return FactorProblem::window(g.without(removed), std::move(f));
}

FactorProblem residual(const FactorProblem& problem, const Factor& factor) {
  if (!problem.is_factor(factor)) {
    throw NotAFactor("edge set is not an f-factor of the problem");
  }
  std::vector<std::size_t> d(problem.vertex_count(), 0);
  for (const Edge& e : factor) {
    ++d[e.u];
    ++d[e.v];
  }
  std::vector<Capacity> f = problem.capacities();
  for (VertexId x = 0; x < f.size(); ++x) f[x] = f[x].minus(d[x]);
  return FactorProblem::window(problem.graph().without(factor.edges()),
                               std::move(f));
}

}  // namespace ffactor
