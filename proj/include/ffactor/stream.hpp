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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ffactor/capacity.hpp"
#include "ffactor/graph.hpp"
#include "ffactor/properties.hpp"

// Greedy construction of a perfect f-factor of a countable graph, run on a
// finite prefix of a vertex enumeration v_0, v_1, ...
//
// Step k consumes v_k: a finite-capacity vertex is saturated outright, an
// OMEGA vertex gains exactly one new edge. If every OMEGA vertex recurs
// infinitely often in the enumeration, the union of the chain
// F_0 <= F_1 <= ... is a perfect factor, provided each step can be taken
// without destroying extendability. Deciding that in general is out of
// reach, so an ExtensionChooser supplies the steps; the shipped choosers
// follow a declared perfect factor or, on finite graphs, a decidable
// hereditary property.
//
// Only countable graphs are representable. Uncountable examples such as
// K_{aleph_0, aleph_1} with f = 1, where every deficient vertex of every
// factor starts an augmenting trail yet no perfect factor exists, have no
// source type here.
namespace ffactor::stream {

using Vertex = std::string;

// Unordered vertex pair, stored with first < second.
struct StreamEdge {
  Vertex first;
  Vertex second;

  static StreamEdge make(const Vertex& a, const Vertex& b) {
    return a < b ? StreamEdge{a, b} : StreamEdge{b, a};
  }
  auto operator<=>(const StreamEdge&) const = default;
  bool operator==(const StreamEdge&) const = default;
};

// A lazily generated countable graph with a vertex enumeration.
//
// Schedule contract: a finite-capacity vertex occurs at most once; an OMEGA
// vertex recurs, and the gap ending at position i is at most gap_bound(i).
// Class C: capacity(v) <= degree(v), with OMEGA only at infinite degree.
class CountableGraphSource {
 public:
  virtual ~CountableGraphSource() = default;

  virtual std::string family() const = 0;
  virtual std::map<std::string, std::string> parameters() const { return {}; }

  // v_i, or nothing once a finite enumeration is exhausted.
  virtual std::optional<Vertex> vertex_at(std::size_t i) const = 0;
  virtual Capacity capacity(const Vertex& v) const = 0;
  // j-th neighbor of v in a fixed order; nothing past a finite degree.
  virtual std::optional<Vertex> neighbor_at(const Vertex& v,
                                            std::size_t j) const = 0;
  // Nothing for infinite degree.
  virtual std::optional<std::size_t> degree(const Vertex& v) const = 0;
  virtual bool adjacent(const Vertex& a, const Vertex& b) const = 0;
  virtual std::size_t gap_bound(std::size_t position) const = 0;
};

// A perfect f-factor H of a source, given by its neighbor lists.
struct DeclaredFactor {
  std::string description;
  // j-th H-neighbor of v; nothing past d_H(v).
  std::function<std::optional<Vertex>(const Vertex&, std::size_t)> neighbor_at;
};

class StreamState {
 public:
  explicit StreamState(const CountableGraphSource& source) : source_(source) {}

  const CountableGraphSource& source() const { return source_; }
  bool used(const Vertex& a, const Vertex& b) const {
    return edges_.count(StreamEdge::make(a, b)) != 0;
  }
  std::size_t degree(const Vertex& v) const {
    auto it = degree_.find(v);
    return it == degree_.end() ? 0 : it->second;
  }
  std::size_t edge_count() const { return edges_.size(); }

  void add(const StreamEdge& e) {
    edges_.insert(e);
    ++degree_[e.first];
    ++degree_[e.second];
  }

 private:
  const CountableGraphSource& source_;
  std::set<StreamEdge> edges_;
  std::map<Vertex, std::size_t> degree_;
};

// Supplies the edges for one step. Finite capacity: edges at `target`
// bringing it to saturation. OMEGA: exactly one new edge at `target`.
class ExtensionChooser {
 public:
  virtual ~ExtensionChooser() = default;
  virtual std::string strategy() const = 0;
  virtual std::vector<StreamEdge> extend(const StreamState& state,
                                         const Vertex& target) = 0;
};

// Extends along unused edges of a declared perfect factor. Throws
// DeclarationViolated when H disagrees with the source on explored
// vertices (a non-edge, a degree other than f(v), or an H-edge at an
// already saturated vertex).
std::unique_ptr<ExtensionChooser> known_factor_chooser(DeclaredFactor declared);

// For finite problems: each step is a hereditary step of `property` on the
// current residual. Throws ChooserFailure when no step exists.
std::unique_ptr<ExtensionChooser> hereditary_chooser(PropertyId property,
                                                     FactorProblem problem,
                                                     Budgets budgets = {});

struct LedgerEntry {
  Capacity capacity;
  std::size_t degree = 0;
  std::size_t occurrences = 0;
};

struct StreamReport {
  struct AddedEdge {
    StreamEdge edge;
    std::size_t step = 0;  // index of the step that added it
  };

  std::size_t steps = 0;
  std::vector<AddedEdge> edges;         // in insertion order
  std::vector<std::size_t> chain_sizes;  // |F_k| after step k
  std::map<Vertex, LedgerEntry> ledger;  // every touched vertex
  std::vector<std::string> violations;

  bool clean() const { return violations.empty(); }
  std::vector<StreamEdge> sorted_edges() const;
  // F_k, the edges present after step k.
  std::vector<StreamEdge> prefix(std::size_t k) const;
};

// Runs `steps` steps (fewer if a finite enumeration ends first). Throws
// ChooserFailure when the chooser's edges do not realise the step.
StreamReport stream_factor(const CountableGraphSource& source,
                           ExtensionChooser& chooser, std::size_t steps);

struct ScheduleCheck {
  bool ok = true;
  std::string diagnostic;
};

// Checks the schedule contract on positions [0, prefix_length).
ScheduleCheck verify_schedule(const CountableGraphSource& source,
                              std::size_t prefix_length);

// ------------------------------------------------------ built-in families

// Integers, i ~ i+1. f in {0, 1, 2}. Enumeration 0, 1, -1, 2, -2, ...
std::unique_ptr<CountableGraphSource> double_ray(std::uint32_t f);
// a_i ~ b_j for all i, j. f = 1 (schedule a_0, b_0, a_1, b_1, ...) or OMEGA
// (round-robin over the same sequence).
std::unique_ptr<CountableGraphSource> complete_bipartite(Capacity f);
// All pairs of naturals, f = OMEGA, round-robin schedule.
std::unique_ptr<CountableGraphSource> complete_graph();
// Hub h with f = OMEGA joined to leaves l_0, l_1, ... with f = 1.
// Enumeration h, l_0, h, l_1, ...
std::unique_ptr<CountableGraphSource> star();
// A finite problem scheduled as one pass in vertex index order.
std::unique_ptr<CountableGraphSource> finite_source(FactorProblem problem);

// The certified perfect factor of a built-in family: all edges of the
// double ray for f = 2, {2i, 2i+1} for f = 1, the diagonal a_i b_i of the
// bipartite family for f = 1, and all edges for the OMEGA families.
DeclaredFactor declared_factor(const CountableGraphSource& source);

// Family names accepted by make_family: "double-ray", "complete-bipartite",
// "complete", "star".
std::unique_ptr<CountableGraphSource> make_family(const std::string& name,
                                                  Capacity f);
const std::vector<std::string>& family_names();

// Round-robin schedule helpers: block w lists items 0..w-1.
std::size_t round_robin_item(std::size_t position);
std::size_t round_robin_block(std::size_t position);

}  // namespace ffactor::stream
