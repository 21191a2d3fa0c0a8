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

#include "ffactor/stream.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "ffactor/errors.hpp"

namespace ffactor::stream {

std::size_t round_robin_block(std::size_t position) {
  // Block w occupies positions [w(w-1)/2, w(w+1)/2).
  std::size_t w = 1;
  while (w * (w + 1) / 2 <= position) ++w;
  return w;
}

std::size_t round_robin_item(std::size_t position) {
  const std::size_t w = round_robin_block(position);
  return position - w * (w - 1) / 2;
}

namespace {

std::optional<long long> parse_integer(std::string_view text) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

// "<prefix><n>" with n a natural number.
std::optional<std::size_t> parse_tagged(const Vertex& v, char prefix) {
  if (v.size() < 2 || v[0] != prefix) return std::nullopt;
  auto n = parse_integer(std::string_view(v).substr(1));
  if (!n || *n < 0) return std::nullopt;
  return static_cast<std::size_t>(*n);
}

std::string tagged(char prefix, std::size_t n) {
  return std::string(1, prefix) + std::to_string(n);
}

// Built-in families certify a perfect factor of themselves.
class Family : public CountableGraphSource {
 public:
  virtual DeclaredFactor declared() const = 0;
};

void require_vertex(bool ok, const Vertex& v, const std::string& family) {
  if (!ok) throw std::invalid_argument("'" + v + "' is not a vertex of " + family);
}

class DoubleRay final : public Family {
 public:
  explicit DoubleRay(std::uint32_t f) : f_(f) {
    if (f > 2) throw std::invalid_argument("double ray needs f in {0, 1, 2}");
  }

  std::string family() const override { return "double-ray"; }
  std::map<std::string, std::string> parameters() const override {
    return {{"f", std::to_string(f_)}};
  }

  std::optional<Vertex> vertex_at(std::size_t i) const override {
    const long long k = static_cast<long long>((i + 1) / 2);
    return std::to_string(i % 2 == 1 ? k : -k);
  }
  Capacity capacity(const Vertex& v) const override {
    require_vertex(parse_integer(v).has_value(), v, family());
    return Capacity(f_);
  }
  std::optional<Vertex> neighbor_at(const Vertex& v,
                                    std::size_t j) const override {
    auto x = parse_integer(v);
    require_vertex(x.has_value(), v, family());
    if (j == 0) return std::to_string(*x - 1);
    if (j == 1) return std::to_string(*x + 1);
    return std::nullopt;
  }
  std::optional<std::size_t> degree(const Vertex&) const override { return 2; }
  bool adjacent(const Vertex& a, const Vertex& b) const override {
    auto x = parse_integer(a);
    auto y = parse_integer(b);
    return x && y && (*x - *y == 1 || *y - *x == 1);
  }
  std::size_t gap_bound(std::size_t) const override { return 0; }

  DeclaredFactor declared() const override {
    const std::uint32_t f = f_;
    if (f == 2) {
      return {"all edges",
              [this](const Vertex& v, std::size_t j) { return neighbor_at(v, j); }};
    }
    if (f == 1) {
      return {"edges {2i, 2i+1}",
              [](const Vertex& v, std::size_t j) -> std::optional<Vertex> {
                auto x = parse_integer(v);
                if (!x || j > 0) return std::nullopt;
                const bool even = *x % 2 == 0;
                return std::to_string(even ? *x + 1 : *x - 1);
              }};
    }
    return {"empty", [](const Vertex&, std::size_t) -> std::optional<Vertex> {
              return std::nullopt;
            }};
  }

 private:
  std::uint32_t f_;
};

class CompleteBipartite final : public Family {
 public:
  explicit CompleteBipartite(Capacity f) : f_(f) {
    if (f.is_finite() && f.value() > 1) {
      throw std::invalid_argument("complete bipartite needs f in {0, 1, omega}");
    }
  }

  std::string family() const override { return "complete-bipartite"; }
  std::map<std::string, std::string> parameters() const override {
    return {{"f", f_.to_string()}};
  }

  // Sequence a_0, b_0, a_1, b_1, ...; a single pass for finite f,
  // round-robin over its prefixes for OMEGA.
  std::optional<Vertex> vertex_at(std::size_t i) const override {
    const std::size_t m = f_.is_omega() ? round_robin_item(i) : i;
    return tagged(m % 2 == 0 ? 'a' : 'b', m / 2);
  }
  Capacity capacity(const Vertex& v) const override {
    require_vertex(side(v) != 0, v, family());
    return f_;
  }
  std::optional<Vertex> neighbor_at(const Vertex& v,
                                    std::size_t j) const override {
    const char s = side(v);
    require_vertex(s != 0, v, family());
    return tagged(s == 'a' ? 'b' : 'a', j);
  }
  std::optional<std::size_t> degree(const Vertex&) const override {
    return std::nullopt;
  }
  bool adjacent(const Vertex& a, const Vertex& b) const override {
    const char sa = side(a);
    const char sb = side(b);
    return sa != 0 && sb != 0 && sa != sb;
  }
  std::size_t gap_bound(std::size_t position) const override {
    return f_.is_omega() ? 2 * round_robin_block(position) : 0;
  }

  DeclaredFactor declared() const override {
    if (f_.is_omega()) {
      return {"all edges",
              [this](const Vertex& v, std::size_t j) { return neighbor_at(v, j); }};
    }
    if (f_.value() == 1) {
      return {"diagonal a_i b_i",
              [](const Vertex& v, std::size_t j) -> std::optional<Vertex> {
                if (j > 0) return std::nullopt;
                if (auto i = parse_tagged(v, 'a')) return tagged('b', *i);
                if (auto i = parse_tagged(v, 'b')) return tagged('a', *i);
                return std::nullopt;
              }};
    }
    return {"empty", [](const Vertex&, std::size_t) -> std::optional<Vertex> {
              return std::nullopt;
            }};
  }

 private:
  static char side(const Vertex& v) {
    if (parse_tagged(v, 'a')) return 'a';
    if (parse_tagged(v, 'b')) return 'b';
    return 0;
  }

  Capacity f_;
};

class CompleteGraph final : public Family {
 public:
  std::string family() const override { return "complete"; }
  std::map<std::string, std::string> parameters() const override {
    return {{"f", "omega"}};
  }

  std::optional<Vertex> vertex_at(std::size_t i) const override {
    return std::to_string(round_robin_item(i));
  }
  Capacity capacity(const Vertex& v) const override {
    require_vertex(natural(v).has_value(), v, family());
    return Capacity::omega();
  }
  std::optional<Vertex> neighbor_at(const Vertex& v,
                                    std::size_t j) const override {
    auto x = natural(v);
    require_vertex(x.has_value(), v, family());
    return std::to_string(j < *x ? j : j + 1);
  }
  std::optional<std::size_t> degree(const Vertex&) const override {
    return std::nullopt;
  }
  bool adjacent(const Vertex& a, const Vertex& b) const override {
    auto x = natural(a);
    auto y = natural(b);
    return x && y && *x != *y;
  }
  std::size_t gap_bound(std::size_t position) const override {
    return 2 * round_robin_block(position);
  }

  DeclaredFactor declared() const override {
    return {"all edges",
            [this](const Vertex& v, std::size_t j) { return neighbor_at(v, j); }};
  }

 private:
  static std::optional<std::size_t> natural(const Vertex& v) {
    auto x = parse_integer(v);
    if (!x || *x < 0) return std::nullopt;
    return static_cast<std::size_t>(*x);
  }
};

class Star final : public Family {
 public:
  std::string family() const override { return "star"; }
  std::map<std::string, std::string> parameters() const override {
    return {{"f(h)", "omega"}, {"f(l_i)", "1"}};
  }

  std::optional<Vertex> vertex_at(std::size_t i) const override {
    if (i % 2 == 0) return Vertex("h");
    return tagged('l', i / 2);
  }
  Capacity capacity(const Vertex& v) const override {
    if (v == "h") return Capacity::omega();
    require_vertex(parse_tagged(v, 'l').has_value(), v, family());
    return Capacity(1);
  }
  std::optional<Vertex> neighbor_at(const Vertex& v,
                                    std::size_t j) const override {
    if (v == "h") return tagged('l', j);
    require_vertex(parse_tagged(v, 'l').has_value(), v, family());
    if (j == 0) return Vertex("h");
    return std::nullopt;
  }
  std::optional<std::size_t> degree(const Vertex& v) const override {
    if (v == "h") return std::nullopt;
    return 1;
  }
  bool adjacent(const Vertex& a, const Vertex& b) const override {
    return (a == "h" && parse_tagged(b, 'l')) || (b == "h" && parse_tagged(a, 'l'));
  }
  std::size_t gap_bound(std::size_t) const override { return 2; }

  DeclaredFactor declared() const override {
    return {"all edges",
            [this](const Vertex& v, std::size_t j) { return neighbor_at(v, j); }};
  }
};

class FiniteSource final : public CountableGraphSource {
 public:
  explicit FiniteSource(FactorProblem problem) : problem_(std::move(problem)) {}

  std::string family() const override { return "finite"; }
  std::map<std::string, std::string> parameters() const override {
    return {{"vertices", std::to_string(problem_.vertex_count())},
            {"edges", std::to_string(problem_.edge_count())}};
  }

  std::optional<Vertex> vertex_at(std::size_t i) const override {
    if (i >= problem_.vertex_count()) return std::nullopt;
    return problem_.graph().name(static_cast<VertexId>(i));
  }
  Capacity capacity(const Vertex& v) const override {
    return problem_.capacity(problem_.graph().index_of(v));
  }
  std::optional<Vertex> neighbor_at(const Vertex& v,
                                    std::size_t j) const override {
    const auto neighbors = problem_.graph().neighbors(problem_.graph().index_of(v));
    if (j >= neighbors.size()) return std::nullopt;
    return problem_.graph().name(neighbors[j]);
  }
  std::optional<std::size_t> degree(const Vertex& v) const override {
    return problem_.graph().degree(problem_.graph().index_of(v));
  }
  bool adjacent(const Vertex& a, const Vertex& b) const override {
    const Graph& g = problem_.graph();
    auto x = g.find(a);
    auto y = g.find(b);
    return x && y && *x != *y && g.has_edge(Edge::make(*x, *y));
  }
  std::size_t gap_bound(std::size_t) const override { return 0; }

 private:
  FactorProblem problem_;
};

// ------------------------------------------------------------- choosers

class KnownFactorChooser final : public ExtensionChooser {
 public:
  explicit KnownFactorChooser(DeclaredFactor declared)
      : declared_(std::move(declared)) {}

  std::string strategy() const override {
    return "known-factor(" + declared_.description + ")";
  }

  std::vector<StreamEdge> extend(const StreamState& state,
                                 const Vertex& target) override {
    const CountableGraphSource& source = state.source();
    const Capacity cap = source.capacity(target);
    std::vector<StreamEdge> out;
    if (cap.is_finite()) {
      std::vector<Vertex> partners;
      for (std::size_t j = 0; j <= cap.value(); ++j) {
        auto u = declared_.neighbor_at(target, j);
        if (!u) break;
        partners.push_back(*u);
      }
      if (partners.size() != cap.value()) {
        throw DeclarationViolated("declared factor has degree " +
                                  (partners.size() > cap.value()
                                       ? std::string("> ")
                                       : std::to_string(partners.size()) + " != ") +
                                  cap.to_string() + " at '" + target + "'");
      }
      for (const Vertex& u : partners) {
        if (state.used(target, u)) continue;
        check_partner(state, target, u);
        out.push_back(StreamEdge::make(target, u));
      }
      if (state.degree(target) + out.size() != cap.value()) {
        throw DeclarationViolated("'" + target +
                                  "' carries edges outside the declared factor");
      }
      return out;
    }
    // At most d(v) declared edges at v are used, so one of the first
    // d(v) + 1 is fresh.
    const std::size_t limit = state.degree(target) + 1;
    for (std::size_t j = 0; j < limit; ++j) {
      auto u = declared_.neighbor_at(target, j);
      if (!u) {
        throw DeclarationViolated("declared factor has finite degree at "
                                  "omega vertex '" + target + "'");
      }
      if (state.used(target, *u)) continue;
      check_partner(state, target, *u);
      out.push_back(StreamEdge::make(target, *u));
      return out;
    }
    throw DeclarationViolated("no fresh declared edge at '" + target + "'");
  }

 private:
  static void check_partner(const StreamState& state, const Vertex& target,
                            const Vertex& u) {
    const CountableGraphSource& source = state.source();
    if (u == target || !source.adjacent(target, u)) {
      throw DeclarationViolated("declared edge {" + target + "," + u +
                                "} is not an edge of the source");
    }
    if (!source.capacity(u).admits(state.degree(u) + 1)) {
      throw DeclarationViolated("declared edge {" + target + "," + u +
                                "} would overload '" + u + "'");
    }
  }

  DeclaredFactor declared_;
};

class HereditaryChooser final : public ExtensionChooser {
 public:
  HereditaryChooser(PropertyId property, FactorProblem problem, Budgets budgets)
      : property_(property), current_(std::move(problem)), budgets_(budgets) {}

  std::string strategy() const override {
    return "hereditary(" + std::string(to_string(property_)) + ")";
  }

  std::vector<StreamEdge> extend(const StreamState&,
                                 const Vertex& target) override {
    const Graph& g = current_.graph();
    auto x = g.find(target);
    if (!x) throw ChooserFailure("'" + target + "' is not in the instance");
    if (!checked_) {
      if (!check_property(property_, current_, budgets_)) {
        throw ChooserFailure(std::string(to_string(property_)) +
                             " does not hold on the instance");
      }
      checked_ = true;
    }
    std::vector<StreamEdge> out;
    while (current_.capacity(*x).positive()) {
      auto y = hereditary_witness(property_, current_, *x, budgets_);
      if (!y) {
        throw ChooserFailure("no hereditary step at '" + target + "'");
      }
      out.push_back(StreamEdge::make(target, current_.graph().name(*y)));
      current_ = remove_edge(current_, *x, *y);
    }
    return out;
  }

 private:
  PropertyId property_;
  FactorProblem current_;
  Budgets budgets_;
  bool checked_ = false;
};

}  // namespace

std::unique_ptr<ExtensionChooser> known_factor_chooser(DeclaredFactor declared) {
  return std::make_unique<KnownFactorChooser>(std::move(declared));
}

std::unique_ptr<ExtensionChooser> hereditary_chooser(PropertyId property,
                                                     FactorProblem problem,
                                                     Budgets budgets) {
  return std::make_unique<HereditaryChooser>(property, std::move(problem),
                                             budgets);
}

// ----------------------------------------------------------- construction

std::vector<StreamEdge> StreamReport::sorted_edges() const {
  std::vector<StreamEdge> out;
  out.reserve(edges.size());
  for (const auto& added : edges) out.push_back(added.edge);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StreamEdge> StreamReport::prefix(std::size_t k) const {
  std::vector<StreamEdge> out;
  for (const auto& added : edges) {
    if (added.step <= k) out.push_back(added.edge);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StreamReport stream_factor(const CountableGraphSource& source,
                           ExtensionChooser& chooser, std::size_t steps) {
  StreamReport report;
  StreamState state(source);

  auto touch = [&](const Vertex& v) -> LedgerEntry& {
    auto [it, inserted] = report.ledger.try_emplace(v);
    if (inserted) it->second.capacity = source.capacity(v);
    return it->second;
  };

  for (std::size_t k = 0; k < steps; ++k) {
    auto target = source.vertex_at(k);
    if (!target) break;
    const Vertex& v = *target;
    LedgerEntry& entry = touch(v);
    ++entry.occurrences;
    const Capacity cap = entry.capacity;

    const auto deg = source.degree(v);
    if (cap.is_omega() ? deg.has_value() : (deg && *deg < cap.value())) {
      report.violations.push_back("step " + std::to_string(k) + ": '" + v +
                                  "' violates f <= degree");
    }

    const std::size_t before = state.degree(v);
    const auto batch = chooser.extend(state, v);

    std::map<Vertex, std::size_t> planned;
    std::set<StreamEdge> fresh;
    for (const StreamEdge& e : batch) {
      if (e.first != v && e.second != v) {
        throw ChooserFailure("step " + std::to_string(k) + ": edge {" +
                             e.first + "," + e.second + "} misses '" + v + "'");
      }
      const Vertex& u = e.first == v ? e.second : e.first;
      if (u == v || !source.adjacent(v, u)) {
        throw ChooserFailure("step " + std::to_string(k) + ": {" + e.first +
                             "," + e.second + "} is not an edge");
      }
      if (state.used(v, u) || !fresh.insert(e).second) {
        throw ChooserFailure("step " + std::to_string(k) + ": edge {" +
                             e.first + "," + e.second + "} reused");
      }
      ++planned[u];
      ++planned[v];
    }
    for (const auto& [x, extra] : planned) {
      if (!source.capacity(x).admits(state.degree(x) + extra)) {
        throw ChooserFailure("step " + std::to_string(k) + ": '" + x +
                             "' would exceed its capacity");
      }
    }
    if (cap.is_omega() && batch.size() != 1) {
      throw ChooserFailure("step " + std::to_string(k) +
                           ": omega vertex '" + v + "' needs exactly one edge");
    }
    if (cap.is_finite() && before + batch.size() != cap.value()) {
      throw ChooserFailure("step " + std::to_string(k) + ": '" + v +
                           "' left unsaturated");
    }

    for (const StreamEdge& e : batch) {
      state.add(e);
      report.edges.push_back({e, k});
    }
    report.chain_sizes.push_back(state.edge_count());
    report.steps = k + 1;

    // Monitors over everything touched in this step.
    for (const auto& [x, extra] : planned) {
      LedgerEntry& touched = touch(x);
      touched.degree = state.degree(x);
      if (!touched.capacity.admits(touched.degree)) {
        report.violations.push_back("step " + std::to_string(k) + ": '" + x +
                                    "' exceeds its capacity");
      }
    }
    if (cap.is_finite() && state.degree(v) != cap.value()) {
      report.violations.push_back("step " + std::to_string(k) + ": '" + v +
                                  "' not saturated");
    }
    if (cap.is_omega() && state.degree(v) != before + 1) {
      report.violations.push_back("step " + std::to_string(k) + ": '" + v +
                                  "' did not gain exactly one edge");
    }
    if (k > 0 && report.chain_sizes[k] < report.chain_sizes[k - 1]) {
      report.violations.push_back("step " + std::to_string(k) +
                                  ": chain is not monotone");
    }
  }
  for (auto& [x, entry] : report.ledger) {
    entry.degree = state.degree(x);
    if (entry.occurrences > 0 && entry.capacity.is_finite() &&
        entry.degree != entry.capacity.value()) {
      report.violations.push_back("ledger: '" + x + "' processed but degree " +
                                  std::to_string(entry.degree) + " != " +
                                  entry.capacity.to_string());
    }
    if (entry.capacity.is_omega() && entry.degree < entry.occurrences) {
      report.violations.push_back("ledger: omega vertex '" + x +
                                  "' grew slower than its occurrences");
    }
  }
  return report;
}

ScheduleCheck verify_schedule(const CountableGraphSource& source,
                              std::size_t prefix_length) {
  std::map<Vertex, std::size_t> last_seen;
  std::size_t end = 0;
  for (std::size_t i = 0; i < prefix_length; ++i) {
    auto v = source.vertex_at(i);
    if (!v) break;
    end = i + 1;
    const Capacity cap = source.capacity(*v);
    auto it = last_seen.find(*v);
    if (it != last_seen.end()) {
      if (cap.is_finite()) {
        return {false, "finite-capacity vertex '" + *v + "' repeats at position " +
                           std::to_string(i) + " after saturation at position " +
                           std::to_string(it->second)};
      }
      const std::size_t gap = i - it->second;
      if (gap > source.gap_bound(i)) {
        return {false, "omega vertex '" + *v + "' recurs after gap " +
                           std::to_string(gap) + " > bound " +
                           std::to_string(source.gap_bound(i)) +
                           " at position " + std::to_string(i)};
      }
    }
    last_seen[*v] = i;
  }
  if (end > 0) {
    const std::size_t last = end - 1;
    for (const auto& [v, at] : last_seen) {
      if (source.capacity(v).is_finite()) continue;
      if (last - at > source.gap_bound(last)) {
        return {false, "omega vertex '" + v + "' last seen at position " +
                           std::to_string(at) + " has not recurred by " +
                           std::to_string(last)};
      }
    }
  }
  return {true, ""};
}

// --------------------------------------------------------------- families

std::unique_ptr<CountableGraphSource> double_ray(std::uint32_t f) {
  return std::make_unique<DoubleRay>(f);
}

std::unique_ptr<CountableGraphSource> complete_bipartite(Capacity f) {
  return std::make_unique<CompleteBipartite>(f);
}

std::unique_ptr<CountableGraphSource> complete_graph() {
  return std::make_unique<CompleteGraph>();
}

std::unique_ptr<CountableGraphSource> star() { return std::make_unique<Star>(); }

std::unique_ptr<CountableGraphSource> finite_source(FactorProblem problem) {
  return std::make_unique<FiniteSource>(std::move(problem));
}

DeclaredFactor declared_factor(const CountableGraphSource& source) {
  if (auto family = dynamic_cast<const Family*>(&source)) {
    return family->declared();
  }
  throw std::invalid_argument("source '" + source.family() +
                              "' declares no perfect factor");
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"double-ray",
                                                 "complete-bipartite",
                                                 "complete", "star"};
  return names;
}

std::unique_ptr<CountableGraphSource> make_family(const std::string& name,
                                                  Capacity f) {
  if (name == "double-ray") {
    if (f.is_omega()) throw std::invalid_argument("double ray has degree 2");
    return double_ray(f.value());
  }
  if (name == "complete-bipartite") return complete_bipartite(f);
  if (name == "complete") {
    if (f.is_finite()) {
      throw std::invalid_argument("complete family supports only f = omega");
    }
    return complete_graph();
  }
  if (name == "star") return star();
  throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace ffactor::stream
