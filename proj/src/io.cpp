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

#include "ffactor/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "ffactor/errors.hpp"

namespace ffactor::io {

Capacity parse_capacity(const Json& value, const std::string& field) {
  if (value.is_string() && value.get<std::string>() == "omega") {
    return Capacity::omega();
  }
  if (value.is_number_unsigned() ||
      (value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    const auto n = value.get<std::uint64_t>();
    if (n > std::numeric_limits<std::uint32_t>::max()) {
      throw ParseError(field + ": capacity out of range");
    }
    return Capacity(static_cast<std::uint32_t>(n));
  }
  throw ParseError(field + ": capacity must be a natural number or \"omega\"");
}

Json capacity_to_json(const Capacity& c) {
  if (c.is_omega()) return "omega";
  return c.value();
}

FactorProblem parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  for (const char* key : {"vertices", "edges", "f"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  }
  const Json& vs = doc["vertices"];
  if (!vs.is_array()) throw ParseError("vertices: expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) {
      throw ParseError("vertices[" + std::to_string(i) + "]: expected a string");
    }
    vertices.push_back(vs[i].get<std::string>());
  }
  const Json& es = doc["edges"];
  if (!es.is_array()) throw ParseError("edges: expected an array");
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Json& e = es[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw ParseError("edges[" + std::to_string(i) +
                       "]: expected a pair of vertex names");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  const Json& fs = doc["f"];
  if (!fs.is_object()) throw ParseError("f: expected an object");
  std::map<std::string, Capacity> f;
  for (const auto& [name, value] : fs.items()) {
    f[name] = parse_capacity(value, "f." + name);
  }
  return FactorProblem::build(vertices, edges, f);
}

FactorProblem load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string format_instance(const FactorProblem& problem) {
  const Graph& g = problem.graph();
  Json doc = Json::object();
  doc["vertices"] = g.names();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.name(e.u), g.name(e.v)});
  doc["edges"] = std::move(edges);
  Json f = Json::object();
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    f[g.name(x)] = capacity_to_json(problem.capacity(x));
  }
  doc["f"] = std::move(f);
  return doc.dump();
}

Json factor_to_json(const FactorProblem& problem, const Factor& factor) {
  const Graph& g = problem.graph();
  Json out = Json::array();
  for (const Edge& e : factor) out.push_back({g.name(e.u), g.name(e.v)});
  return out;
}

Json witness_to_json(const FactorProblem& problem,
                     const ObstructionWitness& witness) {
  const Graph& g = problem.graph();
  Json node = Json::object();
  node["vertex"] = g.name(witness.vertex);
  node["rank"] = witness.rank;
  Json children = Json::array();
  for (const auto& child : witness.children) {
    Json entry = Json::object();
    entry["neighbor"] = g.name(child.neighbor);
    entry["witness"] = witness_to_json(problem, child.witness);
    children.push_back(std::move(entry));
  }
  node["children"] = std::move(children);
  return node;
}

Json rank_to_json(const Rank& rank) {
  Json out = Json::object();
  if (rank.is_obstruction()) {
    out["rank"] = rank.alpha();
  } else {
    out["rank"] = nullptr;
  }
  return out;
}

Json stream_report_to_json(const stream::StreamReport& report,
                           const stream::CountableGraphSource& source,
                           const stream::ExtensionChooser& chooser) {
  Json out = Json::object();
  out["family"] = source.family();
  Json params = Json::object();
  for (const auto& [k, v] : source.parameters()) params[k] = v;
  out["parameters"] = std::move(params);
  out["strategy"] = chooser.strategy();
  out["steps"] = report.steps;
  Json edges = Json::array();
  for (const auto& e : report.sorted_edges()) edges.push_back({e.first, e.second});
  out["edges"] = std::move(edges);
  Json ledger = Json::object();
  for (const auto& [v, entry] : report.ledger) {
    Json row = Json::object();
    row["capacity"] = capacity_to_json(entry.capacity);
    row["degree"] = entry.degree;
    row["occurrences"] = entry.occurrences;
    ledger[v] = std::move(row);
  }
  out["ledger"] = std::move(ledger);
  out["violations"] = report.violations;
  return out;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const FactorProblem& problem,
                   const std::optional<Factor>& factor) {
  const Graph& g = problem.graph();
  std::ostringstream out;
  out << "graph ffactor {\n";
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    out << "  " << quoted(g.name(x)) << " [label="
        << quoted(g.name(x) + " (f=" + problem.capacity(x).to_string() + ")")
        << "];\n";
  }
  for (const Edge& e : g.edges()) {
    const bool bold = factor && factor->contains(e);
    out << "  " << quoted(g.name(e.u)) << " -- " << quoted(g.name(e.v))
        << " [style=" << (bold ? "bold" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ffactor::io
