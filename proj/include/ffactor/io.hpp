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

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ffactor/graph.hpp"
#include "ffactor/obstruction.hpp"
#include "ffactor/stream.hpp"

// Instance files:
//
//   {"vertices":["a","b"],"edges":[["a","b"]],"f":{"a":1,"b":1}}
//
// Capacities are naturals or the string "omega". format_instance writes
// exactly this layout: keys in the order shown, vertices and capacities in
// vertex order, edges in canonical order, no whitespace.
namespace ffactor::io {

using Json = nlohmann::ordered_json;

// Throws ParseError (with the JSON line/column or the offending field) or
// the validation errors of FactorProblem::build.
FactorProblem parse_instance(std::string_view text);
FactorProblem load_instance(const std::string& path);
std::string format_instance(const FactorProblem& problem);

// [["a","b"], ...] sorted by endpoint position in the vertex list.
Json factor_to_json(const FactorProblem& problem, const Factor& factor);
// {"vertex": x, "rank": r, "children": [{"neighbor": y, "witness": {...}}]}
Json witness_to_json(const FactorProblem& problem,
                     const ObstructionWitness& witness);
Json rank_to_json(const Rank& rank);
// {family, parameters, strategy, steps, edges, ledger, violations}
Json stream_report_to_json(const stream::StreamReport& report,
                           const stream::CountableGraphSource& source,
                           const stream::ExtensionChooser& chooser);

// Graphviz: factor edges bold, the rest dashed.
std::string to_dot(const FactorProblem& problem,
                   const std::optional<Factor>& factor);

Capacity parse_capacity(const Json& value, const std::string& field);
Json capacity_to_json(const Capacity& c);

}  // namespace ffactor::io
