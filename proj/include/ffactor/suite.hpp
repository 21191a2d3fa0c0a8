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
#include <string>
#include <vector>

#include "ffactor/properties.hpp"
#include "ffactor/universe.hpp"

// The property suite: the finite equivalences and hereditary steps checked
// over the exhaustive small universe and seeded random samples.
namespace ffactor::suite {

enum class Fault {
  kNone,
  // Flips all but the last trail edge; the degree-delta check must catch it.
  kBadFlip,
};

struct RunConfig {
  Budgets budgets{24, 5'000'000, 20'000'000};
  std::uint64_t seed = universe::kDefaultSeed;
  std::size_t workers = 1;
  std::size_t max_vertices = 4;        // exhaustive layer
  std::size_t random_instances = 2000;  // 5..7 vertices
  std::size_t trail_instances = 500;   // 5 vertices, perfect factor present
  std::size_t stream_instances = 100;   // finite degeneration runs
  Fault fault = Fault::kNone;
};

struct Check {
  std::string name;
  bool gating = true;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // instance JSON of the first failing case
};

struct SuiteReport {
  RunConfig config;
  std::size_t universe_size = 0;
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(const std::string& name) const;
};

SuiteReport run_suite(const RunConfig& config);

// Byte-identical for identical configs, whatever the worker count.
std::string format_report(const SuiteReport& report);

}  // namespace ffactor::suite
