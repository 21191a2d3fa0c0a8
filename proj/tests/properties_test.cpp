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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffactor/enumerate.hpp"
#include "ffactor/errors.hpp"
#include "ffactor/properties.hpp"
#include "ffactor/universe.hpp"
#include "test_support.hpp"

using namespace ffactor;
using namespace ffactor::testing;

TEST_CASE("enumerate_factors examples") {
  const auto a = k2();
  const auto k2_factors = enumerate_factors(a);
  REQUIRE(k2_factors.size() == 2);
  CHECK(k2_factors[0].empty());
  CHECK(k2_factors[1] == factor_of(a, {{"a", "b"}}));

  const auto t = triangle(1);
  REQUIRE(direct_factors(t).size() == 4);
  const auto tf = enumerate_factors(t);
  CHECK(tf.size() == 4);
  for (const Factor& f : tf) CHECK(f.size() <= 1);

  const auto edgeless = make({"a", "b"}, {}, {{"a", 0}, {"b", 0}});
  const auto ef = enumerate_factors(edgeless);
  REQUIRE(ef.size() == 1);
  CHECK(ef[0].empty());
}

TEST_CASE("enumeration matches direct subset filtering, in order") {
  universe::for_each_small_instance(4, [](const FactorProblem& p) {
    CHECK(enumerate_factors(p) == direct_factors(p));
  });
}

TEST_CASE("enumeration budgets") {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::uint32_t> f;
  for (int i = 0; i < 8; ++i) {
    names.push_back("x" + std::to_string(i));
    f[names.back()] = 0;
  }
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) edges.emplace_back(names[i], names[j]);
  }
  const auto k8 = make(names, edges, f);  // 28 edges
  CHECK_THROWS_AS(enumerate_factors(k8), BudgetExceeded);
  EnumerationOptions wide;
  wide.max_edges = 28;
  CHECK(enumerate_factors(k8, wide).size() == 1);

  EnumerationOptions few;
  few.max_factors = 2;
  CHECK_THROWS_AS(enumerate_factors(c4(), few), BudgetExceeded);
}

TEST_CASE("perfect_factor_bruteforce examples") {
  const auto a = k2();
  CHECK(perfect_factor_bruteforce(a) == factor_of(a, {{"a", "b"}}));
  CHECK_FALSE(perfect_factor_bruteforce(path3()).has_value());
  const auto c = c4();
  REQUIRE(direct_perfect(c) == factor_of(c, {{"v0", "v1"}, {"v2", "v3"}}));
  CHECK(perfect_factor_bruteforce(c) == factor_of(c, {{"v0", "v1"}, {"v2", "v3"}}));
}

TEST_CASE("pruned perfect search returns the first perfect factor in order") {
  for (const auto& p : universe::seeded_instances(31, 300, 2, 6)) {
    CHECK(perfect_factor_bruteforce(p) == direct_perfect(p));
  }
}

TEST_CASE("check_property examples") {
  const auto t = triangle(2);
  CHECK(check_property(PropertyId::kP1, t));
  CHECK_FALSE(check_property(PropertyId::kP3, t));
  CHECK(check_property(PropertyId::kP2, t));
  CHECK(check_property(PropertyId::kP4, t));

  CHECK(check_property(PropertyId::kP3, path3(1, 2, 1)));

  for (PropertyId id : kAllProperties) {
    CHECK_FALSE(check_property(id, path3()));
  }
}

TEST_CASE("property ids") {
  CHECK(parse_property_id("p3") == PropertyId::kP3);
  CHECK(parse_property_id("P1") == PropertyId::kP1);
  CHECK_FALSE(parse_property_id("p5").has_value());
  CHECK(to_string(PropertyId::kP4) == "p4");
}

TEST_CASE("finite equivalences over the exhaustive universe") {
  std::size_t p1_not_p3 = 0;
  universe::for_each_small_instance(4, [&](const FactorProblem& p) {
    const bool p1 = check_property(PropertyId::kP1, p);
    CHECK(check_property(PropertyId::kP2, p) == p1);
    CHECK(check_property(PropertyId::kP4, p) == p1);
    const bool p3 = check_property(PropertyId::kP3, p);
    CHECK((!p3 || p1));
    if (p1 && !p3) ++p1_not_p3;
  });
  CHECK(p1_not_p3 > 0);
}

TEST_CASE("hereditary_step examples") {
  SUBCASE("K2, P1") {
    const auto report = hereditary_step(PropertyId::kP1, k2());
    REQUIRE(report.entries.size() == 2);
    CHECK(report.entries[0].vertex == 0);
    CHECK(report.entries[0].witness == VertexId{1});
    CHECK(report.entries[1].vertex == 1);
    CHECK(report.entries[1].witness == VertexId{0});
  }
  SUBCASE("C4, P2") {
    const auto c = c4();
    const auto report = hereditary_step(PropertyId::kP2, c);
    CHECK(report.entries.size() == 4);
    CHECK(report.clean());
    for (const auto& e : report.entries) {
      REQUIRE(e.witness.has_value());
      const auto child = remove_edge(c, e.vertex, *e.witness);
      CHECK(direct_perfect(child).has_value());
    }
  }
  SUBCASE("triangle f = 2, P2") {
    const auto t = triangle(2);
    const auto report = hereditary_step(PropertyId::kP2, t);
    CHECK(report.entries.size() == 3);
    CHECK(report.clean());
    // The residual is a path with capacities 1, 2, 1.
    const auto child = remove_edge(t, 0, *report.entries[0].witness);
    CHECK(direct_perfect(child).has_value());
  }
  SUBCASE("precondition") {
    CHECK_THROWS_AS(hereditary_step(PropertyId::kP1, path3()), PropertyDoesNotHold);
  }
}

TEST_CASE("hereditary steps never fail for P1, P2, P4; P3 is measured") {
  std::size_t p3_counterexamples = 0;
  universe::for_each_small_instance(4, [&](const FactorProblem& p) {
    for (PropertyId id : kAllProperties) {
      if (!check_property(id, p)) continue;
      const auto report = hereditary_step(id, p);
      if (id == PropertyId::kP3) {
        p3_counterexamples += report.counterexamples();
      } else {
        CHECK(report.clean());
      }
    }
  });
  MESSAGE("P3 hereditary counterexamples on <= 4 vertices: " << p3_counterexamples);
}

TEST_CASE("saturate_finite_set") {
  SUBCASE("empty target set") {
    CHECK(saturate_finite_set(PropertyId::kP2, triangle(2), {}).empty());
  }
  SUBCASE("C4, W = {v0}, P2") {
    const auto c = c4();
    const VertexId w[] = {0};
    const Factor f = saturate_finite_set(PropertyId::kP2, c, w);
    CHECK(f == factor_of(c, {{"v0", "v1"}}));
    CHECK(check_property(PropertyId::kP2, residual(c, f)));
  }
  SUBCASE("triangle f = 2, W = {a}, P2") {
    const auto t = triangle(2);
    const VertexId w[] = {0};
    const Factor f = saturate_finite_set(PropertyId::kP2, t, w);
    CHECK(f.size() == 2);
    CHECK(degree(f, 0) == 2);
    CHECK(check_property(PropertyId::kP2, residual(t, f)));
  }
  SUBCASE("precondition") {
    const VertexId w[] = {0};
    CHECK_THROWS_AS(saturate_finite_set(PropertyId::kP1, path3(), w),
                    PropertyDoesNotHold);
  }
  SUBCASE("saturating every vertex yields a perfect factor") {
    for (const auto& p : universe::seeded_instances(41, 200, 2, 6)) {
      if (!check_property(PropertyId::kP2, p)) continue;
      std::vector<VertexId> all(p.vertex_count());
      for (VertexId x = 0; x < all.size(); ++x) all[x] = x;
      for (PropertyId id : {PropertyId::kP1, PropertyId::kP2, PropertyId::kP4}) {
        const Factor f = saturate_finite_set(id, p, all);
        CHECK(p.is_perfect(f));
      }
    }
  }
}
