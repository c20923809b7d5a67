// Copyright 2026 The pvlab Authors
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

#include <doctest.h>

#include "../support/oracles.hpp"
#include "pvlab/classify.hpp"
#include "pvlab/errors.hpp"

using namespace pvlab;

namespace {

AlgebraCache& cache() {
  static AlgebraCache c;
  return c;
}

std::set<std::string> matched_names(SimpleType t) {
  std::set<std::string> out;
  for (const auto& d : all_diagrams(t, 2))
    if (table1_match(d)) out.insert(render_compact(d));
  return out;
}

}  // namespace

TEST_CASE("table rows match their written-out instances") {
  for (char f : {'A', 'B', 'C', 'D'})
    for (int n = 2; n <= 12; ++n) {
      if (!is_admissible(static_cast<Family>(f), n)) continue;
      CAPTURE(f);
      CAPTURE(n);
      CHECK(matched_names(make_type(static_cast<Family>(f), n)) == oracle::table_reference(f, n));
    }
  for (int n = 6; n <= 8; ++n) CHECK(matched_names(make_type(Family::E, n)) == oracle::table_reference('E', n));
  CHECK(matched_names(make_type(Family::F, 4)).empty());
  CHECK(matched_names(make_type(Family::G, 2)).empty());
}

TEST_CASE("table instances are realized canonically") {
  for (const auto& inst : table1_instances(make_type(Family::D, 9))) {
    const auto m = table1_match(inst.diagram);
    REQUIRE(m.has_value());
    CHECK(m->row == inst.row);
    CHECK(m->params == inst.params);
  }
  CHECK(realize(Table1Row::A, {0, 2}) == parse_diagram("A4[1,4]"));
  CHECK_THROWS_AS(realize(Table1Row::A, {2, 1}), InvalidParameter);
  CHECK_THROWS_AS(realize(Table1Row::C, {1, 2, 1}), InvalidParameter);
}

TEST_CASE("table lookups") {
  const auto a = table1_match(parse_diagram("A4[1,4]"));
  REQUIRE(a.has_value());
  CHECK(a->row == Table1Row::A);
  CHECK(a->params == std::vector<int>{0, 2});
  CHECK_FALSE(table1_match(parse_diagram("B4[1,3]")).has_value());
  CHECK(table1_match(parse_diagram("E6[1,2]"))->row == Table1Row::E6);
  CHECK(table1_match(parse_diagram("E6[2,6]"))->row == Table1Row::E6);
  CHECK(table1_match(parse_diagram("D5[2,4]"))->row == Table1Row::D2);
  CHECK(table1_match(parse_diagram("D6[2,5,6]"))->row == Table1Row::D3);
}

TEST_CASE("classification verdicts") {
  const auto a3 = classify(parse_diagram("A3[1,3]"), Method::Both, 0, cache());
  CHECK(a3.verdicts.q_irreducible == true);
  CHECK(a3.verdicts.one_irreducible == true);
  CHECK(a3.verdicts.regular == true);
  const auto a5 = classify(parse_diagram("A5[1,3]"), Method::Oracle, 0, cache());
  CHECK(a5.verdicts.q_irreducible == false);
  const auto f4 = classify(parse_diagram("F4[1,2]"), Method::Oracle, 0, cache());
  CHECK(f4.verdicts.q_irreducible == false);
  CHECK_FALSE(table1_match(parse_diagram("F4[1,2]")).has_value());
  const auto e6 = classify(parse_diagram("E6[2,3]"), Method::Oracle, 0, cache());
  CHECK(e6.verdicts.prehomogeneous == true);
  CHECK(e6.verdicts.regular == false);
  REQUIRE(e6.oracle.has_value());
  CHECK(e6.oracle->non_reductive.has_value());
  const auto pattern = classify(parse_diagram("D5[2,5]"), Method::Pattern, 0, cache());
  CHECK(pattern.verdicts.q_irreducible == true);
  CHECK_FALSE(pattern.oracle.has_value());
  CHECK(parse_method("oracle") == Method::Oracle);
  CHECK_THROWS_AS(parse_method("guess"), InvalidParameter);
}

TEST_CASE("a verdict is invariant under diagram symmetries") {
  for (const SimpleType t : {make_type(Family::A, 5), make_type(Family::D, 5), make_type(Family::E, 6)}) {
    const auto autos = diagram_automorphisms(t);
    for (const auto& d : all_diagrams(t, 2)) {
      const auto base = classify(d, Method::Oracle, 0, cache()).verdicts;
      for (const auto& perm : autos) {
        const auto v = classify(permute(d, perm), Method::Oracle, 0, cache()).verdicts;
        CAPTURE(render_compact(d));
        CHECK(v.q_irreducible == base.q_irreducible);
        CHECK(v.regular == base.regular);
        CHECK(v.n_invariants == base.n_invariants);
      }
    }
  }
}

TEST_CASE("adjacent circles split the regularity question") {
  for (const SimpleType t : {make_type(Family::A, 5), make_type(Family::B, 4), make_type(Family::C, 4),
                             make_type(Family::D, 5), make_type(Family::F, 4), make_type(Family::E, 6)}) {
    const ChevalleyAlgebra& alg = cache().get(t);
    for (const auto& d : all_diagrams(t, 2)) {
      if (circled_adjacent_pairs(d).empty()) {
        CHECK_THROWS_AS(adjacent_circle_split(d), NoAdjacentCircles);
        continue;
      }
      const SplitRegularity s = split_regularity(d, alg, 0);
      CAPTURE(render_compact(d));
      CHECK(s.full == (s.part1 && s.part2));
    }
  }
}

TEST_CASE("pattern and oracle agree in type A") {
  const auto reports = enumerate({make_type(Family::A, 2), make_type(Family::A, 3), make_type(Family::A, 4),
                                  make_type(Family::A, 5), make_type(Family::A, 6), make_type(Family::A, 7)},
                                 Method::Both, 0, {false, 2}, cache());
  std::size_t hits = 0;
  for (const auto& r : reports)
    if (r.verdicts.q_irreducible.value_or(false)) {
      CHECK(r.table1_match.has_value());
      ++hits;
    }
  CHECK(hits == 7);
}

TEST_CASE("enumeration does not depend on the worker count") {
  const std::vector<SimpleType> types{make_type(Family::B, 4), make_type(Family::D, 5)};
  const auto one = enumerate(types, Method::Oracle, 0, {false, 1}, cache());
  const auto four = enumerate(types, Method::Oracle, 0, {false, 4}, cache());
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].diagram == four[i].diagram);
    CHECK(one[i].verdicts.q_irreducible == four[i].verdicts.q_irreducible);
  }
}

TEST_CASE("1-irreducible diagrams are Q-irreducible") {
  for (const auto& d : all_diagrams(make_type(Family::D, 6), 2)) {
    const auto v = classify(d, Method::Oracle, 0, cache()).verdicts;
    if (v.one_irreducible.value_or(false)) CHECK(v.q_irreducible == true);
  }
}
