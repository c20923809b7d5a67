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
#include "pvlab/errors.hpp"
#include "pvlab/rootsys.hpp"

using namespace pvlab;

namespace {

std::vector<SimpleType> types_up_to(int max_rank) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= max_rank; ++n)
      if (is_admissible(f, n)) out.push_back(make_type(f, n));
  return out;
}

}  // namespace

TEST_CASE("root counts follow the closed forms") {
  for (const SimpleType t : types_up_to(9)) {
    CAPTURE(t.name());
    const RootSystem rs(t);
    CHECK(rs.num_roots() + static_cast<std::size_t>(t.rank) == oracle::closed_form_dim(t));
    CHECK(rs.num_roots() == expected_root_count(t));
  }
  CHECK(RootSystem(make_type(Family::E, 8)).num_roots() == 240);
  CHECK(RootSystem(make_type(Family::F, 4)).num_roots() == 48);
}

TEST_CASE("positive roots come first and negatives mirror them") {
  const RootSystem rs(make_type(Family::B, 4));
  for (std::size_t i = 0; i < rs.num_positive(); ++i) {
    const Root& r = rs.root(i);
    const Root& m = rs.root(rs.negative_of(i));
    for (std::size_t k = 0; k < r.size(); ++k) {
      CHECK(r[k] >= 0);
      CHECK(m[k] == -r[k]);
    }
  }
}

TEST_CASE("the invariant form reproduces the Cartan matrix") {
  for (const SimpleType t : types_up_to(8)) {
    CAPTURE(t.name());
    const RootSystem rs(t);
    for (int i = 1; i <= t.rank; ++i)
      for (int j = 1; j <= t.rank; ++j) CHECK(oracle::cartan_from_form(rs, i, j) == rs.cartan(i, j));
  }
}

TEST_CASE("automorphism counts") {
  CHECK(diagram_automorphisms(make_type(Family::A, 5)).size() == 2);
  CHECK(diagram_automorphisms(make_type(Family::D, 4)).size() == 6);
  CHECK(diagram_automorphisms(make_type(Family::D, 6)).size() == 2);
  CHECK(diagram_automorphisms(make_type(Family::E, 6)).size() == 2);
  CHECK(diagram_automorphisms(make_type(Family::E, 7)).size() == 1);
  CHECK(diagram_automorphisms(make_type(Family::B, 3)).size() == 1);
}

TEST_CASE("inadmissible types are rejected") {
  CHECK_THROWS_AS(make_type(Family::D, 3), InadmissibleType);
  CHECK_THROWS_AS(make_type(Family::E, 9), InadmissibleType);
  CHECK_THROWS_AS(make_type(Family::B, 1), InadmissibleType);
  CHECK_THROWS_AS(make_type(Family::G, 3), InadmissibleType);
  CHECK(parse_type("E7").rank == 7);
}
