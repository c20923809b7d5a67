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
#include "pvlab/grading.hpp"

using namespace pvlab;

namespace {

std::vector<SimpleType> all_types(int max_classical) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int n = 1; n <= max_classical; ++n)
      if (is_admissible(f, n)) out.push_back(make_type(f, n));
  for (int n = 6; n <= 8; ++n) out.push_back(make_type(Family::E, n));
  out.push_back(make_type(Family::F, 4));
  out.push_back(make_type(Family::G, 2));
  return out;
}

}  // namespace

TEST_CASE("grading dimensions sum to dim g for every diagram") {
  for (const SimpleType t : all_types(8)) {
    const RootSystem rs(t);
    const std::size_t dim = oracle::closed_form_dim(t);
    for (const auto& d : all_diagrams(t, 1)) {
      const Grading g = compute_grading(d, rs);
      std::size_t total = 0;
      for (const auto& [lvl, n] : g.dim_by_level) total += n;
      CAPTURE(render_compact(d));
      CHECK(total == dim);
      CHECK(g.dim_by_level == oracle::level_counts(rs, d.circled()));
    }
  }
}

TEST_CASE("grading element acts by the level") {
  const WeightedDiagram d = parse_diagram("E7[2,5]");
  const RootSystem rs(d.type());
  const Grading g = compute_grading(d, rs);
  for (std::size_t r = 0; r < rs.num_roots(); ++r) {
    Rational v = 0;
    for (int i = 0; i < rs.rank(); ++i) v += g.h_theta[i] * rs.pairing(rs.root(r), i + 1);
    CHECK(v == 2 * g.degrees[r]);
  }
}

TEST_CASE("component dimensions match the root count") {
  for (const SimpleType t : all_types(7)) {
    const RootSystem rs(t);
    for (const auto& d : all_diagrams(t, 1)) {
      const auto split = oracle::level_one_split(rs, d.circled());
      for (const auto& c : components(d, rs)) {
        CAPTURE(render_compact(d));
        CHECK(c.dim == split.at(c.alpha));
      }
    }
  }
}

TEST_CASE("block count formula in type A") {
  for (int p1 = 0; p1 <= 3; ++p1)
    for (int p2 = 0; p2 <= 3; ++p2)
      for (int p3 = 0; p3 <= 3; ++p3) {
        const int n = p1 + p2 + p3 + 2;
        const WeightedDiagram d(make_type(Family::A, n), {p1 + 1, p1 + p2 + 2});
        const Grading g = compute_grading(d);
        CHECK(g.dim_by_level.at(1) == static_cast<std::size_t>((p1 + 1) * (p2 + 1) + (p2 + 1) * (p3 + 1)));
      }
}

TEST_CASE("bond-length rule equals the Cartan integers") {
  std::size_t checked = 0;
  for (const SimpleType t : all_types(9)) {
    if (t.rank > 9) continue;
    const RootSystem rs(t);
    for (const auto& d : all_diagrams(t, 1)) {
      for (const auto& c : components(d, rs)) {
        for (int beta : c.j_alpha) {
          CAPTURE(render_compact(d));
          CAPTURE(beta);
          const int expected = oracle::cartan_from_form(rs, c.alpha, beta);
          CHECK(rules_R(d, c.alpha, beta) == expected);
          CHECK(c.highest_weight.at(beta) == expected);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("rule arguments are validated") {
  const WeightedDiagram d = parse_diagram("B3[2]");
  CHECK_THROWS_AS(rules_R(d, 1, 2), NotCircled);
  CHECK_THROWS_AS(rules_R(d, 2, 2), NotAdjacent);
  CHECK_THROWS_AS(rules_R(d, 2, 5), IndexOutOfRange);
  CHECK(rules_R(d, 2, 3) == -2);
  CHECK(rules_R(d, 2, 1) == -1);
}
