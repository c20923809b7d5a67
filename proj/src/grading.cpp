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

#include "pvlab/grading.hpp"

#include <stdexcept>

#include "pvlab/errors.hpp"

namespace pvlab {

Grading compute_grading(const WeightedDiagram& d, const RootSystem& rs) {
  const int n = d.rank();
  Matrix cm(n, n);
  Vector target(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) cm(j, i) = rs.cartan(j + 1, i + 1);
    target[j] = d.is_circled(j + 1) ? 2 : 0;
  }
  auto h = solve(cm, target);
  if (!h) throw std::logic_error("Cartan matrix is singular");
  Grading g{d, *h, {}, {}};
  g.dim_by_level[0] = static_cast<std::size_t>(n);
  for (std::size_t r = 0; r < rs.num_roots(); ++r) {
    int deg = 0;
    Rational eig;
    for (int i = 0; i < n; ++i) {
      if (d.is_circled(i + 1)) deg += rs.root(r)[i];
      eig += rs.root(r)[i] * target[i];
    }
    if (eig != 2 * deg) throw std::logic_error("grading eigenvalue disagrees with coefficient sum");
    g.degrees.push_back(deg);
    ++g.dim_by_level[deg];
  }
  return g;
}

Grading compute_grading(const WeightedDiagram& d) { return compute_grading(d, RootSystem(d.type())); }

std::vector<Component> components(const WeightedDiagram& d, const RootSystem& rs) {
  std::vector<Component> out;
  for (int alpha : d.circled()) {
    Component c;
    c.alpha = alpha;
    for (std::size_t r = 0; r < rs.num_positive(); ++r) {
      const Root& root = rs.root(r);
      bool ok = root[alpha - 1] == 1;
      for (int other : d.circled())
        if (other != alpha && root[other - 1] != 0) ok = false;
      if (ok) c.roots.push_back(r);
    }
    c.dim = c.roots.size();
    for (int beta : d.theta()) {
      if (!rs.adjacent(alpha, beta)) continue;
      c.j_alpha.push_back(beta);
      c.highest_weight[beta] = rs.cartan(alpha, beta);
      c.rules[beta] = rules_R(d, alpha, beta);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Component> components(const WeightedDiagram& d) { return components(d, RootSystem(d.type())); }

int rules_R(const WeightedDiagram& d, int alpha, int beta) {
  const CartanMatrix c = cartan_matrix(d.type());
  if (alpha < 1 || alpha > d.rank() || beta < 1 || beta > d.rank())
    throw IndexOutOfRange("node outside 1.." + std::to_string(d.rank()));
  if (!d.is_circled(alpha)) throw NotCircled("node " + std::to_string(alpha) + " is not circled");
  if (alpha == beta || c[alpha - 1][beta - 1] == 0 || d.is_circled(beta))
    throw NotAdjacent("node " + std::to_string(beta) + " is not an uncircled neighbour of " + std::to_string(alpha));
  const std::vector<int> len = node_lengths(c);
  if (len[alpha - 1] <= len[beta - 1]) return -1;
  return -(c[alpha - 1][beta - 1] * c[beta - 1][alpha - 1]);
}

}  // namespace pvlab
