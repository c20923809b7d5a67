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

// Reference computations for the test suites. These avoid the grading and
// classification modules so that they can cross-check them.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pvlab/chevalley.hpp"
#include "pvlab/diagram.hpp"
#include "pvlab/linalg.hpp"
#include "pvlab/pvcore.hpp"
#include "pvlab/rootsys.hpp"

namespace pvlab::oracle {

inline std::size_t closed_form_dim(SimpleType t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

using SparseVec = std::map<std::size_t, long>;

inline SparseVec bracket(const ChevalleyAlgebra& alg, std::size_t i, const SparseVec& v) {
  SparseVec out;
  for (const auto& [j, c] : v)
    for (const auto& [k, s] : alg.bracket_basis(i, j)) out[k] += c * s;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline SparseVec basis_bracket(const ChevalleyAlgebra& alg, std::size_t i, std::size_t j) {
  return bracket(alg, i, SparseVec{{j, 1}});
}

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] on basis elements.
inline bool jacobi_holds(const ChevalleyAlgebra& alg, std::size_t x, std::size_t y, std::size_t z) {
  SparseVec sum = bracket(alg, x, basis_bracket(alg, y, z));
  for (const auto& [k, c] : bracket(alg, y, basis_bracket(alg, z, x))) sum[k] += c;
  for (const auto& [k, c] : bracket(alg, z, basis_bracket(alg, x, y))) sum[k] += c;
  return std::all_of(sum.begin(), sum.end(), [](const auto& kv) { return kv.second == 0; });
}

/// Dimension of each level-one component, read off the root coefficients.
inline std::map<int, std::size_t> level_one_split(const RootSystem& rs, const std::vector<int>& circled) {
  std::map<int, std::size_t> out;
  for (std::size_t r = 0; r < rs.num_positive(); ++r) {
    int level = 0, owner = 0;
    for (int a : circled) {
      level += rs.root(r)[a - 1];
      if (rs.root(r)[a - 1] == 1) owner = a;
    }
    if (level == 1) ++out[owner];
  }
  return out;
}

/// Number of roots at each level (both signs) for the given circled nodes.
inline std::map<int, std::size_t> level_counts(const RootSystem& rs, const std::vector<int>& circled) {
  std::map<int, std::size_t> out;
  out[0] = static_cast<std::size_t>(rs.rank());
  for (const auto& root : rs.roots()) {
    int level = 0;
    for (int a : circled) level += root[a - 1];
    ++out[level];
  }
  return out;
}

/// alpha(H_beta) = 2 (alpha, beta) / (beta, beta) from the invariant form.
inline int cartan_from_form(const RootSystem& rs, int alpha, int beta) {
  const Root& a = rs.root(rs.simple_index(alpha));
  const Root& b = rs.root(rs.simple_index(beta));
  return 2 * rs.inner(a, b) / rs.inner(b, b);
}

inline std::size_t isotropy_dimension(const PVInstance& pv, const Vector& x) {
  std::vector<Vector> cols;
  for (const auto& op : pv.basis) cols.push_back(op.apply(x, pv.dim_v));
  return pv.basis.size() - rank(Matrix::from_columns(cols, pv.dim_v));
}

inline std::string diagram_name(char family, int n, std::vector<int> circled) {
  std::sort(circled.begin(), circled.end());
  std::string s = std::string(1, family) + std::to_string(n) + "[";
  for (std::size_t i = 0; i < circled.size(); ++i) s += (i ? "," : "") + std::to_string(circled[i]);
  return s + "]";
}

/// Diagrams of the classification table for one type, written out from the
/// block-size constraints, closed under the diagram symmetries.
inline std::set<std::string> table_reference(char family, int n) {
  std::set<std::string> out;
  auto add = [&](std::vector<int> c) {
    out.insert(diagram_name(family, n, c));
    if (family == 'A') {
      for (int& x : c) x = n + 1 - x;
      out.insert(diagram_name(family, n, c));
    } else if (family == 'D') {
      for (int& x : c) x = x == n ? n - 1 : x == n - 1 ? n : x;
      out.insert(diagram_name(family, n, c));
    } else if (family == 'E' && n == 6) {
      static const int flip[7] = {0, 6, 2, 5, 4, 3, 1};
      for (int& x : c) x = flip[x];
      out.insert(diagram_name(family, n, c));
    }
  };
  for (int p1 = 0; p1 <= n; ++p1)
    for (int p2 = 0; p2 <= n; ++p2)
      for (int p3 = 0; p3 <= n; ++p3) {
        if (p1 + p2 + p3 + 2 != n) continue;
        const std::vector<int> chain{p1 + 1, p1 + p2 + 2};
        if (family == 'A' && p3 == p1 && p2 > p1) add(chain);
        if (family == 'B' && p2 > p1 && 2 * p3 == p1) add(chain);
        if (family == 'C' && p2 > p1 && 2 * p3 == p1 + 1 && p3 > 0 && p2 % 2 == 1) add(chain);
        if (family == 'D' && p2 > p1 && 2 * p3 == p1 + 1 && p3 >= 2 && p2 % 2 == 0) add(chain);
      }
  if (family == 'D') {
    for (int p2 = 2; p2 + 2 + (p2 - 1) <= n; p2 += 2) {
      const int p1 = p2 - 1;
      if (p1 + 1 + p2 + 1 == n) add({p1 + 1, n});
    }
    if (n - 4 > 1) add({2, n - 1, n});
  }
  if (family == 'E') {
    if (n == 6) add({1, 2});
    if (n == 7) add({2, 5});
    if (n == 8) add({1, 2});
  }
  return out;
}

}  // namespace pvlab::oracle
