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

#include "pvlab/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "pvlab/errors.hpp"

namespace pvlab {

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool is_admissible(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

SimpleType make_type(Family family, int rank) {
  if (!is_admissible(family, rank))
    throw InadmissibleType(std::string(1, static_cast<char>(family)) + std::to_string(rank) +
                           " is not an admissible simple type");
  return SimpleType{family, rank};
}

SimpleType parse_type(const std::string& text) {
  if (text.size() < 2 || std::string("ABCDEFG").find(text[0]) == std::string::npos)
    throw InadmissibleType("cannot read a simple type from \"" + text + "\"");
  int rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9' || rank > 1000)
      throw InadmissibleType("cannot read a simple type from \"" + text + "\"");
    rank = rank * 10 + (text[i] - '0');
  }
  return make_type(static_cast<Family>(text[0]), rank);
}

CartanMatrix cartan_matrix(SimpleType type) {
  const int n = type.rank;
  CartanMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) { c[i - 1][j - 1] = c[j - 1][i - 1] = -1; };
  switch (type.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      c[1][2] = -2;
      break;
    case Family::G:
      bond(1, 2);
      c[1][0] = -3;
      break;
  }
  return c;
}

std::vector<int> node_lengths(const CartanMatrix& cartan) {
  const std::size_t n = cartan.size();
  // Relative lengths scaled by 6 so every ratio stays integral.
  std::vector<long> len(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (len[s] != 0) continue;
    std::vector<std::size_t> stack{s};
    std::vector<std::size_t> members{s};
    len[s] = 36;
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || cartan[i][j] == 0 || len[j] != 0) continue;
        len[j] = len[i] * cartan[j][i] / cartan[i][j];
        stack.push_back(j);
        members.push_back(j);
      }
    }
    long lo = len[s];
    for (auto m : members) lo = std::min(lo, len[m]);
    for (auto m : members) len[m] = 2 * len[m] / lo;
  }
  return {len.begin(), len.end()};
}

namespace {

std::vector<int> neighbours_within(const CartanMatrix& c, int node, const std::vector<int>& nodes) {
  std::vector<int> out;
  for (int m : nodes)
    if (m != node && c[node - 1][m - 1] != 0) out.push_back(m);
  return out;
}

// Walks a path starting at `from`, never stepping to `avoid`.
std::vector<int> walk_arm(const CartanMatrix& c, int from, int avoid, const std::vector<int>& nodes) {
  std::vector<int> arm{from};
  int prev = avoid;
  int cur = from;
  while (true) {
    int next = 0;
    for (int m : neighbours_within(c, cur, nodes))
      if (m != prev) next = m;
    if (next == 0) break;
    arm.push_back(next);
    prev = cur;
    cur = next;
  }
  return arm;
}

bool is_long_over(const CartanMatrix& c, int i, int j) { return c[i - 1][j - 1] < -1; }

}  // namespace

NodeComponent identify_component(const CartanMatrix& cartan, std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  const int k = static_cast<int>(nodes.size());
  if (k == 0) throw std::invalid_argument("empty component");
  NodeComponent out{nodes, SimpleType{Family::A, k}, {}};
  if (k == 1) {
    out.order = nodes;
    return out;
  }
  int branch = 0;
  std::vector<int> ends;
  for (int v : nodes) {
    auto deg = neighbours_within(cartan, v, nodes).size();
    if (deg == 3) branch = v;
    if (deg == 1) ends.push_back(v);
  }
  if (branch == 0) {
    std::vector<int> path = walk_arm(cartan, ends.front(), 0, nodes);
    int multi = -1;
    for (int i = 0; i + 1 < k; ++i)
      if (cartan[path[i] - 1][path[i + 1] - 1] * cartan[path[i + 1] - 1][path[i] - 1] > 1) multi = i;
    if (multi < 0) {
      out.order = path;
    } else {
      const int bondmult = cartan[path[multi] - 1][path[multi + 1] - 1] *
                           cartan[path[multi + 1] - 1][path[multi] - 1];
      if (bondmult == 3) {
        out.type = SimpleType{Family::G, 2};
        out.order = is_long_over(cartan, path[0], path[1]) ? std::vector<int>{path[1], path[0]} : path;
      } else if (multi == 0 || multi == k - 2) {
        if (multi == 0) std::reverse(path.begin(), path.end());
        const bool last_short = is_long_over(cartan, path[k - 2], path[k - 1]);
        if (last_short || k == 2) {
          if (!last_short) std::reverse(path.begin(), path.end());
          out.type = SimpleType{Family::B, k};
        } else {
          out.type = SimpleType{Family::C, k};
        }
        out.order = path;
      } else {
        if (k != 4) throw std::logic_error("not a finite-type Dynkin diagram");
        if (!is_long_over(cartan, path[1], path[2])) std::reverse(path.begin(), path.end());
        out.type = SimpleType{Family::F, 4};
        out.order = path;
      }
    }
  } else {
    std::vector<std::vector<int>> arms;
    for (int m : neighbours_within(cartan, branch, nodes)) arms.push_back(walk_arm(cartan, m, branch, nodes));
    std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.back() < b.back();
    });
    if (arms[2].size() == 1) {
      std::vector<int> tips{arms[0].front(), arms[1].front(), arms[2].front()};
      std::sort(tips.begin(), tips.end());
      out.type = SimpleType{Family::D, 4};
      out.order = {tips[0], branch, tips[1], tips[2]};
    } else if (arms[1].size() == 1) {
      // D type: the longest arm carries nodes 1..k-3, the two short arms are the fork.
      std::vector<int> order(arms[2].rbegin(), arms[2].rend());
      order.push_back(branch);
      std::vector<int> tips{arms[0].front(), arms[1].front()};
      std::sort(tips.begin(), tips.end());
      order.insert(order.end(), tips.begin(), tips.end());
      out.type = SimpleType{Family::D, k};
      out.order = order;
    } else {
      // E type, Bourbaki numbering: 1-3-4-5-..., 2 hangs from 4.
      const auto& shortarm = arms[0];
      const auto& mid = arms[1];
      const auto& longarm = arms[2];
      std::vector<int> order(k, 0);
      order[0] = mid[1];
      order[1] = shortarm[0];
      order[2] = mid[0];
      order[3] = branch;
      for (std::size_t i = 0; i < longarm.size(); ++i) order[4 + i] = longarm[i];
      out.type = SimpleType{Family::E, k};
      out.order = order;
    }
  }
  const CartanMatrix standard = cartan_matrix(out.type);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (standard[i][j] != cartan[out.order[i] - 1][out.order[j] - 1])
        throw std::logic_error("component relabelling does not preserve the Cartan matrix");
  return out;
}

RootSystem::RootSystem(SimpleType type) : type_(make_type(type.family, type.rank)) {
  cartan_ = pvlab::cartan_matrix(type_);
  lengths_ = pvlab::node_lengths(cartan_);
  const int n = type_.rank;

  std::vector<std::vector<Root>> by_height;
  std::map<Root, bool> known;
  std::vector<Root> layer;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    layer.push_back(r);
    known[r] = true;
  }
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    by_height.push_back(layer);
    std::vector<Root> next;
    for (const Root& beta : layer) {
      for (int i = 1; i <= n; ++i) {
        // beta + alpha_i is a root iff p - <beta, alpha_i coroot> > 0, with p
        // the length of the downward alpha_i-string through beta.
        int p = 0;
        Root down = beta;
        while (true) {
          down[i - 1] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing(beta, i) <= 0) continue;
        Root up = beta;
        up[i - 1] += 1;
        if (known.count(up)) continue;
        known[up] = true;
        next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  for (const auto& h : by_height) roots_.insert(roots_.end(), h.begin(), h.end());
  const std::size_t npos = roots_.size();
  for (std::size_t i = 0; i < npos; ++i) {
    Root neg = roots_[i];
    for (auto& x : neg) x = -x;
    roots_.push_back(neg);
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = i;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    simple_index_.push_back(index_.at(r));
  }
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::height(std::size_t idx) const {
  return std::accumulate(roots_[idx].begin(), roots_[idx].end(), 0);
}

int RootSystem::inner(const Root& a, const Root& b) const {
  // (alpha_i, alpha_j) = C[i][j] |alpha_j|^2 / 2.
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b[j] == 0) continue;
      s += a[i] * b[j] * cartan_[i][j] * lengths_[j] / 2;
    }
  }
  return s;
}

int RootSystem::pairing(const Root& r, int node) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += r[i] * cartan_[i][node - 1];
  return s;
}

std::vector<NodeComponent> RootSystem::connected_components(std::span<const int> nodes) const {
  std::vector<int> remaining(nodes.begin(), nodes.end());
  std::sort(remaining.begin(), remaining.end());
  remaining.erase(std::unique(remaining.begin(), remaining.end()), remaining.end());
  for (int v : remaining)
    if (v < 1 || v > rank()) throw IndexOutOfRange("node " + std::to_string(v) + " outside 1.." + std::to_string(rank()));
  std::vector<NodeComponent> out;
  std::vector<bool> seen(rank() + 1, false);
  for (int s : remaining) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (int m : remaining)
        if (!seen[m] && adjacent(comp[head], m)) {
          seen[m] = true;
          comp.push_back(m);
        }
    out.push_back(identify_component(cartan_, comp));
  }
  return out;
}

std::size_t expected_root_count(SimpleType type) {
  const std::size_t n = type.rank;
  switch (type.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

std::vector<std::vector<int>> diagram_automorphisms(SimpleType type) {
  const int n = type.rank;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  std::vector<std::vector<int>> out{id};
  if (type.family == Family::A && n >= 2) {
    std::vector<int> rev(id.rbegin(), id.rend());
    out.push_back(rev);
  } else if (type.family == Family::D) {
    if (n == 4) {
      std::vector<int> tips{1, 3, 4};
      std::vector<int> img = tips;
      while (std::next_permutation(img.begin(), img.end())) {
        std::vector<int> p = id;
        for (int t = 0; t < 3; ++t) p[tips[t] - 1] = img[t];
        out.push_back(p);
      }
    } else {
      std::vector<int> p = id;
      std::swap(p[n - 2], p[n - 1]);
      out.push_back(p);
    }
  } else if (type.family == Family::E && n == 6) {
    out.push_back({6, 2, 5, 4, 3, 1});
  }
  return out;
}

}  // namespace pvlab
