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

#include "pvlab/classify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <thread>

#include "pvlab/rootsys.hpp"

namespace pvlab {

std::string to_string(Table1Row row) {
  switch (row) {
    case Table1Row::A: return "A";
    case Table1Row::B: return "B";
    case Table1Row::C: return "C";
    case Table1Row::D1: return "D1";
    case Table1Row::D2: return "D2";
    case Table1Row::D3: return "D3";
    case Table1Row::E6: return "E6";
    case Table1Row::E7: return "E7";
    case Table1Row::E8: return "E8";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Pattern: return "pattern";
    case Method::Oracle: return "oracle";
    case Method::Both: return "both";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "pattern") return Method::Pattern;
  if (s == "oracle") return Method::Oracle;
  if (s == "both") return Method::Both;
  throw InvalidParameter("mode must be pattern, oracle or both, got '" + s + "'");
}

namespace {

struct RowMatch {
  Table1Row row;
  std::vector<int> params;
};

// Match in the orientation as given; the caller tries every automorphism.
std::optional<RowMatch> match_canonical(const WeightedDiagram& d) {
  const auto& c = d.circled();
  const int n = d.rank();
  const Family fam = d.type().family;
  if (fam == Family::E) {
    if (n == 6 && c == std::vector<int>{1, 2}) return RowMatch{Table1Row::E6, {}};
    if (n == 7 && c == std::vector<int>{2, 5}) return RowMatch{Table1Row::E7, {}};
    if (n == 8 && c == std::vector<int>{1, 2}) return RowMatch{Table1Row::E8, {}};
    return std::nullopt;
  }
  if (fam == Family::A || fam == Family::B || fam == Family::C) {
    if (c.size() != 2) return std::nullopt;
    const int p1 = c[0] - 1, p2 = c[1] - c[0] - 1, p3 = n - c[1];
    if (fam == Family::A && p1 == p3 && p2 > p1) return RowMatch{Table1Row::A, {p1, p2}};
    if (fam == Family::B && p2 > p1 && 2 * p3 == p1) return RowMatch{Table1Row::B, {p1, p2, p3}};
    if (fam == Family::C && p2 > p1 && 2 * p3 == p1 + 1 && p3 > 0 && p2 % 2 == 1)
      return RowMatch{Table1Row::C, {p1, p2, p3}};
    return std::nullopt;
  }
  if (fam != Family::D) return std::nullopt;
  const int chain_end = n - 2;
  if (c.size() == 2 && c[1] <= chain_end) {
    const int p1 = c[0] - 1, p2 = c[1] - c[0] - 1, p3 = n - c[1];
    if (p2 > p1 && 2 * p3 == p1 + 1 && p3 >= 2 && p2 % 2 == 0) return RowMatch{Table1Row::D1, {p1, p2, p3}};
    return std::nullopt;
  }
  if (c.size() == 2 && c[0] <= chain_end && c[1] == n) {
    const int p1 = c[0] - 1, p2 = n - 1 - c[0];
    if (p2 >= 2 && p1 == p2 - 1 && p2 % 2 == 0) return RowMatch{Table1Row::D2, {p1, p2}};
    return std::nullopt;
  }
  if (c.size() == 3 && c[0] <= chain_end && c[1] == n - 1 && c[2] == n) {
    const int p1 = c[0] - 1, p2 = n - 2 - c[0];
    if (p1 == 1 && p2 > 1) return RowMatch{Table1Row::D3, {p1, p2}};
  }
  return std::nullopt;
}

std::vector<std::vector<int>> adjacency(SimpleType type) {
  const auto cm = cartan_matrix(type);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(type.rank) + 1);
  for (int i = 1; i <= type.rank; ++i)
    for (int j = 1; j <= type.rank; ++j)
      if (i != j && cm[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] != 0)
        adj[static_cast<std::size_t>(i)].push_back(j);
  return adj;
}

std::vector<int> component_without(const std::vector<std::vector<int>>& adj, int start, int removed) {
  std::vector<bool> seen(adj.size(), false);
  seen[static_cast<std::size_t>(removed)] = true;
  std::vector<int> stack{start}, out;
  seen[static_cast<std::size_t>(start)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> component_indices(const WeightedDiagram& d, const std::vector<int>& nodes) {
  std::vector<std::size_t> idx;
  for (int b : nodes) {
    const auto it = std::find(d.circled().begin(), d.circled().end(), b);
    idx.push_back(static_cast<std::size_t>(it - d.circled().begin()));
  }
  return idx;
}

std::vector<int> circled_of(const WeightedDiagram& d, const std::vector<std::size_t>& idx) {
  std::vector<int> out;
  for (auto i : idx) out.push_back(d.circled()[i]);
  return out;
}

}  // namespace

WeightedDiagram realize(Table1Row row, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw InvalidParameter("row " + to_string(row) + " takes " + std::to_string(k) + " parameters");
  };
  WeightedDiagram d = [&]() {
    switch (row) {
      case Table1Row::A: {
        need(2);
        const int n = 2 * params[0] + params[1] + 2;
        return WeightedDiagram(make_type(Family::A, n), {params[0] + 1, params[0] + params[1] + 2});
      }
      case Table1Row::B:
      case Table1Row::C:
      case Table1Row::D1: {
        need(3);
        const int n = params[0] + params[1] + params[2] + 2;
        const Family f = row == Table1Row::B ? Family::B : row == Table1Row::C ? Family::C : Family::D;
        return WeightedDiagram(make_type(f, n), {params[0] + 1, params[0] + params[1] + 2});
      }
      case Table1Row::D2: {
        need(2);
        const int n = params[0] + params[1] + 2;
        return WeightedDiagram(make_type(Family::D, n), {params[0] + 1, n});
      }
      case Table1Row::D3: {
        need(2);
        const int n = params[0] + params[1] + 3;
        return WeightedDiagram(make_type(Family::D, n), {params[0] + 1, n - 1, n});
      }
      case Table1Row::E6: need(0); return WeightedDiagram(make_type(Family::E, 6), {1, 2});
      case Table1Row::E7: need(0); return WeightedDiagram(make_type(Family::E, 7), {2, 5});
      case Table1Row::E8: need(0); return WeightedDiagram(make_type(Family::E, 8), {1, 2});
    }
    throw InvalidParameter("unknown row");
  }();
  const auto m = match_canonical(d);
  if (!m || m->row != row || m->params != params)
    throw InvalidParameter("parameters violate the constraints of row " + to_string(row));
  return d;
}

std::optional<Table1Family> table1_match(const WeightedDiagram& d) {
  if (d.circled().size() < 2) return std::nullopt;
  for (const auto& perm : diagram_automorphisms(d.type())) {
    WeightedDiagram e = permute(d, perm);
    if (auto m = match_canonical(e)) return Table1Family{m->row, m->params, std::move(e)};
  }
  return std::nullopt;
}

std::vector<Table1Family> table1_instances(SimpleType type) {
  std::vector<Table1Family> out;
  for (const auto& d : all_diagrams(type, 2))
    if (auto m = table1_match(d)) out.push_back(std::move(*m));
  return out;
}

AdjacentSplit adjacent_circle_split(const WeightedDiagram& d) {
  const auto pairs = circled_adjacent_pairs(d);
  if (pairs.empty()) throw NoAdjacentCircles(render_compact(d));
  AdjacentSplit s;
  s.alpha1 = pairs.front().first;
  s.alpha2 = pairs.front().second;
  const auto adj = adjacency(d.type());
  s.psi1 = component_without(adj, s.alpha1, s.alpha2);
  s.psi2 = component_without(adj, s.alpha2, s.alpha1);
  for (int b : d.circled()) {
    if (std::binary_search(s.psi1.begin(), s.psi1.end(), b)) s.circled1.push_back(b);
    else s.circled2.push_back(b);
  }
  return s;
}

SplitRegularity split_regularity(const WeightedDiagram& d, const ChevalleyAlgebra& alg, std::uint64_t seed) {
  SplitRegularity out;
  out.split = adjacent_circle_split(d);
  const PVInstance pv = build_parabolic_pv(d, alg);
  out.full = is_regular(pv, seed).regular;
  out.part1 = is_regular(restrict(pv, component_indices(d, out.split.circled1)), seed).regular;
  out.part2 = is_regular(restrict(pv, component_indices(d, out.split.circled2)), seed).regular;
  return out;
}

MismatchError::MismatchError(ClassificationReport pattern, ClassificationReport oracle)
    : Error("MismatchError", render_compact(pattern.diagram) + ": pattern says " +
                                 (pattern.verdicts.q_irreducible.value_or(false) ? "" : "not ") +
                                 "Q-irreducible, oracle says " +
                                 (oracle.verdicts.q_irreducible.value_or(false) ? "" : "not ") + "Q-irreducible"),
      pattern_(std::move(pattern)),
      oracle_(std::move(oracle)) {}

const ChevalleyAlgebra& AlgebraCache::get(SimpleType type) {
  std::lock_guard lock(mutex_);
  auto& slot = algebras_[type.name()];
  if (!slot) slot = std::make_unique<ChevalleyAlgebra>(RootSystem(type));
  return *slot;
}

namespace {

ClassificationReport oracle_report(const WeightedDiagram& d, std::uint64_t seed, AlgebraCache& cache) {
  const PVInstance pv = build_parabolic_pv(d, cache.get(d.type()));
  SubsetOracle so(pv, seed);
  const std::uint32_t full = so.full_mask();
  const RegularityReport& rep = so.report(full);
  ClassificationReport out{d, Method::Oracle, seed, {}, std::nullopt, std::nullopt, std::nullopt};
  OracleWitness w;
  w.dim_v = pv.dim_v;
  w.dim_algebra = pv.dim_algebra();
  w.n_components = pv.components.size();
  w.generic_point = rep.generic.point;
  w.orbit_rank = rep.orbit_rank;
  w.isotropy_dim = rep.isotropy_dim;
  if (!rep.reductive) w.non_reductive = NonReductiveWitness{rep.isotropy_dim, rep.form_determinant};
  Verdicts& v = out.verdicts;
  v.prehomogeneous = rep.prehomogeneous;
  v.regular = rep.regular;
  v.n_invariants = rep.n_fundamental_invariants;
  bool q_irr = false;
  if (rep.regular) {
    if (auto sub = so.regular_proper_submask(full)) w.regular_subspace = circled_of(d, mask_to_indices(*sub));
    else q_irr = true;
    if (auto part = so.q_partition(full)) {
      std::vector<std::vector<int>> blocks;
      for (auto m : *part) blocks.push_back(circled_of(d, mask_to_indices(m)));
      w.q_partition = std::move(blocks);
    }
  }
  v.q_irreducible = q_irr;
  v.one_irreducible = rep.regular && rep.n_fundamental_invariants == 1;
  v.completely_q_reducible = w.q_partition.has_value();
  out.oracle = std::move(w);
  return out;
}

ClassificationReport pattern_report(const WeightedDiagram& d, std::uint64_t seed, AlgebraCache& cache) {
  if (d.circled().size() == 1) {
    ClassificationReport out = oracle_report(d, seed, cache);
    out.method = Method::Pattern;
    return out;
  }
  ClassificationReport out{d, Method::Pattern, seed, {}, table1_match(d), std::nullopt, std::nullopt};
  if (!circled_adjacent_pairs(d).empty()) out.adjacent_split = adjacent_circle_split(d);
  Verdicts& v = out.verdicts;
  v.prehomogeneous = true;
  const bool hit = out.table1_match.has_value();
  v.q_irreducible = hit;
  v.one_irreducible = hit;
  if (hit) {
    v.regular = true;
    v.n_invariants = 1;
    v.completely_q_reducible = true;
  }
  return out;
}

}  // namespace

ClassificationReport classify(const WeightedDiagram& d, Method mode, std::uint64_t seed, AlgebraCache& cache) {
  if (mode == Method::Pattern) return pattern_report(d, seed, cache);
  if (mode == Method::Oracle) return oracle_report(d, seed, cache);
  ClassificationReport p = pattern_report(d, seed, cache);
  ClassificationReport o = oracle_report(d, seed, cache);
  if (d.circled().size() >= 2 && p.verdicts.q_irreducible != o.verdicts.q_irreducible)
    throw MismatchError(std::move(p), std::move(o));
  o.method = Method::Both;
  o.table1_match = std::move(p.table1_match);
  o.adjacent_split = std::move(p.adjacent_split);
  return o;
}

ClassificationReport classify(const WeightedDiagram& d, Method mode, std::uint64_t seed) {
  AlgebraCache cache;
  return classify(d, mode, seed, cache);
}

std::vector<ClassificationReport> enumerate(const std::vector<SimpleType>& types, Method mode, std::uint64_t seed,
                                            const EnumerateOptions& options, AlgebraCache& cache) {
  std::vector<WeightedDiagram> work;
  for (const auto& t : types) {
    auto ds = all_diagrams(t, options.include_irreducible ? 1 : 2);
    work.insert(work.end(), ds.begin(), ds.end());
    if (mode != Method::Pattern || options.include_irreducible) cache.get(t);
  }
  std::vector<std::optional<ClassificationReport>> results(work.size());
  std::vector<std::exception_ptr> errors(work.size());
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_error{kNone};
  auto worker = [&]() {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      if (i > first_error.load()) continue;
      try {
        results[i] = classify(work[i], mode, seed, cache);
      } catch (...) {
        errors[i] = std::current_exception();
        std::size_t cur = first_error.load();
        while (i < cur && !first_error.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, work.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  std::vector<ClassificationReport> out;
  out.reserve(work.size());
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

}  // namespace pvlab
