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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pvlab/chevalley.hpp"
#include "pvlab/diagram.hpp"
#include "pvlab/errors.hpp"
#include "pvlab/pvcore.hpp"

namespace pvlab {

enum class Table1Row { A, B, C, D1, D2, D3, E6, E7, E8 };

std::string to_string(Table1Row row);

/// A row of the table of non-irreducible Q-irreducible parabolic PVs with its
/// block sizes, realized in canonical orientation.
struct Table1Family {
  Table1Row row;
  /// p1, p2, p3 as applicable; empty for the exceptional rows.
  std::vector<int> params;
  WeightedDiagram diagram;
};

/// Canonical diagram of a row; throws InvalidParameter when the parameters
/// violate the row's constraints.
WeightedDiagram realize(Table1Row row, const std::vector<int>& params);

/// Row matching d up to a diagram automorphism, if any.
std::optional<Table1Family> table1_match(const WeightedDiagram& d);

/// Every table instance of the given type, in diagram order.
std::vector<Table1Family> table1_instances(SimpleType type);

/// Split at the first pair of adjacent circled nodes.
struct AdjacentSplit {
  int alpha1 = 0;
  int alpha2 = 0;
  /// Component of the nodes minus alpha2 containing alpha1, and symmetrically.
  std::vector<int> psi1;
  std::vector<int> psi2;
  /// Circled nodes in each side.
  std::vector<int> circled1;
  std::vector<int> circled2;
};

/// Throws NoAdjacentCircles.
AdjacentSplit adjacent_circle_split(const WeightedDiagram& d);

struct SplitRegularity {
  AdjacentSplit split;
  bool full = false;
  bool part1 = false;
  bool part2 = false;
};

/// Regularity of the whole level-one space and of both sides of the split.
SplitRegularity split_regularity(const WeightedDiagram& d, const ChevalleyAlgebra& alg, std::uint64_t seed);

enum class Method { Pattern, Oracle, Both };

std::string to_string(Method m);
/// Throws InvalidParameter.
Method parse_method(const std::string& s);

struct Verdicts {
  std::optional<bool> prehomogeneous;
  std::optional<bool> regular;
  std::optional<std::size_t> n_invariants;
  std::optional<bool> one_irreducible;
  std::optional<bool> q_irreducible;
  std::optional<bool> completely_q_reducible;
};

struct NonReductiveWitness {
  std::size_t isotropy_dim = 0;
  Rational form_determinant;
};

struct OracleWitness {
  std::size_t dim_v = 0;
  std::size_t dim_algebra = 0;
  std::size_t n_components = 0;
  Vector generic_point;
  std::size_t orbit_rank = 0;
  std::size_t isotropy_dim = 0;
  /// Circled nodes whose components span a proper regular subspace.
  std::optional<std::vector<int>> regular_subspace;
  std::optional<NonReductiveWitness> non_reductive;
  /// Q-irreducible blocks, as circled nodes, when completely Q-reducible.
  std::optional<std::vector<std::vector<int>>> q_partition;
};

struct ClassificationReport {
  WeightedDiagram diagram;
  Method method = Method::Oracle;
  std::uint64_t seed = 0;
  Verdicts verdicts;
  std::optional<Table1Family> table1_match;
  std::optional<AdjacentSplit> adjacent_split;
  std::optional<OracleWitness> oracle;
};

/// Pattern and oracle disagree on Q-irreducibility.
class MismatchError : public Error {
 public:
  MismatchError(ClassificationReport pattern, ClassificationReport oracle);
  const ClassificationReport& pattern() const noexcept { return pattern_; }
  const ClassificationReport& oracle() const noexcept { return oracle_; }

 private:
  ClassificationReport pattern_;
  ClassificationReport oracle_;
};

/// Chevalley algebras built on first use and shared afterwards.
class AlgebraCache {
 public:
  const ChevalleyAlgebra& get(SimpleType type);

 private:
  std::mutex mutex_;
  std::map<std::string, std::unique_ptr<ChevalleyAlgebra>> algebras_;
};

ClassificationReport classify(const WeightedDiagram& d, Method mode, std::uint64_t seed, AlgebraCache& cache);
ClassificationReport classify(const WeightedDiagram& d, Method mode, std::uint64_t seed);

struct EnumerateOptions {
  bool include_irreducible = false;
  std::size_t jobs = 1;
};

/// One report per diagram, types in the given order, diagrams in
/// all_diagrams order. In Both mode the first mismatch in that order is thrown.
std::vector<ClassificationReport> enumerate(const std::vector<SimpleType>& types, Method mode, std::uint64_t seed,
                                            const EnumerateOptions& options, AlgebraCache& cache);

}  // namespace pvlab
