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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pvlab/rootsys.hpp"

namespace pvlab {

/// Dynkin diagram of a simple type with a nonempty set of circled nodes.
/// Node labels are 1-based.
class WeightedDiagram {
 public:
  /// Validates indices; throws IndexOutOfRange, DuplicateIndex, EmptyCircledSet.
  WeightedDiagram(SimpleType type, std::vector<int> circled);

  SimpleType type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  const std::vector<int>& circled() const noexcept { return circled_; }
  const std::vector<int>& theta() const noexcept { return theta_; }
  bool is_circled(int node) const;

  friend bool operator==(const WeightedDiagram&, const WeightedDiagram&) = default;

 private:
  SimpleType type_;
  std::vector<int> circled_;
  std::vector<int> theta_;
};

/// Reads `FAMILY RANK '[' idx (',' idx)* ']'`, whitespace allowed between tokens.
WeightedDiagram parse_diagram(std::string_view text);

/// Canonical form such as "D9[2,3,5,8]".
std::string render_compact(const WeightedDiagram& d);

/// Multi-line picture; circled nodes are "(o)".
std::string render_ascii(const WeightedDiagram& d);

/// Image of d under a node permutation (perm[i-1] = image of node i).
WeightedDiagram permute(const WeightedDiagram& d, const std::vector<int>& perm);

struct SubdiagramPiece {
  NodeComponent segment;
  WeightedDiagram diagram;
};

struct Subdiagram {
  std::vector<int> gamma;
  std::vector<int> psi_gamma;
  std::vector<int> theta_gamma;
  std::vector<SubdiagramPiece> pieces;
};

/// Throws NotCircled if gamma holds an uncircled node, EmptySubset if empty.
Subdiagram subdiagram(const WeightedDiagram& d, std::vector<int> gamma);

/// Connected component of theta + {alpha} containing alpha.
std::vector<int> psi_of(const WeightedDiagram& d, int alpha);

std::vector<std::pair<int, int>> circled_adjacent_pairs(const WeightedDiagram& d);

/// All diagrams of a type with at least `min_circled` circled nodes, ordered
/// by number of circles then lexicographically.
std::vector<WeightedDiagram> all_diagrams(SimpleType type, int min_circled);

}  // namespace pvlab
