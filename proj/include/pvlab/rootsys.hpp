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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pvlab {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple type such as D9 or E6. Construct through make_type to validate.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

bool is_admissible(Family family, int rank);

/// Throws InadmissibleType for an out-of-range rank.
SimpleType make_type(Family family, int rank);

/// Parses "E6", "D9" etc. Throws InadmissibleType on bad input.
SimpleType parse_type(const std::string& text);

/// Integer vector of coefficients in the simple-root basis.
using Root = std::vector<int>;

/// C[i][j] = <alpha_i, alpha_j coroot>, 0-based storage.
using CartanMatrix = std::vector<std::vector<int>>;

CartanMatrix cartan_matrix(SimpleType type);

/// Squared root lengths per node (short roots have squared length 2).
std::vector<int> node_lengths(const CartanMatrix& cartan);

/// A connected set of nodes with its induced type. `order[k]` is the ambient
/// node that plays the role of node k+1 in the standard numbering of `type`.
struct NodeComponent {
  std::vector<int> nodes;
  SimpleType type;
  std::vector<int> order;

  std::string label() const { return type.name(); }
};

/// Identifies the type of a connected node set and a relabelling onto the
/// standard numbering. Node labels are 1-based.
NodeComponent identify_component(const CartanMatrix& cartan, std::vector<int> nodes);

class RootSystem {
 public:
  explicit RootSystem(SimpleType type);

  SimpleType type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }

  /// Cartan integer for 1-based node labels.
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  const CartanMatrix& cartan_matrix() const noexcept { return cartan_; }

  /// Positive roots (height, then lexicographic) followed by their negatives
  /// in the same order.
  const std::vector<Root>& roots() const noexcept { return roots_; }
  std::size_t num_roots() const noexcept { return roots_.size(); }
  std::size_t num_positive() const noexcept { return roots_.size() / 2; }
  const Root& root(std::size_t idx) const { return roots_[idx]; }
  bool is_positive(std::size_t idx) const noexcept { return idx < num_positive(); }
  std::size_t negative_of(std::size_t idx) const noexcept {
    return idx < num_positive() ? idx + num_positive() : idx - num_positive();
  }
  std::optional<std::size_t> index_of(const Root& r) const;
  std::size_t simple_index(int node) const { return simple_index_[node - 1]; }
  int height(std::size_t idx) const;

  /// Squared length of node `node` (1-based).
  int node_length(int node) const { return lengths_[node - 1]; }
  const std::vector<int>& node_lengths() const noexcept { return lengths_; }

  /// Invariant symmetric form (a, b) in the normalization of node_lengths.
  int inner(const Root& a, const Root& b) const;
  int norm(const Root& r) const { return inner(r, r); }

  /// alpha(H_{alpha_j}) = sum_i m_i C[i][j].
  int pairing(const Root& r, int node) const;

  bool adjacent(int i, int j) const { return i != j && cartan_[i - 1][j - 1] != 0; }

  /// Partition of `nodes` into Dynkin-connected pieces with induced types.
  std::vector<NodeComponent> connected_components(std::span<const int> nodes) const;

 private:
  SimpleType type_;
  CartanMatrix cartan_;
  std::vector<int> lengths_;
  std::vector<Root> roots_;
  std::map<Root, std::size_t> index_;
  std::vector<std::size_t> simple_index_;
};

/// Closed-form number of roots for a type.
std::size_t expected_root_count(SimpleType type);

/// Diagram automorphisms as node permutations (perm[i-1] = image of node i),
/// identity included.
std::vector<std::vector<int>> diagram_automorphisms(SimpleType type);

}  // namespace pvlab
