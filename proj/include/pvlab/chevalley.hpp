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
#include <utility>
#include <vector>

#include "pvlab/linalg.hpp"
#include "pvlab/rootsys.hpp"

namespace pvlab {

/// Sparse integer combination of basis elements: (basis index, coefficient).
using SparseTerm = std::pair<std::size_t, int>;

/// Simple Lie algebra in a Chevalley basis [h_1..h_n, e_root for each root].
/// Root order follows RootSystem::roots().
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootSystem rs);

  const RootSystem& root_system() const noexcept { return rs_; }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(rs_.rank()); }
  std::size_t dim() const noexcept { return rank() + rs_.num_roots(); }

  std::size_t h_index(int node) const { return static_cast<std::size_t>(node - 1); }
  std::size_t e_index(std::size_t root_idx) const { return rank() + root_idx; }
  bool is_cartan(std::size_t basis_idx) const { return basis_idx < rank(); }

  /// N_{a,b} for root indices; 0 when a+b is not a root.
  int structure_constant(std::size_t a, std::size_t b) const { return n_[a * rs_.num_roots() + b]; }

  /// Root index of root(a)+root(b), or -1.
  long root_sum(std::size_t a, std::size_t b) const { return sum_[a * rs_.num_roots() + b]; }

  /// Coefficients of h_gamma = [e_gamma, e_-gamma] on h_1..h_n.
  const std::vector<int>& coroot(std::size_t root_idx) const { return coroots_[root_idx]; }

  std::vector<SparseTerm> bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  Matrix adjoint_matrix(const Vector& x) const;
  Matrix adjoint_basis_matrix(std::size_t i) const;

  Rational killing_form(const Vector& x, const Vector& y) const;

  /// Killing form on basis pairs.
  const Matrix& killing_matrix() const noexcept { return killing_; }

 private:
  void compute_structure_constants();
  int any_pair(std::size_t a, std::size_t b) const;
  void compute_killing();

  RootSystem rs_;
  std::vector<int> n_;
  std::vector<long> sum_;
  std::vector<std::vector<int>> coroots_;
  Matrix killing_;
};

/// Basis vector e_i of length n.
Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace pvlab
