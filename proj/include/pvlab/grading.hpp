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
#include <vector>

#include "pvlab/diagram.hpp"
#include "pvlab/linalg.hpp"
#include "pvlab/rootsys.hpp"

namespace pvlab {

struct Grading {
  WeightedDiagram diagram;
  /// Grading element on the coroot basis h_1..h_n.
  Vector h_theta;
  /// Level of each root, indexed like RootSystem::roots().
  std::vector<int> degrees;
  /// Only levels that occur.
  std::map<int, std::size_t> dim_by_level;
};

Grading compute_grading(const WeightedDiagram& d, const RootSystem& rs);
Grading compute_grading(const WeightedDiagram& d);

/// Irreducible piece V_alpha of the level-one space.
struct Component {
  int alpha = 0;
  /// Root indices spanning the piece, in root-system order.
  std::vector<std::size_t> roots;
  std::size_t dim = 0;
  /// Uncircled neighbours of alpha.
  std::vector<int> j_alpha;
  /// Cartan integer alpha(H_beta) per neighbour beta (negative Borel convention).
  std::map<int, int> highest_weight;
  /// Value of the bond-length rule per neighbour; agrees with highest_weight.
  std::map<int, int> rules;
};

std::vector<Component> components(const WeightedDiagram& d, const RootSystem& rs);
std::vector<Component> components(const WeightedDiagram& d);

/// Bond-length rule for a circled alpha and an adjacent uncircled beta:
/// -1 when |alpha| <= |beta|, otherwise minus the bond multiplicity.
/// Throws NotAdjacent, NotCircled.
int rules_R(const WeightedDiagram& d, int alpha, int beta);

}  // namespace pvlab
