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
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pvlab/linalg.hpp"
#include "pvlab/pvcore.hpp"

namespace pvlab {

enum class FactorKind { GL, SL, SO, Torus };

/// One factor of a product of matrix groups, acting through n x n matrices.
struct GroupFactor {
  FactorKind kind;
  std::size_t n;
  std::string name;

  std::size_t dim() const;
};

enum class BlockShape { General, Symmetric, Skew };

/// How a factor element g enters an action term.
enum class Twist { Identity, Inverse, Transpose, InverseTranspose };

/// Left: X -> T X, Right: X -> X T, Scalar: X -> T(0,0) X for a 1 x 1 factor.
enum class Side { Left, Right, Scalar };

struct ActionTerm {
  std::size_t factor;
  Side side;
  Twist twist;
};

struct MatrixBlock {
  std::string name;
  std::size_t rows;
  std::size_t cols;
  BlockShape shape = BlockShape::General;
  std::vector<ActionTerm> terms;

  std::size_t dim() const;
};

/// Product of matrix groups acting on a sum of matrix spaces.
class MatrixModel {
 public:
  MatrixModel(std::vector<GroupFactor> factors, std::vector<MatrixBlock> blocks);

  const std::vector<GroupFactor>& factors() const noexcept { return factors_; }
  const std::vector<MatrixBlock>& blocks() const noexcept { return blocks_; }
  std::size_t dim_v() const noexcept { return dim_v_; }
  std::size_t dim_algebra() const;
  std::size_t offset(std::size_t block) const { return offsets_.at(block); }

  /// The block's matrix read off a point of V.
  Matrix unpack(std::span<const Rational> x, std::size_t block) const;
  /// Point of V from one matrix per block.
  Vector pack(const std::vector<Matrix>& blocks) const;

  /// Lie algebra operators with trace forms and characters.
  PVInstance instance(std::string name) const;
  /// Matrix on V of the group element with the given factor components.
  Matrix act(const std::vector<Matrix>& elements) const;
  /// Random products of unipotent, diagonal and Cayley elements.
  GroupSampler sampler() const;

 private:
  Matrix apply(const std::vector<Matrix>& elements, std::size_t block, const Matrix& x) const;

  std::vector<GroupFactor> factors_;
  std::vector<MatrixBlock> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_v_ = 0;
};

/// Regularity expected for the restriction to some components.
struct RestrictionExpectation {
  std::vector<std::size_t> components;
  bool regular = false;
};

struct ExpectedCertificates {
  std::optional<bool> prehomogeneous;
  std::optional<bool> regular;
  std::optional<bool> q_irreducible;
  std::optional<std::size_t> invariant_count;
  std::optional<std::size_t> generic_isotropy_dim;
  std::vector<RestrictionExpectation> restrictions;
  /// Component names per filtration stage.
  std::vector<std::vector<std::string>> filtration;
  /// Parabolic diagram with the same certificates, in compact notation.
  std::optional<std::string> parabolic_twin;
  /// Where each expectation comes from.
  std::vector<std::string> provenance;
};

struct ReferencePoint {
  std::string label;
  Vector point;
  std::optional<std::size_t> isotropy_dim;
};

struct ModelSpec {
  std::string name;
  std::string family;
  std::map<std::string, int> params;
  MatrixModel model;
  PVInstance instance;
  std::vector<PolynomialInvariant> known_invariants;
  ExpectedCertificates expected;
  std::vector<ReferencePoint> reference_points;

  GroupSampler sampler() const { return model.sampler(); }
};

/// Pfaffian by expansion along the first row. Throws NotSkew, OddSize.
Rational pfaffian(const Matrix& z);

/// gl1 + sl_n + gl1 on C^n + C^n, v -> x g^-t v, w -> y^-1 g w. Invariant tv.w.
ModelSpec bilinear_pairing(int n);
/// gl_n + gl1 on S(n) + C^n, X -> g X tg, v -> a g^-t v.
ModelSpec symmetric_vector(int n);
/// so(n+1) + gl(n) + ... + gl(1) on M(n+1,n) + ... + M(2,1).
ModelSpec descending_chains(int n);
/// GL(p) x GL(q) x GL(r) on M(q,p) + M(r,q), (X, Y) -> (g2 X g1^-1, g3 Y g2^-1).
ModelSpec gl_triple_chain(int p, int q, int r);
/// GL(p) x GL(r) on M(r,p) + Skew(r), (X, Y) -> (g2^-t X g1^-1, g2 Y tg2), r odd.
ModelSpec skew_pair(int p, int r);
/// GL(p) x SL(q) x D_2 on M(q,p) + M(2,q), (X, Y) -> (g2 X g1^-1, d Y g2^-1).
ModelSpec torus_chain(int p, int q);
/// GL(5) x C* on M(5,1) + Skew(5), (X, Y) -> (a g X, g Y tg).
ModelSpec e6_vector_skew();
/// GL(n) x C* on C^n + Skew(n), n odd, bordered Pfaffian invariant.
ModelSpec bordered_skew(int n);
/// GL(n) x GL(n-1) on M(n,n-1) + M(n,1), invariant det[X|Y].
ModelSpec column_completion(int n);
/// Both extension families that exist for n.
std::vector<ModelSpec> extension_families(int n);

struct ModelFamilyInfo {
  std::string family;
  std::vector<std::string> params;
  std::string summary;
};

const std::vector<ModelFamilyInfo>& model_families();

/// Builds a model from "family" or "family:k=v,k=v". Throws UnknownModel, InvalidParameter.
ModelSpec make_model(const std::string& text);

struct ModelCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct SeedVerdict {
  std::uint64_t seed = 0;
  bool prehomogeneous = false;
  bool regular = false;
  bool q_irreducible = false;
  std::size_t n_invariants = 0;
  std::size_t isotropy_dim = 0;
  std::size_t orbit_rank = 0;
  Rational form_determinant;
};

struct InvariantCheck {
  std::string description;
  int degree = 0;
  std::optional<InvariantReport> report;
  std::string error;
};

struct ModelVerification {
  std::string model;
  std::vector<SeedVerdict> seeds;
  std::vector<InvariantCheck> invariants;
  std::vector<ModelCheck> checks;
  bool passed = false;
};

/// Compares the oracle with every expected certificate over `n_seeds`
/// consecutive seeds starting at `seed`.
ModelVerification verify_model(const ModelSpec& spec, std::uint64_t seed, std::size_t n_seeds = 3);

}  // namespace pvlab
