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
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pvlab/chevalley.hpp"
#include "pvlab/diagram.hpp"
#include "pvlab/errors.hpp"
#include "pvlab/linalg.hpp"

namespace pvlab {

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Square operator on V stored by its nonzero entries.
struct SparseOperator {
  std::vector<SparseEntry> entries;

  Vector apply(std::span<const Rational> x, std::size_t dim) const;
  Matrix dense(std::size_t dim) const;
};

/// Named coordinate subspace of V that is invariant under the algebra.
struct LatticeComponent {
  std::string name;
  std::vector<std::size_t> coords;
};

/// A Lie algebra of operators acting on V = Q^dim_v.
struct PVInstance {
  std::string name;
  std::size_t dim_v = 0;
  std::vector<SparseOperator> basis;
  std::vector<std::string> basis_labels;
  /// Invariant symmetric form on algebra coordinates.
  Matrix ambient_form;
  /// Rows are independent characters evaluated on algebra coordinates.
  Matrix abelianization;
  std::vector<LatticeComponent> components;

  std::size_t dim_algebra() const noexcept { return basis.size(); }
};

/// Column i is basis[i] applied to x.
Matrix orbit_matrix(const PVInstance& pv, std::span<const Rational> x);
std::size_t orbit_rank(const PVInstance& pv, std::span<const Rational> x);

struct GenericPoint {
  Vector point;
  std::uint64_t seed = 0;
  std::size_t rank = 0;
  /// Index of the winning candidate among the draws.
  std::size_t candidate = 0;
};

constexpr std::size_t kGenericCandidates = 8;
constexpr int kCoordinateBound = 9;

/// Best of kGenericCandidates seeded draws with coordinates in [-9, 9].
GenericPoint generic_point(const PVInstance& pv, std::uint64_t seed);

/// Exact kernel of a -> (sum a_i M_i) x, as algebra coordinate vectors.
std::vector<Vector> isotropy_algebra(const PVInstance& pv, std::span<const Rational> x);

struct ReductivityVerdict {
  bool reductive = false;
  Rational form_determinant;
};

/// Nondegeneracy of the ambient form on the span of `subalgebra`.
ReductivityVerdict is_reductive(const PVInstance& pv, const std::vector<Vector>& subalgebra);

struct RegularityReport {
  bool prehomogeneous = false;
  GenericPoint generic;
  std::size_t orbit_rank = 0;
  std::size_t isotropy_dim = 0;
  std::vector<Vector> isotropy_basis;
  bool reductive = false;
  Rational form_determinant;
  bool regular = false;
  std::size_t n_fundamental_invariants = 0;
};

RegularityReport is_regular(const PVInstance& pv, std::uint64_t seed);

/// Characters of the algebra minus those seen by the isotropy at x.
/// Throws NonGenericPoint when the orbit rank at x is below `certified_rank`.
std::size_t count_fundamental_invariants(const PVInstance& pv, std::span<const Rational> x,
                                         std::size_t certified_rank);
std::size_t count_fundamental_invariants(const PVInstance& pv, std::span<const Rational> x);

/// Same algebra on the sum of the chosen lattice components. Throws EmptySubset.
PVInstance restrict(const PVInstance& pv, std::vector<std::size_t> gamma);

/// Regularity of restrictions to component subsets, memoized by bit mask.
class SubsetOracle {
 public:
  SubsetOracle(const PVInstance& pv, std::uint64_t seed);

  std::size_t num_components() const noexcept { return pv_->components.size(); }
  std::uint32_t full_mask() const noexcept { return (1u << num_components()) - 1; }

  const RegularityReport& report(std::uint32_t mask);
  bool regular(std::uint32_t mask) { return report(mask).regular; }
  /// First (by size, then lexicographic) nonempty proper submask that is regular.
  std::optional<std::uint32_t> regular_proper_submask(std::uint32_t mask);
  bool q_irreducible(std::uint32_t mask);
  /// Partition of mask into Q-irreducible blocks, if one exists.
  std::optional<std::vector<std::uint32_t>> q_partition(std::uint32_t mask);

 private:
  const PVInstance* pv_;
  std::uint64_t seed_;
  std::vector<std::optional<RegularityReport>> cache_;
};

std::vector<std::size_t> mask_to_indices(std::uint32_t mask);
std::uint32_t indices_to_mask(const std::vector<std::size_t>& idx);

struct QIrreducibility {
  bool q_irreducible = false;
  RegularityReport full;
  /// Component indices of a proper subspace with a regular restriction.
  std::optional<std::vector<std::size_t>> witness;
};

QIrreducibility q_irreducible(const PVInstance& pv, std::uint64_t seed);

struct FiltrationStage {
  std::vector<std::size_t> components;
  std::vector<std::string> names;
  std::size_t dim = 0;
  std::size_t algebra_dim = 0;
  std::size_t isotropy_dim = 0;
  bool reductive = false;
  Rational form_determinant;
};

struct FiltrationReport {
  std::uint64_t seed = 0;
  std::vector<FiltrationStage> stages;
  bool complete = false;
};

/// Raised when no lattice sum at some stage is regular; carries the stages found.
class PartialFiltration : public Error {
 public:
  explicit PartialFiltration(FiltrationReport partial)
      : Error("PartialFiltration", "no regular lattice sum at stage " + std::to_string(partial.stages.size() + 1)),
        report_(std::move(partial)) {}
  const FiltrationReport& report() const noexcept { return report_; }

 private:
  FiltrationReport report_;
};

/// Throws NotRegular if pv is not regular.
FiltrationReport decompose_filtration(const PVInstance& pv, std::uint64_t seed);

/// Homogeneous polynomial on V given as a black box.
struct PolynomialInvariant {
  std::string description;
  int degree = 0;
  std::function<Rational(std::span<const Rational>)> evaluate;
};

/// Draws a group element and returns its action on V.
using GroupSampler = std::function<Matrix(std::mt19937_64&)>;

struct InvariantOptions {
  std::size_t sample_points = 20;
  std::size_t group_samples = 6;
  /// Throw DegenerateInvariant when the Hessian vanishes at every tried point.
  bool require_nondegenerate = false;
};

struct InvariantReport {
  std::string description;
  bool homogeneous = false;
  bool relatively_invariant = false;
  /// d log f along each basis operator.
  std::vector<Rational> infinitesimal_character;
  std::size_t points_checked = 0;
  std::size_t group_elements_checked = 0;
  bool hessian_nonzero = false;
  Rational hessian_determinant;
  std::size_t dlog_rank = 0;
  bool dlog_full_rank = false;
};

/// Throws NotRelativeInvariant naming the failing direction.
InvariantReport verify_invariant(const PVInstance& pv, const GroupSampler* sampler, const PolynomialInvariant& f,
                                 std::uint64_t seed, const InvariantOptions& options = {});

/// Exact first and second derivatives of a black-box polynomial.
Vector gradient(const PolynomialInvariant& f, std::span<const Rational> x);
Matrix hessian(const PolynomialInvariant& f, std::span<const Rational> x);

/// f^k as a black box.
PolynomialInvariant power(const PolynomialInvariant& f, int k);

/// Product of invariants on the same space.
PolynomialInvariant product(const std::vector<PolynomialInvariant>& factors);

struct SummandInvariant {
  PolynomialInvariant f;
  std::size_t dim = 0;
};

struct IdentitySample {
  Vector point;
  Rational lhs;
  Rational rhs;
};

struct IdentityReport {
  int degree = 0;
  std::size_t dim = 0;
  std::vector<IdentitySample> samples;
  std::size_t rejected = 0;
};

/// det Hess f = (1 - r) det d(grad log f) f^k for the product of the summand
/// invariants, checked exactly at `points` random rational points. Throws
/// IdentityViolation with both sides on failure.
IdentityReport hessian_product_identity_check(std::span<const SummandInvariant> summands, std::uint64_t seed,
                                              std::size_t points = 5);

/// Parabolic instance (l_theta, d_1(theta)); components ordered like the circled nodes.
PVInstance build_parabolic_pv(const WeightedDiagram& d, const ChevalleyAlgebra& alg);

}  // namespace pvlab
