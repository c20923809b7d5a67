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

#include "pvlab/pvcore.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "pvlab/grading.hpp"

namespace pvlab {

Vector SparseOperator::apply(std::span<const Rational> x, std::size_t dim) const {
  Vector out(dim);
  Rational t;
  for (const auto& e : entries) {
    if (sgn(x[e.col]) == 0) continue;
    t = e.value * x[e.col];
    out[e.row] += t;
  }
  return out;
}

Matrix SparseOperator::dense(std::size_t dim) const {
  Matrix m(dim, dim);
  for (const auto& e : entries) m(e.row, e.col) += e.value;
  return m;
}

Matrix orbit_matrix(const PVInstance& pv, std::span<const Rational> x) {
  Matrix m(pv.dim_v, pv.dim_algebra());
  Rational t;
  for (std::size_t i = 0; i < pv.basis.size(); ++i)
    for (const auto& e : pv.basis[i].entries) {
      if (sgn(x[e.col]) == 0) continue;
      t = e.value * x[e.col];
      m(e.row, i) += t;
    }
  return m;
}

std::size_t orbit_rank(const PVInstance& pv, std::span<const Rational> x) { return rank(orbit_matrix(pv, x)); }

GenericPoint generic_point(const PVInstance& pv, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const std::size_t ceiling = std::min(pv.dim_v, pv.dim_algebra());
  GenericPoint best;
  best.seed = seed;
  bool have = false;
  for (std::size_t c = 0; c < kGenericCandidates; ++c) {
    Vector x(pv.dim_v);
    for (auto& xi : x) xi = static_cast<long>(gen() % (2 * kCoordinateBound + 1)) - kCoordinateBound;
    // Later candidates cannot beat a draw that already reaches the ceiling.
    if (have && best.rank == ceiling) continue;
    const std::size_t r = orbit_rank(pv, x);
    if (!have || r > best.rank) {
      best.point = std::move(x);
      best.rank = r;
      best.candidate = c;
      have = true;
    }
  }
  return best;
}

std::vector<Vector> isotropy_algebra(const PVInstance& pv, std::span<const Rational> x) {
  return kernel(orbit_matrix(pv, x));
}

namespace {

Matrix gram(const Matrix& form, const std::vector<Vector>& vs) {
  std::vector<Vector> fv;
  fv.reserve(vs.size());
  for (const auto& v : vs) fv.push_back(form * std::span<const Rational>(v));
  Matrix g(vs.size(), vs.size());
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a; b < vs.size(); ++b) {
      g(a, b) = dot(vs[a], fv[b]);
      g(b, a) = g(a, b);
    }
  return g;
}

std::size_t character_rank(const PVInstance& pv, const std::vector<Vector>& vs) {
  if (vs.empty() || pv.abelianization.rows() == 0) return 0;
  std::vector<Vector> images;
  for (const auto& v : vs) images.push_back(pv.abelianization * std::span<const Rational>(v));
  return rank(Matrix::from_columns(images, pv.abelianization.rows()));
}

}  // namespace

ReductivityVerdict is_reductive(const PVInstance& pv, const std::vector<Vector>& subalgebra) {
  ReductivityVerdict v;
  v.form_determinant = determinant(gram(pv.ambient_form, subalgebra));
  v.reductive = sgn(v.form_determinant) != 0;
  return v;
}

std::size_t count_fundamental_invariants(const PVInstance& pv, std::span<const Rational> x,
                                         std::size_t certified_rank) {
  const Matrix om = orbit_matrix(pv, x);
  if (rank(om) < certified_rank)
    throw NonGenericPoint("orbit rank at the point is below the certified maximum " + std::to_string(certified_rank));
  const auto iso = kernel(om);
  const std::size_t total = pv.abelianization.rows() == 0 ? 0 : rank(pv.abelianization);
  return total - character_rank(pv, iso);
}

std::size_t count_fundamental_invariants(const PVInstance& pv, std::span<const Rational> x) {
  return count_fundamental_invariants(pv, x, generic_point(pv, 0).rank);
}

RegularityReport is_regular(const PVInstance& pv, std::uint64_t seed) {
  RegularityReport r;
  r.generic = generic_point(pv, seed);
  r.orbit_rank = r.generic.rank;
  r.prehomogeneous = r.orbit_rank == pv.dim_v;
  r.isotropy_basis = isotropy_algebra(pv, r.generic.point);
  r.isotropy_dim = r.isotropy_basis.size();
  const auto red = is_reductive(pv, r.isotropy_basis);
  r.reductive = red.reductive;
  r.form_determinant = red.form_determinant;
  r.regular = r.prehomogeneous && r.reductive;
  if (r.prehomogeneous) {
    const std::size_t total = pv.abelianization.rows() == 0 ? 0 : rank(pv.abelianization);
    r.n_fundamental_invariants = total - character_rank(pv, r.isotropy_basis);
  }
  return r;
}

PVInstance restrict(const PVInstance& pv, std::vector<std::size_t> gamma) {
  if (gamma.empty()) throw EmptySubset("restriction needs at least one component");
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> remap(pv.dim_v, kNone);
  PVInstance out;
  out.name = pv.name;
  std::size_t next = 0;
  for (std::size_t g : gamma) {
    if (g >= pv.components.size()) throw IndexOutOfRange("component index " + std::to_string(g));
    LatticeComponent c{pv.components[g].name, {}};
    for (std::size_t coord : pv.components[g].coords) {
      remap[coord] = next;
      c.coords.push_back(next++);
    }
    out.components.push_back(std::move(c));
  }
  out.dim_v = next;
  out.basis_labels = pv.basis_labels;
  out.ambient_form = pv.ambient_form;
  out.abelianization = pv.abelianization;
  for (const auto& op : pv.basis) {
    SparseOperator r;
    for (const auto& e : op.entries) {
      if (remap[e.col] == kNone) continue;
      if (remap[e.row] == kNone) throw std::logic_error("lattice component is not invariant");
      r.entries.push_back({remap[e.row], remap[e.col], e.value});
    }
    out.basis.push_back(std::move(r));
  }
  return out;
}

std::vector<std::size_t> mask_to_indices(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

std::uint32_t indices_to_mask(const std::vector<std::size_t>& idx) {
  std::uint32_t m = 0;
  for (auto i : idx) m |= 1u << i;
  return m;
}

SubsetOracle::SubsetOracle(const PVInstance& pv, std::uint64_t seed) : pv_(&pv), seed_(seed) {
  if (pv.components.size() > 20) throw std::invalid_argument("too many lattice components");
  cache_.resize(std::size_t{1} << pv.components.size());
}

const RegularityReport& SubsetOracle::report(std::uint32_t mask) {
  auto& slot = cache_.at(mask);
  if (!slot) {
    if (mask == full_mask()) slot = is_regular(*pv_, seed_);
    else slot = is_regular(restrict(*pv_, mask_to_indices(mask)), seed_);
  }
  return *slot;
}

namespace {

std::vector<std::uint32_t> proper_submasks_ordered(std::uint32_t mask) {
  std::vector<std::uint32_t> subs;
  for (std::uint32_t s = (mask - 1) & mask; s != 0; s = (s - 1) & mask) subs.push_back(s);
  std::sort(subs.begin(), subs.end(), [](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return mask_to_indices(a) < mask_to_indices(b);
  });
  return subs;
}

}  // namespace

std::optional<std::uint32_t> SubsetOracle::regular_proper_submask(std::uint32_t mask) {
  for (std::uint32_t s : proper_submasks_ordered(mask))
    if (regular(s)) return s;
  return std::nullopt;
}

bool SubsetOracle::q_irreducible(std::uint32_t mask) { return regular(mask) && !regular_proper_submask(mask); }

std::optional<std::vector<std::uint32_t>> SubsetOracle::q_partition(std::uint32_t mask) {
  if (mask == 0) return std::vector<std::uint32_t>{};
  const std::uint32_t low = mask & (~mask + 1);
  for (std::uint32_t s = mask; s != 0; s = (s - 1) & mask) {
    if (!(s & low)) continue;
    if (!q_irreducible(s)) continue;
    if (auto rest = q_partition(mask ^ s)) {
      rest->insert(rest->begin(), s);
      return rest;
    }
  }
  return std::nullopt;
}

QIrreducibility q_irreducible(const PVInstance& pv, std::uint64_t seed) {
  SubsetOracle oracle(pv, seed);
  QIrreducibility out;
  out.full = oracle.report(oracle.full_mask());
  if (!out.full.regular) return out;
  if (auto w = oracle.regular_proper_submask(oracle.full_mask())) {
    out.witness = mask_to_indices(*w);
    return out;
  }
  out.q_irreducible = true;
  return out;
}

namespace {

// Algebra spanned by `combos` (coordinates in pv's algebra) acting on the
// complement of `taken` components.
PVInstance isotropy_stage(const PVInstance& pv, const std::vector<Vector>& combos, std::uint32_t taken) {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < pv.components.size(); ++i)
    if (!(taken & (1u << i))) rest.push_back(i);
  PVInstance sub = restrict(pv, rest);
  PVInstance out;
  out.name = pv.name;
  out.dim_v = sub.dim_v;
  out.components = sub.components;
  for (std::size_t k = 0; k < combos.size(); ++k) {
    std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
    for (std::size_t i = 0; i < combos[k].size(); ++i) {
      if (sgn(combos[k][i]) == 0) continue;
      for (const auto& e : sub.basis[i].entries) acc[{e.row, e.col}] += combos[k][i] * e.value;
    }
    SparseOperator op;
    for (auto& [rc, v] : acc)
      if (sgn(v) != 0) op.entries.push_back({rc.first, rc.second, v});
    out.basis.push_back(std::move(op));
    out.basis_labels.push_back("k" + std::to_string(k + 1));
  }
  out.ambient_form = gram(pv.ambient_form, combos);
  out.abelianization = Matrix(pv.abelianization.rows(), combos.size());
  for (std::size_t k = 0; k < combos.size(); ++k) {
    const Vector img = pv.abelianization * std::span<const Rational>(combos[k]);
    for (std::size_t r = 0; r < img.size(); ++r) out.abelianization(r, k) = img[r];
  }
  return out;
}

}  // namespace

FiltrationReport decompose_filtration(const PVInstance& pv, std::uint64_t seed) {
  if (!is_regular(pv, seed).regular) throw NotRegular(pv.name + " is not regular");
  FiltrationReport report;
  report.seed = seed;
  PVInstance cur = pv;
  // Original component index of each component of `cur`.
  std::vector<std::size_t> origin(pv.components.size());
  for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;

  while (!cur.components.empty()) {
    SubsetOracle oracle(cur, seed);
    std::vector<std::uint32_t> good;
    for (std::uint32_t m = 1; m <= oracle.full_mask(); ++m)
      if (oracle.regular(m) && oracle.q_partition(m)) good.push_back(m);
    std::vector<std::uint32_t> maximal;
    for (auto m : good) {
      bool contained = false;
      for (auto other : good)
        if (other != m && (other & m) == m) contained = true;
      if (!contained) maximal.push_back(m);
    }
    if (maximal.empty()) throw PartialFiltration(report);
    auto dim_of = [&](std::uint32_t m) {
      std::size_t d = 0;
      for (auto i : mask_to_indices(m)) d += cur.components[i].coords.size();
      return d;
    };
    std::uint32_t pick = maximal.front();
    for (auto m : maximal) {
      if (dim_of(m) > dim_of(pick) || (dim_of(m) == dim_of(pick) && mask_to_indices(m) < mask_to_indices(pick)))
        pick = m;
    }
    const RegularityReport& rep = oracle.report(pick);
    FiltrationStage stage;
    for (auto i : mask_to_indices(pick)) {
      stage.components.push_back(origin[i]);
      stage.names.push_back(cur.components[i].name);
    }
    stage.dim = dim_of(pick);
    stage.algebra_dim = cur.dim_algebra();
    stage.isotropy_dim = rep.isotropy_dim;
    stage.reductive = rep.reductive;
    stage.form_determinant = rep.form_determinant;
    report.stages.push_back(stage);
    if (pick == oracle.full_mask()) break;
    std::vector<std::size_t> next_origin;
    for (std::size_t i = 0; i < cur.components.size(); ++i)
      if (!(pick & (1u << i))) next_origin.push_back(origin[i]);
    cur = isotropy_stage(cur, rep.isotropy_basis, pick);
    origin = std::move(next_origin);
  }
  report.complete = true;
  return report;
}

namespace {

struct DerivativeWeights {
  std::vector<Rational> first;
  std::vector<Rational> second;
};

// Weights on nodes t = 0..m that return g'(0) and g''(0) for polynomials of
// degree at most m.
const DerivativeWeights& derivative_weights(int degree) {
  static thread_local std::map<int, DerivativeWeights> cache;
  const int m = std::max(degree, 2);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  Matrix v(m + 1, m + 1);
  for (int k = 0; k <= m; ++k) {
    Rational p = 1;
    for (int j = 0; j <= m; ++j) {
      v(k, j) = p;
      p *= k;
    }
  }
  const Matrix inv = *inverse(v);
  DerivativeWeights w;
  for (int k = 0; k <= m; ++k) {
    w.first.push_back(inv(1, k));
    w.second.push_back(2 * inv(2, k));
  }
  return cache.emplace(m, std::move(w)).first->second;
}

Rational directional(const PolynomialInvariant& f, std::span<const Rational> x, std::span<const Rational> u,
                     bool second) {
  const auto& w = derivative_weights(f.degree);
  const auto& weights = second ? w.second : w.first;
  Rational acc, t;
  Vector y(x.begin(), x.end());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (sgn(weights[k]) == 0) continue;
    for (std::size_t i = 0; i < y.size(); ++i) {
      t = u[i] * static_cast<long>(k);
      y[i] = x[i] + t;
    }
    t = weights[k] * f.evaluate(y);
    acc += t;
  }
  return acc;
}

Vector random_integer_point(std::mt19937_64& gen, std::size_t n) {
  Vector x(n);
  for (auto& xi : x) xi = static_cast<long>(gen() % (2 * kCoordinateBound + 1)) - kCoordinateBound;
  return x;
}

Vector random_rational_point(std::mt19937_64& gen, std::size_t n) {
  Vector x(n);
  for (auto& xi : x) {
    const long num = static_cast<long>(gen() % (2 * kCoordinateBound + 1)) - kCoordinateBound;
    const long den = static_cast<long>(gen() % 5) + 1;
    xi = Rational(num, den);
    xi.canonicalize();
  }
  return x;
}

}  // namespace

Vector gradient(const PolynomialInvariant& f, std::span<const Rational> x) {
  Vector g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = directional(f, x, unit_vector(x.size(), i), false);
  return g;
}

Matrix hessian(const PolynomialInvariant& f, std::span<const Rational> x) {
  const std::size_t n = x.size();
  Matrix h(n, n);
  std::vector<Rational> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = directional(f, x, unit_vector(n, i), true);
    h(i, i) = diag[i];
  }
  Vector u(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      u.assign(n, Rational(0));
      u[i] = 1;
      u[j] = 1;
      // Polarization: d_i d_j f = (D_{e_i+e_j}^2 f - D_{e_i}^2 f - D_{e_j}^2 f) / 2.
      Rational v = directional(f, x, u, true) - diag[i] - diag[j];
      v /= 2;
      h(i, j) = v;
      h(j, i) = v;
    }
  return h;
}

PolynomialInvariant power(const PolynomialInvariant& f, int k) {
  PolynomialInvariant out;
  out.description = "(" + f.description + ")^" + std::to_string(k);
  out.degree = f.degree * k;
  out.evaluate = [f, k](std::span<const Rational> x) {
    Rational v = f.evaluate(x);
    Rational p = 1;
    for (int i = 0; i < k; ++i) p *= v;
    return p;
  };
  return out;
}

PolynomialInvariant product(const std::vector<PolynomialInvariant>& factors) {
  PolynomialInvariant out;
  for (const auto& f : factors) {
    out.description += (out.description.empty() ? "" : " * ") + f.description;
    out.degree += f.degree;
  }
  out.evaluate = [factors](std::span<const Rational> x) {
    Rational v = 1;
    for (const auto& f : factors) v *= f.evaluate(x);
    return v;
  };
  return out;
}

namespace {

Matrix dlog_matrix(const Rational& fx, const Vector& g, const Matrix& h) {
  const std::size_t n = g.size();
  Matrix j(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) j(a, b) = fx * h(a, b) - g[a] * g[b];
  return j;
}

Rational pow_int(const Rational& base, std::size_t k) {
  Rational p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= base;
  return p;
}

}  // namespace

InvariantReport verify_invariant(const PVInstance& pv, const GroupSampler* sampler, const PolynomialInvariant& f,
                                 std::uint64_t seed, const InvariantOptions& options) {
  std::mt19937_64 gen(seed);
  InvariantReport rep;
  rep.description = f.description;
  std::vector<Vector> points;
  std::vector<Rational> values;
  for (std::size_t tries = 0; points.size() < options.sample_points; ++tries) {
    if (tries > 50 * options.sample_points + 100)
      throw DegenerateInvariant(f.description + " vanishes at every sampled point");
    Vector x = random_integer_point(gen, pv.dim_v);
    Rational v = f.evaluate(x);
    if (sgn(v) == 0) continue;
    points.push_back(std::move(x));
    values.push_back(std::move(v));
  }
  {
    Vector twice = points.front();
    for (auto& t : twice) t *= 2;
    rep.homogeneous = f.evaluate(twice) == pow_int(Rational(2), static_cast<std::size_t>(f.degree)) * values.front();
  }
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t i = 0; i < pv.basis.size(); ++i) {
      const Vector mx = pv.basis[i].apply(points[p], pv.dim_v);
      Rational c = directional(f, points[p], mx, false) / values[p];
      if (p == 0) {
        rep.infinitesimal_character.push_back(c);
      } else if (c != rep.infinitesimal_character[i]) {
        const std::string label = i < pv.basis_labels.size() ? pv.basis_labels[i] : std::to_string(i);
        throw NotRelativeInvariant(f.description + " fails along basis direction " + label);
      }
    }
  }
  rep.points_checked = points.size();
  if (sampler != nullptr) {
    for (std::size_t s = 0; s < options.group_samples; ++s) {
      const Matrix g = (*sampler)(gen);
      Rational ratio;
      for (std::size_t p = 0; p < points.size(); ++p) {
        const Vector gx = g * std::span<const Rational>(points[p]);
        Rational r = f.evaluate(gx) / values[p];
        if (p == 0) ratio = r;
        else if (r != ratio)
          throw NotRelativeInvariant(f.description + " fails for sampled group element " + std::to_string(s + 1));
      }
      ++rep.group_elements_checked;
    }
  }
  rep.relatively_invariant = true;
  for (int attempt = 0; attempt < 5 && !rep.hessian_nonzero; ++attempt) {
    const Vector x = random_rational_point(gen, pv.dim_v);
    rep.hessian_determinant = determinant(hessian(f, x));
    rep.hessian_nonzero = sgn(rep.hessian_determinant) != 0;
  }
  if (options.require_nondegenerate && !rep.hessian_nonzero)
    throw DegenerateInvariant("Hessian of " + f.description + " vanishes at every sampled point");
  const GenericPoint gp = generic_point(pv, seed);
  const Rational fx = f.evaluate(gp.point);
  if (sgn(fx) != 0) {
    rep.dlog_rank = rank(dlog_matrix(fx, gradient(f, gp.point), hessian(f, gp.point)));
    rep.dlog_full_rank = rep.dlog_rank == pv.dim_v;
  }
  return rep;
}

IdentityReport hessian_product_identity_check(std::span<const SummandInvariant> summands, std::uint64_t seed,
                                              std::size_t points) {
  IdentityReport rep;
  std::vector<std::size_t> offsets;
  for (const auto& s : summands) {
    offsets.push_back(rep.dim);
    rep.dim += s.dim;
    rep.degree += s.f.degree;
  }
  PolynomialInvariant prod;
  prod.degree = rep.degree;
  prod.description = "product";
  std::vector<SummandInvariant> parts(summands.begin(), summands.end());
  prod.evaluate = [parts, offsets](std::span<const Rational> x) {
    Rational v = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) v *= parts[i].f.evaluate(x.subspan(offsets[i], parts[i].dim));
    return v;
  };
  std::mt19937_64 gen(seed);
  while (rep.samples.size() < points) {
    if (rep.rejected > 100 * points) throw DegenerateInvariant("product invariant vanishes at every sampled point");
    Vector x = random_rational_point(gen, rep.dim);
    const Rational fx = prod.evaluate(x);
    if (sgn(fx) == 0) {
      ++rep.rejected;
      continue;
    }
    const Matrix h = hessian(prod, x);
    const Vector g = gradient(prod, x);
    IdentitySample s;
    s.lhs = determinant(h);
    s.rhs = Rational(1 - rep.degree) * determinant(dlog_matrix(fx, g, h)) / pow_int(fx, rep.dim);
    s.point = std::move(x);
    if (s.lhs != s.rhs)
      throw IdentityViolation("det Hess f = " + s.lhs.get_str() + " but (1-r) det d(dlog f) f^k = " + s.rhs.get_str());
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

PVInstance build_parabolic_pv(const WeightedDiagram& d, const ChevalleyAlgebra& alg) {
  const RootSystem& rs = alg.root_system();
  if (rs.type() != d.type()) throw std::invalid_argument("algebra type does not match the diagram");
  const Grading gr = compute_grading(d, rs);
  const auto comps = components(d, rs);
  PVInstance pv;
  pv.name = render_compact(d);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coord_of(rs.num_roots(), kNone);
  for (const auto& c : comps) {
    LatticeComponent lc{"V" + std::to_string(c.alpha), {}};
    for (std::size_t r : c.roots) {
      coord_of[r] = pv.dim_v;
      lc.coords.push_back(pv.dim_v++);
    }
    pv.components.push_back(std::move(lc));
  }
  if (pv.dim_v == 0) throw EmptyLevelOne(pv.name + " has no level-one roots");
  std::vector<std::size_t> level_one;
  for (const auto& c : comps) level_one.insert(level_one.end(), c.roots.begin(), c.roots.end());

  // Algebra basis: h_1..h_n, then root vectors of degree zero.
  std::vector<std::size_t> algebra_elems;
  const int n = rs.rank();
  for (int i = 1; i <= n; ++i) {
    SparseOperator op;
    for (std::size_t r : level_one) {
      const int w = rs.pairing(rs.root(r), i);
      if (w != 0) op.entries.push_back({coord_of[r], coord_of[r], w});
    }
    pv.basis.push_back(std::move(op));
    pv.basis_labels.push_back("h" + std::to_string(i));
    algebra_elems.push_back(alg.h_index(i));
  }
  for (std::size_t g = 0; g < rs.num_roots(); ++g) {
    if (gr.degrees[g] != 0) continue;
    SparseOperator op;
    for (std::size_t r : level_one) {
      const long s = alg.root_sum(g, r);
      if (s < 0) continue;
      if (coord_of[s] == kNone) throw std::logic_error("level-zero action leaves level one");
      op.entries.push_back({coord_of[s], coord_of[r], alg.structure_constant(g, r)});
    }
    pv.basis.push_back(std::move(op));
    std::string label = "e[";
    for (int i = 0; i < n; ++i) label += (i ? "," : "") + std::to_string(rs.root(g)[i]);
    pv.basis_labels.push_back(label + "]");
    algebra_elems.push_back(alg.e_index(g));
  }
  const std::size_t m = algebra_elems.size();
  pv.ambient_form = Matrix(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) pv.ambient_form(a, b) = alg.killing_matrix()(algebra_elems[a], algebra_elems[b]);
  pv.abelianization = Matrix(d.circled().size(), m);
  for (std::size_t k = 0; k < d.circled().size(); ++k) pv.abelianization(k, alg.h_index(d.circled()[k])) = 1;
  return pv;
}

}  // namespace pvlab
