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

#include "pvlab/models.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "pvlab/errors.hpp"

namespace pvlab {

std::size_t GroupFactor::dim() const {
  switch (kind) {
    case FactorKind::GL: return n * n;
    case FactorKind::SL: return n * n - 1;
    case FactorKind::SO: return n * (n - 1) / 2;
    case FactorKind::Torus: return n;
  }
  return 0;
}

std::size_t MatrixBlock::dim() const {
  switch (shape) {
    case BlockShape::General: return rows * cols;
    case BlockShape::Symmetric: return rows * (rows + 1) / 2;
    case BlockShape::Skew: return rows * (rows - 1) / 2;
  }
  return 0;
}

namespace {

struct Coord {
  std::size_t i;
  std::size_t j;
};

std::vector<Coord> block_coords(const MatrixBlock& b) {
  std::vector<Coord> out;
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) {
      if (b.shape == BlockShape::Symmetric && j < i) continue;
      if (b.shape == BlockShape::Skew && j <= i) continue;
      out.push_back({i, j});
    }
  return out;
}

Matrix coord_matrix(const MatrixBlock& b, Coord c) {
  Matrix m(b.rows, b.cols);
  m(c.i, c.j) = 1;
  if (b.shape == BlockShape::Symmetric) m(c.j, c.i) = 1;
  if (b.shape == BlockShape::Skew) m(c.j, c.i) = -1;
  return m;
}

struct AlgebraElement {
  Matrix m;
  std::string label;
};

std::vector<AlgebraElement> factor_basis(const GroupFactor& f) {
  std::vector<AlgebraElement> out;
  const std::size_t n = f.n;
  auto unit = [n](std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
  };
  auto ij = [](std::size_t i, std::size_t j) { return std::to_string(i + 1) + "," + std::to_string(j + 1); };
  switch (f.kind) {
    case FactorKind::GL:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.push_back({unit(i, j), f.name + ":E" + ij(i, j)});
      break;
    case FactorKind::SL:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) out.push_back({unit(i, j), f.name + ":E" + ij(i, j)});
      for (std::size_t i = 0; i + 1 < n; ++i)
        out.push_back({unit(i, i) - unit(i + 1, i + 1), f.name + ":H" + std::to_string(i + 1)});
      break;
    case FactorKind::SO:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back({unit(i, j) - unit(j, i), f.name + ":A" + ij(i, j)});
      break;
    case FactorKind::Torus:
      for (std::size_t i = 0; i < n; ++i) out.push_back({unit(i, i), f.name + ":D" + std::to_string(i + 1)});
      break;
  }
  return out;
}

Matrix twisted(const Matrix& g, Twist t, bool infinitesimal) {
  switch (t) {
    case Twist::Identity: return g;
    case Twist::Transpose: return g.transpose();
    case Twist::Inverse:
      if (infinitesimal) return Rational(-1) * g;
      return *inverse(g);
    case Twist::InverseTranspose:
      if (infinitesimal) return Rational(-1) * g.transpose();
      return inverse(g)->transpose();
  }
  return g;
}

Rational trace_product(const Matrix& a, const Matrix& b) {
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  return t;
}

Rational small_nonzero(std::mt19937_64& gen) {
  static const int nums[] = {1, -1, 2, -2, 3, -3, 1, -1};
  static const int dens[] = {1, 1, 1, 1, 1, 1, 2, 3};
  const std::size_t k = gen() % 8;
  return Rational(nums[k], dens[k]);
}

Matrix sample_factor(const GroupFactor& f, std::mt19937_64& gen) {
  const std::size_t n = f.n;
  Matrix g = Matrix::identity(n);
  auto unipotent = [&]() {
    Matrix u = Matrix::identity(n);
    if (n < 2) return u;
    const std::size_t i = gen() % n;
    std::size_t j = gen() % (n - 1);
    if (j >= i) ++j;
    u(i, j) = Rational(static_cast<long>(gen() % 7) - 3);
    return u;
  };
  switch (f.kind) {
    case FactorKind::GL: {
      Matrix d = Matrix::identity(n);
      for (std::size_t i = 0; i < n; ++i) d(i, i) = small_nonzero(gen);
      g = d * unipotent() * unipotent();
      break;
    }
    case FactorKind::SL: {
      Matrix d = Matrix::identity(n);
      if (n >= 2) {
        const std::size_t i = gen() % (n - 1);
        const Rational t = small_nonzero(gen);
        d(i, i) = t;
        d(i + 1, i + 1) = 1 / t;
      }
      g = unipotent() * d * unipotent();
      break;
    }
    case FactorKind::SO: {
      Matrix s(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          s(i, j) = Rational(static_cast<long>(gen() % 5) - 2);
          s(j, i) = -s(i, j);
        }
      const Matrix id = Matrix::identity(n);
      g = (id - s) * *inverse(id + s);
      break;
    }
    case FactorKind::Torus:
      for (std::size_t i = 0; i < n; ++i) g(i, i) = small_nonzero(gen);
      break;
  }
  return g;
}

}  // namespace

MatrixModel::MatrixModel(std::vector<GroupFactor> factors, std::vector<MatrixBlock> blocks)
    : factors_(std::move(factors)), blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (b.shape != BlockShape::General && b.rows != b.cols)
      throw std::invalid_argument("symmetric and skew blocks must be square");
    for (const auto& t : b.terms) {
      if (t.factor >= factors_.size()) throw std::invalid_argument("action term names a missing factor");
      if (t.side == Side::Scalar && factors_[t.factor].n != 1)
        throw std::invalid_argument("scalar action needs a 1 x 1 factor");
    }
    offsets_.push_back(dim_v_);
    dim_v_ += b.dim();
  }
}

std::size_t MatrixModel::dim_algebra() const {
  std::size_t d = 0;
  for (const auto& f : factors_) d += f.dim();
  return d;
}

Matrix MatrixModel::unpack(std::span<const Rational> x, std::size_t block) const {
  const MatrixBlock& b = blocks_.at(block);
  Matrix m(b.rows, b.cols);
  std::size_t k = offsets_[block];
  for (const Coord c : block_coords(b)) {
    m(c.i, c.j) = x[k];
    if (b.shape == BlockShape::Symmetric) m(c.j, c.i) = x[k];
    if (b.shape == BlockShape::Skew) m(c.j, c.i) = -x[k];
    ++k;
  }
  return m;
}

Vector MatrixModel::pack(const std::vector<Matrix>& mats) const {
  if (mats.size() != blocks_.size()) throw std::invalid_argument("one matrix per block expected");
  Vector x(dim_v_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    std::size_t k = offsets_[b];
    for (const Coord c : block_coords(blocks_[b])) x[k++] = mats[b](c.i, c.j);
  }
  return x;
}

PVInstance MatrixModel::instance(std::string name) const {
  PVInstance pv;
  pv.name = std::move(name);
  pv.dim_v = dim_v_;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    LatticeComponent lc{blocks_[b].name, {}};
    for (std::size_t k = 0; k < blocks_[b].dim(); ++k) lc.coords.push_back(offsets_[b] + k);
    pv.components.push_back(std::move(lc));
  }
  const std::size_t dim_alg = dim_algebra();
  pv.ambient_form = Matrix(dim_alg, dim_alg);
  std::vector<Vector> characters;
  std::size_t base = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const auto elems = factor_basis(factors_[f]);
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t c = 0; c < elems.size(); ++c)
        pv.ambient_form(base + a, base + c) = trace_product(elems[a].m, elems[c].m);
    if (factors_[f].kind == FactorKind::GL) {
      Vector row(dim_alg);
      for (std::size_t i = 0; i < factors_[f].n; ++i) row[base + i * factors_[f].n + i] = 1;
      characters.push_back(std::move(row));
    } else if (factors_[f].kind == FactorKind::Torus) {
      for (std::size_t i = 0; i < factors_[f].n; ++i) {
        Vector row(dim_alg);
        row[base + i] = 1;
        characters.push_back(std::move(row));
      }
    }
    for (const auto& e : elems) {
      SparseOperator op;
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const MatrixBlock& blk = blocks_[b];
        const auto coords = block_coords(blk);
        for (std::size_t col = 0; col < coords.size(); ++col) {
          const Matrix x = coord_matrix(blk, coords[col]);
          Matrix img(blk.rows, blk.cols);
          bool touched = false;
          for (const auto& t : blk.terms) {
            if (t.factor != f) continue;
            touched = true;
            const Matrix d = twisted(e.m, t.twist, true);
            switch (t.side) {
              case Side::Left: img = img + d * x; break;
              case Side::Right: img = img + x * d; break;
              case Side::Scalar: img = img + d(0, 0) * x; break;
            }
          }
          if (!touched) continue;
          for (std::size_t row = 0; row < coords.size(); ++row) {
            const Rational& v = img(coords[row].i, coords[row].j);
            if (sgn(v) != 0) op.entries.push_back({offsets_[b] + row, offsets_[b] + col, v});
          }
        }
      }
      pv.basis.push_back(std::move(op));
      pv.basis_labels.push_back(e.label);
    }
    base += elems.size();
  }
  pv.abelianization = characters.empty() ? Matrix(0, dim_alg) : Matrix::from_rows(characters);
  return pv;
}

Matrix MatrixModel::apply(const std::vector<Matrix>& elements, std::size_t block, const Matrix& x) const {
  Matrix out = x;
  for (const auto& t : blocks_[block].terms) {
    const Matrix g = twisted(elements[t.factor], t.twist, false);
    switch (t.side) {
      case Side::Left: out = g * out; break;
      case Side::Right: out = out * g; break;
      case Side::Scalar: out = g(0, 0) * out; break;
    }
  }
  return out;
}

Matrix MatrixModel::act(const std::vector<Matrix>& elements) const {
  if (elements.size() != factors_.size()) throw std::invalid_argument("one element per factor expected");
  Matrix m(dim_v_, dim_v_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto coords = block_coords(blocks_[b]);
    for (std::size_t col = 0; col < coords.size(); ++col) {
      const Matrix img = apply(elements, b, coord_matrix(blocks_[b], coords[col]));
      for (std::size_t row = 0; row < coords.size(); ++row)
        m(offsets_[b] + row, offsets_[b] + col) = img(coords[row].i, coords[row].j);
    }
  }
  return m;
}

GroupSampler MatrixModel::sampler() const {
  return [model = *this](std::mt19937_64& gen) {
    std::vector<Matrix> elems;
    for (const auto& f : model.factors_) elems.push_back(sample_factor(f, gen));
    return model.act(elems);
  };
}

// ---------------------------------------------------------------------------

namespace {

Rational pfaffian_rec(const Matrix& z, std::vector<std::size_t>& idx) {
  if (idx.empty()) return 1;
  const std::size_t first = idx.front();
  Rational total;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const Rational& a = z(first, idx[k]);
    if (sgn(a) == 0) continue;
    std::vector<std::size_t> rest;
    for (std::size_t m = 1; m < idx.size(); ++m)
      if (m != k) rest.push_back(idx[m]);
    const Rational sub = pfaffian_rec(z, rest);
    if (k % 2 == 1) total += a * sub;
    else total -= a * sub;
  }
  return total;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

Matrix bordered(const Matrix& y, const Matrix& x) {
  const std::size_t n = y.rows();
  Matrix m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = y(i, j);
    m(i, n) = x(i, 0);
    m(n, i) = -x(i, 0);
  }
  return m;
}

Matrix top_identity(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) m(i, i) = 1;
  return m;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameter(message);
}

std::string with_params(const std::string& family, const std::vector<std::pair<std::string, int>>& params) {
  std::string s = family;
  for (std::size_t i = 0; i < params.size(); ++i)
    s += (i == 0 ? ":" : ",") + params[i].first + "=" + std::to_string(params[i].second);
  return s;
}

ModelSpec assemble(std::string family, std::vector<std::pair<std::string, int>> params, MatrixModel model) {
  std::string name = with_params(family, params);
  PVInstance pv = model.instance(name);
  ModelSpec spec{std::move(name), std::move(family), {}, std::move(model), std::move(pv), {}, {}, {}};
  for (auto& [k, v] : params) spec.params[k] = v;
  return spec;
}

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

}  // namespace

Rational pfaffian(const Matrix& z) {
  if (z.rows() != z.cols()) throw NotSkew("matrix is not square");
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = i; j < z.cols(); ++j)
      if (z(i, j) != -z(j, i)) throw NotSkew("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  if (z.rows() % 2 != 0) throw OddSize("size " + std::to_string(z.rows()));
  std::vector<std::size_t> idx(z.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_rec(z, idx);
}

ModelSpec bilinear_pairing(int n) {
  require(n >= 2, "bilinear_pairing needs n >= 2");
  const std::size_t m = sz(n);
  MatrixModel model({{FactorKind::GL, 1, "x"}, {FactorKind::SL, m, "g"}, {FactorKind::GL, 1, "y"}},
                    {{"v", 1, m, BlockShape::General, {{0, Side::Scalar, Twist::Identity}, {1, Side::Right, Twist::Inverse}}},
                     {"w", m, 1, BlockShape::General, {{2, Side::Scalar, Twist::Inverse}, {1, Side::Left, Twist::Identity}}}});
  ModelSpec spec = assemble("bilinear_pairing", {{"n", n}}, std::move(model));
  const MatrixModel& mm = spec.model;
  spec.known_invariants.push_back({"Q(v,w) = tv.w", 2, [mm](std::span<const Rational> x) {
                                     return (mm.unpack(x, 0) * mm.unpack(x, 1))(0, 0);
                                   }});
  auto& e = spec.expected;
  e.prehomogeneous = true;
  e.regular = true;
  e.q_irreducible = true;
  e.invariant_count = 1;
  e.generic_isotropy_dim = (m - 1) * (m - 1);
  e.restrictions = {{{0}, false}, {{1}, false}};
  if (n == 2) e.parabolic_twin = "A3[1,3]";
  e.provenance = {"regular, one invariant, isotropy (n-1)^2 and non-regular components: stated with the model",
                  "parabolic twin: A3[1,3] realizes gl1 + sl2 + gl1 on C^2 + C^2"};
  Matrix e1(m, 1);
  e1(0, 0) = 1;
  spec.reference_points.push_back({"v0 = w0 = e1", mm.pack({e1.transpose(), e1}), (m - 1) * (m - 1)});
  return spec;
}

ModelSpec symmetric_vector(int n) {
  require(n >= 2, "symmetric_vector needs n >= 2");
  const std::size_t m = sz(n);
  MatrixModel model({{FactorKind::GL, m, "g"}, {FactorKind::GL, 1, "a"}},
                    {{"S", m, m, BlockShape::Symmetric, {{0, Side::Left, Twist::Identity}, {0, Side::Right, Twist::Transpose}}},
                     {"v", m, 1, BlockShape::General, {{1, Side::Scalar, Twist::Identity}, {0, Side::Left, Twist::InverseTranspose}}}});
  ModelSpec spec = assemble("symmetric_vector", {{"n", n}}, std::move(model));
  const MatrixModel& mm = spec.model;
  spec.known_invariants.push_back({"det X", n, [mm](std::span<const Rational> x) { return determinant(mm.unpack(x, 0)); }});
  spec.known_invariants.push_back({"tv.X.v", 3, [mm](std::span<const Rational> x) {
                                     const Matrix v = mm.unpack(x, 1);
                                     return (v.transpose() * mm.unpack(x, 0) * v)(0, 0);
                                   }});
  auto& e = spec.expected;
  e.prehomogeneous = true;
  e.regular = true;
  e.q_irreducible = false;
  e.invariant_count = 2;
  e.generic_isotropy_dim = (m - 1) * (m - 2) / 2;
  e.restrictions = {{{0}, true}, {{1}, false}};
  e.filtration = {{"S"}, {"v"}};
  e.provenance = {"isotropy at (I, e1) is an orthogonal group O(n-1)",
                  "C^n alone is not regular, S(n) alone is",
                  "filtration S(n) then C^n",
                  "two invariants: two characters, isotropy acts trivially on both (derived)"};
  Matrix e1(m, 1);
  e1(0, 0) = 1;
  spec.reference_points.push_back({"(I, e1)", mm.pack({Matrix::identity(m), e1}), (m - 1) * (m - 2) / 2});
  return spec;
}

ModelSpec descending_chains(int n) {
  require(n >= 1 && n <= 4, "descending_chains needs 1 <= n <= 4");
  const std::size_t m = sz(n);
  std::vector<GroupFactor> factors{{FactorKind::SO, m + 1, "so" + std::to_string(m + 1)}};
  for (std::size_t k = m; k >= 1; --k) factors.push_back({FactorKind::GL, k, "gl" + std::to_string(k)});
  // factor index of GL(k) is m - k + 1; SO(n+1) plays the role of g_{n+1}
  auto factor_of = [m](std::size_t k) { return m + 1 - k; };
  std::vector<MatrixBlock> blocks;
  for (std::size_t k = m; k >= 1; --k)
    blocks.push_back({"V" + std::to_string(k), k + 1, k, BlockShape::General,
                      {{factor_of(k + 1), Side::Left, Twist::Identity}, {factor_of(k), Side::Right, Twist::Inverse}}});
  ModelSpec spec = assemble("descending_chains", {{"n", n}}, MatrixModel(std::move(factors), std::move(blocks)));
  const MatrixModel& mm = spec.model;
  for (std::size_t k = 1; k <= m; ++k) {
    const int degree = static_cast<int>(2 * (m - k + 1) * k);
    spec.known_invariants.push_back({"P_" + std::to_string(k), degree, [mm, m, k](std::span<const Rational> x) {
                                       Matrix prod = mm.unpack(x, 0);
                                       for (std::size_t j = m - 1; j >= k; --j) prod = prod * mm.unpack(x, m - j);
                                       return determinant(prod.transpose() * prod);
                                     }});
  }
  auto& e = spec.expected;
  e.prehomogeneous = true;
  e.regular = true;
  e.q_irreducible = n == 1;
  e.invariant_count = m;
  for (std::size_t k = m; k >= 1; --k) e.filtration.push_back({"V" + std::to_string(k)});
  e.provenance = {"regular with fundamental invariants P_1..P_n", "filtration V_n, ..., V_1"};
  return spec;
}

ModelSpec gl_triple_chain(int p, int q, int r) {
  require(p >= 1 && r >= 1 && p < q && r < q, "gl_triple_chain needs 1 <= p < q and 1 <= r < q");
  require(q <= 6, "gl_triple_chain is limited to q <= 6");
  const std::size_t P = sz(p), Q = sz(q), R = sz(r);
  MatrixModel model({{FactorKind::GL, P, "g1"}, {FactorKind::GL, Q, "g2"}, {FactorKind::GL, R, "g3"}},
                    {{"X", Q, P, BlockShape::General, {{1, Side::Left, Twist::Identity}, {0, Side::Right, Twist::Inverse}}},
                     {"Y", R, Q, BlockShape::General, {{2, Side::Left, Twist::Identity}, {1, Side::Right, Twist::Inverse}}}});
  ModelSpec spec = assemble("gl_triple_chain", {{"p", p}, {"q", q}, {"r", r}}, std::move(model));
  const MatrixModel& mm = spec.model;
  auto& e = spec.expected;
  e.regular = p == r;
  e.q_irreducible = p == r;
  if (p == r) {
    e.prehomogeneous = true;
    e.invariant_count = 1;
    spec.known_invariants.push_back({"det(YX)", 2 * p, [mm](std::span<const Rational> x) {
                                       return determinant(mm.unpack(x, 1) * mm.unpack(x, 0));
                                     }});
    const Vector x0 = mm.pack({top_identity(Q, P), top_identity(R, Q)});
    spec.reference_points.push_back({"X0 = [I;0], Y0 = [I|0]", x0, mm.dim_algebra() - mm.dim_v()});
    e.provenance = {"p = r: regular and 1-irreducible with invariant det(YX)"};
  } else {
    e.provenance = {"p != r: not regular, unipotent normal subgroup of the generic isotropy"};
  }
  return spec;
}

ModelSpec skew_pair(int p, int r) {
  require(r >= 3 && r % 2 == 1, "skew_pair needs r odd and r >= 3");
  require(p >= 1 && p <= r - 1, "skew_pair needs 1 <= p <= r - 1");
  require(r <= 7, "skew_pair is limited to r <= 7");
  const std::size_t P = sz(p), R = sz(r);
  MatrixModel model(
      {{FactorKind::GL, P, "g1"}, {FactorKind::GL, R, "g2"}},
      {{"X", R, P, BlockShape::General, {{1, Side::Left, Twist::InverseTranspose}, {0, Side::Right, Twist::Inverse}}},
       {"Y", R, R, BlockShape::Skew, {{1, Side::Left, Twist::Identity}, {1, Side::Right, Twist::Transpose}}}});
  ModelSpec spec = assemble("skew_pair", {{"p", p}, {"r", r}}, std::move(model));
  const MatrixModel& mm = spec.model;
  auto& e = spec.expected;
  e.regular = p == r - 1;
  e.q_irreducible = p == r - 1;
  if (p % 2 == 0)
    spec.known_invariants.push_back({"Pf(tX.Y.X)", 3 * p / 2, [mm](std::span<const Rational> x) {
                                       const Matrix X = mm.unpack(x, 0);
                                       return pfaffian(X.transpose() * mm.unpack(x, 1) * X);
                                     }});
  if (p == r - 1) {
    e.prehomogeneous = true;
    e.invariant_count = 1;
    e.provenance = {"p = r - 1: regular and 1-irreducible with invariant Pf(tX.Y.X)"};
  } else {
    e.provenance = {"p <= r - 2: not regular; for even p the Pfaffian stays a nontrivial relative invariant"};
  }
  return spec;
}

ModelSpec torus_chain(int p, int q) {
  require(p >= 1 && q > p, "torus_chain needs q > p >= 1");
  require(q <= 6, "torus_chain is limited to q <= 6");
  const std::size_t P = sz(p), Q = sz(q);
  MatrixModel model({{FactorKind::GL, P, "g1"}, {FactorKind::SL, Q, "g2"}, {FactorKind::Torus, 2, "d"}},
                    {{"X", Q, P, BlockShape::General, {{1, Side::Left, Twist::Identity}, {0, Side::Right, Twist::Inverse}}},
                     {"Y", 2, Q, BlockShape::General, {{2, Side::Left, Twist::Identity}, {1, Side::Right, Twist::Inverse}}}});
  ModelSpec spec = assemble("torus_chain", {{"p", p}, {"q", q}}, std::move(model));
  const MatrixModel& mm = spec.model;
  auto& e = spec.expected;
  e.regular = p == 2;
  e.q_irreducible = p == 2;
  if (p == 2) {
    e.prehomogeneous = true;
    e.invariant_count = 1;
    spec.known_invariants.push_back({"det(YX)", 4, [mm](std::span<const Rational> x) {
                                       return determinant(mm.unpack(x, 1) * mm.unpack(x, 0));
                                     }});
    const Vector x0 = mm.pack({top_identity(Q, 2), top_identity(2, Q)});
    spec.reference_points.push_back({"X0 = [I2;0], Y0 = [I2|0]", x0, mm.dim_algebra() - mm.dim_v()});
    e.provenance = {"p = 2: regular and 1-irreducible with invariant det(YX)"};
  } else {
    e.provenance = {"p != 2: not regular, unipotent normal subgroup inside SL(q)"};
  }
  if (p == 1) {
    for (std::size_t i = 0; i < 2; ++i)
      spec.known_invariants.push_back({"f_" + std::to_string(i + 1) + "(YX)", 2, [mm, i](std::span<const Rational> x) {
                                         return (mm.unpack(x, 1) * mm.unpack(x, 0))(i, 0);
                                       }});
    e.provenance.push_back("p = 1: both coordinates of YX are independent relative invariants");
  }
  return spec;
}

namespace {

ModelSpec vector_skew(std::string family, int n) {
  const std::size_t N = sz(n);
  MatrixModel model({{FactorKind::GL, N, "g"}, {FactorKind::GL, 1, "a"}},
                    {{"X", N, 1, BlockShape::General, {{0, Side::Left, Twist::Identity}, {1, Side::Scalar, Twist::Identity}}},
                     {"Y", N, N, BlockShape::Skew, {{0, Side::Left, Twist::Identity}, {0, Side::Right, Twist::Transpose}}}});
  std::vector<std::pair<std::string, int>> params;
  if (family != "e6_vector_skew") params.push_back({"n", n});
  ModelSpec spec = assemble(std::move(family), std::move(params), std::move(model));
  const MatrixModel& mm = spec.model;
  spec.known_invariants.push_back({"Pf[[Y, X], [-tX, 0]]", (n + 1) / 2, [mm](std::span<const Rational> x) {
                                     return pfaffian(bordered(mm.unpack(x, 1), mm.unpack(x, 0)));
                                   }});
  auto& e = spec.expected;
  e.prehomogeneous = true;
  e.regular = true;
  e.q_irreducible = true;
  e.invariant_count = 1;
  e.generic_isotropy_dim = mm.dim_algebra() - mm.dim_v();
  return spec;
}

}  // namespace

ModelSpec e6_vector_skew() {
  ModelSpec spec = vector_skew("e6_vector_skew", 5);
  const MatrixModel& mm = spec.model;
  Matrix x0(5, 1);
  x0(4, 0) = 1;
  Matrix y0(5, 5);
  for (std::size_t i = 0; i < 2; ++i) {
    y0(i, i + 2) = 1;
    y0(i + 2, i) = -1;
  }
  spec.reference_points.push_back({"X0 = e5, Y0 = [[J,0],[0,0]]", mm.pack({x0, y0}), 11});
  spec.expected.parabolic_twin = "E6[1,2]";
  spec.expected.provenance = {"regular with isotropy Sp(2) x C* (dimension 11) at (X0, Y0)",
                              "bordered Pfaffian is the fundamental invariant",
                              "invariant count from the abelianization rank (derived)"};
  return spec;
}

ModelSpec bordered_skew(int n) {
  require(n >= 3 && n % 2 == 1, "bordered_skew needs n odd and n >= 3");
  require(n <= 7, "bordered_skew is limited to n <= 7");
  ModelSpec spec = vector_skew("bordered_skew", n);
  spec.expected.provenance = {"1-irreducible extension family with bordered Pfaffian invariant"};
  return spec;
}

ModelSpec column_completion(int n) {
  require(n >= 2 && n <= 6, "column_completion needs 2 <= n <= 6");
  const std::size_t N = sz(n);
  MatrixModel model({{FactorKind::GL, N, "g1"}, {FactorKind::GL, N - 1, "g2"}},
                    {{"X", N, N - 1, BlockShape::General, {{0, Side::Left, Twist::Identity}, {1, Side::Right, Twist::Inverse}}},
                     {"Y", N, 1, BlockShape::General, {{0, Side::Left, Twist::Identity}}}});
  ModelSpec spec = assemble("column_completion", {{"n", n}}, std::move(model));
  const MatrixModel& mm = spec.model;
  spec.known_invariants.push_back({"det[X|Y]", n, [mm](std::span<const Rational> x) {
                                     return determinant(hstack(mm.unpack(x, 0), mm.unpack(x, 1)));
                                   }});
  auto& e = spec.expected;
  e.prehomogeneous = true;
  e.regular = true;
  e.q_irreducible = true;
  e.invariant_count = 1;
  e.generic_isotropy_dim = mm.dim_algebra() - mm.dim_v();
  e.provenance = {"1-irreducible extension family with invariant det[X|Y]"};
  return spec;
}

std::vector<ModelSpec> extension_families(int n) {
  std::vector<ModelSpec> out;
  if (n >= 3 && n % 2 == 1) out.push_back(bordered_skew(n));
  if (n >= 2) out.push_back(column_completion(n));
  return out;
}

const std::vector<ModelFamilyInfo>& model_families() {
  static const std::vector<ModelFamilyInfo> info{
      {"bilinear_pairing", {"n"}, "gl1 + sl_n + gl1 on C^n + C^n"},
      {"symmetric_vector", {"n"}, "gl_n + gl1 on S(n) + C^n"},
      {"descending_chains", {"n"}, "so(n+1) + gl(n) + ... + gl(1) on M(n+1,n) + ... + M(2,1)"},
      {"gl_triple_chain", {"p", "q", "r"}, "GL(p) x GL(q) x GL(r) on M(q,p) + M(r,q)"},
      {"skew_pair", {"p", "r"}, "GL(p) x GL(r) on M(r,p) + Skew(r), r odd"},
      {"torus_chain", {"p", "q"}, "GL(p) x SL(q) x D_2 on M(q,p) + M(2,q)"},
      {"e6_vector_skew", {}, "GL(5) x C* on M(5,1) + Skew(5)"},
      {"bordered_skew", {"n"}, "GL(n) x C* on C^n + Skew(n), n odd"},
      {"column_completion", {"n"}, "GL(n) x GL(n-1) on M(n,n-1) + M(n,1)"},
  };
  return info;
}

ModelSpec make_model(const std::string& text) {
  const auto colon = text.find(':');
  const std::string family = text.substr(0, colon);
  const auto& fams = model_families();
  const auto it = std::find_if(fams.begin(), fams.end(), [&](const ModelFamilyInfo& f) { return f.family == family; });
  if (it == fams.end()) throw UnknownModel("'" + family + "'");
  std::map<std::string, int> values;
  if (colon != std::string::npos) {
    std::size_t pos = colon + 1;
    while (pos <= text.size()) {
      const auto comma = std::min(text.find(',', pos), text.size());
      const std::string item = text.substr(pos, comma - pos);
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw InvalidParameter("expected key=value, got '" + item + "'");
      const std::string key = item.substr(0, eq);
      int v = 0;
      const char* first = item.data() + eq + 1;
      const char* last = item.data() + item.size();
      const auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last || first == last)
        throw InvalidParameter("parameter " + key + " is not an integer");
      if (std::find(it->params.begin(), it->params.end(), key) == it->params.end())
        throw InvalidParameter(family + " has no parameter '" + key + "'");
      if (!values.emplace(key, v).second) throw InvalidParameter("parameter " + key + " given twice");
      pos = comma + 1;
    }
  }
  for (const auto& k : it->params)
    if (!values.contains(k)) throw InvalidParameter(family + " needs parameter " + k);
  auto get = [&](const char* k) { return values.at(k); };
  if (family == "bilinear_pairing") return bilinear_pairing(get("n"));
  if (family == "symmetric_vector") return symmetric_vector(get("n"));
  if (family == "descending_chains") return descending_chains(get("n"));
  if (family == "gl_triple_chain") return gl_triple_chain(get("p"), get("q"), get("r"));
  if (family == "skew_pair") return skew_pair(get("p"), get("r"));
  if (family == "torus_chain") return torus_chain(get("p"), get("q"));
  if (family == "e6_vector_skew") return e6_vector_skew();
  if (family == "bordered_skew") return bordered_skew(get("n"));
  return column_completion(get("n"));
}

}  // namespace pvlab

namespace pvlab {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string names_of(const PVInstance& pv, const std::vector<std::size_t>& comps) {
  std::string s;
  for (auto c : comps) s += (s.empty() ? "" : "+") + pv.components.at(c).name;
  return s;
}

std::string stages_text(const std::vector<std::vector<std::string>>& stages) {
  std::string s;
  for (const auto& st : stages) {
    std::string part;
    for (const auto& n : st) part += (part.empty() ? "" : "+") + n;
    s += (s.empty() ? "" : " ; ") + part;
  }
  return s;
}

}  // namespace

ModelVerification verify_model(const ModelSpec& spec, std::uint64_t seed, std::size_t n_seeds) {
  ModelVerification out;
  out.model = spec.name;
  const PVInstance& pv = spec.instance;
  auto add = [&](std::string name, std::string expected, std::string observed) {
    const bool pass = expected == observed;
    out.checks.push_back({std::move(name), std::move(expected), std::move(observed), pass});
  };
  for (std::size_t k = 0; k < n_seeds; ++k) {
    const QIrreducibility q = q_irreducible(pv, seed + k);
    out.seeds.push_back({seed + k, q.full.prehomogeneous, q.full.regular, q.q_irreducible,
                         q.full.n_fundamental_invariants, q.full.isotropy_dim, q.full.orbit_rank,
                         q.full.form_determinant});
  }
  const SeedVerdict& v = out.seeds.front();
  bool stable = true;
  for (const auto& s : out.seeds)
    stable = stable && s.prehomogeneous == v.prehomogeneous && s.regular == v.regular &&
             s.q_irreducible == v.q_irreducible && s.n_invariants == v.n_invariants &&
             s.isotropy_dim == v.isotropy_dim;
  add("seed stability", "true", yes_no(stable));
  const ExpectedCertificates& e = spec.expected;
  if (e.prehomogeneous) add("prehomogeneous", yes_no(*e.prehomogeneous), yes_no(v.prehomogeneous));
  if (e.regular) add("regular", yes_no(*e.regular), yes_no(v.regular));
  if (e.q_irreducible) add("q_irreducible", yes_no(*e.q_irreducible), yes_no(v.q_irreducible));
  if (e.invariant_count) add("invariant count", std::to_string(*e.invariant_count), std::to_string(v.n_invariants));
  if (e.generic_isotropy_dim)
    add("generic isotropy dim", std::to_string(*e.generic_isotropy_dim), std::to_string(v.isotropy_dim));
  for (const auto& r : e.restrictions) {
    const bool reg = is_regular(restrict(pv, r.components), seed).regular;
    add("restriction to " + names_of(pv, r.components) + " regular", yes_no(r.regular), yes_no(reg));
  }
  for (const auto& rp : spec.reference_points) {
    add("orbit rank at " + rp.label, std::to_string(pv.dim_v), std::to_string(orbit_rank(pv, rp.point)));
    if (rp.isotropy_dim)
      add("isotropy dim at " + rp.label, std::to_string(*rp.isotropy_dim),
          std::to_string(isotropy_algebra(pv, rp.point).size()));
  }
  const GroupSampler sampler = spec.sampler();
  bool all_invariant = !spec.known_invariants.empty();
  for (const auto& f : spec.known_invariants) {
    InvariantCheck ic{f.description, f.degree, std::nullopt, {}};
    try {
      ic.report = verify_invariant(pv, &sampler, f, seed);
    } catch (const Error& err) {
      ic.error = err.what();
    }
    const bool ok = ic.report && ic.report->relatively_invariant && ic.report->homogeneous;
    all_invariant = all_invariant && ok;
    add("relative invariance of " + f.description, "true", yes_no(ok));
    out.invariants.push_back(std::move(ic));
  }
  if (e.regular && *e.regular && all_invariant && e.invariant_count &&
      spec.known_invariants.size() == *e.invariant_count) {
    const PolynomialInvariant f = product(spec.known_invariants);
    std::string observed = "false";
    try {
      const InvariantReport rep = verify_invariant(pv, nullptr, f, seed);
      observed = yes_no(rep.hessian_nonzero && rep.dlog_full_rank);
    } catch (const Error&) {
    }
    add("nondegenerate Hessian and dlog of " + f.description, "true", observed);
  }
  if (!e.filtration.empty()) {
    std::vector<std::vector<std::string>> got;
    try {
      for (const auto& st : decompose_filtration(pv, seed).stages) got.push_back(st.names);
    } catch (const Error&) {
    }
    add("filtration", stages_text(e.filtration), stages_text(got));
  }
  if (e.parabolic_twin) {
    const WeightedDiagram d = parse_diagram(*e.parabolic_twin);
    const ChevalleyAlgebra alg{RootSystem(d.type())};
    const QIrreducibility q = q_irreducible(build_parabolic_pv(d, alg), seed);
    auto quad = [](bool pre, bool reg, std::size_t n, bool qi) {
      return yes_no(pre) + "/" + yes_no(reg) + "/" + std::to_string(n) + "/" + yes_no(qi);
    };
    add("certificates equal " + *e.parabolic_twin,
        quad(v.prehomogeneous, v.regular, v.n_invariants, v.q_irreducible),
        quad(q.full.prehomogeneous, q.full.regular, q.full.n_fundamental_invariants, q.q_irreducible));
  }
  out.passed = std::all_of(out.checks.begin(), out.checks.end(), [](const ModelCheck& c) { return c.pass; });
  return out;
}

}  // namespace pvlab
