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

#include "pvlab/chevalley.hpp"

#include <stdexcept>

namespace pvlab {

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)) {
  const std::size_t m = rs_.num_roots();
  const int n = rs_.rank();
  sum_.assign(m * m, -1);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Root s = rs_.root(a);
      for (int i = 0; i < n; ++i) s[i] += rs_.root(b)[i];
      if (auto idx = rs_.index_of(s)) sum_[a * m + b] = static_cast<long>(*idx);
    }
  coroots_.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const int len = rs_.norm(rs_.root(r));
    coroots_[r].resize(n);
    for (int i = 0; i < n; ++i) {
      const int num = rs_.root(r)[i] * rs_.node_length(i + 1);
      if (num % len != 0) throw std::logic_error("non-integral coroot");
      coroots_[r][i] = num / len;
    }
  }
  compute_structure_constants();
  compute_killing();
}

namespace {

int exact_div(long num, long den) {
  if (den == 0 || num % den != 0) throw std::logic_error("structure constant recursion is not integral");
  return static_cast<int>(num / den);
}

}  // namespace

// Mixed-sign and negative pairs reduce to positive pairs through
// N_{-a,-b} = -N_{a,b} and N_{a,b}/|c|^2 = N_{b,c}/|a|^2 = N_{c,a}/|b|^2
// for a+b+c = 0.
int ChevalleyAlgebra::any_pair(std::size_t a, std::size_t b) const {
  const std::size_t m = rs_.num_roots();
  const long s = sum_[a * m + b];
  if (s < 0) return 0;
  const bool pa = rs_.is_positive(a);
  const bool pb = rs_.is_positive(b);
  if (pa && pb) return n_[a * m + b];
  if (!pa && !pb) return -n_[rs_.negative_of(a) * m + rs_.negative_of(b)];
  if (!pa) return -any_pair(b, a);
  const std::size_t c = rs_.negative_of(static_cast<std::size_t>(s));
  const long lc = rs_.norm(rs_.root(c));
  if (rs_.is_positive(static_cast<std::size_t>(s))) {
    // b, c negative: N_{b,c} = -N_{-b,-c}.
    const int nbc = -n_[rs_.negative_of(b) * m + rs_.negative_of(c)];
    return exact_div(lc * nbc, rs_.norm(rs_.root(a)));
  }
  const int nca = n_[c * m + a];
  return exact_div(lc * nca, rs_.norm(rs_.root(b)));
}

void ChevalleyAlgebra::compute_structure_constants() {
  const std::size_t m = rs_.num_roots();
  const std::size_t npos = rs_.num_positive();
  n_.assign(m * m, 0);
  auto string_p = [&](std::size_t a, std::size_t b) {
    // max k with root(b) - k root(a) a root.
    int p = 0;
    Root r = rs_.root(b);
    while (true) {
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= rs_.root(a)[i];
      if (!rs_.index_of(r)) return p;
      ++p;
    }
  };
  for (std::size_t xi = 0; xi < npos; ++xi) {
    long a1 = -1;
    long b1 = -1;
    for (std::size_t a = 0; a < npos && a1 < 0; ++a) {
      const std::size_t neg = rs_.negative_of(a);
      const long d = sum_[xi * m + neg];
      if (d >= 0 && rs_.is_positive(static_cast<std::size_t>(d))) {
        a1 = static_cast<long>(a);
        b1 = d;
      }
    }
    if (a1 < 0) continue;
    const int extra = string_p(a1, b1) + 1;
    n_[a1 * m + b1] = extra;
    n_[b1 * m + a1] = -extra;
    const long lxi = rs_.norm(rs_.root(xi));
    for (std::size_t a = static_cast<std::size_t>(a1) + 1; a < npos; ++a) {
      const long bl = sum_[xi * m + rs_.negative_of(a)];
      if (bl < 0 || !rs_.is_positive(static_cast<std::size_t>(bl))) continue;
      const auto b = static_cast<std::size_t>(bl);
      if (b <= a || b == static_cast<std::size_t>(b1)) continue;
      const std::size_t na1 = rs_.negative_of(a1);
      const std::size_t nb1 = rs_.negative_of(b1);
      // Jacobi on (a, b, -a1, -b1) with no opposite pair.
      Rational acc;
      const long s1 = sum_[b * m + na1];
      if (s1 >= 0) {
        Rational t = static_cast<long>(any_pair(b, na1)) * any_pair(a, nb1);
        acc += t * lxi / rs_.norm(rs_.root(s1));
      }
      const long s2 = sum_[a * m + na1];
      if (s2 >= 0) {
        Rational t = static_cast<long>(any_pair(na1, a)) * any_pair(b, nb1);
        acc += t * lxi / rs_.norm(rs_.root(s2));
      }
      acc /= extra;
      if (acc.get_den() != 1) throw std::logic_error("structure constant recursion is not integral");
      const int value = static_cast<int>(acc.get_num().get_si());
      n_[a * m + b] = value;
      n_[b * m + a] = -value;
    }
  }
  std::vector<int> full(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) full[a * m + b] = any_pair(a, b);
  n_ = std::move(full);
}

std::vector<SparseTerm> ChevalleyAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  const std::size_t n = rank();
  if (i < n && j < n) return {};
  if (i < n) {
    const std::size_t r = j - n;
    const int w = rs_.pairing(rs_.root(r), static_cast<int>(i) + 1);
    if (w == 0) return {};
    return {{j, w}};
  }
  if (j < n) {
    auto t = bracket_basis(j, i);
    for (auto& [idx, c] : t) c = -c;
    return t;
  }
  const std::size_t a = i - n;
  const std::size_t b = j - n;
  if (b == rs_.negative_of(a)) {
    std::vector<SparseTerm> out;
    for (std::size_t k = 0; k < n; ++k)
      if (coroots_[a][k] != 0) out.emplace_back(k, coroots_[a][k]);
    return out;
  }
  const long s = root_sum(a, b);
  if (s < 0) return {};
  return {{n + static_cast<std::size_t>(s), structure_constant(a, b)}};
}

Vector ChevalleyAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim());
  Rational t;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      for (const auto& [k, c] : bracket_basis(i, j)) {
        t = x[i] * y[j];
        t *= c;
        out[k] += t;
      }
    }
  }
  return out;
}

Matrix ChevalleyAlgebra::adjoint_basis_matrix(std::size_t i) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [k, c] : bracket_basis(i, j)) m(k, j) += c;
  return m;
}

Matrix ChevalleyAlgebra::adjoint_matrix(const Vector& x) const {
  Matrix m(dim(), dim());
  Rational t;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : bracket_basis(i, j)) {
        t = x[i] * c;
        m(k, j) += t;
      }
  }
  return m;
}

void ChevalleyAlgebra::compute_killing() {
  const std::size_t d = dim();
  killing_ = Matrix(d, d);
  // tr(ad x ad y) on basis pairs; only weight-zero pairs contribute.
  auto trace_pair = [&](std::size_t x, std::size_t y) {
    long tr = 0;
    for (std::size_t z = 0; z < d; ++z)
      for (const auto& [w, c1] : bracket_basis(y, z))
        for (const auto& [u, c2] : bracket_basis(x, w))
          if (u == z) tr += static_cast<long>(c1) * c2;
    return tr;
  };
  const std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) killing_(i, j) = trace_pair(i, j);
  for (std::size_t r = 0; r < rs_.num_roots(); ++r)
    killing_(n + r, n + rs_.negative_of(r)) = trace_pair(n + r, n + rs_.negative_of(r));
}

Rational ChevalleyAlgebra::killing_form(const Vector& x, const Vector& y) const {
  Rational s, t;
  const std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      t = x[i] * y[j];
      t *= killing_(i, j);
      s += t;
    }
  }
  for (std::size_t r = 0; r < rs_.num_roots(); ++r) {
    const std::size_t a = n + r;
    const std::size_t b = n + rs_.negative_of(r);
    if (sgn(x[a]) == 0 || sgn(y[b]) == 0) continue;
    t = x[a] * y[b];
    t *= killing_(a, b);
    s += t;
  }
  return s;
}

}  // namespace pvlab
