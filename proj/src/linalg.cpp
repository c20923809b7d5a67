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

#include "pvlab/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace pvlab {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t height) {
  Matrix m(height, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != height) throw std::invalid_argument("column height mismatch");
    for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in product");
  Matrix c(a.rows(), b.cols());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) == 0) continue;
        t = aik * b(k, j);
        c(i, j) += t;
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch in sum");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch in difference");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

Vector operator*(const Matrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("shape mismatch in matrix-vector product");
  Vector out(a.rows());
  Rational t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0 || sgn(v[j]) == 0) continue;
      t = a(i, j) * v[j];
      out[i] += t;
    }
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch in dot");
  Rational s, t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    t = a[i] * b[i];
    s += t;
  }
  return s;
}

namespace {

// Forward elimination in place. Returns pivot columns; tracks the sign of
// row swaps when `swaps` is given.
std::vector<std::size_t> forward_eliminate(Matrix& m, int* swap_sign) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational f, t;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      if (swap_sign) *swap_sign = -*swap_sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (sgn(m(i, c)) == 0) continue;
      f = m(i, c) / m(r, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        if (sgn(m(r, j)) == 0) continue;
        t = f * m(r, j);
        m(i, j) -= t;
      }
      m(i, c) = 0;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon row_reduce(Matrix m) {
  auto pivots = forward_eliminate(m, nullptr);
  Rational f, t;
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    if (m(k, c) != 1) {
      f = 1 / m(k, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(k, j)) != 0) m(k, j) *= f;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(k, j)) == 0) continue;
        t = f * m(k, j);
        m(i, j) -= t;
      }
    }
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(Matrix m) {
  if (m.rows() > m.cols()) m = m.transpose();
  return forward_eliminate(m, nullptr).size();
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  int sign = 1;
  auto pivots = forward_eliminate(m, &sign);
  if (pivots.size() < m.rows()) return 0;
  Rational d = sign;
  for (std::size_t i = 0; i < m.rows(); ++i) d *= m(i, i);
  return d;
}

std::vector<Vector> kernel(Matrix m) {
  const std::size_t n = m.cols();
  Echelon e = row_reduce(std::move(m));
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

}  // namespace pvlab
