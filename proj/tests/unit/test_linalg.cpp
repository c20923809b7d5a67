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

#include <doctest.h>

#include <random>

#include "pvlab/linalg.hpp"

using namespace pvlab;

namespace {

Matrix random_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Vector> r(rows, Vector(cols));
  for (auto& row : r)
    for (auto& x : row) x = d(gen);
  return Matrix::from_rows(r);
}

}  // namespace

TEST_CASE("rank, kernel and determinant agree") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Matrix m = random_matrix(gen, 4, 6);
    const auto ker = kernel(m);
    CHECK(rank(m) + ker.size() == 6);
    for (const auto& v : ker) {
      const Vector mv = m * v;
      for (const auto& x : mv) CHECK(x == 0);
    }
  }
}

TEST_CASE("determinant is multiplicative and the inverse inverts") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(gen, 4, 4), b = random_matrix(gen, 4, 4);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
    if (determinant(a) != 0) {
      const auto inv = inverse(a);
      REQUIRE(inv.has_value());
      CHECK((a * *inv - Matrix::identity(4)).is_zero());
    } else {
      CHECK_FALSE(inverse(a).has_value());
    }
  }
}

TEST_CASE("rational entries stay exact") {
  const Matrix m = Matrix::from_rows({{Rational(1, 3), Rational(1, 2)}, {Rational(1, 5), Rational(1, 7)}});
  CHECK(determinant(m) == Rational(1, 21) - Rational(1, 10));
  Rational q(-6, 4);
  q.canonicalize();
  CHECK(to_string(q) == "-3/2");
  const auto x = solve(m, {1, 0});
  REQUIRE(x.has_value());
  CHECK((m * *x)[0] == 1);
  CHECK((m * *x)[1] == 0);
}
