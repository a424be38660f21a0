/*
   Copyright 2026 The homsys Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "homsys/linalg.hpp"
#include "test_util.hpp"

using namespace homsys;
using namespace testutil;

namespace {

// Leibniz expansion over all permutations.
FieldElem leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FieldElem total = FieldElem::zero(m.ctx());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    FieldElem term = FieldElem::one(m.ctx());
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Matrix random_matrix(FieldRef F, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(F, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_elem(F, rng);
  return m;
}

}  // namespace

TEST_CASE("determinant matches Leibniz expansion") {
  std::mt19937_64 rng(21);
  for (FieldRef F : {FieldCtx::rationals(), FieldCtx::prime(2), FieldCtx::prime(5), FieldCtx::galois(3, 2)}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (int t = 0; t < 15; ++t) {
        const Matrix m = random_matrix(F, n, n, rng);
        CHECK(determinant(m) == leibniz(m));
      }
    }
  }
}

TEST_CASE("determinant of small fixed matrices") {
  FieldRef qq = FieldCtx::rationals();
  Matrix m(qq, 2, 2);
  m(0, 0) = num(qq, 1);
  m(0, 1) = num(qq, 2);
  m(1, 0) = num(qq, 3);
  m(1, 1) = num(qq, 4);
  CHECK(determinant(m) == num(qq, -2));
  Matrix z(qq, 3, 3);
  CHECK(determinant(z).is_zero());
  CHECK_THROWS(determinant(Matrix(qq, 2, 3)));
  CHECK(determinant(Matrix(qq, 0, 0)) == num(qq, 1));
}

TEST_CASE("solve and kernel satisfy their equations") {
  std::mt19937_64 rng(22);
  for (FieldRef F : {FieldCtx::rationals(), FieldCtx::prime(3), FieldCtx::galois(2, 2)}) {
    for (int t = 0; t < 40; ++t) {
      const Matrix a = random_matrix(F, 3, 4, rng);
      std::vector<FieldElem> b = random_point(F, 3, rng);
      const auto x = solve(a, b);
      if (x) {
        for (std::size_t i = 0; i < 3; ++i) {
          FieldElem s = FieldElem::zero(F);
          for (std::size_t j = 0; j < 4; ++j) s += a(i, j) * (*x)[j];
          CHECK(s == b[i]);
        }
      } else {
        CHECK(rank(a) < 3);
      }
      const auto k = kernel_vector(a);
      REQUIRE(k.has_value());  // 3 x 4 always has a kernel
      bool nonzero = false;
      for (const auto& v : *k) nonzero = nonzero || !v.is_zero();
      CHECK(nonzero);
      for (std::size_t i = 0; i < 3; ++i) {
        FieldElem s = FieldElem::zero(F);
        for (std::size_t j = 0; j < 4; ++j) s += a(i, j) * (*k)[j];
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("rank is consistent with the determinant") {
  std::mt19937_64 rng(23);
  FieldRef f2 = FieldCtx::prime(2);
  for (int t = 0; t < 100; ++t) {
    const Matrix m = random_matrix(f2, 4, 4, rng);
    CHECK((rank(m) == 4) == !determinant(m).is_zero());
    CHECK(kernel_vector(m).has_value() == (rank(m) < 4));
  }
}
