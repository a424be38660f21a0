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

#include "homsys/gf_poly.hpp"
#include "homsys/small_field.hpp"
#include "homsys/verification.hpp"
#include "test_util.hpp"

using namespace homsys;
using namespace testutil;

namespace {

// Independent irreducibility oracle: trial division by every monic
// polynomial of degree 1..deg/2, enumerated by brute force.
bool irreducible_by_trial_division(const gf::Coeffs& f, std::uint64_t p) {
  const int n = gf::degree(f);
  for (int d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      gf::Coeffs g(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t v = idx;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = v % p;
        v /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      // Long division of f by monic g.
      gf::Coeffs r = f;
      for (int k = n; k >= d; --k) {
        const std::uint64_t c = r[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        for (int i = 0; i <= d; ++i) {
          auto& slot = r[static_cast<std::size_t>(k - d + i)];
          slot = (slot + p * p - c * g[static_cast<std::size_t>(i)] % p) % p;
        }
      }
      bool zero = true;
      for (int i = 0; i < d; ++i)
        if (r[static_cast<std::size_t>(i)] != 0) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

gf::Coeffs monic_from_index(std::uint64_t idx, int deg, std::uint64_t p) {
  gf::Coeffs f(static_cast<std::size_t>(deg) + 1, 0);
  for (int i = 0; i < deg; ++i) {
    f[static_cast<std::size_t>(i)] = idx % p;
    idx /= p;
  }
  f[static_cast<std::size_t>(deg)] = 1;
  return f;
}

}  // namespace

TEST_CASE("prime field multiplication reduces mod p") {
  FieldRef f5 = FieldCtx::prime(5);
  CHECK(field_arith(num(f5, 3), num(f5, 4), ArithOp::Mul) == num(f5, 2));
  CHECK((num(f5, 3) - num(f5, 4)).packed() == 4);
  CHECK(num(f5, -3).packed() == 2);
}

TEST_CASE("extension multiplication reduces by the modulus") {
  FieldRef f4 = FieldCtx::extension(2, {1, 1, 1});
  const FieldElem X = FieldElem::generator(f4);
  CHECK(field_arith(X, X, ArithOp::Mul) == X + FieldElem::one(f4));
  CHECK(f4->describe() == "GF(2)[t]/(t^2+t+1)");
  CHECK((X * X).to_string() == "(t+1)");
}

TEST_CASE("rational arithmetic is exact and canonical") {
  FieldRef qq = FieldCtx::rationals();
  const FieldElem a = FieldElem::from_rational(qq, mpq_class(1, 3)), b = FieldElem::from_rational(qq, mpq_class(1, 6));
  CHECK(field_arith(a, b, ArithOp::Add) == FieldElem::from_rational(qq, mpq_class(1, 2)));
  const FieldElem c = FieldElem::from_rational(qq, mpq_class(2, -4));
  CHECK(c.rational().get_den() == 2);
  CHECK(c.rational().get_num() == -1);
}

TEST_CASE("division by zero and mixed contexts are rejected") {
  FieldRef f5 = FieldCtx::prime(5), f7 = FieldCtx::prime(7), qq = FieldCtx::rationals();
  CHECK_THROWS(field_arith(num(f5, 1), FieldElem::zero(f5), ArithOp::Div));
  CHECK_THROWS(FieldElem::zero(qq).inverse());
  CHECK_THROWS_AS(num(f5, 1) + num(f7, 1), FieldMismatch);
  CHECK_THROWS_AS(num(f5, 1) == num(qq, 1), FieldMismatch);
}

TEST_CASE("field contexts validate their parameters") {
  CHECK_THROWS(FieldCtx::prime(4));
  CHECK_THROWS(FieldCtx::prime(1));
  CHECK_THROWS(FieldCtx::extension(2, {1, 0, 1}));  // (X+1)^2
  CHECK_THROWS(FieldCtx::extension(3, {1, 0, 2}));  // not monic
  CHECK(FieldCtx::prime(5) == FieldCtx::prime(5));
  CHECK(FieldCtx::galois(2, 2)->order() == 4u);
  CHECK(FieldCtx::rationals()->describe() == "QQ");
  CHECK(FieldCtx::prime(5)->describe() == "GF(5)");
}

TEST_CASE("rabin irreducibility on small examples") {
  CHECK(gf::rabin_irreducible({1, 1, 1}, 2));
  CHECK_FALSE(gf::rabin_irreducible({1, 0, 1}, 2));
  CHECK(gf::rabin_irreducible({1, 0, 1}, 3));
  CHECK_THROWS(gf::rabin_irreducible({1, 0, 2}, 3));
  CHECK_THROWS(gf::rabin_irreducible({1}, 3));
}

TEST_CASE("rabin agrees with trial division for every monic polynomial of degree <= 4 over GF(2) and GF(3)") {
  for (std::uint64_t p : {2u, 3u}) {
    for (int deg = 1; deg <= 4; ++deg) {
      std::uint64_t count = 1;
      for (int i = 0; i < deg; ++i) count *= p;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        const auto f = monic_from_index(idx, deg, p);
        CHECK_MESSAGE(gf::rabin_irreducible(f, p) == irreducible_by_trial_division(f, p), gf::to_string(f) << " over GF(" << p << ")");
      }
    }
  }
}

TEST_CASE("find_irreducible returns the first irreducible in coefficient order") {
  CHECK(gf::find_irreducible(2, 1) == gf::Coeffs{0, 1});
  CHECK(gf::find_irreducible(2, 2) == gf::Coeffs{1, 1, 1});
  CHECK(gf::find_irreducible(5, 2) == gf::Coeffs{2, 0, 1});
  for (auto [p, deg] : std::vector<std::pair<std::uint64_t, int>>{{3, 3}, {2, 5}, {5, 3}, {7, 2}}) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    gf::Coeffs expected;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      auto f = monic_from_index(idx, deg, p);
      if (irreducible_by_trial_division(f, p)) {
        expected = f;
        break;
      }
    }
    CHECK(gf::find_irreducible(p, static_cast<unsigned>(deg)) == expected);
    CHECK(gf::find_irreducible(p, static_cast<unsigned>(deg)) == gf::find_irreducible(p, static_cast<unsigned>(deg)));
  }
  CHECK(gf::find_irreducible(3, 3) == gf::Coeffs{1, 2, 0, 1});
}

TEST_CASE("field axioms on random samples") {
  std::vector<FieldRef> fields = {FieldCtx::rationals(), FieldCtx::prime(2), FieldCtx::prime(3), FieldCtx::prime(5),
                                  FieldCtx::prime(7), FieldCtx::galois(2, 2), FieldCtx::galois(3, 3)};
  std::mt19937_64 rng(11);
  for (FieldRef F : fields) {
    for (int trial = 0; trial < 200; ++trial) {
      const FieldElem a = random_elem(F, rng), b = random_elem(F, rng), c = random_elem(F, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == FieldElem::zero(F));
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == FieldElem::one(F));
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("every nonzero element of small fields is invertible") {
  for (FieldRef F : {FieldCtx::prime(7), FieldCtx::galois(2, 3), FieldCtx::galois(3, 2)}) {
    for (std::uint64_t i = 1; i < *F->order(); ++i) {
      const FieldElem a = FieldElem::from_packed(F, i);
      CHECK(a * a.inverse() == FieldElem::one(F));
      CHECK(a.pow(*F->order() - 1) == FieldElem::one(F));
    }
  }
}

TEST_CASE("SmallField tables agree with direct arithmetic") {
  for (FieldRef F : {FieldCtx::prime(5), FieldCtx::galois(3, 2), FieldCtx::galois(2, 4)}) {
    const SmallField sf(F);
    const std::uint64_t q = *F->order();
    for (std::uint64_t i = 0; i < q; ++i) {
      for (std::uint64_t j = 0; j < q; ++j) {
        const FieldElem a = FieldElem::from_packed(F, i), b = FieldElem::from_packed(F, j);
        const auto x = sf.from_elem(a), y = sf.from_elem(b);
        CHECK(sf.to_elem(sf.add(x, y)) == a + b);
        CHECK(sf.to_elem(sf.mul(x, y)) == a * b);
      }
      CHECK(sf.to_elem(sf.neg(sf.from_packed(i))) == -FieldElem::from_packed(F, i));
    }
  }
  CHECK_THROWS(SmallField(FieldCtx::rationals()));
}

TEST_CASE("field maps between extensions are homomorphisms") {
  FieldRef f4 = FieldCtx::extension(2, {1, 1, 1}), f16 = FieldCtx::galois(2, 4);
  const FieldMap m = FieldMap::find(f4, f16);
  for (std::uint64_t i = 0; i < 4; ++i) {
    for (std::uint64_t j = 0; j < 4; ++j) {
      const FieldElem a = FieldElem::from_packed(f4, i), b = FieldElem::from_packed(f4, j);
      CHECK(m(a + b) == m(a) + m(b));
      CHECK(m(a * b) == m(a) * m(b));
    }
  }
  CHECK(m(FieldElem::one(f4)) == FieldElem::one(f16));
  CHECK_THROWS(FieldMap::find(f4, FieldCtx::galois(2, 3)));
  CHECK(embed(num(FieldCtx::prime(2), 1), f16) == FieldElem::one(f16));
}
