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

#include <numeric>

#include "homsys/reductions.hpp"
#include "homsys/verification.hpp"
#include "test_util.hpp"

using namespace homsys;
using namespace testutil;

namespace {

// Subset-sum by enumerating every sign vector.
bool partition_by_signs(const std::vector<std::uint64_t>& w) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w.size()); ++mask) {
    long long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += (mask >> i & 1) ? static_cast<long long>(w[i]) : -static_cast<long long>(w[i]);
    if (s == 0) return true;
  }
  return false;
}

bool vanishes_everywhere(const std::vector<Poly>& polys, const std::vector<FieldElem>& pt) {
  for (const auto& f : polys)
    if (!poly_eval(f, pt).is_zero()) return false;
  return true;
}

// Calls fn on every point of F^n (F finite).
template <class Fn>
void for_each_point(FieldRef F, std::size_t n, Fn&& fn) {
  const std::uint64_t q = *F->order();
  std::vector<std::uint64_t> idx(n, 0);
  std::vector<FieldElem> pt(n, FieldElem::zero(F));
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) pt[i] = FieldElem::from_packed(F, idx[i]);
    fn(pt);
    std::size_t k = 0;
    while (k < n && ++idx[k] == q) idx[k++] = 0;
    if (k == n) return;
  }
}

long long max_abs_coefficient(const PolySystem& sys) {
  long long m = 0;
  for (const auto& f : sys.polys())
    for (const auto& [e, c] : f.terms()) {
      REQUIRE(c.rational().get_den() == 1);
      m = std::max<long long>(m, std::abs(c.rational().get_num().get_si()));
    }
  return m;
}

}  // namespace

TEST_CASE("partition system for weights (1,1,2)") {
  const PolySystem sys = partition_to_system({{1, 1, 2}});
  FieldRef qq = sys.ctx();
  auto x = [&](std::size_t i) { return var(qq, 4, i); };
  REQUIRE(sys.size() == 4);
  CHECK(sys[0] == x(0).pow(2) - x(1).pow(2));
  CHECK(sys[1] == x(0).pow(2) - x(2).pow(2));
  CHECK(sys[2] == x(0).pow(2) - x(3).pow(2));
  CHECK(sys[3] == x(1) + x(2) + x(3).scaled(num(qq, 2)));
  CHECK(sys.is_square());
  CHECK(vanishes_everywhere(sys.polys(), {num(qq, 1), num(qq, 1), num(qq, 1), num(qq, -1)}));
  CHECK(structured_sign_oracle(sys).status == Status::Satisfiable);
}

TEST_CASE("partition with a single odd weight has only the trivial root") {
  CHECK(structured_sign_oracle(partition_to_system({{1}})).status == Status::Unsatisfiable);
  CHECK_FALSE(partition_feasible({{1}}));
}

TEST_CASE("partition (3,5,8) splits as 3+5 against 8") {
  const PolySystem sys = partition_to_system({{3, 5, 8}});
  const Verdict v = structured_sign_oracle(sys);
  REQUIRE(v.status == Status::Satisfiable);
  REQUIRE(v.witness.has_value());
  CHECK(witness_vanishes(sys, *v.witness));
  const auto& a = v.witness->values;
  // (+,+,-) up to a global sign flip
  CHECK((a[1] == a[0] || a[1] == -a[0]));
  CHECK(a[2] == a[1]);
  CHECK(a[3] == -a[1]);
  CHECK_FALSE(a[0].is_zero());
  CHECK(partition_feasible({{3, 5, 8}}));
}

TEST_CASE("bounded partition system has small coefficients and degrees") {
  const PolySystem sys = partition_bounded_system({{1, 1, 2}});
  CHECK(max_abs_coefficient(sys) == 2);
  for (unsigned d : sys.degrees()) CHECK(d <= 2);
  CHECK(sys.is_square());
  CHECK(structured_sign_oracle(sys).status == structured_sign_oracle(partition_to_system({{1, 1, 2}})).status);
}

TEST_CASE("bounded partition with weight zero") {
  const PolySystem sys = partition_bounded_system({{0}});
  CHECK(sys.is_square());
  const Verdict v = structured_sign_oracle(sys);
  REQUIRE(v.status == Status::Satisfiable);
  const auto& names = sys.var_names();
  const auto w10 = std::find(names.begin(), names.end(), "W1_0") - names.begin();
  REQUIRE(static_cast<std::size_t>(w10) < names.size());
  CHECK(v.witness->values[static_cast<std::size_t>(w10)].is_zero());
}

TEST_CASE("bounded partition chain for weight 5") {
  const PolySystem sys = partition_bounded_system({{5}});
  FieldRef qq = sys.ctx();
  // x0 x1 W1_0 W1_1 W1_2
  REQUIRE(sys.num_vars() == 5);
  auto v = [&](std::size_t i) { return var(qq, 5, i); };
  const Poly two = cst(qq, 5, 2);
  std::vector<Poly> expected_chain = {v(4) - v(0), v(3) - two * v(4), v(2) - (two * v(3) + v(0))};
  for (const auto& row : expected_chain) CHECK(std::find(sys.polys().begin(), sys.polys().end(), row) != sys.polys().end());
  // The chain is triangular; solving it at x0 = 1 gives W1_0 = 5.
  std::vector<FieldElem> pt = {num(qq, 1), num(qq, 1), num(qq, 0), num(qq, 0), num(qq, 1)};
  pt[3] = num(qq, 2) * pt[4];
  pt[2] = num(qq, 2) * pt[3] + pt[0];
  CHECK(pt[2] == num(qq, 5));
  for (const auto& row : expected_chain) CHECK(poly_eval(row, pt).is_zero());
}

TEST_CASE("partition encoders agree with subset sum on random instances") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> len(1, 7), wd(0, 20);
  for (int t = 0; t < 150; ++t) {
    PartitionInstance inst;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) inst.weights.push_back(static_cast<std::uint64_t>(wd(rng)));
    const bool truth = partition_by_signs(inst.weights);
    CHECK(partition_feasible(inst) == truth);
    CHECK((structured_sign_oracle(partition_to_system(inst)).status == Status::Satisfiable) == truth);
    const PolySystem b = partition_bounded_system(inst);
    CHECK((structured_sign_oracle(b).status == Status::Satisfiable) == truth);
    CHECK(max_abs_coefficient(b) <= 2);
  }
}

TEST_CASE("partition instances are validated") {
  CHECK_THROWS(partition_to_system({{}}));
  CHECK_THROWS(partition_bounded_system({{}}));
}

TEST_CASE("cnf_to_boolsys examples") {
  {
    const BoolsysInstance b = cnf_to_boolsys({1, {{1}}});
    REQUIRE(b.equations.size() == 2);
    const auto* d = std::get_if<Disjunction>(&b.equations[0]);
    REQUIRE(d);
    CHECK(d->j == 1);
    CHECK(d->k == 1);
    const auto* t = std::get_if<IsTrue>(&b.equations[1]);
    REQUIRE(t);
    CHECK(t->i == d->i);
  }
  {
    const BoolsysInstance b = cnf_to_boolsys({2, {{1, -2}}});
    REQUIRE(b.equations.size() == 3);
    const auto* n = std::get_if<Negation>(&b.equations[0]);
    REQUIRE(n);
    CHECK(n->j == 2);
    const auto* d = std::get_if<Disjunction>(&b.equations[1]);
    REQUIRE(d);
    CHECK(d->j == 1);
    CHECK(d->k == n->i);
    REQUIRE(std::holds_alternative<IsTrue>(b.equations[2]));
    CHECK(std::get<IsTrue>(b.equations[2]).i == d->i);
  }
  CHECK_FALSE(boolsys_satisfiable(cnf_to_boolsys({1, {{1}, {-1}}})));
}

TEST_CASE("cnf_to_boolsys preserves satisfying assignments on original variables") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 200; ++t) {
    CnfFormula phi;
    phi.num_vars = 1 + static_cast<unsigned>(rng() % 3);
    const unsigned clauses = 1 + static_cast<unsigned>(rng() % 4);
    for (unsigned c = 0; c < clauses; ++c) {
      std::vector<int> cl;
      const unsigned width = 1 + static_cast<unsigned>(rng() % 3);
      for (unsigned l = 0; l < width; ++l) {
        const int v = 1 + static_cast<int>(rng() % phi.num_vars);
        cl.push_back(rng() % 2 ? v : -v);
      }
      phi.clauses.push_back(cl);
    }
    const BoolsysInstance b = cnf_to_boolsys(phi);
    CHECK(boolsys_satisfiable(b) == cnf_satisfiable(phi));
    const unsigned aux = b.num_vars - phi.num_vars;
    for (std::uint64_t orig = 0; orig < (std::uint64_t{1} << phi.num_vars); ++orig) {
      bool phi_true = true;
      for (const auto& cl : phi.clauses) {
        bool s = false;
        for (int lit : cl) s = s || (((orig >> (std::abs(lit) - 1)) & 1) == (lit > 0 ? 1u : 0u));
        phi_true = phi_true && s;
      }
      unsigned extensions = 0;
      for (std::uint64_t ext = 0; ext < (std::uint64_t{1} << aux); ++ext) {
        std::vector<bool> a(b.num_vars + 1);
        for (unsigned v = 1; v <= phi.num_vars; ++v) a[v] = (orig >> (v - 1)) & 1;
        for (unsigned v = 0; v < aux; ++v) a[phi.num_vars + 1 + v] = (ext >> v) & 1;
        bool ok = true;
        for (const auto& eq : b.equations) ok = ok && holds(eq, a);
        extensions += ok;
      }
      CHECK(extensions == (phi_true ? 1u : 0u));
    }
  }
}

TEST_CASE("boolsys encoding examples") {
  {
    FieldRef f3 = FieldCtx::prime(3);
    const PolySystem sys = boolsys_to_system({1, {IsTrue{1}}}, f3);
    auto x = [&](std::size_t i) { return var(f3, 2, i); };
    REQUIRE(sys.size() == 2);
    CHECK(sys[0] == x(0).pow(2) - x(1).pow(2));
    CHECK(sys[1] == x(0) * (x(1) + x(0)));
    CHECK(vanishes_everywhere(sys.polys(), {num(f3, 1), num(f3, 2)}));
    CHECK_FALSE(vanishes_everywhere(sys.polys(), {num(f3, 1), num(f3, 1)}));
  }
  {
    const PolySystem sys = boolsys_to_system({1, {IsTrue{1}, Negation{1, 1}}}, FieldCtx::rationals());
    CHECK(structured_sign_oracle(sys).status == Status::Unsatisfiable);
  }
  {
    FieldRef f2 = FieldCtx::prime(2);
    const PolySystem sys = boolsys_to_system({1, {IsTrue{1}}}, f2);
    auto x = [&](std::size_t i) { return var(f2, 2, i); };
    CHECK(sys[0] == x(0) * x(1) - x(1).pow(2));
    CHECK(sys[1] == x(0) * (x(1) + x(0)));
    CHECK(vanishes_everywhere(sys.polys(), {num(f2, 1), num(f2, 1)}));
  }
}

TEST_CASE("boolsys encodings are homogeneous quadrics") {
  for (FieldRef F : {FieldCtx::rationals(), FieldCtx::prime(2), FieldCtx::prime(3)}) {
    const PolySystem sys = boolsys_to_system({3, {IsTrue{1}, Negation{2, 1}, Disjunction{3, 1, 2}}}, F);
    for (unsigned d : sys.degrees()) CHECK(d == 2);
    CHECK(sys.size() == 6);
  }
}

TEST_CASE("boolsys roots follow the truth convention") {
  // Every satisfying assignment gives a root: a_i = -a_0 for true (odd
  // characteristic) or a_i = a_0 for true (characteristic 2).
  const BoolsysInstance b{3, {Disjunction{3, 1, 2}, Negation{2, 1}}};
  for (FieldRef F : {FieldCtx::prime(2), FieldCtx::prime(3), FieldCtx::prime(5)}) {
    const PolySystem sys = boolsys_to_system(b, F);
    const bool c2 = F->characteristic() == 2;
    for (unsigned mask = 0; mask < 8; ++mask) {
      std::vector<bool> a(4);
      std::vector<FieldElem> pt{num(F, 1)};
      for (unsigned v = 1; v <= 3; ++v) {
        a[v] = (mask >> (v - 1)) & 1;
        pt.push_back(c2 ? num(F, a[v] ? 1 : 0) : num(F, a[v] ? -1 : 1));
      }
      bool ok = true;
      for (const auto& eq : b.equations) ok = ok && holds(eq, a);
      CHECK(vanishes_everywhere(sys.polys(), pt) == ok);
    }
  }
}

TEST_CASE("boolsys instances are validated") {
  CHECK_THROWS(boolsys_to_system({1, {IsTrue{2}}}, FieldCtx::rationals()));
  CHECK_THROWS(boolsys_to_system({1, {}}, FieldCtx::rationals()));
  CHECK_THROWS(boolsys_to_system({2, {Disjunction{0, 1, 2}}}, FieldCtx::rationals()));
}

TEST_CASE("spurious fixture has a root at infinity") {
  const PolySystem sys = spurious_example_system();
  FieldRef qq = sys.ctx();
  REQUIRE(sys.size() == 10);
  REQUIRE(sys.num_vars() == 10);
  CHECK(sys.var_names()[0] == "x");
  CHECK(sys.var_names()[1] == "x0");
  std::vector<FieldElem> pt(10, num(qq, 0));
  pt[8] = pt[9] = num(qq, 1);
  CHECK(vanishes_everywhere(sys.polys(), pt));
  pt[8] = pt[9] = num(qq, -7);
  CHECK(vanishes_everywhere(sys.polys(), pt));
  std::vector<FieldElem> ones(10, num(qq, 1));
  CHECK(poly_eval(sys[0], ones) == num(qq, 13));
  CHECK(vanishes_everywhere(sys.polys(), std::vector<FieldElem>(10, num(qq, 0))));
}

TEST_CASE("hhn_to_hn examples") {
  FieldRef qq = FieldCtx::rationals();
  {
    const AffineSystem a = hhn_to_hn(PolySystem(qq, {"x1"}, {var(qq, 1, 0).pow(2)}));
    REQUIRE(a.polys.size() == 2);
    CHECK(a.var_names.size() == 2);
    CHECK(a.polys[1] == var(qq, 2, 0) * var(qq, 2, 1) - cst(qq, 2, 1));
  }
  {
    const AffineSystem a = hhn_to_hn(PolySystem(qq, {"x0", "x1"}, {var(qq, 2, 0).pow(2) - var(qq, 2, 1).pow(2)}));
    CHECK(vanishes_everywhere(a.polys, {num(qq, 1), num(qq, 1), num(qq, 1), num(qq, 0)}));
  }
  {
    const AffineSystem a = hhn_to_hn(PolySystem(qq, {"x0", "x1"}, {var(qq, 2, 0) * var(qq, 2, 1)}));
    CHECK(vanishes_everywhere(a.polys, {num(qq, 1), num(qq, 0), num(qq, 1), num(qq, 0)}));
  }
}

TEST_CASE("hhn_to_hn is equisatisfiable over GF(3)") {
  FieldRef f3 = FieldCtx::prime(3);
  std::mt19937_64 rng(33);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<Poly> polys;
    const std::size_t count = 1 + rng() % 3;
    for (std::size_t i = 0; i < count; ++i) polys.push_back(random_form(f3, n, 1 + static_cast<unsigned>(rng() % 2), rng, 0.6));
    const PolySystem sys(f3, indexed_names("x", n), polys);
    bool projective = false;
    for_each_point(f3, n, [&](const std::vector<FieldElem>& pt) {
      bool nz = false;
      for (const auto& v : pt) nz = nz || !v.is_zero();
      if (nz && vanishes_everywhere(sys.polys(), pt)) projective = true;
    });
    const AffineSystem a = hhn_to_hn(sys);
    bool affine = false;
    for_each_point(f3, 2 * n, [&](const std::vector<FieldElem>& pt) {
      if (vanishes_everywhere(a.polys, pt)) affine = true;
    });
    CHECK(projective == affine);
  }
}
