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

#include "homsys/reductions.hpp"
#include "homsys/squaring.hpp"
#include "homsys/system_io.hpp"
#include "test_util.hpp"

using namespace homsys;
using namespace testutil;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_system(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("parse a prime-field system") {
  const PolySystem sys = parse_system("field 5\nvars x0 x1\npoly 1 x0^2 + -1 x1^2\n");
  FieldRef f5 = FieldCtx::prime(5);
  CHECK(sys.ctx() == f5);
  CHECK(sys.var_names() == std::vector<std::string>{"x0", "x1"});
  REQUIRE(sys.size() == 1);
  CHECK(sys[0] == var(f5, 2, 0).pow(2) - var(f5, 2, 1).pow(2));
}

TEST_CASE("non-homogeneous input is rejected with its line") {
  const ParseError e = parse_error("field 0\nvars x\npoly 1 x + 1\n");
  CHECK(e.line() == 3);
  CHECK(std::string(e.what()).find("non-homogeneous at line 3") != std::string::npos);
}

TEST_CASE("extension coefficients round-trip") {
  const std::string text = "field 2 ext t^2+t+1\nvars x0\npoly (t) x0\n";
  const PolySystem sys = parse_system(text);
  FieldRef f4 = FieldCtx::extension(2, {1, 1, 1});
  CHECK(sys.ctx() == f4);
  CHECK(sys[0].coeff({1}) == FieldElem::generator(f4));
  CHECK(emit_system(sys) == text);
  CHECK(parse_system(emit_system(sys)) == sys);
}

TEST_CASE("rational coefficients and bare monomials") {
  const PolySystem sys = parse_system("field 0\nvars a b\npoly -3/6 a*b + b^2 + 2 a^2\n");
  FieldRef qq = FieldCtx::rationals();
  const Poly a = var(qq, 2, 0), b = var(qq, 2, 1);
  CHECK(sys[0] == (a * b).scaled(FieldElem::from_rational(qq, mpq_class(-1, 2))) + b * b + (a * a).scaled(num(qq, 2)));
  CHECK(emit_system(sys) == "field 0\nvars a b\npoly 2 a^2 + -1/2 a*b + 1 b^2\n");
}

TEST_CASE("zero polynomials and constants") {
  const PolySystem sys = parse_system("field 3\nvars x\npoly 0\npoly 2\n");
  CHECK(sys[0].is_zero());
  CHECK(sys[1] == cst(sys.ctx(), 1, 2));
  CHECK(parse_system(emit_system(sys)) == sys);
}

TEST_CASE("metadata lines are preserved verbatim and in order") {
  const std::string text = "# method=random\n# custom-key=some value\n# free comment\n# seed=7\nfield 7\nvars x0 x1\npoly 1 x0*x1\n";
  const PolySystem sys = parse_system(text);
  CHECK(sys.meta().get("custom-key") == "some value");
  CHECK(sys.meta().get("seed") == "7");
  CHECK(emit_system(sys) == text);
}

TEST_CASE("errors carry line and column") {
  CHECK(parse_error("field 4\nvars x\npoly 1 x\n").line() == 1);
  CHECK(parse_error("field 2 ext t^2+1\nvars x\npoly 1 x\n").line() == 1);
  {
    const ParseError e = parse_error("field 5\nvars x0 x1\npoly 1 x0 + 1 z\n");
    CHECK(e.line() == 3);
    CHECK(e.column() == 15);
  }
  CHECK(parse_error("field 5\nvars x0 x0\npoly 1 x0\n").line() == 2);
  CHECK(parse_error("field 5\nvars x0\npoly 1 x0 +\n").line() == 3);
  CHECK(parse_error("field 5\nvars x0\npoly 1 x0^\n").line() == 3);
  CHECK(parse_error("field 5\nvars x0\n").line() >= 2);
  CHECK(parse_error("vars x0\npoly 1 x0\n").line() == 1);
  CHECK(parse_error("field 5\nvars x0\npoly 1/0 x0\n").line() == 3);
  const ParseError e = parse_error("field 5\nvars 0x\npoly 1 x0\n");
  CHECK(std::string(e.what()).rfind("line 2, column", 0) == 0);
}

TEST_CASE("emitted provenance headers") {
  FieldRef qq = FieldCtx::rationals();
  const PolySystem src = boolsys_to_system({1, {IsTrue{1}, Negation{1, 1}}}, qq);
  SquaringPlan plan;
  plan.method = SquaringMethod::LambdaInt;
  const std::string chain = emit_system(lambda_chain_square(src, plan));
  CHECK(chain.find("# lambda=3\n") != std::string::npos);
  CHECK(chain.find("# method=lambda-chain\n") != std::string::npos);
  const std::string ground = emit_system(ground_field_square(boolsys_to_system({1, {IsTrue{1}, Negation{1, 1}}}, FieldCtx::prime(5))));
  CHECK(ground.find("# modulus=lam^2+2\n") != std::string::npos);
}

TEST_CASE("emit and parse are mutually inverse on generated systems") {
  std::vector<PolySystem> systems = {partition_to_system({{3, 5, 8}}), partition_bounded_system({{5, 2}}), spurious_example_system()};
  for (FieldRef F : {FieldCtx::rationals(), FieldCtx::prime(2), FieldCtx::prime(3)}) {
    const PolySystem b = boolsys_to_system({2, {IsTrue{1}, Disjunction{2, 1, 2}, Negation{1, 2}}}, F);
    systems.push_back(b);
    if (F->is_rational()) {
      SquaringPlan plan;
      plan.method = SquaringMethod::LambdaInt;
      systems.push_back(lambda_chain_square(b, plan));
    } else {
      SquaringPlan plan;
      plan.method = SquaringMethod::LambdaExt;
      systems.push_back(lambda_chain_square(b, plan));
      systems.push_back(ground_field_square(b));
    }
    SquaringPlan r;
    r.seed = 4;
    systems.push_back(random_square(pad_degrees(b), r));
  }
  std::mt19937_64 rng(71);
  for (FieldRef F : {FieldCtx::rationals(), FieldCtx::galois(3, 2), FieldCtx::prime(7)})
    for (int t = 0; t < 10; ++t) systems.push_back(PolySystem(F, {"u", "v", "w"}, {random_form(F, 3, 3, rng), random_form(F, 3, 1, rng)}));
  for (const auto& sys : systems) {
    const std::string once = emit_system(sys);
    const PolySystem back = parse_system(once);
    CHECK(back == sys);
    CHECK(emit_system(back) == once);
  }
}

TEST_CASE("DIMACS parsing") {
  const CnfFormula phi = parse_dimacs("c worked example\np cnf 2 3\n1 2 0\n-1 0\n-2 0\n");
  CHECK(phi.num_vars == 2);
  CHECK(phi.clauses == std::vector<std::vector<int>>{{1, 2}, {-1}, {-2}});
  CHECK(parse_dimacs("p cnf 3 1\n1 -2\n3 0\n").clauses == std::vector<std::vector<int>>{{1, -2, 3}});
  CHECK_THROWS(parse_dimacs("p cnf 1 1\n2 0\n"));
  CHECK_THROWS(parse_dimacs("1 0\n"));
  CHECK_THROWS(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n"));
}

TEST_CASE("boolsys parsing") {
  const BoolsysInstance b = parse_boolsys("boolsys 3\nX1 = true\nX2 = not X1\nX3 = or X1 X2\n");
  CHECK(b.num_vars == 3);
  REQUIRE(b.equations.size() == 3);
  CHECK(std::get<IsTrue>(b.equations[0]).i == 1);
  CHECK(std::get<Negation>(b.equations[1]).j == 1);
  CHECK(std::get<Disjunction>(b.equations[2]).k == 2);
  CHECK(parse_boolsys(emit_boolsys(b)).equations.size() == 3);
  CHECK(emit_boolsys(parse_boolsys(emit_boolsys(b))) == emit_boolsys(b));
  CHECK_THROWS(parse_boolsys("boolsys 1\nX2 = true\n"));
  CHECK_THROWS(parse_boolsys("X1 = true\n"));
  CHECK_THROWS(parse_boolsys("boolsys 1\nX1 = maybe\n"));
}

TEST_CASE("partition parsing") {
  CHECK(parse_partition("3 5\n8 # tail\n").weights == std::vector<std::uint64_t>{3, 5, 8});
  CHECK_THROWS(parse_partition("3 -5\n"));
  CHECK_THROWS(parse_partition("# nothing\n"));
}
