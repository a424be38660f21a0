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

#include <set>

#include "homsys/harness.hpp"
#include "homsys/reductions.hpp"
#include "homsys/verification.hpp"

using namespace homsys;

namespace {

// Multisets of size k from F forms: C(F + k - 1, k).
std::uint64_t multisets(std::uint64_t forms, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (forms + i - 1) / i;
  return r;
}

std::uint64_t expected_corpus(unsigned max_vars, unsigned max_eq) {
  std::uint64_t total = 0;
  for (std::uint64_t n = 1; n <= max_vars; ++n)
    for (unsigned k = 1; k <= max_eq; ++k) total += multisets(n + n * n + n * n * n, k);
  return total;
}

}  // namespace

TEST_CASE("corpus sizes") {
  CHECK(boolsys_corpus(1, 1).size() == 3);
  CHECK(boolsys_corpus(2, 2).size() == expected_corpus(2, 2));
  CHECK(boolsys_corpus(3, 4).size() == expected_corpus(3, 4));
  CHECK(expected_corpus(3, 4) == 126502);
}

TEST_CASE("corpus instances are distinct multisets") {
  std::set<std::string> seen;
  for (const auto& inst : boolsys_corpus(2, 3)) CHECK(seen.insert(to_string(inst)).second);
}

TEST_CASE("empty corpus gives an empty successful report") {
  const HarnessReport rep = equivalence_harness({}, {}, {});
  CHECK(rep.ok());
  CHECK(rep.instances == 0);
  CHECK(rep.checks == 0);
}

TEST_CASE("harness records wrong verdicts and exceptions") {
  std::vector<HarnessItem> corpus;
  corpus.push_back({"sat", true, [] { return boolsys_to_system({1, {IsTrue{1}}}, FieldCtx::prime(3)); }});
  corpus.push_back({"unsat", false, [] { return boolsys_to_system({1, {IsTrue{1}, Negation{1, 1}}}, FieldCtx::prime(3)); }});
  const std::vector<HarnessStage> stages = {{"encoded", [](const PolySystem& s) { return std::optional<PolySystem>(s); }}};
  auto always = [](const std::string&, const PolySystem&) { return true; };
  const std::vector<HarnessOracle> oracles = {
      {"structured", always, [](const PolySystem& s) { return structured_sign_oracle(s); }},
      {"liar", always, [](const PolySystem&) { return Verdict::unsatisfiable("always no"); }},
      {"thrower", always, [](const PolySystem&) -> Verdict { throw std::runtime_error("boom"); }},
      {"unsure", always, [](const PolySystem&) { return Verdict::indeterminate("budget"); }}};
  const HarnessReport rep = equivalence_harness(corpus, stages, oracles);
  CHECK(rep.instances == 2);
  CHECK(rep.indeterminate == 2);
  CHECK_FALSE(rep.ok());
  std::size_t liar = 0, thrower = 0, structured = 0;
  for (const auto& d : rep.disagreements) {
    liar += d.oracle == "liar";
    thrower += d.oracle == "thrower";
    structured += d.oracle == "structured";
    if (d.oracle == "thrower") CHECK(d.reason.find("boom") != std::string::npos);
  }
  CHECK(liar == 1);
  CHECK(thrower == 2);
  CHECK(structured == 0);
  CHECK(format_report("demo", rep).find("liar") != std::string::npos);
}

TEST_CASE("small corpus over GF(3) passes every stage") {
  BoolsysHarnessOptions opt;
  opt.max_vars = 2;
  const HarnessReport rep = boolsys_equivalence(3, opt);
  CHECK(rep.ok());
  CHECK(rep.instances == boolsys_corpus(2, 4).size());
  CHECK(rep.indeterminate == 0);
  CHECK(rep.checks_by.count("lambda-chain/structured") == 1);
  CHECK(rep.checks_by.count("ground/structured") == 1);
  CHECK(rep.checks_by.count("encoded/closure") == 1);
}

TEST_CASE("small corpus over Q and GF(2) passes") {
  BoolsysHarnessOptions opt;
  opt.max_vars = 2;
  opt.max_equations = 3;
  CHECK(boolsys_equivalence(0, opt).ok());
  CHECK(boolsys_equivalence(2, opt).ok());
}

TEST_CASE("a corrupted lambda = 1 chain is detected") {
  BoolsysHarnessOptions opt;
  opt.max_vars = 2;
  opt.max_equations = 3;
  opt.lambda_override = 1;
  const HarnessReport rep = boolsys_equivalence(0, opt);
  CHECK_FALSE(rep.ok());
  for (const auto& d : rep.disagreements) {
    CHECK(d.stage == "lambda-chain");
    CHECK_FALSE(d.truth);
    CHECK(d.got == Status::Satisfiable);
  }
}
