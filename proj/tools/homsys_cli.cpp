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

// homsys: encode, square, verify and cross-check homogeneous systems.
//
// Exit status: 0 success or Satisfiable, 1 Unsatisfiable (or harness
// disagreement), 2 Indeterminate, 3 usage or I/O error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "homsys/gf_poly.hpp"
#include "homsys/harness.hpp"
#include "homsys/plaisted.hpp"
#include "homsys/reductions.hpp"
#include "homsys/squaring.hpp"
#include "homsys/system_io.hpp"
#include "homsys/verification.hpp"

using namespace homsys;

namespace {

constexpr int kExitError = 3;

FieldRef field_for_char(std::uint64_t p) {
  if (p == 0) return FieldCtx::rationals();
  return FieldCtx::prime(p);
}

void output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") std::cout << text;
  else write_file(path, text);
}

std::string input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return read_file(path);
}

int exit_for(Status s) {
  switch (s) {
    case Status::Satisfiable: return 0;
    case Status::Unsatisfiable: return 1;
    case Status::Indeterminate: return 2;
  }
  return kExitError;
}

void print_verdict(const Verdict& v, const PolySystem& sys) {
  std::cout << to_string(v.status) << "\n";
  if (!v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
  if (v.witness) {
    const Witness& w = *v.witness;
    std::cout << "witness over " << w.field->describe() << ":";
    for (std::size_t i = 0; i < w.values.size(); ++i) {
      std::cout << " " << sys.var_names()[i];
      if (w.powers[i] != 1) std::cout << "^" << w.powers[i];
      std::cout << "=" << format_coefficient(w.values[i]);
    }
    std::cout << "\n";
  }
}

std::vector<std::uint64_t> parse_chars(const std::string& list) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const auto v = std::stoull(item, &used);
    if (used != item.size() || (v != 0 && !gf::is_prime(v))) throw std::invalid_argument("characteristic '" + item + "' is neither 0 nor prime");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty characteristic list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homsys: reductions and zero-tests for homogeneous polynomial systems"};
  app.require_subcommand(1);

  // encode
  std::string enc_kind, enc_in, enc_out;
  std::uint64_t enc_char = 0;
  std::string enc_max_modulus = "1000000";
  auto* enc = app.add_subcommand("encode", "Encode a combinatorial instance as a homogeneous system");
  enc->add_option("kind", enc_kind, "boolsys | cnf | partition | partition-bounded | plaisted")
      ->required()
      ->check(CLI::IsMember({"boolsys", "cnf", "partition", "partition-bounded", "plaisted"}));
  enc->add_option("input", enc_in, "Input file or -")->required();
  enc->add_option("--char", enc_char, "Coefficient characteristic (0 or a prime)");
  enc->add_option("--max-modulus", enc_max_modulus, "Largest M accepted by the plaisted encoder");
  enc->add_option("-o,--output", enc_out, "Output file (default stdout)");

  // square
  std::string sq_kind, sq_in, sq_out, sq_lambda;
  std::uint64_t sq_seed = 0, sq_field_size = 0;
  auto* sq = app.add_subcommand("square", "Turn an s x (n+1) system into a square one");
  sq->add_option("kind", sq_kind, "random | lambda | ground")->required()->check(CLI::IsMember({"random", "lambda", "ground"}));
  sq->add_option("input", sq_in, "System file or -")->required();
  sq->add_option("--seed", sq_seed, "Seed for random (default 0)");
  sq->add_option("--lambda", sq_lambda, "Integer lambda > 2 for the characteristic-0 chain (default 3)");
  sq->add_option("--field-size", sq_field_size, "Sampling field size for random (default 4*3^(n+1))");
  sq->add_option("-o,--output", sq_out, "Output file (default stdout)");

  // verify
  std::string ver_kind, ver_in;
  unsigned ver_k = 1, ver_kmax = 8, ver_workers = 1;
  std::size_t ver_cols = 2000;
  std::uint64_t ver_cands = 10'000'000;
  auto* ver = app.add_subcommand("verify", "Decide whether a system has a nontrivial root over the closure");
  ver->add_option("kind", ver_kind, "enumerate | structured | sylvester | macaulay | closure | auto")
      ->required()
      ->check(CLI::IsMember({"enumerate", "structured", "sylvester", "macaulay", "closure", "auto"}));
  ver->add_option("input", ver_in, "System file or -")->required();
  ver->add_option("--ext-degree", ver_k, "Extension degree for enumerate (default 1)");
  ver->add_option("--k-max", ver_kmax, "Largest extension degree searched by closure (default 8)");
  ver->add_option("--max-columns", ver_cols, "Macaulay column cap (default 2000)");
  ver->add_option("--max-candidates", ver_cands, "Enumeration candidate cap (default 10^7)");
  ver->add_option("--workers", ver_workers, "Enumeration threads (default 1)");

  // harness
  unsigned h_vars = 2, h_eqs = 4;
  std::string h_chars = "0,2,3,5";
  long long h_lambda = 0;
  bool h_no_sq = false;
  auto* har = app.add_subcommand("harness", "Run equivalence checks");
  auto* heq = har->add_subcommand("equivalence", "Boolsys corpus: ground truth versus oracle verdicts");
  har->require_subcommand(1);
  heq->add_option("--max-vars", h_vars, "Largest variable count (default 2)");
  heq->add_option("--max-equations", h_eqs, "Largest equation count (default 4)");
  heq->add_option("--chars", h_chars, "Comma-separated characteristics (default 0,2,3,5)");
  auto* h_lambda_opt = heq->add_option("--lambda", h_lambda, "Override lambda in the characteristic-0 chain (unchecked)");
  heq->add_flag("--no-squarers", h_no_sq, "Only check the encoded systems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*enc) {
      const std::string text = input(enc_in);
      if (enc_char != 0 && !gf::is_prime(enc_char)) throw std::invalid_argument("--char must be 0 or a prime");
      FieldRef ctx = field_for_char(enc_char);
      PolySystem sys = [&]() -> PolySystem {
        if (enc_kind == "boolsys") return boolsys_to_system(parse_boolsys(text), ctx);
        if (enc_kind == "cnf") return boolsys_to_system(cnf_to_boolsys(parse_dimacs(text)), ctx);
        if (enc_char != 0) throw std::invalid_argument(enc_kind + " encodes over Q only (--char 0)");
        if (enc_kind == "partition") return partition_to_system(parse_partition(text));
        if (enc_kind == "partition-bounded") return partition_bounded_system(parse_partition(text));
        const auto code = plaisted_encode(parse_dimacs(text), mpz_class(enc_max_modulus));
        PolySystem s = plaisted_homogenize({code.P, code.x_m_minus_one});
        s.meta().set("M", code.M.get_str());
        std::string primes;
        for (auto p : code.primes) primes += (primes.empty() ? "" : ",") + std::to_string(p);
        s.meta().set("primes", primes);
        return s;
      }();
      output(emit_system(sys), enc_out);
      return 0;
    }
    if (*sq) {
      const PolySystem sys = parse_system(input(sq_in));
      PolySystem out = [&]() -> PolySystem {
        if (sq_kind == "random") {
          SquaringPlan plan;
          plan.method = SquaringMethod::Random;
          plan.seed = sq_seed;
          if (sq_field_size) plan.field_size = sq_field_size;
          return random_square(pad_degrees(sys), plan);
        }
        if (sq_kind == "lambda") {
          SquaringPlan plan;
          if (sys.ctx()->is_rational()) {
            plan.method = SquaringMethod::LambdaInt;
            if (!sq_lambda.empty()) plan.lambda = FieldElem::from_mpz(sys.ctx(), mpz_class(sq_lambda));
          } else {
            if (!sq_lambda.empty()) throw std::invalid_argument("--lambda applies to characteristic 0 only");
            plan.method = SquaringMethod::LambdaExt;
          }
          return lambda_chain_square(sys, plan);
        }
        return ground_field_square(sys);
      }();
      output(emit_system(out), sq_out);
      return 0;
    }
    if (*ver) {
      const PolySystem sys = parse_system(input(ver_in));
      if (ver_kind == "enumerate") {
        EnumerationOptions opt{ver_cands, ver_workers};
        const auto roots = enumerate_projective_roots(sys, ver_k, opt);
        const FieldRef K = enumeration_field(sys.ctx(), ver_k);
        std::cout << roots.size() << " projective roots over " << K->describe() << "\n";
        for (const auto& r : roots) {
          std::cout << "(";
          for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? ", " : "") << format_coefficient(r[i]);
          std::cout << ")\n";
        }
        return roots.empty() ? exit_for(Status::Indeterminate) : 0;
      }
      Verdict v;
      const ClosureOptions copt{ver_kmax, ver_cands, ver_workers};
      if (ver_kind == "structured") v = structured_sign_oracle(sys);
      else if (ver_kind == "sylvester") v = sylvester_verdict(sys);
      else if (ver_kind == "macaulay") {
        const auto r = macaulay_zero_test(sys, {ver_cols});
        v = r.verdict;
        if (r.resultant) std::cout << "resultant: " << format_coefficient(*r.resultant) << "\n";
      } else if (ver_kind == "closure") v = closure_satisfiable(sys, copt);
      else v = auto_verdict(sys, {copt, {ver_cols}});
      print_verdict(v, sys);
      return exit_for(v.status);
    }
    if (*heq) {
      BoolsysHarnessOptions opt;
      opt.max_vars = h_vars;
      opt.max_equations = h_eqs;
      opt.squarers = !h_no_sq;
      if (*h_lambda_opt) opt.lambda_override = h_lambda;
      bool ok = true;
      for (auto p : parse_chars(h_chars)) {
        const auto rep = boolsys_equivalence(p, opt);
        std::cout << format_report(p == 0 ? "QQ" : "GF(" + std::to_string(p) + ")", rep);
        ok = ok && rep.ok();
      }
      std::cout << (ok ? "OK" : "DISAGREEMENTS FOUND") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "homsys: budget exceeded: " << e.what() << "\n";
    return exit_for(Status::Indeterminate);
  } catch (const std::exception& e) {
    std::cerr << "homsys: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
