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

#include "homsys/harness.hpp"

#include <sstream>

#include "homsys/squaring.hpp"

namespace homsys {

namespace {

void multisets(const std::vector<BoolsysEquation>& forms, std::size_t start, unsigned left, std::vector<BoolsysEquation>& cur,
               unsigned n, std::vector<BoolsysInstance>& out) {
  if (!cur.empty()) out.push_back({n, cur});
  if (left == 0) return;
  for (std::size_t i = start; i < forms.size(); ++i) {
    cur.push_back(forms[i]);
    multisets(forms, i, left - 1, cur, n, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BoolsysInstance> boolsys_corpus(unsigned max_vars, unsigned max_equations) {
  std::vector<BoolsysInstance> out;
  for (unsigned n = 1; n <= max_vars; ++n) {
    std::vector<BoolsysEquation> forms;
    for (unsigned i = 1; i <= n; ++i) forms.emplace_back(IsTrue{i});
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= n; ++j) forms.emplace_back(Negation{i, j});
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= n; ++j)
        for (unsigned k = 1; k <= n; ++k) forms.emplace_back(Disjunction{i, j, k});
    std::vector<BoolsysEquation> cur;
    multisets(forms, 0, max_equations, cur, n, out);
  }
  return out;
}

HarnessReport equivalence_harness(const std::vector<HarnessItem>& corpus, const std::vector<HarnessStage>& stages,
                                  const std::vector<HarnessOracle>& oracles) {
  HarnessReport rep;
  for (const auto& item : corpus) {
    ++rep.instances;
    std::optional<PolySystem> encoded;
    try {
      encoded = item.encode();
    } catch (const std::exception& e) {
      rep.disagreements.push_back({item.label, "encode", "-", item.truth, Status::Indeterminate, e.what()});
      continue;
    }
    for (const auto& stage : stages) {
      std::optional<PolySystem> sys;
      try {
        sys = stage.transform(*encoded);
      } catch (const std::exception& e) {
        rep.disagreements.push_back({item.label, stage.name, "-", item.truth, Status::Indeterminate, e.what()});
        continue;
      }
      if (!sys) continue;
      for (const auto& oracle : oracles) {
        if (!oracle.applies(stage.name, *sys)) continue;
        ++rep.checks;
        ++rep.checks_by[stage.name + "/" + oracle.name];
        Verdict v;
        try {
          v = oracle.run(*sys);
        } catch (const std::exception& e) {
          rep.disagreements.push_back({item.label, stage.name, oracle.name, item.truth, Status::Indeterminate, e.what()});
          continue;
        }
        if (v.status == Status::Indeterminate) {
          ++rep.indeterminate;
          continue;
        }
        if ((v.status == Status::Satisfiable) != item.truth)
          rep.disagreements.push_back({item.label, stage.name, oracle.name, item.truth, v.status, v.reason});
      }
    }
  }
  return rep;
}

HarnessReport boolsys_equivalence(std::uint64_t characteristic, const BoolsysHarnessOptions& opt) {
  FieldRef ctx = characteristic == 0 ? FieldCtx::rationals() : FieldCtx::prime(characteristic);
  const auto corpus = boolsys_corpus(opt.max_vars, opt.max_equations);
  std::vector<HarnessItem> items;
  items.reserve(corpus.size());
  for (const auto& inst : corpus) {
    items.push_back({to_string(inst), boolsys_satisfiable(inst), [inst, ctx] { return boolsys_to_system(inst, ctx); }});
  }
  std::vector<HarnessStage> stages;
  if (opt.check_encoded) stages.push_back({"encoded", [](const PolySystem& s) { return std::optional<PolySystem>(s); }});
  if (opt.squarers) {
    SquaringPlan plan;
    if (ctx->is_rational()) {
      plan.method = SquaringMethod::LambdaInt;
      if (opt.lambda_override) {
        plan.lambda = FieldElem::from_int(ctx, *opt.lambda_override);
        plan.allow_unsound_lambda = true;
      }
    } else {
      plan.method = SquaringMethod::LambdaExt;
    }
    stages.push_back({"lambda-chain", [plan](const PolySystem& s) -> std::optional<PolySystem> {
                        if (s.size() <= s.num_vars()) return std::nullopt;
                        return lambda_chain_square(s, plan);
                      }});
    if (!ctx->is_rational()) {
      stages.push_back({"ground", [](const PolySystem& s) -> std::optional<PolySystem> {
                          if (s.size() <= s.num_vars()) return std::nullopt;
                          return ground_field_square(s);
                        }});
    }
  }
  std::vector<HarnessOracle> oracles;
  oracles.push_back({"structured", [](const std::string&, const PolySystem&) { return true; },
                     [](const PolySystem& s) { return structured_sign_oracle(s); }});
  if (opt.closure_cross_check && !ctx->is_rational()) {
    oracles.push_back({"closure", [](const std::string& stage, const PolySystem&) { return stage == "encoded"; },
                       [](const PolySystem& s) { return closure_satisfiable(s); }});
  }
  return equivalence_harness(items, stages, oracles);
}

std::string format_report(const std::string& title, const HarnessReport& rep, std::size_t max_listed) {
  std::ostringstream os;
  os << title << ": " << rep.instances << " instances, " << rep.checks << " checks, " << rep.indeterminate << " indeterminate, "
     << rep.disagreements.size() << " disagreements\n";
  for (const auto& [k, v] : rep.checks_by) os << "  " << k << ": " << v << "\n";
  for (std::size_t i = 0; i < rep.disagreements.size() && i < max_listed; ++i) {
    const auto& d = rep.disagreements[i];
    os << "  DISAGREE [" << d.stage << "/" << d.oracle << "] " << d.instance << " truth=" << (d.truth ? "sat" : "unsat")
       << " got=" << to_string(d.got) << (d.reason.empty() ? "" : " (" + d.reason + ")") << "\n";
  }
  return os.str();
}

}  // namespace homsys
