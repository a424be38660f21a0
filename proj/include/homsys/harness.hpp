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

#pragma once

// Ground truth versus oracle verdicts on encoded and squared systems.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homsys/poly.hpp"
#include "homsys/reductions.hpp"
#include "homsys/verification.hpp"

namespace homsys {

/// Every multiset of 1..max_equations equation forms over n = 1..max_vars
/// variables (Negation(i, i) and ordered disjunction operands included).
std::vector<BoolsysInstance> boolsys_corpus(unsigned max_vars, unsigned max_equations);

struct HarnessItem {
  std::string label;
  bool truth = false;
  std::function<PolySystem()> encode;
};

/// Maps an encoded system to the system to test; nullopt = not applicable.
struct HarnessStage {
  std::string name;
  std::function<std::optional<PolySystem>(const PolySystem&)> transform;
};

struct HarnessOracle {
  std::string name;
  std::function<bool(const std::string& stage, const PolySystem&)> applies;
  std::function<Verdict(const PolySystem&)> run;
};

struct Disagreement {
  std::string instance, stage, oracle;
  bool truth = false;
  Status got = Status::Indeterminate;
  std::string reason;
};

struct HarnessReport {
  std::size_t instances = 0, checks = 0, indeterminate = 0;
  std::vector<Disagreement> disagreements;
  std::map<std::string, std::size_t> checks_by;  // "stage/oracle" -> count
  bool ok() const { return disagreements.empty(); }
};

/// Oracle exceptions are recorded as disagreements with the message as reason.
HarnessReport equivalence_harness(const std::vector<HarnessItem>& corpus, const std::vector<HarnessStage>& stages,
                                  const std::vector<HarnessOracle>& oracles);

struct BoolsysHarnessOptions {
  unsigned max_vars = 3;
  unsigned max_equations = 4;
  /// Replaces lambda = 3 in the characteristic-0 chain (no soundness check).
  std::optional<long long> lambda_override;
  bool closure_cross_check = true;
  bool check_encoded = true;
  bool squarers = true;
};

/// Encoded systems through the structured oracle (and closure search over
/// finite fields); with `squarers`, lambda chain and ground-field outputs too.
HarnessReport boolsys_equivalence(std::uint64_t characteristic, const BoolsysHarnessOptions& opt = {});

std::string format_report(const std::string& title, const HarnessReport& rep, std::size_t max_listed = 20);

}  // namespace homsys
