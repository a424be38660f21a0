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

// Encoders from combinatorial problems to homogeneous polynomial systems.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "homsys/poly.hpp"

namespace homsys {

struct PartitionInstance {
  std::vector<std::uint64_t> weights;
};

struct IsTrue {
  unsigned i;
};
struct Negation {
  unsigned i, j;  // X_i = not X_j
};
struct Disjunction {
  unsigned i, j, k;  // X_i = X_j or X_k
};
using BoolsysEquation = std::variant<IsTrue, Negation, Disjunction>;

/// Variables are numbered 1..num_vars.
struct BoolsysInstance {
  unsigned num_vars = 0;
  std::vector<BoolsysEquation> equations;
};

/// Literals are signed 1-based variable indices; clauses hold 1..3 literals.
struct CnfFormula {
  unsigned num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

void validate(const PartitionInstance& inst);
void validate(const BoolsysInstance& inst);
void validate(const CnfFormula& phi);

std::string to_string(const BoolsysEquation& eq);
std::string to_string(const BoolsysInstance& inst);

/// Value of the equation under `assignment` (index 0 unused).
bool holds(const BoolsysEquation& eq, const std::vector<bool>& assignment);
/// Exhaustive search over all 2^n assignments.
bool boolsys_satisfiable(const BoolsysInstance& inst);
bool cnf_satisfiable(const CnfFormula& phi);
/// Subset-sum dynamic program for an equal-weight split.
bool partition_feasible(const PartitionInstance& inst);

/// Gadgets x0^2 - x_i^2 (i = 1..n) followed by sum w_i x_i, over Q.
PolySystem partition_to_system(const PartitionInstance& inst);

/// Same problem with every coefficient in [-2, 2]: each weight is replaced by
/// a chain of binary-digit variables W_{i,j} (little-endian digits, common
/// top index p) with W_{i,p} - w_{i,p} x0 and W_{i,j} - (2 W_{i,j+1} + w_{i,j} x0),
/// and the linear form becomes sum W_{i,0} x_i.
PolySystem partition_bounded_system(const PartitionInstance& inst);

/// One auxiliary per negated variable and per binary disjunction; clauses are
/// folded left to right and asserted with IsTrue. A unit clause l becomes
/// A = l or l, A = True.
BoolsysInstance cnf_to_boolsys(const CnfFormula& phi);

/// Degree-2 gadget system in x0..xn. Characteristic 2 uses the 0/x0 truth
/// convention, every other characteristic the -x0/+x0 one.
PolySystem boolsys_to_system(const BoolsysInstance& inst, FieldRef ctx);

/// The square gadget x0^2 - x_i^2 (or x0 x_i - x_i^2 in characteristic 2).
Poly square_gadget(FieldRef ctx, std::size_t num_vars, std::size_t i);

/// Ten-polynomial repeated-squaring system in (x, x0, x2, ..., x9) that has a
/// root at infinity with x8 = x9 != 0.
PolySystem spurious_example_system();

/// Affine (not necessarily homogeneous) polynomial system.
struct AffineSystem {
  FieldRef ctx;
  std::vector<std::string> var_names;
  std::vector<Poly> polys;
};

/// Appends variables y_0..y_n and the polynomial sum x_i y_i - 1.
AffineSystem hhn_to_hn(const PolySystem& sys);

}  // namespace homsys
