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

// Satisfiability oracles for homogeneous systems over the algebraic closure.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homsys/field.hpp"
#include "homsys/linalg.hpp"
#include "homsys/poly.hpp"
#include "homsys/small_field.hpp"

namespace homsys {

enum class Status { Satisfiable, Unsatisfiable, Indeterminate };
std::string to_string(Status s);

/// Coordinate i of the root is a solution of X^powers[i] = values[i] in the
/// closure of `field`; all powers are 1 for an explicit point.
struct Witness {
  FieldRef field = nullptr;
  std::vector<FieldElem> values;
  std::vector<unsigned> powers;
  /// Image of the coefficient field generator when that field is an
  /// extension distinct from `field`.
  std::optional<FieldElem> generator_image;
};

struct Verdict {
  Status status = Status::Indeterminate;
  std::optional<Witness> witness;
  std::string reason;

  static Verdict satisfiable(Witness w, std::string reason = {});
  static Verdict satisfiable_without_witness(std::string reason);
  static Verdict unsatisfiable(std::string reason = {});
  static Verdict indeterminate(std::string reason);
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnrecognizedShape : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Field homomorphism from `src` into `dst` (same characteristic).
class FieldMap {
 public:
  /// Identity, prime-subfield inclusion, or the first root of src's modulus
  /// in dst (packed order). Throws when no embedding exists.
  FieldMap() = default;
  static FieldMap find(FieldRef src, FieldRef dst);
  static FieldMap with_generator(FieldRef src, const FieldElem& image);

  FieldRef src() const { return src_; }
  FieldRef dst() const { return dst_; }
  const std::optional<FieldElem>& generator_image() const { return gen_; }
  FieldElem operator()(const FieldElem& x) const;
  Poly operator()(const Poly& f) const;

 private:
  FieldRef src_ = nullptr, dst_ = nullptr;
  std::optional<FieldElem> gen_;
};

/// Power-substituted evaluation of every polynomial at the witness.
bool witness_vanishes(const PolySystem& sys, const Witness& w);

/// Shared table-based arithmetic for fields up to SmallField::kMaxOrder.
const SmallField& small_field_for(FieldRef ctx);

struct EnumerationOptions {
  std::uint64_t max_candidates = 10'000'000;
  unsigned workers = 1;
};

/// Number of points of projective space with `num_vars` coordinates over a
/// field of order q (saturates at UINT64_MAX).
std::uint64_t projective_point_count(std::uint64_t q, std::size_t num_vars);

/// Field of order |F|^k containing the coefficient field F of sys.
FieldRef enumeration_field(FieldRef base, unsigned k);

/// All roots over F^(k) (F the coefficient field), first nonzero coordinate
/// equal to one, ordered by leading position and then by packed coordinates
/// with the last coordinate varying fastest. Throws BudgetExceeded.
std::vector<std::vector<FieldElem>> enumerate_projective_roots(const PolySystem& sys, unsigned k,
                                                               const EnumerationOptions& opt = {});

struct ClosureOptions {
  unsigned k_max = 8;
  std::uint64_t max_candidates = 10'000'000;
  unsigned workers = 1;
};

/// Search over F^(k), k = 1..k_max, with Unsatisfiable only under a
/// residue-degree certificate (pivot polynomials, the projective line, or a
/// coprime pair in the projective plane).
Verdict closure_satisfiable(const PolySystem& sys, const ClosureOptions& opt = {});

/// Exact decision for gadget-shaped systems (metadata `gadgets=n`), with aux
/// variables entering as y_j^e_j and an optional parameter row P(lam, x0)
/// named by `lambda-var`. Throws UnrecognizedShape.
Verdict structured_sign_oracle(const PolySystem& sys);

/// Whether the pattern a0 = 1, a_i = pattern[i-1] extends to a root.
/// Entries are +1/-1 (or 1/0 in characteristic 2).
bool structured_pattern_accepts(const PolySystem& sys, const std::vector<int>& pattern);

/// Determinant of the Sylvester matrix built from the coefficients of
/// x^(d-i) y^i; zero iff a common projective root exists.
FieldElem sylvester_resultant(const Poly& f, const Poly& g);
Verdict sylvester_verdict(const PolySystem& sys);

struct MacaulayOptions {
  std::size_t max_columns = 2000;
};

struct MacaulayResult {
  Verdict verdict;
  unsigned critical_degree = 0;
  std::size_t columns = 0;
  std::optional<FieldElem> det_m, det_minor, resultant;
};

/// Macaulay matrix at D = 1 + sum(d_i - 1). Throws BudgetExceeded past the
/// column cap and std::invalid_argument for non-square input.
MacaulayResult macaulay_zero_test(const PolySystem& sys, const MacaulayOptions& opt = {});

struct AutoOptions {
  ClosureOptions closure;
  MacaulayOptions macaulay;
};

/// Structured oracle when the shape is recognized, then closure search
/// (finite fields), Sylvester (two binary forms), Macaulay (square).
Verdict auto_verdict(const PolySystem& sys, const AutoOptions& opt = {});

}  // namespace homsys
