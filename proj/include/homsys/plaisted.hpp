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

// Two-polynomial encoding of 3-CNF satisfiability. Clause polynomials are
// products of cyclotomic polynomials Phi_d over divisors d of M = prod p_j,
// so an lcm is just a union of divisor sets.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homsys/poly.hpp"
#include "homsys/reductions.hpp"

namespace homsys {

/// Integer polynomial with big-integer exponents; no zero coefficients.
class SupersparsePoly {
 public:
  using TermMap = std::map<mpz_class, mpz_class>;

  SupersparsePoly() = default;
  /// x^e - 1
  static SupersparsePoly x_pow_minus_one(const mpz_class& e);
  static SupersparsePoly from_dense(const std::vector<mpz_class>& coeffs);

  void add_term(const mpz_class& e, const mpz_class& c);
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 encoded as nullopt-free convention: degree of zero is -1.
  mpz_class degree() const { return terms_.empty() ? mpz_class(-1) : terms_.rbegin()->first; }
  mpz_class coeff(const mpz_class& e) const;
  /// Dense coefficient vector (requires a desk-scale degree).
  std::vector<mpz_class> to_dense() const;
  bool operator==(const SupersparsePoly&) const = default;
  /// Ascending-exponent form such as "-x^3+x^4+2*x^5".
  std::string to_string(const std::string& var = "x") const;

 private:
  TermMap terms_;
};

class DeskScaleExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline const mpz_class kDefaultMaxModulus = 1000000;

std::vector<std::uint64_t> first_primes(std::size_t count);

/// Dense coefficients of the d-th cyclotomic polynomial.
std::vector<mpz_class> cyclotomic(std::uint64_t d);

/// Clause polynomial for 1..3 literals; literal +j / -j refers to primes[j-1].
/// Throws DeskScaleExceeded when M = prod(primes) exceeds max_modulus.
SupersparsePoly plaisted_clause_poly(const std::vector<int>& literals, const std::vector<std::uint64_t>& primes,
                                     const mpz_class& max_modulus = kDefaultMaxModulus);

/// (x^M sum_i C_i(x) C_i(1/x), x^M - 1).
std::pair<SupersparsePoly, SupersparsePoly> plaisted_conjunction(const std::vector<SupersparsePoly>& clause_polys,
                                                                 const mpz_class& M,
                                                                 const mpz_class& max_modulus = kDefaultMaxModulus);

struct PlaistedEncoding {
  std::vector<std::uint64_t> primes;  // primes[j-1] belongs to variable j (1 for absent variables)
  mpz_class M;
  std::vector<SupersparsePoly> clause_polys;
  SupersparsePoly P;
  SupersparsePoly x_m_minus_one;
};

/// Variable j receives the j-th prime; M ranges over variables that occur.
PlaistedEncoding plaisted_encode(const CnfFormula& phi, const mpz_class& max_modulus = kDefaultMaxModulus);

/// Homogenizes both polynomials with a second variable y; the system lives
/// in (x, y) over Q. Throws DeskScaleExceeded for exponents beyond 32 bits.
PolySystem plaisted_homogenize(const std::pair<SupersparsePoly, SupersparsePoly>& pair);

}  // namespace homsys
