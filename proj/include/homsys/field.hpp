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

// Coefficient domains: the rationals, prime fields F_p and extensions
// F_p[X]/(P). Contexts are interned, so a FieldRef stays valid for the whole
// program run and two contexts are the same field iff their pointers agree.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "homsys/gf_poly.hpp"

namespace homsys {

class FieldCtx;
using FieldRef = const FieldCtx*;

/// Raised when two operands live in different fields.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FieldCtx {
 public:
  static FieldRef rationals();
  /// Throws std::invalid_argument unless p is a supported prime.
  static FieldRef prime(std::uint64_t p);
  /// F_p[X]/(modulus). The modulus must be monic, of degree >= 1 and
  /// irreducible. A degree-1 modulus is accepted and still yields a distinct
  /// (isomorphic) context.
  static FieldRef extension(std::uint64_t p, gf::Coeffs modulus);
  /// F_p for k == 1, otherwise F_p[X]/(find_irreducible(p, k)).
  static FieldRef galois(std::uint64_t p, unsigned k);

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0 && modulus_.empty(); }
  bool is_extension() const { return !modulus_.empty(); }
  /// Degree over the prime field (1 for F_p, 0 for Q).
  unsigned degree() const { return p_ == 0 ? 0 : (modulus_.empty() ? 1 : static_cast<unsigned>(modulus_.size() - 1)); }
  const gf::Coeffs& modulus() const { return modulus_; }
  /// Number of elements when finite and representable in 64 bits.
  std::optional<std::uint64_t> order() const;
  /// "QQ", "GF(5)" or "GF(2)[t]/(t^2+t+1)".
  std::string describe() const;
  /// Prime subfield of this context (itself for Q and F_p).
  FieldRef prime_subfield() const;

 private:
  FieldCtx(std::uint64_t p, gf::Coeffs modulus) : p_(p), modulus_(std::move(modulus)) {}
  std::uint64_t p_;
  gf::Coeffs modulus_;
};

/// Element of a FieldCtx in canonical form: reduced rationals with positive
/// denominator, or residues reduced modulo p (and modulo the extension
/// modulus).
class FieldElem {
 public:
  FieldElem() = default;  // zero of Q

  static FieldElem zero(FieldRef ctx);
  static FieldElem one(FieldRef ctx);
  static FieldElem from_int(FieldRef ctx, long long v);
  static FieldElem from_mpz(FieldRef ctx, const mpz_class& v);
  static FieldElem from_rational(FieldRef ctx, const mpq_class& v);
  /// Residue polynomial in the generator (little-endian); reduced as needed.
  static FieldElem from_coeffs(FieldRef ctx, const gf::Coeffs& c);
  /// The class of X in F_p[X]/(P).
  static FieldElem generator(FieldRef ctx);

  FieldRef ctx() const { return ctx_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// Throws std::domain_error for zero.
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;

  const mpq_class& rational() const;
  /// Residue coefficients (length degree(); {r} for F_p). Finite fields only.
  gf::Coeffs coeffs() const;
  /// Base-p packing sum c_i p^i, for fields whose order fits in 64 bits.
  std::uint64_t packed() const;
  static FieldElem from_packed(FieldRef ctx, std::uint64_t index);

  /// Rationals print as "a" or "a/b", F_p values as integers in [0, p),
  /// extension elements as "(residue)" written in `var`.
  std::string to_string(const std::string& var = "t") const;

 private:
  FieldElem(FieldRef ctx, mpq_class q) : ctx_(ctx), v_(std::move(q)) {}
  FieldElem(FieldRef ctx, std::uint64_t r) : ctx_(ctx), v_(r) {}
  FieldElem(FieldRef ctx, gf::Coeffs c) : ctx_(ctx), v_(std::move(c)) {}
  void require_same(const FieldElem& o) const;

  FieldRef ctx_ = FieldCtx::rationals();
  std::variant<mpq_class, std::uint64_t, gf::Coeffs> v_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Single dispatch point for the four field operations.
FieldElem field_arith(const FieldElem& a, const FieldElem& b, ArithOp op);

/// Image of a prime-subfield element (or an element of `target` itself) in
/// `target`. Throws FieldMismatch otherwise.
FieldElem embed(const FieldElem& x, FieldRef target);

}  // namespace homsys
