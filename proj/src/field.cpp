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

#include "homsys/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace homsys {

namespace {

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::uint64_t, gf::Coeffs>, std::unique_ptr<FieldCtx>> contexts;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

FieldRef FieldCtx::rationals() {
  static const FieldCtx q(0, {});
  return &q;
}

FieldRef FieldCtx::prime(std::uint64_t p) {
  if (p > gf::kMaxPrime) throw std::invalid_argument("characteristic " + std::to_string(p) + " exceeds the supported maximum");
  if (!gf::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto& slot = reg.contexts[{p, {}}];
  if (!slot) slot.reset(new FieldCtx(p, {}));
  return slot.get();
}

FieldRef FieldCtx::extension(std::uint64_t p, gf::Coeffs modulus) {
  FieldRef base = prime(p);
  for (auto& c : modulus) c %= p;
  gf::trim(modulus);
  if (gf::degree(modulus) < 1) throw std::invalid_argument("extension modulus must have degree >= 1");
  if (modulus.back() != 1) throw std::invalid_argument("extension modulus must be monic");
  if (!gf::rabin_irreducible(modulus, p))
    throw std::invalid_argument("extension modulus " + gf::to_string(modulus) + " is reducible over " + base->describe());
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto& slot = reg.contexts[{p, modulus}];
  if (!slot) slot.reset(new FieldCtx(p, modulus));
  return slot.get();
}

FieldRef FieldCtx::galois(std::uint64_t p, unsigned k) {
  if (k == 1) return prime(p);
  return extension(p, gf::find_irreducible(p, k));
}

std::optional<std::uint64_t> FieldCtx::order() const {
  if (p_ == 0) return std::nullopt;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < degree(); ++i) {
    if (q > UINT64_MAX / p_) return std::nullopt;
    q *= p_;
  }
  return q;
}

std::string FieldCtx::describe() const {
  if (p_ == 0) return "QQ";
  std::string s = "GF(" + std::to_string(p_) + ")";
  if (!modulus_.empty()) s += "[t]/(" + gf::to_string(modulus_) + ")";
  return s;
}

FieldRef FieldCtx::prime_subfield() const {
  if (!is_extension()) return this;
  return prime(p_);
}

// ---------------------------------------------------------------------------

FieldElem FieldElem::zero(FieldRef ctx) { return from_int(ctx, 0); }
FieldElem FieldElem::one(FieldRef ctx) { return from_int(ctx, 1); }

FieldElem FieldElem::from_int(FieldRef ctx, long long v) {
  if (ctx->is_rational()) return FieldElem(ctx, mpq_class(mpz_class(static_cast<long>(v))));
  const auto p = static_cast<long long>(ctx->characteristic());
  const auto r = static_cast<std::uint64_t>(((v % p) + p) % p);
  if (ctx->is_prime_field()) return FieldElem(ctx, r);
  return from_coeffs(ctx, gf::Coeffs{r});
}

FieldElem FieldElem::from_mpz(FieldRef ctx, const mpz_class& v) {
  if (ctx->is_rational()) return FieldElem(ctx, mpq_class(v));
  mpz_class r = v % mpz_class(static_cast<unsigned long>(ctx->characteristic()));
  if (r < 0) r += static_cast<unsigned long>(ctx->characteristic());
  return from_int(ctx, static_cast<long long>(r.get_si()));
}

FieldElem FieldElem::from_rational(FieldRef ctx, const mpq_class& v) {
  if (ctx->is_rational()) {
    mpq_class c = v;
    c.canonicalize();
    return FieldElem(ctx, std::move(c));
  }
  return from_mpz(ctx, v.get_num()) / from_mpz(ctx, v.get_den());
}

FieldElem FieldElem::from_coeffs(FieldRef ctx, const gf::Coeffs& c) {
  if (ctx->is_rational()) throw std::invalid_argument("residue coefficients given for the rationals");
  const std::uint64_t p = ctx->characteristic();
  gf::Coeffs r(c);
  for (auto& x : r) x %= p;
  gf::trim(r);
  if (ctx->is_prime_field()) {
    if (r.size() > 1) throw std::invalid_argument("non-constant residue given for a prime field");
    return FieldElem(ctx, r.empty() ? std::uint64_t{0} : r[0]);
  }
  if (r.size() >= ctx->modulus().size()) r = gf::rem(r, ctx->modulus(), p);
  return FieldElem(ctx, std::move(r));
}

FieldElem FieldElem::generator(FieldRef ctx) {
  if (!ctx->is_extension()) throw std::invalid_argument("generator requested for a field without extension modulus");
  return from_coeffs(ctx, gf::Coeffs{0, 1});
}

bool FieldElem::is_zero() const {
  switch (v_.index()) {
    case 0: return sgn(std::get<0>(v_)) == 0;
    case 1: return std::get<1>(v_) == 0;
    default: return std::get<2>(v_).empty();
  }
}

bool FieldElem::is_one() const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_) == 1;
    case 1: return std::get<1>(v_) == 1;
    default: {
      const auto& c = std::get<2>(v_);
      return c.size() == 1 && c[0] == 1;
    }
  }
}

void FieldElem::require_same(const FieldElem& o) const {
  if (ctx_ != o.ctx_) throw FieldMismatch("field mismatch: " + ctx_->describe() + " vs " + o.ctx_->describe());
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same(o);
  const std::uint64_t p = ctx_->characteristic();
  switch (v_.index()) {
    case 0: return FieldElem(ctx_, mpq_class(std::get<0>(v_) + std::get<0>(o.v_)));
    case 1: return FieldElem(ctx_, (std::get<1>(v_) + std::get<1>(o.v_)) % p);
    default: return FieldElem(ctx_, gf::add(std::get<2>(v_), std::get<2>(o.v_), p));
  }
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  require_same(o);
  const std::uint64_t p = ctx_->characteristic();
  switch (v_.index()) {
    case 0: return FieldElem(ctx_, mpq_class(std::get<0>(v_) - std::get<0>(o.v_)));
    case 1: return FieldElem(ctx_, (std::get<1>(v_) + p - std::get<1>(o.v_)) % p);
    default: return FieldElem(ctx_, gf::sub(std::get<2>(v_), std::get<2>(o.v_), p));
  }
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same(o);
  const std::uint64_t p = ctx_->characteristic();
  switch (v_.index()) {
    case 0: return FieldElem(ctx_, mpq_class(std::get<0>(v_) * std::get<0>(o.v_)));
    case 1: return FieldElem(ctx_, std::get<1>(v_) * std::get<1>(o.v_) % p);
    default: return FieldElem(ctx_, gf::mul_mod_poly(std::get<2>(v_), std::get<2>(o.v_), ctx_->modulus(), p));
  }
}

FieldElem FieldElem::operator-() const { return zero(ctx_) - *this; }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in " + ctx_->describe());
  const std::uint64_t p = ctx_->characteristic();
  switch (v_.index()) {
    case 0: return FieldElem(ctx_, mpq_class(1 / std::get<0>(v_)));
    case 1: return FieldElem(ctx_, gf::inv_mod(std::get<1>(v_), p));
    default: return FieldElem(ctx_, gf::inv_mod_poly(std::get<2>(v_), ctx_->modulus(), p));
  }
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  require_same(o);
  return *this * o.inverse();
}

bool FieldElem::operator==(const FieldElem& o) const {
  require_same(o);
  return v_ == o.v_;
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem result = one(ctx_);
  FieldElem base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

const mpq_class& FieldElem::rational() const {
  if (v_.index() != 0) throw std::invalid_argument("rational value requested from " + ctx_->describe());
  return std::get<0>(v_);
}

gf::Coeffs FieldElem::coeffs() const {
  switch (v_.index()) {
    case 0: throw std::invalid_argument("residue requested from the rationals");
    case 1: return std::get<1>(v_) == 0 ? gf::Coeffs{} : gf::Coeffs{std::get<1>(v_)};
    default: return std::get<2>(v_);
  }
}

std::uint64_t FieldElem::packed() const {
  if (!ctx_->order()) throw std::invalid_argument("packed index needs a finite field of 64-bit order");
  const std::uint64_t p = ctx_->characteristic();
  const gf::Coeffs c = coeffs();
  std::uint64_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
  return idx;
}

FieldElem FieldElem::from_packed(FieldRef ctx, std::uint64_t index) {
  const std::uint64_t p = ctx->characteristic();
  if (p == 0) throw std::invalid_argument("packed index given for the rationals");
  if (ctx->is_prime_field()) return FieldElem(ctx, index % p);
  gf::Coeffs c;
  c.reserve(ctx->degree());
  for (unsigned i = 0; i < ctx->degree(); ++i) {
    c.push_back(index % p);
    index /= p;
  }
  gf::trim(c);
  return FieldElem(ctx, std::move(c));
}

std::string FieldElem::to_string(const std::string& var) const {
  switch (v_.index()) {
    case 0: return std::get<0>(v_).get_str();
    case 1: return std::to_string(std::get<1>(v_));
    default: return "(" + gf::to_string(std::get<2>(v_), var) + ")";
  }
}

FieldElem field_arith(const FieldElem& a, const FieldElem& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

FieldElem embed(const FieldElem& x, FieldRef target) {
  if (x.ctx() == target) return x;
  if (x.ctx()->is_prime_field() && target->characteristic() == x.ctx()->characteristic())
    return FieldElem::from_coeffs(target, x.coeffs());
  throw FieldMismatch("cannot embed " + x.ctx()->describe() + " into " + target->describe());
}

}  // namespace homsys
