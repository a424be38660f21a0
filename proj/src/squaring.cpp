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

#include "homsys/squaring.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "homsys/gf_poly.hpp"
#include "homsys/reductions.hpp"
#include "homsys/verification.hpp"

namespace homsys {

namespace {

[[noreturn]] void fail(const std::string& who, const std::string& what) {
  throw std::invalid_argument(who + ": precondition failed: " + what);
}

std::size_t gadget_count(const PolySystem& sys) { return sys.num_vars() - 1; }

Poly shifted(const Poly& f, std::size_t nv) {
  std::vector<std::size_t> map(f.num_vars());
  std::iota(map.begin(), map.end(), std::size_t{0});
  return f.remap(nv, map);
}

Poly power_of(FieldRef ctx, std::size_t nv, std::size_t var, unsigned e, const FieldElem& c) {
  Exponent ex(nv, 0);
  ex[var] = e;
  return Poly::monomial(ctx, ex, c);
}

Metadata derived_meta(const PolySystem& src, const std::string& method) {
  Metadata m;
  m.set("method", method);
  if (auto s = src.meta().get("method")) m.set("source", *s);
  return m;
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty sampling range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t default_field_size(std::size_t num_vars) {
  std::uint64_t q = 4;
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (q > std::numeric_limits<std::uint64_t>::max() / 3) throw std::overflow_error("default field size overflows");
    q *= 3;
  }
  return q;
}

FieldRef sampling_field(FieldRef base, std::uint64_t size) {
  if (base->is_rational()) return base;
  const std::uint64_t p = base->characteristic();
  const unsigned a = base->degree();
  unsigned k = a;
  long double order = 1;
  for (unsigned i = 0; i < k; ++i) order *= static_cast<long double>(p);
  while (order < static_cast<long double>(size)) {
    for (unsigned i = 0; i < a; ++i) order *= static_cast<long double>(p);
    k += a;
  }
  if (k == a) return base;
  return FieldCtx::galois(p, k);
}

PolySystem pad_degrees(const PolySystem& sys) {
  unsigned L = 1;
  for (unsigned d : sys.degrees())
    if (d > 0) L = std::lcm(L, d);
  bool changed = false;
  std::vector<Poly> out;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const unsigned d = sys.degrees()[i];
    if (d == L || sys[i].is_zero()) {
      out.push_back(sys[i]);
      continue;
    }
    changed = true;
    for (std::size_t v = 0; v < sys.num_vars(); ++v)
      out.push_back(power_of(sys.ctx(), sys.num_vars(), v, L - d, FieldElem::one(sys.ctx())) * sys[i]);
  }
  if (!changed) return sys;
  Metadata meta = derived_meta(sys, "padded");
  return PolySystem(sys.ctx(), sys.var_names(), std::move(out), std::move(meta));
}

PolySystem random_square(const PolySystem& sys, const SquaringPlan& plan) {
  const std::string who = "random_square";
  if (plan.method != SquaringMethod::Random) fail(who, "plan method is not Random");
  std::optional<unsigned> common;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (sys[i].is_zero()) continue;
    if (common && *common != sys.degrees()[i]) fail(who, "degree mismatch (apply pad_degrees first)");
    common = sys.degrees()[i];
  }
  const std::size_t rows = sys.num_vars(), s = sys.size();
  if (s < rows) fail(who, "fewer polynomials than variables");

  std::vector<std::vector<FieldElem>> alpha;
  FieldRef target;
  std::uint64_t size = 0;
  Metadata meta = derived_meta(sys, "random");
  if (plan.alpha) {
    alpha = *plan.alpha;
    if (alpha.size() != rows) fail(who, "alpha must have n+1 rows");
    for (const auto& r : alpha)
      if (r.size() != s) fail(who, "alpha rows must have s entries");
    target = alpha.front().front().ctx();
    meta.set("alpha", "explicit");
  } else {
    if (!plan.seed) fail(who, "Random requires alpha or seed");
    size = plan.field_size.value_or(default_field_size(rows));
    target = plan.target_ctx ? plan.target_ctx : sampling_field(sys.ctx(), size);
    const auto order = target->order();
    const std::uint64_t draw = order ? *order : size;
    std::mt19937_64 rng(*plan.seed);
    alpha.assign(rows, {});
    for (auto& r : alpha) {
      for (std::size_t j = 0; j < s; ++j) {
        const std::uint64_t v = uniform_below(rng, draw);
        r.push_back(order ? FieldElem::from_packed(target, v) : FieldElem::from_mpz(target, mpz_class(std::to_string(v))));
      }
    }
    meta.set("seed", std::to_string(*plan.seed));
    meta.set("rng", kRngName);
    meta.set("field-size", order ? std::to_string(*order) : std::to_string(size));
  }
  if (target->is_extension()) meta.set("modulus", gf::to_string(target->modulus()));

  FieldMap into;
  try {
    into = FieldMap::find(sys.ctx(), target);
  } catch (const std::exception&) {
    fail(who, "sampling field does not contain the system field");
  }
  std::vector<Poly> src;
  for (const auto& f : sys.polys()) src.push_back(into(f));
  std::vector<Poly> out;
  for (const auto& r : alpha) {
    Poly g(target, rows);
    for (std::size_t j = 0; j < s; ++j) {
      if (r[j].ctx() != target) fail(who, "alpha entries must share one field");
      if (!r[j].is_zero()) g = g + src[j].scaled(r[j]);
    }
    out.push_back(std::move(g));
  }
  return PolySystem(target, sys.var_names(), std::move(out), std::move(meta));
}

void require_gadget_shape(const PolySystem& sys, const std::string& who) {
  const std::size_t n = gadget_count(sys);
  if (sys.size() < n + 1) fail(who, "needs at least n+1 polynomials (s >= n+1)");
  for (std::size_t i = 0; i < n; ++i) {
    if (sys[i] != square_gadget(sys.ctx(), sys.num_vars(), i + 1))
      fail(who, "polynomial " + std::to_string(i + 1) + " is not the square gadget of x" + std::to_string(i + 1));
  }
  for (std::size_t i = n; i < sys.size(); ++i) {
    if (!sys[i].is_zero() && sys.degrees()[i] != 2)
      fail(who, "polynomial " + std::to_string(i + 1) + " is not of degree 2");
  }
}

PolySystem lambda_chain_square(const PolySystem& sys, const SquaringPlan& plan) {
  const std::string who = "lambda_chain_square";
  require_gadget_shape(sys, who);
  const std::size_t n = gadget_count(sys), s = sys.size(), m = s - n;
  FieldRef target;
  FieldElem lambda;
  Metadata meta = derived_meta(sys, "lambda-chain");
  meta.set("gadgets", std::to_string(n));
  if (plan.method == SquaringMethod::LambdaInt) {
    if (!sys.ctx()->is_rational()) fail(who, "LambdaInt requires characteristic 0");
    target = sys.ctx();
    lambda = plan.lambda.value_or(FieldElem::from_int(target, 3));
    if (lambda.ctx() != target || lambda.rational().get_den() != 1) fail(who, "LambdaInt requires an integer lambda");
    if (!plan.allow_unsound_lambda && lambda.rational() <= 2) fail(who, "LambdaInt requires lambda > 2");
  } else if (plan.method == SquaringMethod::LambdaExt) {
    if (!sys.ctx()->is_prime_field()) fail(who, "LambdaExt requires a prime-field system");
    if (m == 1) {
      target = sys.ctx();
    } else {
      target = plan.target_ctx ? plan.target_ctx
                               : FieldCtx::extension(sys.ctx()->characteristic(),
                                                     gf::find_irreducible(sys.ctx()->characteristic(), static_cast<unsigned>(m)));
      if (!target->is_extension() || target->prime_subfield() != sys.ctx() || target->degree() != m)
        fail(who, "LambdaExt requires an extension modulus of degree s-n");
    }
    lambda = plan.lambda.value_or(target->is_extension() ? FieldElem::generator(target) : FieldElem::one(target));
    if (lambda.ctx() != target) fail(who, "lambda must live in the target field");
  } else {
    fail(who, "plan method must be LambdaInt or LambdaExt");
  }
  if (m == 1) return sys;

  meta.set("lambda", lambda.to_string());
  if (target->is_extension()) meta.set("modulus", gf::to_string(target->modulus()));
  const std::size_t nv = s;  // x0..xn then y1..y_{m-1}
  auto y = [&](std::size_t i) { return n + i; };
  const FieldElem one = FieldElem::one(target);
  std::vector<Poly> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(shifted(sys[i].embed_into(target), nv));
  for (std::size_t i = 1; i <= m; ++i) {
    Poly row = shifted(sys[n + i - 1].embed_into(target), nv);
    if (i > 1) row = row - power_of(target, nv, y(i - 1), 2, one);
    if (i < m) row = row + power_of(target, nv, y(i), 2, lambda);
    out.push_back(std::move(row));
  }
  auto names = sys.var_names();
  for (std::size_t i = 1; i < m; ++i) names.push_back("y" + std::to_string(i));
  return PolySystem(target, std::move(names), std::move(out), std::move(meta));
}

FieldElem epsilon_determinant(const EpsilonVector& eps, const FieldElem& lambda) {
  FieldRef ctx = lambda.ctx();
  FieldElem sum = FieldElem::zero(ctx), power = FieldElem::one(ctx);
  for (const auto& e : eps.values) {
    sum += embed(e, ctx) * power;
    power *= lambda;
  }
  if (!eps.values.empty() && eps.values.size() % 2 == 0) sum = -sum;
  return sum;
}

PolySystem ground_field_square(const PolySystem& sys, const std::optional<gf::Coeffs>& modulus) {
  const std::string who = "ground_field_square";
  if (!sys.ctx()->is_prime_field()) fail(who, "ground-field squaring requires a prime-field system");
  require_gadget_shape(sys, who);
  const std::size_t n = gadget_count(sys), s = sys.size();
  if (s <= n + 1) fail(who, "needs s > n+1");
  const std::size_t m = s - n;
  const std::uint64_t p = sys.ctx()->characteristic();
  gf::Coeffs P = modulus ? *modulus : gf::find_irreducible(p, static_cast<unsigned>(m));
  gf::trim(P);
  if (gf::degree(P) != static_cast<int>(m)) fail(who, "P must have degree s-n");
  if (P.back() != 1) fail(who, "P must be monic");
  if (!gf::rabin_irreducible(P, p)) fail(who, "P must be irreducible");
  if (P.front() == 0) fail(who, "P must not be divisible by lambda");

  FieldRef F = sys.ctx();
  const std::size_t nv = s + 1;
  const std::size_t lam = s;
  auto y = [&](std::size_t i) { return n + i; };
  const FieldElem one = FieldElem::one(F);
  std::vector<Poly> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(shifted(sys[i], nv));
  for (std::size_t i = 1; i <= m; ++i) {
    Poly row = shifted(sys[n + i - 1], nv);
    if (m > i) row = power_of(F, nv, 0, static_cast<unsigned>(m - i), one) * row;
    if (i > 1) row = row - power_of(F, nv, y(i - 1), static_cast<unsigned>(m - i + 2), one);
    if (i < m) {
      Exponent e(nv, 0);
      e[lam] = 1;
      e[y(i)] = static_cast<std::uint32_t>(m - i + 1);
      row = row + Poly::monomial(F, e, one);
    }
    out.push_back(std::move(row));
  }
  Poly Ph(F, nv);
  for (std::size_t k = 0; k < P.size(); ++k) {
    if (P[k] == 0) continue;
    Exponent e(nv, 0);
    e[lam] = static_cast<std::uint32_t>(k);
    e[0] = static_cast<std::uint32_t>(m - k);
    Ph.add_term(e, FieldElem::from_int(F, static_cast<long long>(P[k])));
  }
  out.push_back(std::move(Ph));

  auto names = sys.var_names();
  for (std::size_t i = 1; i < m; ++i) names.push_back("y" + std::to_string(i));
  names.push_back("lam");
  Metadata meta = derived_meta(sys, "ground");
  meta.set("gadgets", std::to_string(n));
  meta.set("lambda-var", "lam");
  meta.set("modulus", gf::to_string(P, "lam"));
  return PolySystem(F, std::move(names), std::move(out), std::move(meta));
}

EpsilonVector structured_epsilons(const PolySystem& source, const std::vector<FieldElem>& a, bool ground_scaling) {
  const std::size_t n = gadget_count(source);
  if (a.size() != source.num_vars()) throw std::invalid_argument("structured_epsilons: point has the wrong length");
  FieldRef ctx = source.ctx();
  std::vector<FieldElem> pt;
  for (const auto& v : a) pt.push_back(embed(v, ctx));
  const bool char2 = ctx->characteristic() == 2;
  for (std::size_t i = 1; i <= n; ++i) {
    const bool ok = char2 ? (pt[i].is_zero() || pt[i] == pt[0]) : (pt[i] * pt[i] == pt[0] * pt[0]);
    if (!ok) throw std::invalid_argument("structured_epsilons: point violates the gadget constraint on x" + std::to_string(i));
  }
  EpsilonVector eps;
  const std::size_t m = source.size() - n;
  for (std::size_t i = 1; i <= m; ++i) {
    FieldElem v = source[n + i - 1].evaluate(pt);
    if (ground_scaling) v *= pt[0].pow(m - i);
    eps.values.push_back(std::move(v));
  }
  return eps;
}

}  // namespace homsys
