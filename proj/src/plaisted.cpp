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

#include "homsys/plaisted.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "homsys/gf_poly.hpp"

namespace homsys {

SupersparsePoly SupersparsePoly::x_pow_minus_one(const mpz_class& e) {
  SupersparsePoly f;
  f.add_term(e, 1);
  f.add_term(0, -1);
  return f;
}

SupersparsePoly SupersparsePoly::from_dense(const std::vector<mpz_class>& coeffs) {
  SupersparsePoly f;
  for (std::size_t i = 0; i < coeffs.size(); ++i) f.add_term(mpz_class(static_cast<unsigned long>(i)), coeffs[i]);
  return f;
}

void SupersparsePoly::add_term(const mpz_class& e, const mpz_class& c) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class SupersparsePoly::coeff(const mpz_class& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

std::vector<mpz_class> SupersparsePoly::to_dense() const {
  if (terms_.empty()) return {};
  const mpz_class d = degree();
  if (!d.fits_uint_p()) throw DeskScaleExceeded("degree too large for a dense expansion");
  std::vector<mpz_class> out(d.get_ui() + 1, 0);
  for (const auto& [e, c] : terms_) out[e.get_ui()] = c;
  return out;
}

std::string SupersparsePoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const mpz_class a = abs(c);
    if (neg) out += "-";
    else if (!out.empty()) out += "+";
    if (e == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += var;
    if (e != 1) out += "^" + e.get_str();
  }
  return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 2; out.size() < count; ++c) {
    if (gf::is_prime(c)) out.push_back(c);
  }
  return out;
}

namespace {

int mobius(std::uint64_t n) {
  int result = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<mpz_class> dense_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

mpz_class modulus_of(const std::vector<std::uint64_t>& primes) {
  mpz_class M = 1;
  for (std::uint64_t p : primes) M *= static_cast<unsigned long>(p);
  return M;
}

void check_scale(const mpz_class& M, const mpz_class& bound) {
  if (M > bound) throw DeskScaleExceeded("desk-scale exceeded: M = " + M.get_str() + " is above the bound " + bound.get_str());
}

}  // namespace

std::vector<mpz_class> cyclotomic(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("cyclotomic index must be positive");
  std::vector<mpz_class> f{1};
  const auto ds = divisors(d);
  // Multiply all (x^e - 1) with mu(d/e) = 1 first so the divisions are exact.
  for (std::uint64_t e : ds) {
    if (mobius(d / e) != 1) continue;
    std::vector<mpz_class> g(f.size() + e, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      g[i + e] += f[i];
      g[i] -= f[i];
    }
    f = std::move(g);
  }
  for (std::uint64_t e : ds) {
    if (mobius(d / e) != -1) continue;
    // Solve q (x^e - 1) = f: f_i = q_{i-e} - q_i.
    std::vector<mpz_class> q(f.size() - e, 0);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = (i >= e ? q[i - e] : mpz_class(0)) - f[i];
    f = std::move(q);
  }
  return f;
}

SupersparsePoly plaisted_clause_poly(const std::vector<int>& literals, const std::vector<std::uint64_t>& primes,
                                     const mpz_class& max_modulus) {
  if (literals.empty() || literals.size() > 3) throw std::invalid_argument("a clause holds 1 to 3 literals");
  std::set<std::uint64_t> distinct(primes.begin(), primes.end());
  distinct.erase(1);
  const mpz_class M = modulus_of(std::vector<std::uint64_t>(distinct.begin(), distinct.end()));
  check_scale(M, max_modulus);
  const std::uint64_t m = M.get_ui();
  std::set<std::uint64_t> support;
  for (int lit : literals) {
    const auto j = static_cast<std::size_t>(std::abs(lit));
    if (j == 0 || j > primes.size() || primes[j - 1] < 2) throw std::invalid_argument("literal without an assigned prime");
    const std::uint64_t p = primes[j - 1];
    for (std::uint64_t d : divisors(m)) {
      const bool divides_cofactor = (m / p) % d == 0;
      if (divides_cofactor == (lit > 0)) support.insert(d);
    }
  }
  std::vector<mpz_class> f{1};
  for (std::uint64_t d : support) f = dense_mul(f, cyclotomic(d));
  return SupersparsePoly::from_dense(f);
}

std::pair<SupersparsePoly, SupersparsePoly> plaisted_conjunction(const std::vector<SupersparsePoly>& clause_polys,
                                                                 const mpz_class& M, const mpz_class& max_modulus) {
  check_scale(M, max_modulus);
  SupersparsePoly P;
  for (const auto& c : clause_polys) {
    for (const auto& [a, ca] : c.terms()) {
      for (const auto& [b, cb] : c.terms()) P.add_term(M + a - b, ca * cb);
    }
  }
  return {P, SupersparsePoly::x_pow_minus_one(M)};
}

PlaistedEncoding plaisted_encode(const CnfFormula& phi, const mpz_class& max_modulus) {
  validate(phi);
  PlaistedEncoding enc;
  const auto primes = first_primes(phi.num_vars);
  enc.primes.assign(phi.num_vars, 1);
  for (const auto& clause : phi.clauses)
    for (int lit : clause) enc.primes[static_cast<std::size_t>(std::abs(lit)) - 1] = primes[static_cast<std::size_t>(std::abs(lit)) - 1];
  enc.M = 1;
  for (auto p : enc.primes) enc.M *= static_cast<unsigned long>(p);
  check_scale(enc.M, max_modulus);
  for (const auto& clause : phi.clauses) enc.clause_polys.push_back(plaisted_clause_poly(clause, enc.primes, max_modulus));
  auto [P, xm] = plaisted_conjunction(enc.clause_polys, enc.M, max_modulus);
  enc.P = std::move(P);
  enc.x_m_minus_one = std::move(xm);
  return enc;
}

PolySystem plaisted_homogenize(const std::pair<SupersparsePoly, SupersparsePoly>& pair) {
  FieldRef qq = FieldCtx::rationals();
  auto convert = [&](const SupersparsePoly& s) {
    Poly f(qq, 2);
    for (const auto& [e, c] : s.terms()) {
      if (e > std::numeric_limits<std::uint32_t>::max()) throw DeskScaleExceeded("exponent does not fit a machine word");
      f.add_term(Exponent{static_cast<std::uint32_t>(e.get_ui()), 0}, FieldElem::from_mpz(qq, c));
    }
    return homogenize(f, 1);
  };
  Metadata meta;
  meta.set("method", "plaisted");
  return PolySystem(qq, {"x", "y"}, {convert(pair.first), convert(pair.second)}, std::move(meta));
}

}  // namespace homsys
