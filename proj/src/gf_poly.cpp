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

#include "homsys/gf_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace homsys::gf {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod64(r, a, m);
    a = mul_mod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for n < 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) { return pow_mod64(a, e, p); }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("division by zero in F_p");
  return pow_mod64(a, p - 2, p);
}

void trim(Coeffs& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Coeffs& f) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Coeffs add(const Coeffs& f, const Coeffs& g, std::uint64_t p) {
  Coeffs r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = (r[i] + g[i]) % p;
  trim(r);
  return r;
}

Coeffs sub(const Coeffs& f, const Coeffs& g, std::uint64_t p) {
  Coeffs r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = (r[i] + p - g[i]) % p;
  trim(r);
  return r;
}

Coeffs mul(const Coeffs& f, const Coeffs& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Coeffs r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + f[i] * g[j]) % p;
  }
  trim(r);
  return r;
}

void divmod(const Coeffs& f, const Coeffs& g, std::uint64_t p, Coeffs& q, Coeffs& r) {
  const int dg = degree(g);
  if (dg < 0) throw std::domain_error("polynomial division by zero");
  r = f;
  trim(r);
  const int df = degree(r);
  if (df < dg) {
    q.clear();
    return;
  }
  q.assign(static_cast<std::size_t>(df - dg + 1), 0);
  const std::uint64_t lead_inv = inv_mod(g[static_cast<std::size_t>(dg)], p);
  for (int k = df; k >= dg; --k) {
    const std::uint64_t c = r[static_cast<std::size_t>(k)] * lead_inv % p;
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - dg)] = c;
    for (int j = 0; j <= dg; ++j) {
      auto& slot = r[static_cast<std::size_t>(k - dg + j)];
      slot = (slot + p - c * g[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  trim(r);
  trim(q);
}

Coeffs rem(const Coeffs& f, const Coeffs& g, std::uint64_t p) {
  Coeffs q, r;
  divmod(f, g, p, q, r);
  return r;
}

Coeffs gcd(Coeffs f, Coeffs g, std::uint64_t p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Coeffs r = rem(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) {
    const std::uint64_t inv = inv_mod(f.back(), p);
    for (auto& c : f) c = c * inv % p;
  }
  return f;
}

Coeffs inv_mod_poly(const Coeffs& f, const Coeffs& m, std::uint64_t p) {
  // Extended Euclid tracking only the cofactor of f.
  Coeffs r0 = m, r1 = rem(f, m, p);
  Coeffs s0, s1{1};
  while (!r1.empty()) {
    Coeffs q, r;
    divmod(r0, r1, p, q, r);
    Coeffs s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r0) != 0) throw std::domain_error("element is not invertible modulo the given polynomial");
  const std::uint64_t inv = inv_mod(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  return rem(s0, m, p);
}

Coeffs mul_mod_poly(const Coeffs& f, const Coeffs& g, const Coeffs& m, std::uint64_t p) {
  return rem(mul(f, g, p), m, p);
}

Coeffs pow_mod_poly(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint64_t p) {
  Coeffs result = rem(Coeffs{1}, m, p);
  base = rem(base, m, p);
  while (e) {
    if (e & 1) result = mul_mod_poly(result, base, m, p);
    e >>= 1;
    if (e) base = mul_mod_poly(base, base, m, p);
  }
  return result;
}

Coeffs frobenius_power(const Coeffs& m, std::uint64_t p, unsigned k) {
  Coeffs x = rem(Coeffs{0, 1}, m, p);
  for (unsigned i = 0; i < k; ++i) x = pow_mod_poly(x, p, m, p);
  return x;
}

Coeffs derivative(const Coeffs& f, std::uint64_t p) {
  if (f.size() <= 1) return {};
  Coeffs d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * (i % p) % p;
  trim(d);
  return d;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool rabin_irreducible(const Coeffs& P, std::uint64_t p) {
  const int N = degree(P);
  if (N < 1) throw std::invalid_argument("irreducibility test needs degree >= 1");
  if (P[static_cast<std::size_t>(N)] != 1) throw std::invalid_argument("irreducibility test needs a monic polynomial");
  Coeffs m = P;
  trim(m);
  const Coeffs x = rem(Coeffs{0, 1}, m, p);
  if (sub(frobenius_power(m, p, static_cast<unsigned>(N)), x, p).size() != 0) return false;
  for (std::uint64_t q : prime_factors(static_cast<std::uint64_t>(N))) {
    const Coeffs h = sub(frobenius_power(m, p, static_cast<unsigned>(N / static_cast<int>(q))), x, p);
    if (degree(gcd(h, m, p)) != 0) return false;
  }
  return true;
}

Coeffs find_irreducible(std::uint64_t p, unsigned N) {
  if (!is_prime(p)) throw std::invalid_argument("find_irreducible: characteristic must be prime");
  if (N == 0) throw std::invalid_argument("find_irreducible: degree must be >= 1");
  Coeffs candidate(N + 1, 0);
  candidate[N] = 1;
  for (;;) {
    if (rabin_irreducible(candidate, p)) return candidate;
    // Odometer over (c_0, ..., c_{N-1}) with c_0 least significant.
    unsigned i = 0;
    while (i < N && ++candidate[i] == p) candidate[i++] = 0;
    if (i == N) throw std::logic_error("no irreducible polynomial found");  // unreachable
  }
}

std::string to_string(const Coeffs& f, const std::string& var) {
  if (degree(f) < 0) return "0";
  std::string out;
  for (int i = degree(f); i >= 0; --i) {
    const std::uint64_t c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace homsys::gf
