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

// Dense univariate polynomials over a prime field F_p.
//
// Coefficients are stored little-endian (index i holds the X^i coefficient)
// and reduced to [0, p). A polynomial is "trimmed" when it has no trailing
// zero coefficients; the zero polynomial is the empty vector.

#include <cstdint>
#include <string>
#include <vector>

namespace homsys::gf {

using Coeffs = std::vector<std::uint64_t>;

/// Deterministic primality test, valid for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Largest prime characteristic supported by the arithmetic (products of two
/// residues must fit in 64 bits).
inline constexpr std::uint64_t kMaxPrime = 2147483647ULL;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

void trim(Coeffs& f);
int degree(const Coeffs& f);  // -1 for the zero polynomial

Coeffs add(const Coeffs& f, const Coeffs& g, std::uint64_t p);
Coeffs sub(const Coeffs& f, const Coeffs& g, std::uint64_t p);
Coeffs mul(const Coeffs& f, const Coeffs& g, std::uint64_t p);

/// Quotient and remainder; g must be nonzero.
void divmod(const Coeffs& f, const Coeffs& g, std::uint64_t p, Coeffs& q, Coeffs& r);
Coeffs rem(const Coeffs& f, const Coeffs& g, std::uint64_t p);

/// Monic gcd (zero only when both inputs are zero).
Coeffs gcd(Coeffs f, Coeffs g, std::uint64_t p);

/// Inverse of f modulo m; throws std::domain_error when gcd(f, m) != 1.
Coeffs inv_mod_poly(const Coeffs& f, const Coeffs& m, std::uint64_t p);

Coeffs mul_mod_poly(const Coeffs& f, const Coeffs& g, const Coeffs& m, std::uint64_t p);

/// X^(p^k) mod m by k repeated Frobenius powerings.
Coeffs frobenius_power(const Coeffs& m, std::uint64_t p, unsigned k);

Coeffs pow_mod_poly(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint64_t p);

Coeffs derivative(const Coeffs& f, std::uint64_t p);

/// Rabin's test. P must be monic of degree >= 1 (throws otherwise).
bool rabin_irreducible(const Coeffs& P, std::uint64_t p);

/// Lexicographically first monic irreducible polynomial of degree N over F_p,
/// where candidates X^N + c_{N-1} X^{N-1} + ... + c_0 are visited in
/// increasing order of the integer sum c_i p^i.
Coeffs find_irreducible(std::uint64_t p, unsigned N);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Human-readable form such as "t^2+t+1" (coefficients in [0, p)).
std::string to_string(const Coeffs& f, const std::string& var = "t");

}  // namespace homsys::gf
