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

#include <random>
#include <vector>

#include "homsys/field.hpp"
#include "homsys/poly.hpp"

namespace testutil {

using namespace homsys;

inline FieldElem random_elem(FieldRef ctx, std::mt19937_64& rng, long long span = 7) {
  if (ctx->is_rational()) {
    std::uniform_int_distribution<long long> num(-span, span), den(1, span);
    return FieldElem::from_rational(ctx, mpq_class(static_cast<long>(num(rng)), static_cast<long>(den(rng))));
  }
  std::uniform_int_distribution<std::uint64_t> d(0, *ctx->order() - 1);
  return FieldElem::from_packed(ctx, d(rng));
}

inline FieldElem random_nonzero(FieldRef ctx, std::mt19937_64& rng) {
  for (;;) {
    FieldElem x = random_elem(ctx, rng);
    if (!x.is_zero()) return x;
  }
}

inline Poly random_poly(FieldRef ctx, std::size_t nv, unsigned max_deg, unsigned terms, std::mt19937_64& rng) {
  Poly f(ctx, nv);
  std::uniform_int_distribution<unsigned> e(0, max_deg);
  for (unsigned t = 0; t < terms; ++t) {
    Exponent ex(nv);
    for (auto& v : ex) v = e(rng);
    f.add_term(ex, random_elem(ctx, rng));
  }
  return f;
}

inline Poly random_form(FieldRef ctx, std::size_t nv, unsigned deg, std::mt19937_64& rng, double density = 1.0) {
  Poly f(ctx, nv);
  std::bernoulli_distribution keep(density);
  for (const auto& m : monomials_of_degree(nv, deg))
    if (keep(rng)) f.add_term(m, random_elem(ctx, rng));
  return f;
}

inline std::vector<FieldElem> random_point(FieldRef ctx, std::size_t nv, std::mt19937_64& rng) {
  std::vector<FieldElem> p;
  for (std::size_t i = 0; i < nv; ++i) p.push_back(random_elem(ctx, rng));
  return p;
}

inline Poly var(FieldRef ctx, std::size_t nv, std::size_t i) { return Poly::variable(ctx, nv, i); }
inline Poly cst(FieldRef ctx, std::size_t nv, long long c) { return Poly::constant(ctx, nv, FieldElem::from_int(ctx, c)); }
inline FieldElem num(FieldRef ctx, long long v) { return FieldElem::from_int(ctx, v); }

}  // namespace testutil
