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

// Projective enumeration over finite fields and the bounded closure search.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

#include "homsys/gf_poly.hpp"
#include "homsys/verification.hpp"

namespace homsys {

using Elem = SmallField::Elem;

FieldMap FieldMap::find(FieldRef src, FieldRef dst) {
  FieldMap m;
  m.src_ = src;
  m.dst_ = dst;
  if (src == dst) return m;
  if (src->characteristic() != dst->characteristic()) throw std::invalid_argument("no embedding between fields of different characteristic");
  if (src->is_prime_field()) return m;
  if (src->is_rational() || dst->degree() % src->degree() != 0)
    throw std::invalid_argument("no embedding of " + src->describe() + " into " + dst->describe());
  const SmallField& sf = small_field_for(dst);
  const gf::Coeffs& mod = src->modulus();
  for (std::uint64_t idx = 0; idx < sf.order(); ++idx) {
    const Elem x = sf.from_packed(idx);
    Elem acc = sf.zero();
    for (std::size_t i = mod.size(); i-- > 0;) acc = sf.add(sf.mul(acc, x), sf.from_packed(mod[i]));
    if (sf.is_zero(acc)) {
      m.gen_ = sf.to_elem(x);
      return m;
    }
  }
  throw std::logic_error("extension modulus has no root in a field that should contain it");
}

FieldMap FieldMap::with_generator(FieldRef src, const FieldElem& image) {
  FieldMap m;
  m.src_ = src;
  m.dst_ = image.ctx();
  if (src->is_extension() && src != image.ctx()) m.gen_ = image;
  return m;
}

FieldElem FieldMap::operator()(const FieldElem& x) const {
  if (x.ctx() != src_) throw FieldMismatch("field map applied outside its domain");
  if (!gen_) return embed(x, dst_);
  const gf::Coeffs c = x.coeffs();
  FieldElem acc = FieldElem::zero(dst_);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * *gen_ + FieldElem::from_int(dst_, static_cast<long long>(c[i]));
  return acc;
}

Poly FieldMap::operator()(const Poly& f) const {
  Poly r(dst_, f.num_vars());
  for (const auto& [e, c] : f.terms()) r.add_term(e, (*this)(c));
  return r;
}

const SmallField& small_field_for(FieldRef ctx) {
  static std::mutex mu;
  static std::map<FieldRef, std::unique_ptr<SmallField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[ctx];
  if (!slot) slot = std::make_unique<SmallField>(ctx);
  return *slot;
}

std::uint64_t projective_point_count(std::uint64_t q, std::size_t num_vars) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (total > UINT64_MAX - power) return UINT64_MAX;
    total += power;
    if (i + 1 < num_vars) {
      if (power > UINT64_MAX / q) return UINT64_MAX;
      power *= q;
    }
  }
  return total;
}

FieldRef enumeration_field(FieldRef base, unsigned k) {
  if (base->is_rational()) throw std::invalid_argument("enumeration needs a finite field");
  if (k == 0) throw std::invalid_argument("extension degree must be positive");
  if (k == 1) return base;
  return FieldCtx::galois(base->characteristic(), base->degree() * k);
}

namespace {

struct CompiledPoly {
  std::vector<Elem> coeffs;
  std::vector<Exponent> exps;
};

std::vector<CompiledPoly> compile(const std::vector<Poly>& polys, const SmallField& sf) {
  std::vector<CompiledPoly> out;
  for (const auto& f : polys) {
    CompiledPoly c;
    for (const auto& [e, v] : f.terms()) {
      c.coeffs.push_back(sf.from_elem(v));
      c.exps.push_back(e);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool vanishes(const CompiledPoly& f, const std::vector<Elem>& x, const SmallField& sf) {
  const std::uint64_t m = sf.order() - 1;
  Elem acc = sf.zero();
  for (std::size_t t = 0; t < f.coeffs.size(); ++t) {
    std::uint64_t l = f.coeffs[t];
    bool zero = false;
    const Exponent& e = f.exps[t];
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (sf.is_zero(x[i])) {
        zero = true;
        break;
      }
      l += (static_cast<std::uint64_t>(e[i]) % m) * x[i];
    }
    if (!zero) acc = sf.add(acc, static_cast<Elem>(l % m));
  }
  return sf.is_zero(acc);
}

using ElemSets = std::vector<std::vector<Elem>>;

std::uint64_t product_size(const ElemSets& sets) {
  std::uint64_t total = 1;
  for (const auto& s : sets) {
    if (s.empty()) return 0;
    if (total > UINT64_MAX / s.size()) return UINT64_MAX;
    total *= s.size();
  }
  return total;
}

// Cartesian product with the last coordinate varying fastest.
void product_search(const ElemSets& sets, const std::vector<CompiledPoly>& polys, const SmallField& sf, bool first_only,
                    std::vector<std::vector<Elem>>& out) {
  const std::size_t n = sets.size();
  if (product_size(sets) == 0) return;
  std::vector<std::size_t> idx(n, 0);
  std::vector<Elem> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = sets[i][0];
  for (;;) {
    bool ok = true;
    for (const auto& f : polys) {
      if (!vanishes(f, x, sf)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.push_back(x);
      if (first_only) return;
    }
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < sets[pos].size()) {
        x[pos] = sets[pos][idx[pos]];
        break;
      }
      idx[pos] = 0;
      x[pos] = sets[pos][0];
      if (pos == 0) return;
    }
    if (n == 0) return;
  }
}

void parallel_search(const ElemSets& sets, const std::vector<CompiledPoly>& polys, const SmallField& sf, bool first_only,
                     unsigned workers, std::vector<std::vector<Elem>>& out) {
  std::size_t split = sets.size();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].size() > 1) {
      split = i;
      break;
    }
  }
  if (workers <= 1 || split == sets.size() || product_size(sets) < 4096) {
    product_search(sets, polys, sf, first_only, out);
    return;
  }
  const std::size_t len = sets[split].size();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, len));
  std::vector<std::vector<std::vector<Elem>>> parts(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      ElemSets local = sets;
      const std::size_t lo = len * w / workers, hi = len * (w + 1) / workers;
      local[split].assign(sets[split].begin() + static_cast<std::ptrdiff_t>(lo), sets[split].begin() + static_cast<std::ptrdiff_t>(hi));
      product_search(local, polys, sf, first_only, parts[w]);
    });
  }
  for (auto& t : pool) t.join();
  for (auto& part : parts) {
    for (auto& pt : part) {
      out.push_back(std::move(pt));
      if (first_only) return;
    }
  }
}

std::vector<Elem> all_elements(const SmallField& sf) {
  std::vector<Elem> v(sf.order());
  for (std::uint64_t i = 0; i < sf.order(); ++i) v[i] = sf.from_packed(i);
  return v;
}

struct Enumerator {
  FieldRef K;
  FieldMap map;
  const SmallField* sf;
  std::vector<CompiledPoly> polys;
};

Enumerator prepare(const PolySystem& sys, unsigned k) {
  FieldRef K = enumeration_field(sys.ctx(), k);
  const auto order = K->order();
  if (!order || *order > SmallField::kMaxOrder)
    throw BudgetExceeded("field " + K->describe() + " exceeds the table limit of " + std::to_string(SmallField::kMaxOrder) + " elements");
  Enumerator e{K, FieldMap::find(sys.ctx(), K), &small_field_for(K), {}};
  std::vector<Poly> mapped;
  for (const auto& f : sys.polys())
    if (!f.is_zero()) mapped.push_back(e.map(f));
  e.polys = compile(mapped, *e.sf);
  return e;
}

std::vector<std::vector<Elem>> projective_search(const PolySystem& sys, const Enumerator& en, bool first_only,
                                                 const EnumerationOptions& opt) {
  const SmallField& sf = *en.sf;
  const std::size_t N = sys.num_vars();
  const std::uint64_t count = projective_point_count(sf.order(), N);
  if (count > opt.max_candidates)
    throw BudgetExceeded(std::to_string(count == UINT64_MAX ? 0 : count) + " candidates over " + en.K->describe() + " exceed the budget of " +
                         std::to_string(opt.max_candidates));
  const std::vector<Elem> all = all_elements(sf);
  std::vector<std::vector<Elem>> out;
  for (std::size_t lead = 0; lead < N; ++lead) {
    ElemSets sets(N);
    for (std::size_t i = 0; i < N; ++i) {
      if (i < lead) sets[i] = {sf.zero()};
      else if (i == lead) sets[i] = {sf.one()};
      else sets[i] = all;
    }
    parallel_search(sets, en.polys, sf, first_only, opt.workers, out);
    if (first_only && !out.empty()) break;
  }
  return out;
}

std::vector<FieldElem> to_elems(const std::vector<Elem>& pt, const SmallField& sf) {
  std::vector<FieldElem> v;
  for (Elem a : pt) v.push_back(sf.to_elem(a));
  return v;
}

Witness make_witness(const Enumerator& en, const std::vector<Elem>& pt) {
  Witness w;
  w.field = en.K;
  w.values = to_elems(pt, *en.sf);
  w.powers.assign(pt.size(), 1);
  w.generator_image = en.map.generator_image();
  return w;
}

Verdict checked(const PolySystem& sys, Witness w, std::string reason) {
  if (!witness_vanishes(sys, w)) throw std::logic_error("closure search produced a point that is not a root");
  return Verdict::satisfiable(std::move(w), std::move(reason));
}

// Injectivity of (u, v) -> u f - v g with deg u = deg g - 1, deg v = deg f - 1.
bool coprime_forms(const Poly& f, const Poly& g) {
  const unsigned d = static_cast<unsigned>(f.total_degree()), e = static_cast<unsigned>(g.total_degree());
  const std::size_t N = f.num_vars();
  const auto us = monomials_of_degree(N, e - 1), vs = monomials_of_degree(N, d - 1), rows = monomials_of_degree(N, d + e - 1);
  std::map<Exponent, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
  Matrix m(f.ctx(), rows.size(), us.size() + vs.size());
  auto fill = [&](const std::vector<Exponent>& basis, const Poly& h, std::size_t offset, bool negate) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      for (const auto& [ex, coef] : h.terms()) {
        Exponent s = ex;
        for (std::size_t i = 0; i < N; ++i) s[i] += basis[c][i];
        m(row_of.at(s), offset + c) = negate ? -coef : coef;
      }
    }
  };
  fill(us, f, 0, false);
  fill(vs, g, us.size(), true);
  return rank(m) == us.size() + vs.size();
}

}  // namespace

std::vector<std::vector<FieldElem>> enumerate_projective_roots(const PolySystem& sys, unsigned k, const EnumerationOptions& opt) {
  const Enumerator en = prepare(sys, k);
  std::vector<std::vector<FieldElem>> out;
  for (const auto& pt : projective_search(sys, en, false, opt)) out.push_back(to_elems(pt, *en.sf));
  return out;
}

Verdict closure_satisfiable(const PolySystem& sys, const ClosureOptions& opt) {
  FieldRef F = sys.ctx();
  if (F->is_rational()) return Verdict::indeterminate("closure search needs a finite coefficient field");
  const std::size_t N = sys.num_vars();
  std::vector<Poly> live;
  for (const auto& f : sys.polys())
    if (!f.is_zero()) live.push_back(f);
  if (live.empty()) {
    Witness w{F, {}, std::vector<unsigned>(N, 1), std::nullopt};
    for (std::size_t i = 0; i < N; ++i) w.values.push_back(i == 0 ? FieldElem::one(F) : FieldElem::zero(F));
    return checked(sys, std::move(w), "every polynomial is zero");
  }
  for (const auto& f : live)
    if (f.total_degree() == 0) return Verdict::unsatisfiable("nonzero constant polynomial");
  if (N == 1) return Verdict::unsatisfiable("a nonzero form in one variable vanishes only at 0");
  const EnumerationOptions eopt{opt.max_candidates, opt.workers};

  // Pivot certificate: every x_j is algebraic over x0 through a form in {x0, x_j}.
  std::vector<const Poly*> pivot(N, nullptr);
  bool have_pivots = true;
  unsigned emax = 0;
  for (std::size_t j = 1; j < N && have_pivots; ++j) {
    for (const auto& f : live) {
      bool only = true;
      for (std::size_t v = 1; v < N; ++v)
        if (v != j && f.occurs(v)) only = false;
      if (!only) continue;
      const unsigned d = static_cast<unsigned>(f.total_degree());
      Exponent top(N, 0);
      top[j] = d;
      if (f.coeff(top).is_zero()) continue;
      if (!pivot[j] || d < static_cast<unsigned>(pivot[j]->total_degree())) pivot[j] = &f;
    }
    if (!pivot[j]) have_pivots = false;
    else emax = std::max(emax, static_cast<unsigned>(pivot[j]->total_degree()));
  }
  std::string pivot_note;
  if (have_pivots) {
    unsigned L = 1;
    for (unsigned i = 2; i <= emax; ++i) L = std::lcm(L, i);
    try {
      const Enumerator en = prepare(sys, L);
      const SmallField& sf = *en.sf;
      ElemSets sets(N);
      sets[0] = {sf.one()};
      const std::vector<Elem> all = all_elements(sf);
      for (std::size_t j = 1; j < N; ++j) {
        const Poly h = en.map(*pivot[j]);
        CompiledPoly c = compile({h}, sf).front();
        std::vector<Elem> x(N, sf.zero());
        x[0] = sf.one();
        for (Elem t : all) {
          x[j] = t;
          if (vanishes(c, x, sf)) sets[j].push_back(t);
        }
      }
      const std::uint64_t size = product_size(sets);
      if (size <= opt.max_candidates) {
        std::vector<std::vector<Elem>> found;
        parallel_search(sets, en.polys, sf, true, opt.workers, found);
        if (!found.empty()) return checked(sys, make_witness(en, found.front()), "root over " + en.K->describe());
        return Verdict::unsatisfiable("pivot certificate: all roots lie over " + en.K->describe() + " and none is common");
      }
      pivot_note = "pivot candidates exceed the budget; ";
    } catch (const BudgetExceeded& e) {
      pivot_note = std::string("pivot field too large (") + e.what() + "); ";
    }
  }

  // Residue-degree bound for finitely many roots.
  std::optional<unsigned> R;
  if (N == 2) {
    unsigned r = UINT32_MAX;
    for (const auto& f : live) r = std::min(r, static_cast<unsigned>(f.total_degree()));
    R = r;
  } else if (N == 3) {
    for (std::size_t i = 0; i < live.size(); ++i) {
      for (std::size_t j = i + 1; j < live.size(); ++j) {
        const unsigned b = static_cast<unsigned>(live[i].total_degree() * live[j].total_degree());
        if (R && b >= *R) continue;
        if (coprime_forms(live[i], live[j])) R = b;
      }
    }
  }
  const unsigned limit = R ? std::min(*R, opt.k_max) : opt.k_max;
  for (unsigned k = 1; k <= limit; ++k) {
    try {
      const Enumerator en = prepare(sys, k);
      const auto found = projective_search(sys, en, true, eopt);
      if (!found.empty()) return checked(sys, make_witness(en, found.front()), "root over " + en.K->describe());
    } catch (const BudgetExceeded& e) {
      return Verdict::indeterminate(pivot_note + "search stopped at extension degree " + std::to_string(k) + ": " + e.what());
    }
  }
  if (R && *R <= opt.k_max)
    return Verdict::unsatisfiable("no root over extensions of degree <= " + std::to_string(*R) + ", which bounds every root");
  if (R) return Verdict::indeterminate(pivot_note + "residue bound " + std::to_string(*R) + " exceeds k_max " + std::to_string(opt.k_max));
  return Verdict::indeterminate(pivot_note + "no root up to degree " + std::to_string(opt.k_max) + " and no finiteness certificate");
}

}  // namespace homsys
