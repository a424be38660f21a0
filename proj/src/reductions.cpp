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

#include "homsys/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace homsys {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_index(unsigned idx, unsigned n) {
  if (idx < 1 || idx > n) throw std::invalid_argument("variable index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
}

Poly var(FieldRef ctx, std::size_t nv, std::size_t i) { return Poly::variable(ctx, nv, i); }

Poly cst(FieldRef ctx, std::size_t nv, long long c) { return Poly::constant(ctx, nv, FieldElem::from_int(ctx, c)); }

}  // namespace

void validate(const PartitionInstance& inst) {
  if (inst.weights.empty()) throw std::invalid_argument("partition instance needs at least one weight");
}

void validate(const BoolsysInstance& inst) {
  if (inst.equations.empty()) throw std::invalid_argument("boolsys instance needs at least one equation");
  for (const auto& eq : inst.equations) {
    std::visit(Overloaded{[&](const IsTrue& e) { check_index(e.i, inst.num_vars); },
                          [&](const Negation& e) {
                            check_index(e.i, inst.num_vars);
                            check_index(e.j, inst.num_vars);
                          },
                          [&](const Disjunction& e) {
                            check_index(e.i, inst.num_vars);
                            check_index(e.j, inst.num_vars);
                            check_index(e.k, inst.num_vars);
                          }},
               eq);
  }
}

void validate(const CnfFormula& phi) {
  for (const auto& clause : phi.clauses) {
    if (clause.empty()) throw std::invalid_argument("empty clause");
    if (clause.size() > 3) throw std::invalid_argument("clause with more than 3 literals");
    for (int lit : clause) {
      if (lit == 0) throw std::invalid_argument("literal 0 is not a variable");
      check_index(static_cast<unsigned>(std::abs(lit)), phi.num_vars);
    }
  }
}

std::string to_string(const BoolsysEquation& eq) {
  return std::visit(
      Overloaded{[](const IsTrue& e) { return "X" + std::to_string(e.i) + " = true"; },
                 [](const Negation& e) { return "X" + std::to_string(e.i) + " = not X" + std::to_string(e.j); },
                 [](const Disjunction& e) {
                   return "X" + std::to_string(e.i) + " = or X" + std::to_string(e.j) + " X" + std::to_string(e.k);
                 }},
      eq);
}

std::string to_string(const BoolsysInstance& inst) {
  std::string s = "boolsys " + std::to_string(inst.num_vars);
  for (const auto& eq : inst.equations) s += "; " + to_string(eq);
  return s;
}

bool holds(const BoolsysEquation& eq, const std::vector<bool>& a) {
  return std::visit(Overloaded{[&](const IsTrue& e) { return static_cast<bool>(a[e.i]); },
                               [&](const Negation& e) { return a[e.i] == !a[e.j]; },
                               [&](const Disjunction& e) { return a[e.i] == (a[e.j] || a[e.k]); }},
                    eq);
}

bool boolsys_satisfiable(const BoolsysInstance& inst) {
  validate(inst);
  std::vector<bool> a(inst.num_vars + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.num_vars); ++mask) {
    for (unsigned v = 1; v <= inst.num_vars; ++v) a[v] = (mask >> (v - 1)) & 1;
    if (std::all_of(inst.equations.begin(), inst.equations.end(), [&](const auto& eq) { return holds(eq, a); })) return true;
  }
  return false;
}

bool cnf_satisfiable(const CnfFormula& phi) {
  validate(phi);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << phi.num_vars); ++mask) {
    bool ok = true;
    for (const auto& clause : phi.clauses) {
      bool sat = false;
      for (int lit : clause) {
        const bool value = (mask >> (std::abs(lit) - 1)) & 1;
        sat = sat || (lit > 0 ? value : !value);
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool partition_feasible(const PartitionInstance& inst) {
  validate(inst);
  const std::uint64_t total = std::accumulate(inst.weights.begin(), inst.weights.end(), std::uint64_t{0});
  if (total % 2) return false;
  const std::uint64_t half = total / 2;
  std::vector<char> reach(half + 1, 0);
  reach[0] = 1;
  for (std::uint64_t w : inst.weights) {
    if (w > half) continue;
    for (std::uint64_t s = half; s >= w; --s) {
      if (reach[s - w]) reach[s] = 1;
      if (s == w) break;
    }
  }
  return reach[half];
}

Poly square_gadget(FieldRef ctx, std::size_t nv, std::size_t i) {
  const Poly x0 = var(ctx, nv, 0), xi = var(ctx, nv, i);
  if (ctx->characteristic() == 2) return x0 * xi - xi * xi;
  return x0 * x0 - xi * xi;
}

PolySystem partition_to_system(const PartitionInstance& inst) {
  validate(inst);
  FieldRef qq = FieldCtx::rationals();
  const std::size_t n = inst.weights.size(), nv = n + 1;
  std::vector<Poly> polys;
  for (std::size_t i = 1; i <= n; ++i) polys.push_back(square_gadget(qq, nv, i));
  Poly f0(qq, nv);
  for (std::size_t i = 1; i <= n; ++i) {
    Exponent e(nv, 0);
    e[i] = 1;
    f0.add_term(e, FieldElem::from_mpz(qq, mpz_class(std::to_string(inst.weights[i - 1]))));
  }
  polys.push_back(std::move(f0));
  Metadata meta;
  meta.set("method", "partition");
  meta.set("gadgets", std::to_string(n));
  return PolySystem(qq, indexed_names("x", nv), std::move(polys), std::move(meta));
}

PolySystem partition_bounded_system(const PartitionInstance& inst) {
  validate(inst);
  FieldRef qq = FieldCtx::rationals();
  const std::size_t n = inst.weights.size();
  const std::uint64_t wmax = *std::max_element(inst.weights.begin(), inst.weights.end());
  unsigned top = 0;  // highest digit index p
  while (top < 63 && (wmax >> (top + 1)) != 0) ++top;
  const std::size_t digits = top + 1;
  const std::size_t nv = 1 + n + n * digits;
  auto w_index = [&](std::size_t i, std::size_t j) { return 1 + n + (i - 1) * digits + j; };

  std::vector<std::string> names = indexed_names("x", n + 1);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 0; j < digits; ++j) names.push_back("W" + std::to_string(i) + "_" + std::to_string(j));

  std::vector<Poly> polys;
  for (std::size_t i = 1; i <= n; ++i) polys.push_back(square_gadget(qq, nv, i));
  const Poly x0 = var(qq, nv, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::uint64_t w = inst.weights[i - 1];
    for (std::size_t j = digits; j-- > 0;) {
      const long long bit = static_cast<long long>((w >> j) & 1);
      Poly row = var(qq, nv, w_index(i, j)) - cst(qq, nv, bit) * x0;
      if (j + 1 < digits) row = row - cst(qq, nv, 2) * var(qq, nv, w_index(i, j + 1));
      polys.push_back(std::move(row));
    }
  }
  Poly f0(qq, nv);
  for (std::size_t i = 1; i <= n; ++i) f0 = f0 + var(qq, nv, w_index(i, 0)) * var(qq, nv, i);
  polys.push_back(std::move(f0));
  Metadata meta;
  meta.set("method", "partition-bounded");
  meta.set("gadgets", std::to_string(n));
  return PolySystem(qq, std::move(names), std::move(polys), std::move(meta));
}

BoolsysInstance cnf_to_boolsys(const CnfFormula& phi) {
  validate(phi);
  if (phi.clauses.empty()) throw std::invalid_argument("formula without clauses has no boolsys encoding");
  BoolsysInstance out;
  unsigned next = phi.num_vars;
  std::map<unsigned, unsigned> negated;
  std::vector<BoolsysEquation> eqs;
  auto literal_var = [&](int lit) -> unsigned {
    const auto v = static_cast<unsigned>(std::abs(lit));
    if (lit > 0) return v;
    auto [it, inserted] = negated.try_emplace(v, 0);
    if (inserted) {
      it->second = ++next;
      eqs.push_back(Negation{it->second, v});
    }
    return it->second;
  };
  for (const auto& clause : phi.clauses) {
    unsigned acc = literal_var(clause[0]);
    const unsigned second = clause.size() > 1 ? literal_var(clause[1]) : acc;
    unsigned d = ++next;
    eqs.push_back(Disjunction{d, acc, second});
    acc = d;
    if (clause.size() == 3) {
      const unsigned third = literal_var(clause[2]);
      d = ++next;
      eqs.push_back(Disjunction{d, acc, third});
      acc = d;
    }
    eqs.push_back(IsTrue{acc});
  }
  out.num_vars = next;
  out.equations = std::move(eqs);
  return out;
}

PolySystem boolsys_to_system(const BoolsysInstance& inst, FieldRef ctx) {
  validate(inst);
  const std::size_t n = inst.num_vars, nv = n + 1;
  const bool char2 = ctx->characteristic() == 2;
  std::vector<Poly> polys;
  polys.reserve(n + inst.equations.size());
  for (std::size_t i = 1; i <= n; ++i) polys.push_back(square_gadget(ctx, nv, i));
  const Poly x0 = var(ctx, nv, 0);
  for (const auto& eq : inst.equations) {
    polys.push_back(std::visit(Overloaded{[&](const IsTrue& e) { return x0 * (var(ctx, nv, e.i) + x0); },
                                          [&](const Negation& e) {
                                            Poly s = var(ctx, nv, e.i) + var(ctx, nv, e.j);
                                            if (char2) s = s + x0;
                                            return x0 * s;
                                          },
                                          [&](const Disjunction& e) {
                                            const Poly xi = var(ctx, nv, e.i), xj = var(ctx, nv, e.j), xk = var(ctx, nv, e.k);
                                            if (char2) return xi * xi + xj * xk + x0 * (xj + xk);
                                            return (xi + x0) * (xi + x0) - (xj + x0) * (xk + x0);
                                          }},
                               eq));
  }
  Metadata meta;
  meta.set("method", "boolsys");
  meta.set("gadgets", std::to_string(n));
  return PolySystem(ctx, indexed_names("x", nv), std::move(polys), std::move(meta));
}

PolySystem spurious_example_system() {
  FieldRef qq = FieldCtx::rationals();
  constexpr std::size_t nv = 10;
  // Index 0 is x, index 1 is x0, index k (k >= 2) is x_k.
  auto v = [&](std::size_t k) { return var(qq, nv, k); };
  const Poly x = v(0), x0 = v(1);
  std::vector<Poly> polys;
  polys.push_back(-v(3) + v(4) + cst(qq, nv, 2) * v(5) + cst(qq, nv, 9) * v(6) + cst(qq, nv, 2) * v(7) + v(8) - v(9));
  polys.push_back(v(6) - x0);
  polys.push_back(x0 * v(2) - x * x);
  polys.push_back(x0 * v(3) - v(2) * x);
  polys.push_back(x0 * v(4) - v(2) * v(2));
  polys.push_back(x0 * v(5) - v(4) * x);
  polys.push_back(x0 * v(6) - v(2) * v(4));
  polys.push_back(x0 * v(7) - v(4) * v(3));
  polys.push_back(x0 * v(8) - v(4) * v(4));
  polys.push_back(x0 * v(9) - v(8) * x);
  std::vector<std::string> names{"x", "x0"};
  for (int k = 2; k <= 9; ++k) names.push_back("x" + std::to_string(k));
  Metadata meta;
  meta.set("method", "spurious-example");
  return PolySystem(qq, std::move(names), std::move(polys), std::move(meta));
}

AffineSystem hhn_to_hn(const PolySystem& sys) {
  const std::size_t n = sys.num_vars(), nv = 2 * n;
  std::vector<std::size_t> keep(n);
  std::iota(keep.begin(), keep.end(), 0);
  AffineSystem out{sys.ctx(), sys.var_names(), {}};
  for (const auto& name : sys.var_names()) out.var_names.push_back("y_" + name);
  for (const auto& f : sys.polys()) out.polys.push_back(f.remap(nv, keep));
  Poly link = Poly::constant(sys.ctx(), nv, -FieldElem::one(sys.ctx()));
  for (std::size_t i = 0; i < n; ++i) link = link + var(sys.ctx(), nv, i) * var(sys.ctx(), nv, n + i);
  out.polys.push_back(std::move(link));
  return out;
}

}  // namespace homsys
