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

#include "homsys/verification.hpp"

#include <map>

#include "homsys/gf_poly.hpp"
#include "homsys/reductions.hpp"

namespace homsys {

std::string to_string(Status s) {
  switch (s) {
    case Status::Satisfiable: return "Satisfiable";
    case Status::Unsatisfiable: return "Unsatisfiable";
    case Status::Indeterminate: return "Indeterminate";
  }
  return "?";
}

Verdict Verdict::satisfiable(Witness w, std::string reason) { return {Status::Satisfiable, std::move(w), std::move(reason)}; }
Verdict Verdict::satisfiable_without_witness(std::string reason) { return {Status::Satisfiable, std::nullopt, std::move(reason)}; }
Verdict Verdict::unsatisfiable(std::string reason) { return {Status::Unsatisfiable, std::nullopt, std::move(reason)}; }
Verdict Verdict::indeterminate(std::string reason) { return {Status::Indeterminate, std::nullopt, std::move(reason)}; }

bool witness_vanishes(const PolySystem& sys, const Witness& w) {
  if (w.values.size() != sys.num_vars() || w.powers.size() != sys.num_vars()) return false;
  bool nonzero = false;
  for (const auto& v : w.values)
    if (!v.is_zero()) nonzero = true;
  if (!nonzero) return false;
  const FieldMap map = w.generator_image ? FieldMap::with_generator(sys.ctx(), *w.generator_image) : FieldMap::find(sys.ctx(), w.field);
  for (const auto& f : sys.polys()) {
    FieldElem acc = FieldElem::zero(w.field);
    for (const auto& [e, c] : f.terms()) {
      FieldElem t = map(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (w.powers[i] == 0 || e[i] % w.powers[i] != 0) return false;
        t *= w.values[i].pow(e[i] / w.powers[i]);
      }
      acc += t;
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

namespace {

// Gadget-shaped model: x0..xn fixed by sign patterns, every other variable
// y_j enters only through Y_j = y_j^e_j, lam ranges over the roots of P.
struct StructuredModel {
  struct Term {
    Exponent x;          // exponents of x0..xn
    int slot = -1;       // aux unknown, or -1 for none
    unsigned lam_pow = 0;
    FieldElem coeff;
  };
  FieldRef base = nullptr, work = nullptr;
  std::size_t n = 0, N = 0;
  std::optional<std::size_t> lam;
  std::vector<std::size_t> slot_var;     // slot -> variable
  std::vector<unsigned> slot_power;
  std::vector<std::vector<Term>> rows;
  std::vector<FieldElem> lambda_roots;   // empty without a parameter row
  std::optional<FieldElem> generator_image;
};

[[noreturn]] void unrecognized(const std::string& why) {
  throw UnrecognizedShape("structured oracle: unrecognized shape (" + why + "); use closure_satisfiable instead");
}

StructuredModel build_model(const PolySystem& sys) {
  StructuredModel m;
  m.base = m.work = sys.ctx();
  m.N = sys.num_vars();
  const auto g = sys.meta().get("gadgets");
  if (!g) unrecognized("no gadgets= metadata");
  try {
    m.n = std::stoul(*g);
  } catch (const std::exception&) {
    unrecognized("bad gadgets= value");
  }
  if (m.n + 1 > m.N || m.n > sys.size()) unrecognized("gadget count larger than the system");
  if (m.n > 30) unrecognized("more than 30 gadget variables");
  for (std::size_t i = 0; i < m.n; ++i)
    if (sys[i] != square_gadget(sys.ctx(), m.N, i + 1)) unrecognized("polynomial " + std::to_string(i + 1) + " is not a square gadget");

  if (auto lv = sys.meta().get("lambda-var")) {
    const auto& names = sys.var_names();
    auto it = std::find(names.begin(), names.end(), *lv);
    if (it == names.end()) unrecognized("lambda-var names no variable");
    m.lam = static_cast<std::size_t>(it - names.begin());
    if (*m.lam <= m.n) unrecognized("lambda variable overlaps the gadget variables");
  }

  std::optional<std::size_t> p_row;
  if (m.lam) {
    for (std::size_t r = m.n; r < sys.size(); ++r) {
      bool only = sys[r].occurs(*m.lam);
      for (std::size_t v = 1; v < m.N && only; ++v)
        if (v != *m.lam && sys[r].occurs(v)) only = false;
      if (!only) continue;
      if (p_row) unrecognized("several parameter rows");
      p_row = r;
    }
    if (!p_row) unrecognized("no parameter row in lam and x0");
    if (!sys.ctx()->is_prime_field()) unrecognized("parameter rows need a prime field");
    const std::uint64_t p = sys.ctx()->characteristic();
    gf::Coeffs P(sys[*p_row].degree_in(*m.lam) + 1, 0);
    for (const auto& [e, c] : sys[*p_row].terms()) P[e[*m.lam]] = c.packed();
    gf::trim(P);
    const std::uint64_t lead_inv = gf::inv_mod(P.back(), p);
    for (auto& c : P) c = gf::mul_mod(c, lead_inv, p);
    if (gf::degree(P) < 1 || !gf::rabin_irreducible(P, p)) unrecognized("parameter polynomial is not irreducible");
    if (gf::degree(P) == 1) {
      m.lambda_roots = {FieldElem::from_int(m.base, static_cast<long long>((p - P[0]) % p))};
    } else {
      m.work = FieldCtx::extension(p, P);
      FieldElem r = FieldElem::generator(m.work);
      for (int j = 0; j < gf::degree(P); ++j) {
        m.lambda_roots.push_back(r);
        r = r.pow(p);
      }
    }
  }

  std::vector<int> slot_of(m.N, -1);
  for (std::size_t r = m.n; r < sys.size(); ++r) {
    if (p_row && r == *p_row) continue;
    std::vector<StructuredModel::Term> row;
    for (const auto& [e, c] : sys[r].terms()) {
      StructuredModel::Term t;
      t.x.assign(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m.n + 1));
      t.coeff = embed(c, m.work);
      for (std::size_t v = m.n + 1; v < m.N; ++v) {
        if (e[v] == 0) continue;
        if (m.lam && v == *m.lam) {
          t.lam_pow = e[v];
          continue;
        }
        if (t.slot >= 0) unrecognized("two auxiliary variables in one monomial");
        if (slot_of[v] < 0) {
          slot_of[v] = static_cast<int>(m.slot_var.size());
          m.slot_var.push_back(v);
          m.slot_power.push_back(e[v]);
        } else if (m.slot_power[static_cast<std::size_t>(slot_of[v])] != e[v]) {
          unrecognized("variable " + sys.var_names()[v] + " occurs at two different powers");
        }
        t.slot = slot_of[v];
      }
      row.push_back(std::move(t));
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

struct LinearRow {
  std::map<std::size_t, FieldElem> coef;
  FieldElem constant;
};

// Unit propagation, then elimination on whatever remains.
std::optional<std::vector<FieldElem>> solve_affine(std::vector<LinearRow> rows, std::size_t unknowns, FieldRef F) {
  std::vector<std::optional<FieldElem>> val(unknowns);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& r : rows) {
      for (auto it = r.coef.begin(); it != r.coef.end();) {
        if (val[it->first]) {
          r.constant += it->second * *val[it->first];
          it = r.coef.erase(it);
        } else if (it->second.is_zero()) {
          it = r.coef.erase(it);
        } else {
          ++it;
        }
      }
      if (r.coef.empty()) continue;
      if (r.coef.size() == 1) {
        const auto& [k, c] = *r.coef.begin();
        val[k] = -r.constant / c;
        r.coef.clear();
        r.constant = FieldElem::zero(F);
        changed = true;
      }
    }
  }
  std::vector<std::size_t> open, open_rows;
  std::map<std::size_t, std::size_t> col;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].coef.empty()) {
      if (!rows[i].constant.is_zero()) return std::nullopt;
      continue;
    }
    open_rows.push_back(i);
    for (const auto& [k, c] : rows[i].coef)
      if (!col.count(k)) {
        col[k] = open.size();
        open.push_back(k);
      }
  }
  if (!open_rows.empty()) {
    Matrix a(F, open_rows.size(), open.size());
    std::vector<FieldElem> b;
    for (std::size_t i = 0; i < open_rows.size(); ++i) {
      for (const auto& [k, c] : rows[open_rows[i]].coef) a(i, col[k]) = c;
      b.push_back(-rows[open_rows[i]].constant);
    }
    auto sol = solve(a, b);
    if (!sol) return std::nullopt;
    for (std::size_t j = 0; j < open.size(); ++j) val[open[j]] = (*sol)[j];
  }
  std::vector<FieldElem> out;
  for (auto& v : val) out.push_back(v ? *v : FieldElem::zero(F));
  return out;
}

// Signed value of x^e at (1, pattern): 0, 1 or -1.
int pattern_sign(const Exponent& x, const std::vector<int>& pattern) {
  int s = 1;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (pattern[i - 1] == 0) return 0;
    if (pattern[i - 1] < 0 && (x[i] & 1)) s = -s;
  }
  return s;
}

std::optional<std::vector<FieldElem>> pattern_solution(const StructuredModel& m, const std::vector<int>& pattern,
                                                       const std::optional<FieldElem>& ell) {
  const FieldElem zero = FieldElem::zero(m.work);
  std::vector<FieldElem> lam_pows;
  std::vector<LinearRow> rows;
  for (const auto& row : m.rows) {
    LinearRow lr{{}, zero};
    for (const auto& t : row) {
      const int s = pattern_sign(t.x, pattern);
      if (s == 0) continue;
      FieldElem c = s > 0 ? t.coeff : -t.coeff;
      if (t.lam_pow) {
        while (lam_pows.size() <= t.lam_pow) lam_pows.push_back(lam_pows.empty() ? FieldElem::one(m.work) : lam_pows.back() * *ell);
        c *= lam_pows[t.lam_pow];
      }
      if (t.slot < 0) lr.constant += c;
      else {
        auto [it, inserted] = lr.coef.try_emplace(static_cast<std::size_t>(t.slot), c);
        if (!inserted) it->second += c;
      }
    }
    rows.push_back(std::move(lr));
  }
  return solve_affine(std::move(rows), m.slot_var.size(), m.work);
}

Witness pattern_witness(const StructuredModel& m, const std::vector<int>& pattern, const std::vector<FieldElem>& Y,
                        const std::optional<FieldElem>& ell) {
  Witness w{m.work, std::vector<FieldElem>(m.N, FieldElem::zero(m.work)), std::vector<unsigned>(m.N, 1), std::nullopt};
  w.values[0] = FieldElem::one(m.work);
  for (std::size_t i = 1; i <= m.n; ++i) w.values[i] = FieldElem::from_int(m.work, pattern[i - 1]);
  for (std::size_t s = 0; s < m.slot_var.size(); ++s) {
    w.values[m.slot_var[s]] = Y[s];
    w.powers[m.slot_var[s]] = m.slot_power[s];
  }
  if (m.lam && ell) w.values[*m.lam] = *ell;
  return w;
}

std::vector<int> pattern_of(const StructuredModel& m, std::uint64_t mask) {
  const bool char2 = m.base->characteristic() == 2;
  std::vector<int> pat(m.n);
  for (std::size_t i = 0; i < m.n; ++i) pat[i] = ((mask >> i) & 1) ? (char2 ? 0 : -1) : 1;
  return pat;
}

std::optional<Witness> pattern_root(const StructuredModel& m, const std::vector<int>& pattern) {
  if (m.lambda_roots.empty()) {
    if (auto Y = pattern_solution(m, pattern, std::nullopt)) return pattern_witness(m, pattern, *Y, std::nullopt);
    return std::nullopt;
  }
  for (const auto& ell : m.lambda_roots)
    if (auto Y = pattern_solution(m, pattern, ell)) return pattern_witness(m, pattern, *Y, ell);
  return std::nullopt;
}

// x = 0 forces lam = 0 through P(lam, 0) = lam^d; a root needs Y != 0.
std::optional<Witness> infinity_root(const StructuredModel& m) {
  if (m.slot_var.empty()) return std::nullopt;
  Matrix a(m.work, m.rows.size(), m.slot_var.size());
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    for (const auto& t : m.rows[r]) {
      bool zero_x = true;
      for (auto e : t.x)
        if (e) zero_x = false;
      if (!zero_x || t.lam_pow) continue;
      if (t.slot < 0) return std::nullopt;  // nonzero constant row
      a(r, static_cast<std::size_t>(t.slot)) += t.coeff;
    }
  }
  auto k = kernel_vector(a);
  if (!k) return std::nullopt;
  Witness w{m.work, std::vector<FieldElem>(m.N, FieldElem::zero(m.work)), std::vector<unsigned>(m.N, 1), std::nullopt};
  for (std::size_t s = 0; s < m.slot_var.size(); ++s) {
    w.values[m.slot_var[s]] = (*k)[s];
    w.powers[m.slot_var[s]] = m.slot_power[s];
  }
  return w;
}

Verdict checked(const PolySystem& sys, Witness w, std::string reason) {
  if (!witness_vanishes(sys, w)) throw std::logic_error("structured oracle produced a point that is not a root");
  return Verdict::satisfiable(std::move(w), std::move(reason));
}

std::vector<Exponent> all_monomials(std::size_t nv, unsigned D) { return monomials_of_degree(nv, D); }

}  // namespace

Verdict structured_sign_oracle(const PolySystem& sys) {
  const StructuredModel m = build_model(sys);
  const std::uint64_t patterns = std::uint64_t{1} << m.n;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    const auto pat = pattern_of(m, mask);
    if (auto w = pattern_root(m, pat)) return checked(sys, std::move(*w), "sign pattern " + std::to_string(mask) + " extends to a root");
  }
  if (auto w = infinity_root(m)) return checked(sys, std::move(*w), "root with x = 0");
  return Verdict::unsatisfiable("no sign pattern extends to a root");
}

bool structured_pattern_accepts(const PolySystem& sys, const std::vector<int>& pattern) {
  const StructuredModel m = build_model(sys);
  if (pattern.size() != m.n) throw std::invalid_argument("pattern length must equal the gadget count");
  const bool char2 = m.base->characteristic() == 2;
  for (int v : pattern)
    if (char2 ? (v != 0 && v != 1) : (v != 1 && v != -1)) throw std::invalid_argument("pattern entry outside the admissible values");
  return pattern_root(m, pattern).has_value();
}

FieldElem sylvester_resultant(const Poly& f, const Poly& g) {
  if (f.num_vars() != 2 || g.num_vars() != 2) throw std::invalid_argument("sylvester_resultant needs bivariate forms");
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("sylvester_resultant of a zero polynomial");
  if (f.ctx() != g.ctx()) throw FieldMismatch("sylvester_resultant over different fields");
  const auto df = check_homogeneous(f), dg = check_homogeneous(g);
  if (!df || !dg) throw std::invalid_argument("sylvester_resultant needs homogeneous input");
  const unsigned d = *df, e = *dg;
  if (d == 0 || e == 0) throw std::invalid_argument("sylvester_resultant needs positive degrees");
  const std::size_t size = d + e;
  Matrix s(f.ctx(), size, size);
  for (unsigned r = 0; r < e; ++r)
    for (const auto& [ex, c] : f.terms()) s(r, r + ex[1]) = c;
  for (unsigned r = 0; r < d; ++r)
    for (const auto& [ex, c] : g.terms()) s(e + r, r + ex[1]) = c;
  return determinant(s);
}

Verdict sylvester_verdict(const PolySystem& sys) {
  if (sys.num_vars() != 2 || sys.size() != 2) throw std::invalid_argument("sylvester_verdict needs two forms in two variables");
  if (sys[0].is_zero() || sys[1].is_zero()) return Verdict::satisfiable_without_witness("a zero form vanishes on the whole line");
  if (sys.degrees()[0] == 0 || sys.degrees()[1] == 0) return Verdict::unsatisfiable("nonzero constant polynomial");
  const FieldElem r = sylvester_resultant(sys[0], sys[1]);
  if (r.is_zero()) return Verdict::satisfiable_without_witness("Sylvester resultant vanishes");
  return Verdict::unsatisfiable("Sylvester resultant " + r.to_string() + " is nonzero");
}

MacaulayResult macaulay_zero_test(const PolySystem& sys, const MacaulayOptions& opt) {
  if (!sys.is_square()) throw std::invalid_argument("macaulay_zero_test needs a square system");
  MacaulayResult res;
  const std::size_t N = sys.num_vars();
  for (std::size_t i = 0; i < N; ++i) {
    if (sys[i].is_zero()) {
      res.verdict = Verdict::satisfiable_without_witness("polynomial " + std::to_string(i + 1) + " is zero");
      return res;
    }
  }
  for (std::size_t i = 0; i < N; ++i) {
    if (sys.degrees()[i] == 0) {
      res.verdict = Verdict::unsatisfiable("nonzero constant polynomial");
      return res;
    }
  }
  unsigned D = 1;
  for (unsigned d : sys.degrees()) D += d - 1;
  res.critical_degree = D;
  // C(D + N - 1, N - 1) without building the list first.
  mpz_class cols;
  mpz_bin_uiui(cols.get_mpz_t(), D + N - 1, N - 1);
  if (cols > opt.max_columns) throw BudgetExceeded("Macaulay matrix needs " + cols.get_str() + " columns, above the cap of " + std::to_string(opt.max_columns));
  const auto monos = all_monomials(N, D);
  res.columns = monos.size();
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  Matrix M(sys.ctx(), monos.size(), monos.size());
  std::vector<std::size_t> nonreduced;
  for (std::size_t r = 0; r < monos.size(); ++r) {
    const Exponent& a = monos[r];
    std::optional<std::size_t> pick;
    unsigned divisible = 0;
    for (std::size_t i = 0; i < N; ++i) {
      if (a[i] >= sys.degrees()[i]) {
        ++divisible;
        if (!pick) pick = i;
      }
    }
    if (divisible >= 2) nonreduced.push_back(r);
    Exponent shift = a;
    shift[*pick] -= sys.degrees()[*pick];
    for (const auto& [e, c] : sys[*pick].terms()) {
      Exponent s = shift;
      for (std::size_t i = 0; i < N; ++i) s[i] += e[i];
      M(r, index.at(s)) = c;
    }
  }
  res.det_m = determinant(M);
  res.det_minor = determinant(M.submatrix(nonreduced, nonreduced));
  if (!res.det_minor->is_zero()) {
    res.resultant = *res.det_m / *res.det_minor;
    res.verdict = res.resultant->is_zero() ? Verdict::satisfiable_without_witness("Macaulay resultant vanishes")
                                           : Verdict::unsatisfiable("Macaulay resultant " + res.resultant->to_string() + " is nonzero");
  } else if (!res.det_m->is_zero()) {
    res.verdict = Verdict::unsatisfiable("Macaulay determinant is nonzero");
  } else {
    res.verdict = Verdict::indeterminate("Macaulay determinant and denominator minor both vanish");
  }
  return res;
}

Verdict auto_verdict(const PolySystem& sys, const AutoOptions& opt) {
  if (sys.meta().get("gadgets")) {
    try {
      return structured_sign_oracle(sys);
    } catch (const UnrecognizedShape&) {
    }
  }
  if (!sys.ctx()->is_rational()) return closure_satisfiable(sys, opt.closure);
  if (sys.num_vars() == 2 && sys.size() == 2) return sylvester_verdict(sys);
  if (sys.is_square()) {
    try {
      return macaulay_zero_test(sys, opt.macaulay).verdict;
    } catch (const BudgetExceeded& e) {
      return Verdict::indeterminate(e.what());
    }
  }
  return Verdict::indeterminate("no oracle applies to a non-square system over Q without recognized structure");
}

}  // namespace homsys
