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

#include "homsys/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace homsys {

std::uint32_t total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return b < a;
}

Poly Poly::constant(FieldRef ctx, std::size_t num_vars, const FieldElem& c) {
  Poly f(ctx, num_vars);
  f.add_term(Exponent(num_vars, 0), c);
  return f;
}

Poly Poly::variable(FieldRef ctx, std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::invalid_argument("variable index out of range");
  Exponent e(num_vars, 0);
  e[index] = 1;
  return monomial(ctx, std::move(e), FieldElem::one(ctx));
}

Poly Poly::monomial(FieldRef ctx, Exponent e, const FieldElem& c) {
  Poly f(ctx, e.size());
  f.add_term(e, c);
  return f;
}

void Poly::add_term(const Exponent& e, const FieldElem& c) {
  if (e.size() != num_vars_) throw std::invalid_argument("exponent length does not match the number of variables");
  if (c.ctx() != ctx_) throw FieldMismatch("coefficient from " + c.ctx()->describe() + " added to a polynomial over " + ctx_->describe());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FieldElem Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElem::zero(ctx_) : it->second;
}

void Poly::require_same(const Poly& o) const {
  if (ctx_ != o.ctx_) throw FieldMismatch("polynomials over different fields");
  if (num_vars_ != o.num_vars_) throw std::invalid_argument("polynomials over different variable sets");
}

Poly Poly::operator+(const Poly& o) const {
  require_same(o);
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  require_same(o);
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator-() const { return Poly(ctx_, num_vars_) - *this; }

Poly Poly::operator*(const Poly& o) const {
  require_same(o);
  Poly r(ctx_, num_vars_);
  Exponent e(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const FieldElem& c) const {
  Poly r(ctx_, num_vars_);
  for (const auto& [e, a] : terms_) r.add_term(e, a * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ctx_, num_vars_, FieldElem::one(ctx_));
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

bool Poly::operator==(const Poly& o) const {
  if (ctx_ != o.ctx_ || num_vars_ != o.num_vars_ || terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  for (auto b = o.terms_.begin(); b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first || a->second != b->second) return false;
  }
  return true;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(homsys::total_degree(e)));
  return d;
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

FieldElem Poly::evaluate(std::span<const FieldElem> point) const {
  if (point.size() != num_vars_)
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                                std::to_string(num_vars_) + " variables");
  FieldElem sum = FieldElem::zero(ctx_);
  for (const auto& [e, c] : terms_) {
    FieldElem term = c;
    for (std::size_t i = 0; i < num_vars_ && !term.is_zero(); ++i) {
      if (e[i]) term *= point[i].pow(e[i]);
    }
    sum += term;
  }
  return sum;
}

Poly Poly::remap(std::size_t new_num_vars, std::span<const std::size_t> mapping) const {
  if (mapping.size() != num_vars_) throw std::invalid_argument("variable mapping has the wrong length");
  Poly r(ctx_, new_num_vars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(new_num_vars, 0);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (mapping[i] >= new_num_vars) throw std::invalid_argument("variable mapping out of range");
      ne[mapping[i]] += e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

Poly Poly::embed_into(FieldRef target) const {
  Poly r(target, num_vars_);
  for (const auto& [e, c] : terms_) r.add_term(e, embed(c, target));
  return r;
}

FieldElem poly_eval(const Poly& f, std::span<const FieldElem> point) { return f.evaluate(point); }

std::optional<unsigned> check_homogeneous(const Poly& f) {
  if (f.is_zero()) return 0u;
  const unsigned d = total_degree(f.terms().begin()->first);
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) != d) return std::nullopt;
  }
  return d;
}

Poly homogenize(const Poly& f, std::size_t hom_var) {
  if (hom_var >= f.num_vars()) throw std::invalid_argument("homogenizing variable out of range");
  if (f.occurs(hom_var)) throw std::invalid_argument("homogenizing variable already occurs in the polynomial");
  const int d = f.total_degree();
  Poly r(f.ctx(), f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    Exponent ne = e;
    ne[hom_var] = static_cast<std::uint32_t>(d) - total_degree(e);
    r.add_term(ne, c);
  }
  return r;
}

Poly substitute(const Poly& f, std::size_t var, const FieldElem& value) {
  Poly r(f.ctx(), f.num_vars());
  for (const auto& [e, c] : f.terms()) {
    Exponent ne = e;
    ne.at(var) = 0;
    r.add_term(ne, c * value.pow(e[var]));
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::pair<std::string, std::string>> split_kv(const std::string& line) {
  auto pos = line.find('=');
  if (pos == std::string::npos) return std::nullopt;
  return std::pair{line.substr(0, pos), line.substr(pos + 1)};
}

}  // namespace

std::optional<std::string> Metadata::get(const std::string& key) const {
  for (const auto& l : lines_) {
    auto kv = split_kv(l);
    if (kv && kv->first == key) return kv->second;
  }
  return std::nullopt;
}

void Metadata::set(const std::string& key, const std::string& value) {
  for (auto& l : lines_) {
    auto kv = split_kv(l);
    if (kv && kv->first == key) {
      l = key + "=" + value;
      return;
    }
  }
  lines_.push_back(key + "=" + value);
}

void Metadata::erase(const std::string& key) {
  std::erase_if(lines_, [&](const std::string& l) {
    auto kv = split_kv(l);
    return kv && kv->first == key;
  });
}

PolySystem::PolySystem(FieldRef ctx, std::vector<std::string> var_names, std::vector<Poly> polys, Metadata meta)
    : ctx_(ctx), var_names_(std::move(var_names)), polys_(std::move(polys)), meta_(std::move(meta)) {
  if (var_names_.empty()) throw std::invalid_argument("a system needs at least one variable");
  if (polys_.empty()) throw std::invalid_argument("a system needs at least one polynomial");
  degrees_.reserve(polys_.size());
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    const Poly& f = polys_[i];
    if (f.ctx() != ctx_) throw FieldMismatch("polynomial " + std::to_string(i + 1) + " is over " + f.ctx()->describe());
    if (f.num_vars() != var_names_.size())
      throw std::invalid_argument("polynomial " + std::to_string(i + 1) + " has the wrong number of variables");
    auto d = check_homogeneous(f);
    if (!d) throw std::invalid_argument("polynomial " + std::to_string(i + 1) + " is not homogeneous");
    degrees_.push_back(*d);
  }
}

bool PolySystem::operator==(const PolySystem& o) const {
  return ctx_ == o.ctx_ && var_names_ == o.var_names_ && polys_ == o.polys_ && meta_ == o.meta_;
}

namespace {

void fill_monomials(Exponent& cur, std::size_t pos, unsigned left, std::vector<Exponent>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur[pos] = e;
    fill_monomials(cur, pos + 1, left - e, out);
  }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Exponent> out;
  if (num_vars == 0) return out;
  Exponent cur(num_vars, 0);
  fill_monomials(cur, 0, degree, out);
  return out;
}

std::vector<std::string> indexed_names(const std::string& stem, std::size_t count, std::size_t first) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(stem + std::to_string(first + i));
  return names;
}

}  // namespace homsys
