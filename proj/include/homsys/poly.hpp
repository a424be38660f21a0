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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "homsys/field.hpp"

namespace homsys {

using Exponent = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponent& e);

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken lexicographically with variable 0 most significant.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial. Terms are kept in GrlexDescending order
/// and never hold zero coefficients.
class Poly {
 public:
  using TermMap = std::map<Exponent, FieldElem, GrlexDescending>;

  Poly(FieldRef ctx, std::size_t num_vars) : ctx_(ctx), num_vars_(num_vars) {}

  static Poly constant(FieldRef ctx, std::size_t num_vars, const FieldElem& c);
  static Poly variable(FieldRef ctx, std::size_t num_vars, std::size_t index);
  static Poly monomial(FieldRef ctx, Exponent e, const FieldElem& c);

  FieldRef ctx() const { return ctx_; }
  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const FieldElem& c);
  FieldElem coeff(const Exponent& e) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const FieldElem& c) const;
  Poly pow(unsigned e) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// -1 for the zero polynomial.
  int total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool occurs(std::size_t var) const { return degree_in(var) > 0; }

  FieldElem evaluate(std::span<const FieldElem> point) const;

  /// Renames variable i to mapping[i] in a ring with `new_num_vars` variables.
  Poly remap(std::size_t new_num_vars, std::span<const std::size_t> mapping) const;
  /// Same polynomial with coefficients embedded into `target`.
  Poly embed_into(FieldRef target) const;

 private:
  void require_same(const Poly& o) const;
  FieldRef ctx_;
  std::size_t num_vars_;
  TermMap terms_;
};

/// Exact value of f at the point. Throws std::invalid_argument on arity
/// mismatch.
FieldElem poly_eval(const Poly& f, std::span<const FieldElem> point);

/// Common total degree of all terms, absent when the terms disagree. The zero
/// polynomial reports 0.
std::optional<unsigned> check_homogeneous(const Poly& f);

/// Pads every term with powers of `hom_var` up to the total degree of f.
/// Throws std::invalid_argument if hom_var already occurs in f.
Poly homogenize(const Poly& f, std::size_t hom_var);

/// Substitutes value for one variable (the variable stays in the ring).
Poly substitute(const Poly& f, std::size_t var, const FieldElem& value);

/// Ordered `# key=value` header lines; entries without '=' are kept as
/// free-form comment lines.
class Metadata {
 public:
  std::optional<std::string> get(const std::string& key) const;
  void set(const std::string& key, const std::string& value);
  void erase(const std::string& key);
  void add_raw(std::string line) { lines_.push_back(std::move(line)); }
  const std::vector<std::string>& lines() const { return lines_; }
  bool operator==(const Metadata&) const = default;

 private:
  std::vector<std::string> lines_;
};

/// Ordered list of homogeneous polynomials sharing one variable roster.
class PolySystem {
 public:
  /// Validates: >= 1 variable, >= 1 polynomial, matching contexts and arity,
  /// every polynomial homogeneous. Throws std::invalid_argument otherwise.
  PolySystem(FieldRef ctx, std::vector<std::string> var_names, std::vector<Poly> polys, Metadata meta = {});

  FieldRef ctx() const { return ctx_; }
  std::size_t num_vars() const { return var_names_.size(); }
  std::size_t size() const { return polys_.size(); }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::vector<Poly>& polys() const { return polys_; }
  const Poly& operator[](std::size_t i) const { return polys_[i]; }
  const std::vector<unsigned>& degrees() const { return degrees_; }
  bool is_square() const { return polys_.size() == var_names_.size(); }

  const Metadata& meta() const { return meta_; }
  Metadata& meta() { return meta_; }

  /// Structural equality including metadata.
  bool operator==(const PolySystem& o) const;

 private:
  FieldRef ctx_;
  std::vector<std::string> var_names_;
  std::vector<Poly> polys_;
  std::vector<unsigned> degrees_;
  Metadata meta_;
};

/// All exponents of the given total degree, in GrlexDescending order.
std::vector<Exponent> monomials_of_degree(std::size_t num_vars, unsigned degree);

/// Default roster x0, x1, ..., x{n-1}.
std::vector<std::string> indexed_names(const std::string& stem, std::size_t count, std::size_t first = 0);

}  // namespace homsys
