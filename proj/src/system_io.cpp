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

#include "homsys/system_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "homsys/gf_poly.hpp"

namespace homsys {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::size_t start = 0, no = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.pop_back();
    out.push_back({no++, std::move(l)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

// Cursor over one line; columns are 1-based.
class Cursor {
 public:
  Cursor(const Line& l, std::size_t pos = 0) : line_(l), pos_(pos) {}
  void skip_ws() {
    while (pos_ < line_.text.size() && std::isspace(static_cast<unsigned char>(line_.text[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= line_.text.size();
  }
  char peek() const { return pos_ < line_.text.size() ? line_.text[pos_] : '\0'; }
  char get() { return pos_ < line_.text.size() ? line_.text[pos_++] : '\0'; }
  std::size_t pos() const { return pos_; }
  std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_.number, column(), msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const { throw ParseError(line_.number, pos + 1, msg); }

  std::string word() {
    skip_ws();
    const std::size_t s = pos_;
    while (pos_ < line_.text.size() && !std::isspace(static_cast<unsigned char>(line_.text[pos_]))) ++pos_;
    return line_.text.substr(s, pos_ - s);
  }
  std::string identifier() {
    skip_ws();
    const std::size_t s = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected an identifier");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return line_.text.substr(s, pos_ - s);
  }
  std::string digits() {
    const std::size_t s = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (s == pos_) fail("expected digits");
    return line_.text.substr(s, pos_ - s);
  }
  std::uint64_t small_number() {
    const std::size_t s = pos_;
    const std::string d = digits();
    if (d.size() > 18) fail_at(s, "number too large");
    return std::stoull(d);
  }
  const Line& line() const { return line_; }

 private:
  const Line& line_;
  std::size_t pos_;
};

// Polynomial in t over F_p written as sums of [c*]t[^k] and constants.
gf::Coeffs parse_univariate(Cursor& cur, std::uint64_t p, char stop, const std::string& var = "t") {
  gf::Coeffs out;
  bool first = true;
  for (;;) {
    cur.skip_ws();
    if (cur.peek() == stop || cur.peek() == '\0') {
      if (first) cur.fail("empty polynomial");
      break;
    }
    bool neg = false;
    if (cur.peek() == '+' || cur.peek() == '-') {
      neg = cur.get() == '-';
      cur.skip_ws();
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    std::uint64_t c = 1;
    bool have_c = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      const std::size_t s = cur.pos();
      const mpz_class v(cur.digits());
      c = mpz_class(v % static_cast<unsigned long>(p)).get_ui();
      (void)s;
      have_c = true;
      cur.skip_ws();
      if (cur.peek() == '*') {
        cur.get();
        cur.skip_ws();
      } else if (cur.peek() != var[0]) {
        if (out.size() < 1) out.resize(1, 0);
        out[0] = (out[0] + (neg ? (p - c) % p : c)) % p;
        continue;
      }
    }
    const std::size_t at = cur.pos();
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_') name += cur.get();
    if (name != var) cur.fail_at(at, have_c ? "expected " + var + " after '*'" : "expected a coefficient or " + var);
    std::uint64_t k = 1;
    cur.skip_ws();
    if (cur.peek() == '^') {
      cur.get();
      cur.skip_ws();
      k = cur.small_number();
      if (k > 1u << 20) cur.fail("exponent too large");
    }
    if (out.size() <= k) out.resize(k + 1, 0);
    out[k] = (out[k] + (neg ? (p - c) % p : c)) % p;
  }
  gf::trim(out);
  return out;
}

FieldElem parse_coefficient(Cursor& cur, FieldRef ctx) {
  cur.skip_ws();
  const std::size_t start = cur.pos();
  if (cur.peek() == '(') {
    cur.get();
    if (ctx->is_rational()) cur.fail_at(start, "residue coefficient over Q");
    gf::Coeffs c = parse_univariate(cur, ctx->characteristic(), ')');
    if (cur.get() != ')') cur.fail("expected ')'");
    if (ctx->is_prime_field()) {
      if (gf::degree(c) > 0) cur.fail_at(start, "residue of positive degree over a prime field");
      return FieldElem::from_int(ctx, c.empty() ? 0 : static_cast<long long>(c[0]));
    }
    return FieldElem::from_coeffs(ctx, c);
  }
  bool neg = false;
  if (cur.peek() == '-' || cur.peek() == '+') neg = cur.get() == '-';
  if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("expected a coefficient");
  mpz_class num(cur.digits());
  mpz_class den = 1;
  if (cur.peek() == '/') {
    cur.get();
    if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("expected a denominator");
    den = mpz_class(cur.digits());
    if (den == 0) cur.fail_at(start, "zero denominator");
  }
  if (neg) num = -num;
  if (ctx->is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElem::from_rational(ctx, q);
  }
  const FieldElem d = FieldElem::from_mpz(ctx, den);
  if (d.is_zero()) cur.fail_at(start, "denominator vanishes in the field");
  return FieldElem::from_mpz(ctx, num) / d;
}

Poly parse_poly(Cursor& cur, FieldRef ctx, const std::map<std::string, std::size_t>& var_index, std::size_t nv) {
  Poly f(ctx, nv);
  for (;;) {
    cur.skip_ws();
    FieldElem c = FieldElem::one(ctx);
    const char ch = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '(' || ch == '+') c = parse_coefficient(cur, ctx);
    else if (!(std::isalpha(static_cast<unsigned char>(ch)) || ch == '_')) cur.fail("expected a term");
    Exponent e(nv, 0);
    cur.skip_ws();
    if (std::isalpha(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_') {
      for (;;) {
        const std::size_t at = cur.pos();
        const std::string name = cur.identifier();
        auto it = var_index.find(name);
        if (it == var_index.end()) cur.fail_at(at, "unknown variable '" + name + "'");
        std::uint64_t k = 1;
        cur.skip_ws();
        if (cur.peek() == '^') {
          cur.get();
          cur.skip_ws();
          k = cur.small_number();
          if (k > UINT32_MAX - e[it->second]) cur.fail("exponent too large");
        }
        e[it->second] += static_cast<std::uint32_t>(k);
        cur.skip_ws();
        if (cur.peek() != '*') break;
        cur.get();
        cur.skip_ws();
      }
    }
    f.add_term(e, c);
    if (cur.done()) break;
    if (cur.peek() != '+') cur.fail("expected '+' between terms");
    cur.get();
  }
  return f;
}

FieldRef parse_field(Cursor& cur) {
  cur.skip_ws();
  const std::size_t at = cur.pos();
  if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("bad field spec: expected 0 or a prime");
  const std::string d = cur.digits();
  if (d.size() > 12) cur.fail_at(at, "bad field spec: characteristic too large");
  const std::uint64_t p = std::stoull(d);
  if (p == 0) {
    if (!cur.done()) cur.fail("bad field spec: Q takes no extension");
    return FieldCtx::rationals();
  }
  if (!gf::is_prime(p) || p > gf::kMaxPrime) cur.fail_at(at, "bad field spec: " + d + " is not a supported prime");
  if (cur.done()) return FieldCtx::prime(p);
  const std::size_t kw = cur.pos();
  if (cur.word() != "ext") cur.fail_at(kw, "bad field spec: expected 'ext'");
  cur.skip_ws();
  const std::size_t mpos = cur.pos();
  gf::Coeffs mod = parse_univariate(cur, p, '\0');
  try {
    return FieldCtx::extension(p, mod);
  } catch (const std::exception& e) {
    cur.fail_at(mpos, std::string("bad field spec: ") + e.what());
  }
}

std::string strip_comment(const std::string& s) {
  const auto h = s.find('#');
  return h == std::string::npos ? s : s.substr(0, h);
}

}  // namespace

std::string format_coefficient(const FieldElem& c) {
  FieldRef ctx = c.ctx();
  if (ctx->is_rational()) return c.rational().get_str();
  if (ctx->is_prime_field()) return std::to_string(c.packed());
  return "(" + gf::to_string(c.coeffs(), "t") + ")";
}

PolySystem parse_system(const std::string& text) {
  Metadata meta;
  FieldRef ctx = nullptr;
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  std::vector<Poly> polys;
  std::vector<std::size_t> poly_lines;
  const auto lines = split_lines(text);
  std::size_t last_line = 1;
  for (const auto& l : lines) {
    if (blank(l.text)) continue;
    last_line = l.number;
    Cursor cur(l);
    cur.skip_ws();
    if (cur.peek() == '#') {
      cur.get();
      std::string rest = l.text.substr(cur.pos());
      if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
      meta.add_raw(rest);
      continue;
    }
    const std::size_t kw_at = cur.pos();
    const std::string kw = cur.identifier();
    if (kw == "field") {
      if (ctx) cur.fail_at(kw_at, "duplicate field line");
      ctx = parse_field(cur);
    } else if (kw == "vars") {
      if (!ctx) cur.fail_at(kw_at, "vars before field");
      if (!names.empty()) cur.fail_at(kw_at, "duplicate vars line");
      while (!cur.done()) {
        const std::size_t at = cur.pos();
        const std::string v = cur.identifier();
        if (cur.peek() != '\0' && !std::isspace(static_cast<unsigned char>(cur.peek()))) cur.fail("bad variable name");
        if (index.count(v)) cur.fail_at(at, "duplicate variable '" + v + "'");
        index[v] = names.size();
        names.push_back(v);
      }
      if (names.empty()) cur.fail("vars line lists no variables");
    } else if (kw == "poly") {
      if (names.empty()) cur.fail_at(kw_at, "poly before vars");
      Poly f = parse_poly(cur, ctx, index, names.size());
      if (!check_homogeneous(f)) throw ParseError(l.number, kw_at + 1, "non-homogeneous at line " + std::to_string(l.number));
      polys.push_back(std::move(f));
      poly_lines.push_back(l.number);
    } else {
      cur.fail_at(kw_at, "unknown directive '" + kw + "'");
    }
  }
  if (!ctx) throw ParseError(last_line, 1, "missing field line");
  if (names.empty()) throw ParseError(last_line, 1, "missing vars line");
  if (polys.empty()) throw ParseError(last_line, 1, "system has no polynomials");
  return PolySystem(ctx, std::move(names), std::move(polys), std::move(meta));
}

std::string emit_system(const PolySystem& sys) {
  std::ostringstream os;
  for (const auto& l : sys.meta().lines()) os << "# " << l << "\n";
  FieldRef ctx = sys.ctx();
  os << "field " << ctx->characteristic();
  if (ctx->is_extension()) os << " ext " << gf::to_string(ctx->modulus(), "t");
  os << "\nvars";
  for (const auto& v : sys.var_names()) os << " " << v;
  os << "\n";
  for (const auto& f : sys.polys()) {
    os << "poly";
    if (f.is_zero()) os << " 0";
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
      os << (first ? " " : " + ") << format_coefficient(c);
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += sys.var_names()[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      if (!mono.empty()) os << " " << mono;
    }
    os << "\n";
  }
  return os.str();
}

CnfFormula parse_dimacs(const std::string& text) {
  CnfFormula phi;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> clause;
  for (const auto& l : split_lines(text)) {
    Cursor cur(l);
    if (cur.done()) continue;
    if (cur.peek() == 'c') continue;
    if (cur.peek() == '%') break;
    if (cur.peek() == 'p') {
      if (header) cur.fail("duplicate problem line");
      cur.word();
      const std::size_t at = cur.pos();
      if (cur.word() != "cnf") cur.fail_at(at, "expected 'p cnf'");
      cur.skip_ws();
      phi.num_vars = static_cast<unsigned>(cur.small_number());
      cur.skip_ws();
      declared = cur.small_number();
      if (!cur.done()) cur.fail("trailing text after the problem line");
      header = true;
      continue;
    }
    if (!header) cur.fail("clause before the 'p cnf' line");
    while (!cur.done()) {
      const std::size_t at = cur.pos();
      const std::string w = cur.word();
      long long v = 0;
      try {
        std::size_t used = 0;
        v = std::stoll(w, &used);
        if (used != w.size()) throw std::invalid_argument("junk");
      } catch (const std::exception&) {
        cur.fail_at(at, "expected an integer literal");
      }
      if (v == 0) {
        if (clause.empty()) cur.fail_at(at, "empty clause");
        if (clause.size() > 3) cur.fail_at(at, "clause with more than 3 literals");
        phi.clauses.push_back(clause);
        clause.clear();
        continue;
      }
      if (static_cast<unsigned long long>(std::llabs(v)) > phi.num_vars) cur.fail_at(at, "literal outside 1.." + std::to_string(phi.num_vars));
      clause.push_back(static_cast<int>(v));
    }
  }
  if (!header) throw ParseError(1, 1, "missing 'p cnf' line");
  if (!clause.empty()) {
    if (clause.size() > 3) throw ParseError(1, 1, "clause with more than 3 literals");
    phi.clauses.push_back(clause);
  }
  (void)declared;
  validate(phi);
  return phi;
}

BoolsysInstance parse_boolsys(const std::string& text) {
  BoolsysInstance inst;
  bool header = false;
  std::size_t last = 1;
  for (const auto& l0 : split_lines(text)) {
    const Line l{l0.number, strip_comment(l0.text)};
    Cursor cur(l);
    if (cur.done()) continue;
    last = l.number;
    if (!header) {
      const std::size_t at = cur.pos();
      if (cur.word() != "boolsys") cur.fail_at(at, "expected 'boolsys N'");
      cur.skip_ws();
      inst.num_vars = static_cast<unsigned>(cur.small_number());
      if (inst.num_vars == 0) cur.fail("boolsys needs at least one variable");
      if (!cur.done()) cur.fail("trailing text after the header");
      header = true;
      continue;
    }
    auto var = [&]() -> unsigned {
      cur.skip_ws();
      const std::size_t at = cur.pos();
      if (cur.get() != 'X') cur.fail_at(at, "expected a variable Xi");
      const std::uint64_t i = cur.small_number();
      if (i < 1 || i > inst.num_vars) cur.fail_at(at, "variable outside X1..X" + std::to_string(inst.num_vars));
      return static_cast<unsigned>(i);
    };
    const unsigned i = var();
    cur.skip_ws();
    if (cur.get() != '=') cur.fail("expected '='");
    const std::size_t at = cur.pos();
    const std::string kw = cur.word();
    if (kw == "true") inst.equations.emplace_back(IsTrue{i});
    else if (kw == "not") inst.equations.emplace_back(Negation{i, var()});
    else if (kw == "or") {
      const unsigned j = var();
      const unsigned k = var();
      inst.equations.emplace_back(Disjunction{i, j, k});
    } else {
      cur.fail_at(at, "expected 'true', 'not' or 'or'");
    }
    if (!cur.done()) cur.fail("trailing text after the equation");
  }
  if (!header) throw ParseError(last, 1, "missing 'boolsys N' header");
  if (inst.equations.empty()) throw ParseError(last, 1, "boolsys instance has no equations");
  return inst;
}

std::string emit_boolsys(const BoolsysInstance& inst) {
  std::ostringstream os;
  os << "boolsys " << inst.num_vars << "\n";
  for (const auto& eq : inst.equations) {
    if (auto* t = std::get_if<IsTrue>(&eq)) os << "X" << t->i << " = true\n";
    else if (auto* ng = std::get_if<Negation>(&eq)) os << "X" << ng->i << " = not X" << ng->j << "\n";
    else if (auto* d = std::get_if<Disjunction>(&eq)) os << "X" << d->i << " = or X" << d->j << " X" << d->k << "\n";
  }
  return os.str();
}

PartitionInstance parse_partition(const std::string& text) {
  PartitionInstance inst;
  std::size_t last = 1;
  for (const auto& l0 : split_lines(text)) {
    const Line l{l0.number, strip_comment(l0.text)};
    Cursor cur(l);
    last = l.number;
    while (!cur.done()) {
      const std::size_t at = cur.pos();
      const std::string w = cur.word();
      bool ok = !w.empty() && w.size() <= 19;
      for (char c : w)
        if (!std::isdigit(static_cast<unsigned char>(c))) ok = false;
      if (!ok) cur.fail_at(at, "expected a non-negative integer weight");
      inst.weights.push_back(std::stoull(w));
    }
  }
  if (inst.weights.empty()) throw ParseError(last, 1, "partition instance has no weights");
  return inst;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace homsys
