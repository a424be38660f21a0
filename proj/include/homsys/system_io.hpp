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

// Plain-text system format:
//
//   # key=value            provenance metadata, kept in order
//   field 0 | field p | field p ext <monic poly in t>
//   vars x0 x1 ...
//   poly <coef> <monomial> + <coef> <monomial> + ...
//
// Coefficients are integers, a/b, or (residue in t); monomials are var^e
// factors joined by '*'. A term without monomial is a constant; `poly 0` is
// the zero polynomial.

#include <stdexcept>
#include <string>

#include "homsys/poly.hpp"
#include "homsys/reductions.hpp"

namespace homsys {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

PolySystem parse_system(const std::string& text);
std::string emit_system(const PolySystem& sys);
std::string format_coefficient(const FieldElem& c);

/// `p cnf V C` header, clauses terminated by 0, `c` comments.
CnfFormula parse_dimacs(const std::string& text);
/// `boolsys N` header, then `Xi = true`, `Xi = not Xj`, `Xi = or Xj Xk`.
BoolsysInstance parse_boolsys(const std::string& text);
std::string emit_boolsys(const BoolsysInstance& inst);
/// Whitespace-separated non-negative integers, `#` comments.
PartitionInstance parse_partition(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace homsys
