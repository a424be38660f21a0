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

// Table-driven arithmetic for small finite fields, used by the projective
// enumerator. Elements are discrete logarithms with respect to a primitive
// element; addition goes through a Zech logarithm table, so every operation
// is a couple of table lookups.

#include <cstdint>
#include <vector>

#include "homsys/field.hpp"

namespace homsys {

class SmallField {
 public:
  using Elem = std::uint32_t;

  /// Largest order accepted (three 32-bit tables of this size are built).
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

  /// Throws std::length_error past kMaxOrder, std::invalid_argument for Q.
  explicit SmallField(FieldRef ctx);

  FieldRef ctx() const { return ctx_; }
  std::uint32_t order() const { return q_; }
  Elem zero() const { return zero_; }
  Elem one() const { return 0; }
  bool is_zero(Elem a) const { return a == zero_; }

  Elem mul(Elem a, Elem b) const {
    if (a == zero_ || b == zero_) return zero_;
    const std::uint32_t s = a + b;
    return s >= q_ - 1 ? s - (q_ - 1) : s;
  }
  Elem add(Elem a, Elem b) const {
    if (a == zero_) return b;
    if (b == zero_) return a;
    std::uint32_t d = b >= a ? b - a : b + (q_ - 1) - a;
    const Elem z = zech_[d];
    if (z == zero_) return zero_;
    return mul(a, z);
  }
  Elem neg(Elem a) const { return mul(a, minus_one_); }
  Elem pow(Elem a, std::uint32_t e) const {
    if (a == zero_) return e == 0 ? one() : zero_;
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * e) % (q_ - 1));
  }

  /// Conversions through the packed base-p index of FieldElem.
  Elem from_elem(const FieldElem& x) const { return log_[x.packed()]; }
  FieldElem to_elem(Elem a) const;
  Elem from_packed(std::uint64_t idx) const { return log_[idx]; }
  std::uint64_t to_packed(Elem a) const { return a == zero_ ? 0 : exp_[a]; }

 private:
  FieldRef ctx_;
  std::uint32_t q_;
  Elem zero_;
  Elem minus_one_;
  std::vector<std::uint32_t> log_;   // packed index -> log
  std::vector<std::uint32_t> exp_;   // log -> packed index
  std::vector<std::uint32_t> zech_;  // d -> log(1 + g^d)
};

}  // namespace homsys
