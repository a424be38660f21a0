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

#include "homsys/small_field.hpp"

#include <stdexcept>

namespace homsys {

namespace {

bool is_primitive(const FieldElem& g, std::uint64_t q) {
  if (g.is_zero()) return false;
  for (std::uint64_t r : gf::prime_factors(q - 1)) {
    if (g.pow((q - 1) / r).is_one()) return false;
  }
  return true;
}

}  // namespace

SmallField::SmallField(FieldRef ctx) : ctx_(ctx) {
  if (ctx->is_rational()) throw std::invalid_argument("table arithmetic needs a finite field");
  const auto order = ctx->order();
  if (!order || *order > kMaxOrder) throw std::length_error("field " + ctx->describe() + " is too large for table arithmetic");
  q_ = static_cast<std::uint32_t>(*order);
  zero_ = q_ - 1;

  // q == 2 is special: the only unit is 1 and g^0 = 1.
  FieldElem g = FieldElem::one(ctx);
  if (q_ > 2) {
    for (std::uint64_t idx = 2; idx < q_; ++idx) {
      g = FieldElem::from_packed(ctx, idx);
      if (is_primitive(g, q_)) break;
    }
  }
  log_.assign(q_, zero_);
  exp_.assign(q_, 0);
  FieldElem x = FieldElem::one(ctx);
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    const std::uint64_t idx = x.packed();
    exp_[i] = static_cast<std::uint32_t>(idx);
    log_[idx] = i;
    x *= g;
  }
  if (!x.is_one()) throw std::logic_error("primitive element search failed");

  zech_.assign(q_, zero_);
  const FieldElem one = FieldElem::one(ctx);
  for (std::uint32_t d = 0; d + 1 < q_; ++d) {
    const FieldElem s = one + FieldElem::from_packed(ctx, exp_[d]);
    zech_[d] = log_[s.packed()];
  }
  minus_one_ = log_[(-one).packed()];
}

FieldElem SmallField::to_elem(Elem a) const { return FieldElem::from_packed(ctx_, to_packed(a)); }

}  // namespace homsys
