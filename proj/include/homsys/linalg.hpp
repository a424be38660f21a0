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

// Exact dense linear algebra over a FieldCtx.

#include <cstddef>
#include <optional>
#include <vector>

#include "homsys/field.hpp"

namespace homsys {

class Matrix {
 public:
  Matrix(FieldRef ctx, std::size_t rows, std::size_t cols)
      : ctx_(ctx), rows_(rows), cols_(cols), data_(rows * cols, FieldElem::zero(ctx)) {}

  FieldRef ctx() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  FieldRef ctx_;
  std::size_t rows_, cols_;
  std::vector<FieldElem> data_;
};

/// Fraction-free (Bareiss) determinant. Over Q, rows are first scaled to
/// integers so every intermediate value is an integer minor. The empty
/// matrix has determinant 1.
FieldElem determinant(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Some solution of A y = b, or nullopt if inconsistent.
std::optional<std::vector<FieldElem>> solve(const Matrix& a, const std::vector<FieldElem>& b);

/// A nonzero vector of the right kernel, or nullopt if A is injective.
std::optional<std::vector<FieldElem>> kernel_vector(const Matrix& a);

}  // namespace homsys
