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

#include "homsys/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace homsys {

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Matrix s(ctx_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

namespace {

// Integer Bareiss on mpz entries; returns the determinant.
mpz_class bareiss_integer(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

FieldElem bareiss_field(Matrix a) {
  const std::size_t n = a.rows();
  FieldRef ctx = a.ctx();
  if (n == 0) return FieldElem::one(ctx);
  FieldElem prev = FieldElem::one(ctx);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return FieldElem::zero(ctx);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      negate = !negate;
    }
    const FieldElem prev_inv = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) * prev_inv;
      a(i, k) = FieldElem::zero(ctx);
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(row, j), a(piv, j));
    const FieldElem inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const FieldElem f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

FieldElem determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  FieldRef ctx = m.ctx();
  if (!ctx->is_rational()) return bareiss_field(m);
  const std::size_t n = m.rows();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = m(i, j).rational();
      a[i][j] = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }
  return FieldElem::from_rational(ctx, mpq_class(bareiss_integer(std::move(a)), scale));
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return echelon(a).size();
}

std::optional<std::vector<FieldElem>> solve(const Matrix& a, const std::vector<FieldElem>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side has the wrong length");
  Matrix aug(a.ctx(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<FieldElem> y(a.cols(), FieldElem::zero(a.ctx()));
  for (std::size_t r = 0; r < pivots.size(); ++r) y[pivots[r]] = aug(r, a.cols());
  return y;
}

std::optional<std::vector<FieldElem>> kernel_vector(const Matrix& a) {
  Matrix e = a;
  const auto pivots = echelon(e);
  if (pivots.size() == a.cols()) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t r = 0; free_col < a.cols(); ++free_col) {
    if (r < pivots.size() && pivots[r] == free_col) {
      ++r;
      continue;
    }
    break;
  }
  std::vector<FieldElem> v(a.cols(), FieldElem::zero(a.ctx()));
  v[free_col] = FieldElem::one(a.ctx());
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(r, free_col);
  return v;
}

}  // namespace homsys
