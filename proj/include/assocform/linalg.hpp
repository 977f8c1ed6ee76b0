// Copyright 2026 The assocform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exact dense linear algebra over a field scalar. Eigen's own decompositions
// pivot by magnitude and assume floating point; everything here pivots on
// the first nonzero entry, which is the right choice for exact fields and
// keeps pivot columns deterministic (leftmost first).

#include "assocform/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace assocform {

template <typename Scalar>
struct Echelon {
  Matrix<Scalar> rows;                 // rank x cols, reduced row-echelon form
  std::vector<Eigen::Index> pivots;    // pivot column of each row, increasing
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Reduced row-echelon form with zero rows dropped.
template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = input;
  const Eigen::Index nrows = m.rows(), ncols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < ncols && r < nrows; ++c) {
    Eigen::Index p = r;
    while (p < nrows && m(p, c) == 0) ++p;
    if (p == nrows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    m.row(r) *= inv;
    for (Eigen::Index i = 0; i < nrows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar factor = m(i, c);
      m.row(i) -= factor * m.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m.topRows(r), std::move(pivots)};
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Determinant by exact Gaussian elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix<Scalar> m = input;
  const Eigen::Index n = m.rows();
  Scalar det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Scalar factor = m(i, c) / m(c, c);
      m.row(i).tail(n - c) -= factor * m.row(c).tail(n - c);
    }
  }
  return det;
}

/// Rows form an RREF basis of {v : m v = 0}.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto e = rref(m);
  const Eigen::Index ncols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < ncols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(static_cast<Eigen::Index>(free.size()), ncols);
  for (std::size_t k = 0; k < free.size(); ++k) {
    const auto f = free[k];
    basis(static_cast<Eigen::Index>(k), f) = 1;
    for (Eigen::Index r = 0; r < e.rank(); ++r)
      basis(static_cast<Eigen::Index>(k), e.pivots[static_cast<std::size_t>(r)]) = -e.rows(r, f);
  }
  return rref(basis).rows;
}

template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = input.rows();
  if (n != input.cols()) throw std::invalid_argument("inverse of non-square matrix");
  Matrix<Scalar> aug(n, 2 * n);
  aug << input, Matrix<Scalar>::Identity(n, n);
  const auto e = rref(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    throw std::domain_error("singular matrix");
  return e.rows.rightCols(n);
}

}  // namespace assocform
