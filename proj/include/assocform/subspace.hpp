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

#include "assocform/form.hpp"
#include "assocform/group.hpp"
#include "assocform/linalg.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace assocform {

/// A linear subspace of the forms of one degree, held as the RREF of any
/// spanning set over graded-lex monomial coordinates. Equal subspaces have
/// identical representations.
class Subspace {
 public:
  Subspace(int num_vars, int degree)
      : num_vars_(num_vars), degree_(degree), rows_(0, static_cast<Eigen::Index>(monomial_count(num_vars, degree))) {}

  /// Span of the rows of m (any spanning set).
  Subspace(int num_vars, int degree, const MatrixQ& m) : num_vars_(num_vars), degree_(degree) {
    if (static_cast<std::size_t>(m.cols()) != monomial_count(num_vars, degree))
      throw std::invalid_argument("row length does not match the ambient space");
    auto e = rref(m);
    rows_ = std::move(e.rows);
    pivots_ = std::move(e.pivots);
  }

  static Subspace span(std::span<const Form> forms) {
    if (forms.empty()) throw std::invalid_argument("span of no forms needs explicit shape");
    const int n = forms.front().num_vars(), d = forms.front().degree();
    MatrixQ m(static_cast<Eigen::Index>(forms.size()), static_cast<Eigen::Index>(monomial_count(n, d)));
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (forms[i].num_vars() != n || forms[i].degree() != d)
        throw std::invalid_argument("spanning forms must share variables and degree");
      m.row(static_cast<Eigen::Index>(i)) = forms[i].coefficients().transpose();
    }
    return Subspace(n, d, m);
  }
  static Subspace span(std::initializer_list<Form> forms) {
    const std::vector<Form> v(forms);
    return span(std::span<const Form>(v));
  }

  static Subspace full(int num_vars, int degree) {
    const auto k = static_cast<Eigen::Index>(monomial_count(num_vars, degree));
    return Subspace(num_vars, degree, MatrixQ::Identity(k, k));
  }

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  int dimension() const { return static_cast<int>(rows_.rows()); }
  const MatrixQ& rows() const { return rows_; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }

  Form basis_form(int i) const {
    return {num_vars_, degree_, VectorQ(rows_.row(i).transpose())};
  }
  FormTuple basis() const {
    FormTuple b;
    for (int i = 0; i < dimension(); ++i) b.push_back(basis_form(i));
    return b;
  }

  bool contains(const Form& f) const {
    if (f.num_vars() != num_vars_ || f.degree() != degree_) return false;
    MatrixQ m(rows_.rows() + 1, rows_.cols());
    m << rows_, f.coefficients().transpose();
    return rank(m) == rows_.rows();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ && a.rows_.rows() == b.rows_.rows() &&
           a.rows_ == b.rows_;
  }

 private:
  int num_vars_;
  int degree_;
  MatrixQ rows_;
  std::vector<Eigen::Index> pivots_;
};

inline Subspace act(const GroupElement& g, const Subspace& w) {
  FormTuple moved;
  for (const auto& f : w.basis()) moved.push_back(act(g, f));
  if (moved.empty()) return w;
  return Subspace::span(std::span<const Form>(moved));
}

/// Exact equality of canonical representatives; shapes must agree.
inline bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.num_vars() != b.num_vars() || a.degree() != b.degree())
    throw std::invalid_argument("subspaces live in different spaces");
  return a == b;
}

}  // namespace assocform
