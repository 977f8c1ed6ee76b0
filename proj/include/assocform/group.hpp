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
#include "assocform/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace assocform {

/// An invertible rational n x n matrix.
class GroupElement {
 public:
  explicit GroupElement(MatrixQ m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) throw std::invalid_argument("group element must be square");
    det_ = determinant(m_);
    if (det_ == 0) throw std::domain_error("singular matrix");
  }

  static GroupElement identity(int n) { return GroupElement(MatrixQ::Identity(n, n)); }
  static GroupElement diagonal(const std::vector<Rational>& d) {
    MatrixQ m = MatrixQ::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
    return GroupElement(std::move(m));
  }

  int size() const { return static_cast<int>(m_.rows()); }
  const MatrixQ& matrix() const { return m_; }
  const Rational& det() const { return det_; }
  GroupElement inverse() const { return GroupElement(assocform::inverse(m_)); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (a.size() != b.size()) throw std::invalid_argument("group element size mismatch");
    return GroupElement(MatrixQ(a.m_ * b.m_));
  }
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }

 private:
  MatrixQ m_;
  Rational det_;
};

/// Source action (g f)(x) = f(x g^{-t}): x_j is replaced by sum_i (g^{-1})_{ji} x_i.
inline Form act(const GroupElement& g, const Form& f) {
  if (g.size() != f.num_vars()) throw std::invalid_argument("group element size does not match the form");
  const MatrixQ inv = inverse(g.matrix());
  std::vector<Form> subs;
  for (int j = 0; j < g.size(); ++j) subs.push_back(linear_form<Rational>(inv.row(j)));
  return substitute(f, std::span<const Form>(subs));
}

/// Dual action (g F)(y) = F(y g): y_j is replaced by sum_i g_{ij} y_i.
inline Form act_dual(const GroupElement& g, const Form& f) {
  if (g.size() != f.num_vars()) throw std::invalid_argument("group element size does not match the form");
  std::vector<Form> subs;
  for (int j = 0; j < g.size(); ++j) subs.push_back(linear_form<Rational>(g.matrix().col(j)));
  return substitute(f, std::span<const Form>(subs));
}

/// Double action ((g1, g2) f)(x) = f(x g1^{-t}) g2^{-1}, tuple read as a row vector.
inline FormTuple act(const GroupElement& g1, const GroupElement& g2, const FormTuple& t) {
  if (g2.size() != static_cast<int>(t.size())) throw std::invalid_argument("tuple length does not match g2");
  FormTuple moved;
  for (const auto& f : t) moved.push_back(act(g1, f));
  const MatrixQ inv = inverse(g2.matrix());
  FormTuple out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    Form acc(moved.front().num_vars(), moved.front().degree());
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Rational& c = inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
      if (c != 0) acc += moved[i] * c;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace assocform
