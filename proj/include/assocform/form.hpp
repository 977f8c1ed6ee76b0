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

#include "assocform/monomial.hpp"
#include "assocform/rational.hpp"

#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace assocform {

/// A homogeneous polynomial stored densely over the graded-lex monomial
/// basis of its degree. Immutable in spirit: all arithmetic returns new
/// values.
template <typename Scalar>
class HomogeneousForm {
 public:
  using scalar_type = Scalar;

  HomogeneousForm() : HomogeneousForm(1, 0) {}

  /// Zero form.
  HomogeneousForm(int num_vars, int degree)
      : num_vars_(num_vars),
        degree_(degree),
        coeffs_(Vector<Scalar>::Zero(static_cast<Eigen::Index>(monomial_count(num_vars, degree)))) {
    if (num_vars < 1) throw std::invalid_argument("form needs at least one variable");
    if (degree < 0) throw std::invalid_argument("form degree must be nonnegative");
  }

  HomogeneousForm(int num_vars, int degree, Vector<Scalar> coeffs)
      : num_vars_(num_vars), degree_(degree), coeffs_(std::move(coeffs)) {
    if (num_vars < 1) throw std::invalid_argument("form needs at least one variable");
    if (degree < 0) throw std::invalid_argument("form degree must be nonnegative");
    if (static_cast<std::size_t>(coeffs_.size()) != monomial_count(num_vars, degree))
      throw std::invalid_argument("coefficient vector has the wrong length");
  }

  static HomogeneousForm monomial(std::span<const int> exps, const Scalar& c = Scalar(1)) {
    const int d = std::accumulate(exps.begin(), exps.end(), 0);
    HomogeneousForm f(static_cast<int>(exps.size()), d);
    f.coeffs_(static_cast<Eigen::Index>(monomial_index(exps))) = c;
    return f;
  }
  static HomogeneousForm monomial(std::initializer_list<int> exps, const Scalar& c = Scalar(1)) {
    const std::vector<int> e(exps);
    return monomial(std::span<const int>(e), c);
  }

  static HomogeneousForm constant(int num_vars, const Scalar& c) {
    HomogeneousForm f(num_vars, 0);
    f.coeffs_(0) = c;
    return f;
  }

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  Eigen::Index size() const { return coeffs_.size(); }
  const Vector<Scalar>& coefficients() const { return coeffs_; }
  const Scalar& operator[](Eigen::Index i) const { return coeffs_(i); }

  Scalar coefficient(std::span<const int> exps) const {
    check_exponent(exps);
    return coeffs_(static_cast<Eigen::Index>(monomial_index(exps)));
  }
  Scalar coefficient(std::initializer_list<int> exps) const {
    const std::vector<int> e(exps);
    return coefficient(std::span<const int>(e));
  }

  bool is_zero() const {
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
      if (coeffs_(i) != 0) return false;
    return true;
  }

  /// Index of the first nonzero coefficient in graded-lex order, or -1.
  Eigen::Index leading_index() const {
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
      if (coeffs_(i) != 0) return i;
    return -1;
  }

  Scalar leading_coefficient() const {
    const auto i = leading_index();
    return i < 0 ? Scalar(0) : coeffs_(i);
  }

  /// Calls fn(exponent, coefficient) for every nonzero term, in graded-lex order.
  template <typename Fn>
  void for_each_term(Fn&& fn) const {
    const auto exps = monomials(num_vars_, degree_);
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
      if (coeffs_(i) != 0) fn(exps[static_cast<std::size_t>(i)], coeffs_(i));
  }

  HomogeneousForm operator-() const { return {num_vars_, degree_, Vector<Scalar>(-coeffs_)}; }

  HomogeneousForm& operator+=(const HomogeneousForm& o) {
    check_same_space(o);
    coeffs_ += o.coeffs_;
    return *this;
  }
  HomogeneousForm& operator-=(const HomogeneousForm& o) {
    check_same_space(o);
    coeffs_ -= o.coeffs_;
    return *this;
  }
  HomogeneousForm& operator*=(const Scalar& c) {
    coeffs_ *= c;
    return *this;
  }

  friend HomogeneousForm operator+(HomogeneousForm a, const HomogeneousForm& b) { return a += b; }
  friend HomogeneousForm operator-(HomogeneousForm a, const HomogeneousForm& b) { return a -= b; }
  friend HomogeneousForm operator*(HomogeneousForm a, const Scalar& c) { return a *= c; }
  friend HomogeneousForm operator*(const Scalar& c, HomogeneousForm a) { return a *= c; }

  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.num_vars_ != b.num_vars_) throw std::invalid_argument("forms in different numbers of variables");
    HomogeneousForm out(a.num_vars_, a.degree_ + b.degree_);
    if (a.num_vars_ == 2) {
      // binary forms: index is the y-exponent, so the product is a convolution
      for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a.coeffs_(i) == 0) continue;
        for (Eigen::Index j = 0; j < b.size(); ++j)
          if (b.coeffs_(j) != 0) out.coeffs_(i + j) += a.coeffs_(i) * b.coeffs_(j);
      }
      return out;
    }
    const auto ea = monomials(a.num_vars_, a.degree_);
    const auto eb = monomials(b.num_vars_, b.degree_);
    std::vector<int> sum(static_cast<std::size_t>(a.num_vars_));
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a.coeffs_(i) == 0) continue;
      for (Eigen::Index j = 0; j < b.size(); ++j) {
        if (b.coeffs_(j) == 0) continue;
        for (std::size_t k = 0; k < sum.size(); ++k)
          sum[k] = ea[static_cast<std::size_t>(i)][k] + eb[static_cast<std::size_t>(j)][k];
        out.coeffs_(static_cast<Eigen::Index>(monomial_index(sum))) += a.coeffs_(i) * b.coeffs_(j);
      }
    }
    return out;
  }

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_same_space(const HomogeneousForm& o) const {
    if (num_vars_ != o.num_vars_ || degree_ != o.degree_)
      throw std::invalid_argument("forms of different shape");
  }
  void check_exponent(std::span<const int> exps) const {
    if (static_cast<int>(exps.size()) != num_vars_ ||
        std::accumulate(exps.begin(), exps.end(), 0) != degree_)
      throw std::invalid_argument("exponent does not belong to this form's degree");
  }

  int num_vars_;
  int degree_;
  Vector<Scalar> coeffs_;
};

using Form = HomogeneousForm<Rational>;
using FormTuple = std::vector<Form>;

template <typename Scalar>
HomogeneousForm<Scalar> power(const HomogeneousForm<Scalar>& f, int k) {
  auto r = HomogeneousForm<Scalar>::constant(f.num_vars(), Scalar(1));
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

/// Partial derivative in variable var; the derivative of a constant is the
/// zero form of degree 0.
template <typename Scalar>
HomogeneousForm<Scalar> differentiate(const HomogeneousForm<Scalar>& f, int var) {
  if (var < 0 || var >= f.num_vars()) throw std::out_of_range("variable index out of range");
  if (f.degree() == 0) return HomogeneousForm<Scalar>(f.num_vars(), 0);
  HomogeneousForm<Scalar> out(f.num_vars(), f.degree() - 1);
  Vector<Scalar> c = out.coefficients();
  f.for_each_term([&](const Exponent& e, const Scalar& a) {
    const int p = e[static_cast<std::size_t>(var)];
    if (p == 0) return;
    Exponent d = e;
    --d[static_cast<std::size_t>(var)];
    c(static_cast<Eigen::Index>(monomial_index(d))) += a * p;
  });
  return {f.num_vars(), f.degree() - 1, std::move(c)};
}

template <typename Scalar>
std::vector<HomogeneousForm<Scalar>> gradient(const HomogeneousForm<Scalar>& f) {
  if (f.degree() < 1) throw std::invalid_argument("gradient needs degree >= 1");
  std::vector<HomogeneousForm<Scalar>> g;
  g.reserve(static_cast<std::size_t>(f.num_vars()));
  for (int i = 0; i < f.num_vars(); ++i) g.push_back(differentiate(f, i));
  return g;
}

namespace detail {
template <typename Scalar>
HomogeneousForm<Scalar> cofactor_det(const std::vector<std::vector<HomogeneousForm<Scalar>>>& m,
                                     std::vector<int>& cols, int row) {
  const int n = static_cast<int>(m.size());
  if (row == n - 1) {
    for (int c = 0; c < n; ++c)
      if (cols[static_cast<std::size_t>(c)] == 0) return m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
  }
  std::optional<HomogeneousForm<Scalar>> acc;
  int sign = 1;
  for (int c = 0; c < n; ++c) {
    if (cols[static_cast<std::size_t>(c)] != 0) continue;
    const auto& entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
    if (!entry.is_zero()) {
      cols[static_cast<std::size_t>(c)] = 1;
      auto term = entry * cofactor_det(m, cols, row + 1);
      cols[static_cast<std::size_t>(c)] = 0;
      if (sign < 0) term = -term;
      acc = acc ? *acc + term : term;
    }
    sign = -sign;
  }
  if (acc) return *acc;
  // all entries in this row vanish: the determinant is zero of the expected degree
  int deg = 0;
  for (int r = row; r < n; ++r) deg += m[static_cast<std::size_t>(r)][0].degree();
  return HomogeneousForm<Scalar>(m[0][0].num_vars(), deg);
}
}  // namespace detail

/// det of the matrix of partials (d t_i / d x_j).
template <typename Scalar>
HomogeneousForm<Scalar> jacobian_det(const std::vector<HomogeneousForm<Scalar>>& t) {
  if (t.empty()) throw std::invalid_argument("empty tuple");
  const int n = t.front().num_vars();
  if (static_cast<int>(t.size()) != n) throw std::invalid_argument("tuple length must equal the number of variables");
  for (const auto& f : t)
    if (f.num_vars() != n || f.degree() != t.front().degree())
      throw std::invalid_argument("tuple entries must share variables and degree");
  if (t.front().degree() < 1) throw std::invalid_argument("jacobian needs degree >= 1");
  std::vector<std::vector<HomogeneousForm<Scalar>>> m;
  for (const auto& f : t) m.push_back(gradient(f));
  std::vector<int> cols(static_cast<std::size_t>(n), 0);
  return detail::cofactor_det(m, cols, 0);
}

template <typename Scalar>
HomogeneousForm<Scalar> hessian_det(const HomogeneousForm<Scalar>& f) {
  return jacobian_det(gradient(f));
}

/// f(L_1, ..., L_n) for linear forms L_j substituted for the variables.
template <typename Scalar>
HomogeneousForm<Scalar> substitute(const HomogeneousForm<Scalar>& f,
                                   std::span<const HomogeneousForm<Scalar>> linear) {
  const int n = f.num_vars();
  if (static_cast<int>(linear.size()) != n) throw std::invalid_argument("substitution size mismatch");
  const int target_vars = linear.front().num_vars();
  for (const auto& l : linear)
    if (l.degree() != 1 || l.num_vars() != target_vars) throw std::invalid_argument("substitution needs linear forms");
  std::vector<std::vector<HomogeneousForm<Scalar>>> powers(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    auto& p = powers[static_cast<std::size_t>(j)];
    p.push_back(HomogeneousForm<Scalar>::constant(target_vars, Scalar(1)));
    for (int k = 1; k <= f.degree(); ++k) p.push_back(p.back() * linear[static_cast<std::size_t>(j)]);
  }
  HomogeneousForm<Scalar> out(target_vars, f.degree());
  f.for_each_term([&](const Exponent& e, const Scalar& a) {
    auto term = HomogeneousForm<Scalar>::constant(target_vars, a);
    for (int j = 0; j < n; ++j) {
      const int k = e[static_cast<std::size_t>(j)];
      if (k > 0) term = term * powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    }
    out += term;
  });
  return out;
}

/// The linear form sum_i row(i) x_i.
template <typename Scalar, typename Derived>
HomogeneousForm<Scalar> linear_form(const Eigen::MatrixBase<Derived>& row) {
  const int n = static_cast<int>(row.size());
  Vector<Scalar> c(n);
  for (int i = 0; i < n; ++i) c(i) = row(i);
  return {n, 1, std::move(c)};
}

}  // namespace assocform
