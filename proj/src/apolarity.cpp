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

#include "assocform/apolarity.hpp"

#include <stdexcept>

namespace assocform {

namespace {

// prod beta_i! / (beta_i - alpha_i)!, or 0 when alpha does not fit under beta
Integer falling_factor(const Exponent& beta, const Exponent& alpha) {
  Integer r = 1;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (alpha[i] > beta[i]) return 0;
    for (int k = beta[i] - alpha[i] + 1; k <= beta[i]; ++k) r *= k;
  }
  return r;
}

}  // namespace

DualForm polar_apply(const Form& h, const DualForm& F) {
  if (h.num_vars() != F.num_vars()) throw std::invalid_argument("polar pairing needs equal numbers of variables");
  if (h.degree() > F.degree()) throw std::invalid_argument("polar pairing: degree of h exceeds degree of F");
  const int n = F.num_vars();
  Form out(n, F.degree() - h.degree());
  VectorQ c = out.coefficients();
  Exponent diff(static_cast<std::size_t>(n));
  h.for_each_term([&](const Exponent& alpha, const Rational& a) {
    F.form().for_each_term([&](const Exponent& beta, const Rational& b) {
      const Integer w = falling_factor(beta, alpha);
      if (w == 0) return;
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = beta[i] - alpha[i];
      c(static_cast<Eigen::Index>(monomial_index(diff))) += a * b * Rational(w);
    });
  });
  return DualForm(Form(n, out.degree(), std::move(c)));
}

MatrixQ catalecticant_matrix(const DualForm& F, int j) {
  if (j < 0 || j > F.degree()) throw std::out_of_range("catalecticant degree out of range");
  const int n = F.num_vars();
  const auto source = monomials(n, j);
  MatrixQ m(static_cast<Eigen::Index>(source.size()),
            static_cast<Eigen::Index>(monomial_count(n, F.degree() - j)));
  for (std::size_t r = 0; r < source.size(); ++r) {
    const Form h = Form::monomial(std::span<const int>(source[r]));
    m.row(static_cast<Eigen::Index>(r)) = polar_apply(h, F).form().coefficients().transpose();
  }
  return m;
}

Rational catalecticant(const DualForm& F) {
  if (F.num_vars() != 2) throw std::invalid_argument("catalecticant is defined for binary forms");
  if (F.degree() % 2 != 0) throw std::invalid_argument("catalecticant needs even degree");
  const int two_n = F.degree(), half = two_n / 2;
  VectorQ a(two_n + 1);
  for (int i = 0; i <= two_n; ++i) a(i) = F.form()[i] / Rational(binomial(two_n, i));
  MatrixQ hankel(half + 1, half + 1);
  for (int i = 0; i <= half; ++i)
    for (int j = 0; j <= half; ++j) hankel(i, j) = a(i + j);
  return determinant(hankel);
}

Subspace apolar_component(const DualForm& F, int j) {
  if (j < 0 || j > F.degree() + 1) throw std::out_of_range("apolar component degree out of range");
  if (j > F.degree()) return Subspace::full(F.num_vars(), j);
  const MatrixQ m = catalecticant_matrix(F, j);
  return Subspace(F.num_vars(), j, kernel(m.transpose()));
}

DualForm associated_form_tuple(const GradedQuotient& q) {
  const int n = q.num_vars(), top = q.top_degree();
  const auto exps = monomials(n, top);
  const MatrixQ& red = q.reduction(top);
  VectorQ c(static_cast<Eigen::Index>(exps.size()));
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    c(r) = Rational(multinomial(exps[i])) * red(r, 0) / q.jacobian_socle_coordinate();
  }
  return DualForm(Form(n, top, std::move(c)));
}

DualForm associated_form_tuple(const FormTuple& t) { return associated_form_tuple(GradedQuotient::build(t)); }

DualForm associated_form(const Form& f) {
  if (f.degree() < 3) throw std::invalid_argument("associated form needs degree >= 3");
  try {
    return associated_form_tuple(gradient(f));
  } catch (const NotHsop& e) {
    throw DegenerateForm(std::string("form is degenerate: gradient ") + e.what());
  }
}

BMapResult b_map(const DualForm& F, int d) {
  const int n = F.num_vars();
  if (d < 3) throw std::invalid_argument("b_map needs d >= 3");
  if (F.degree() != n * (d - 2))
    throw std::invalid_argument("dual form degree " + std::to_string(F.degree()) + " is not n(d-2) = " +
                                std::to_string(n * (d - 2)));
  BMapResult r{apolar_component(F, d - 1), false, false};
  r.dimension_ok = r.subspace.dimension() == n;
  r.hsop = r.dimension_ok && is_hsop(r.subspace.basis());
  return r;
}

bool proportional(const DualForm& F, const DualForm& G) {
  if (F.num_vars() != G.num_vars() || F.degree() != G.degree()) return false;
  const auto i = F.form().leading_index();
  if (i < 0 || G.form()[i] == 0) return false;
  return F.form() * G.form()[i] == G.form() * F.form()[i];
}

}  // namespace assocform
