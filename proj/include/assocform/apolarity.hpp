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

#include "assocform/errors.hpp"
#include "assocform/form.hpp"
#include "assocform/group.hpp"
#include "assocform/quotient.hpp"
#include "assocform/subspace.hpp"

namespace assocform {

/// A form in the dual variables y1..yn. Kept as a distinct type so the two
/// group actions cannot be mixed up.
class DualForm {
 public:
  DualForm() = default;
  explicit DualForm(Form f) : f_(std::move(f)) {}

  const Form& form() const { return f_; }
  int num_vars() const { return f_.num_vars(); }
  int degree() const { return f_.degree(); }
  bool is_zero() const { return f_.is_zero(); }

  friend DualForm operator*(const Rational& c, const DualForm& F) { return DualForm(c * F.f_); }
  friend DualForm operator+(const DualForm& a, const DualForm& b) { return DualForm(a.f_ + b.f_); }
  friend bool operator==(const DualForm&, const DualForm&) = default;

 private:
  Form f_;
};

inline DualForm act(const GroupElement& g, const DualForm& F) { return DualForm(act_dual(g, F.form())); }

/// h(d/dy_1, ..., d/dy_n) applied to F, without factorial renormalization.
DualForm polar_apply(const Form& h, const DualForm& F);

/// Matrix of h -> h o F on forms of degree j: one row per degree-j source
/// monomial, columns over the degree (deg F - j) dual monomials.
MatrixQ catalecticant_matrix(const DualForm& F, int j);

/// Determinant of the middle Hankel matrix (a_{i+j}) of a binary form of
/// even degree 2N written as sum C(2N, i) a_i y1^(2N-i) y2^i.
Rational catalecticant(const DualForm& F);

/// {h of degree j : h o F = 0}.
Subspace apolar_component(const DualForm& F, int j);

/// The dual form A with (sum y_i x_i)^top = A(y) jac in the quotient, top =
/// n(d-2) for generators of degree d-1. Throws NotHsop.
DualForm associated_form_tuple(const FormTuple& t);
DualForm associated_form_tuple(const GradedQuotient& q);

/// associated_form_tuple(gradient(f)); throws DegenerateForm when the
/// gradient is not an hsop.
DualForm associated_form(const Form& f);

struct BMapResult {
  Subspace subspace;  // F-perp in degree d-1
  bool dimension_ok;  // dimension equals n
  bool hsop;          // the basis is an hsop (only tested when dimension_ok)
  bool member() const { return dimension_ok && hsop; }
};

/// F-perp in degree d-1 for a dual form of degree n(d-2).
BMapResult b_map(const DualForm& F, int d);

/// True when F and G are nonzero and proportional.
bool proportional(const DualForm& F, const DualForm& G);

}  // namespace assocform
