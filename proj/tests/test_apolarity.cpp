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
#include "assocform/parse.hpp"
#include "assocform/sampling.hpp"
#include "gen.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace assocform;

namespace {
Form P(const char* s, int n = 2) { return parse_form(s, n); }
DualForm D(const char* s, int n = 2) { return DualForm(parse_form(s, n, Variables::dual)); }
}  // namespace

TEST_CASE("associated form goldens") {
  CHECK(associated_form(P("x^4 + y^4")) == D("1/24*y1^2*y2^2"));
  CHECK(associated_form(P("x^3 + y^3")) == D("1/18*y1*y2"));
  CHECK(associated_form(P("x1^3 + x2^3 + x3^3", 3)) == D("1/36*y1*y2*y3", 3));
  // the gradient of x^4 + y^4 is 4 (x^3, y^3), and A scales by 1/det
  CHECK(associated_form_tuple(FormTuple{P("x^3"), P("y^3")}) == D("2/3*y1^2*y2^2"));
}

TEST_CASE("associated form preconditions") {
  CHECK_THROWS_AS(associated_form(P("x^2*y^2")), DegenerateForm);
  CHECK_THROWS_AS(associated_form(P("x^4")), DegenerateForm);
  CHECK_THROWS_AS(associated_form(P("x^2 + y^2")), std::invalid_argument);
  CHECK_THROWS_AS(associated_form_tuple(FormTuple{P("x^3"), P("x^2*y")}), NotHsop);
}

TEST_CASE("diagonal forms in three variables") {
  gen::Gen g(21);
  for (int d = 3; d <= 4; ++d)
    for (int k = 0; k < 5; ++k) {
      const Rational a = g.nonzero_rational(), b = g.nonzero_rational(), c = g.nonzero_rational();
      Form f = a * Form::monomial({d, 0, 0}) + b * Form::monomial({0, d, 0}) + c * Form::monomial({0, 0, d});
      const Rational coef = oracle::factorial(3 * (d - 2)) / (a * b * c * oracle::factorial(d) * oracle::factorial(d) * oracle::factorial(d));
      CHECK(associated_form(f).form() == Form::monomial({d - 2, d - 2, d - 2}, coef));
    }
}

TEST_CASE("polar pairing agrees with iterated differentiation") {
  gen::Gen g(22);
  for (int k = 0; k < 80; ++k) {
    const int n = g.integer(1, 3), dF = g.integer(0, 5), dh = g.integer(0, dF);
    const Form h = g.form(n, dh), F = g.form(n, dF);
    CHECK(polar_apply(h, DualForm(F)).form() == oracle::contract(h, F));
  }
  CHECK(polar_apply(P("x"), D("y1^2*y2")).form() == parse_form("2*y1*y2", 2, Variables::dual));
}

TEST_CASE("catalecticant") {
  CHECK(catalecticant(D("y1^2*y2^2")) == Rational(-1, 216));
  CHECK(catalecticant(D("y1^4 + y2^4")) == 0);
  CHECK(catalecticant(D("y1*y2")) == Rational(-1, 4));
  CHECK_THROWS_AS(catalecticant(D("y1^3")), std::invalid_argument);
  gen::Gen g(23);
  for (int k = 0; k < 60; ++k) {
    const Form F = g.form(2, 2 * g.integer(1, 4));
    CHECK(catalecticant(DualForm(F)) == oracle::catalecticant(F));
    const MatrixQ m = catalecticant_matrix(DualForm(F), F.degree() / 2);
    CHECK((determinant(m) == 0) == (catalecticant(DualForm(F)) == 0));
  }
}

TEST_CASE("apolar components of a monomial") {
  const DualForm F = D("y1^2*y2^2");
  CHECK(apolar_component(F, 3) == Subspace::span({P("x^3"), P("y^3")}));
  CHECK(apolar_component(F, 2).dimension() == 0);
  CHECK(apolar_component(F, 5) == Subspace::full(2, 5));
}

TEST_CASE("b_map inverts the associated form") {
  const auto b = b_map(D("y1^2*y2^2"), 4);
  CHECK(b.member());
  CHECK(b.subspace == Subspace::span({P("x^3"), P("y^3")}));

  const auto bad = b_map(D("y1^4 + y2^4"), 4);  // Cat = 0
  CHECK(!bad.member());

  CHECK_THROWS_AS(b_map(D("y1^2*y2^2"), 5), std::invalid_argument);

  Sampler s(24);
  for (int d = 4; d <= 6; ++d)
    for (int k = 0; k < 5; ++k) {
      const auto t = s.hsop_tuple(2, d - 1);
      CHECK(b_map(associated_form_tuple(t), d).subspace == Subspace::span(std::span<const Form>(t)));
    }
  // one ternary instance
  const auto t3 = s.hsop_tuple(3, 2);
  const auto b3 = b_map(associated_form_tuple(t3), 3);
  CHECK(b3.member());
  CHECK(b3.subspace == Subspace::span(std::span<const Form>(t3)));
}

TEST_CASE("associated form of a tuple depends only on the span, up to scale") {
  Sampler s(25);
  for (int k = 0; k < 10; ++k) {
    const auto t = s.hsop_tuple(2, 4);
    const GroupElement g2 = s.group_element(2);
    const FormTuple mixed = act(GroupElement::identity(2), g2, t);
    CHECK(proportional(associated_form_tuple(mixed), associated_form_tuple(t)));
    CHECK(associated_form_tuple(mixed) == g2.det() * associated_form_tuple(t));
  }
  CHECK(proportional(D("y1*y2"), D("-3*y1*y2")));
  CHECK(!proportional(D("y1*y2"), D("y1^2")));
}
