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


#include "assocform/binary.hpp"
#include "assocform/parse.hpp"
#include "assocform/quotient.hpp"
#include "assocform/sampling.hpp"
#include "gen.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace assocform;

namespace {
Form P(const char* s, int n = 2) { return parse_form(s, n); }
}  // namespace

TEST_CASE("expected Hilbert function") {
  CHECK(expected_hilbert_function(2, 3) == HilbertFunction{1, 2, 3, 2, 1});
  CHECK(expected_hilbert_function(3, 2) == HilbertFunction{1, 3, 3, 1});
  for (int n = 1; n <= 4; ++n)
    for (int e = 2; e <= 5; ++e) CHECK(expected_hilbert_function(n, e) == oracle::hilbert_series(n, e - 1));
}

TEST_CASE("monomial complete intersections") {
  const auto q = GradedQuotient::build({P("x^3"), P("y^3")});
  CHECK(q.hilbert_function() == HilbertFunction{1, 2, 3, 2, 1});
  CHECK(q.top_degree() == 4);
  CHECK(q.standard_monomials(4) == std::vector<Exponent>{{2, 2}});
  CHECK(q.jacobian_socle_coordinate() == 9);

  const auto q3 = GradedQuotient::build({P("x1^2", 3), P("x2^2", 3), P("x3^2", 3)});
  CHECK(q3.hilbert_function() == HilbertFunction{1, 3, 3, 1});
  CHECK(q3.socle_coordinate(P("x1*x2*x3", 3)) == 1);
  CHECK(q3.socle_coordinate(P("x1^2*x2", 3)) == 0);
}

TEST_CASE("tuples that are not an hsop") {
  try {
    GradedQuotient::build({P("x^2"), P("x*y")});
    FAIL("expected NotHsop");
  } catch (const NotHsop& e) {
    CHECK(e.code() == "not_hsop");
    CHECK(e.actual() > e.expected());
  }
  CHECK_THROWS_AS(GradedQuotient::build({P("x^2"), parse_form("0", 2, Variables::source, 2)}), DegenerateForm);
  CHECK_THROWS_AS(GradedQuotient::build({P("x^2")}), std::invalid_argument);
  CHECK_THROWS_AS(GradedQuotient::build({P("x^2"), P("y^3")}), std::invalid_argument);
  CHECK(!is_hsop({P("x^2 - y^2"), P("x^2 + x*y")}));
  CHECK(is_hsop({P("x^2 + y^2"), P("x*y")}));
}

TEST_CASE("hsop iff nonzero resultant for binary pairs") {
  gen::Gen g(11);
  for (int k = 0; k < 150; ++k) {
    const int e = g.integer(2, 5);
    FormTuple t{g.nonzero_form(2, e), g.nonzero_form(2, e)};
    if (k % 3 == 0) {
      const Form l = g.nonzero_form(2, 1);
      t = {l * g.nonzero_form(2, e - 1), l * g.nonzero_form(2, e - 1)};
    }
    CHECK(is_hsop(t) == (oracle::resultant(t[0], t[1]) != 0));
  }
}

TEST_CASE("normal forms kill the ideal and respect linearity") {
  Sampler s(12);
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k < 15; ++k) {
      const int e = n == 2 ? 3 + k % 3 : 2;
      const auto t = s.hsop_tuple(n, e);
      const auto q = GradedQuotient::build(t);
      CHECK(q.hilbert_function() == oracle::hilbert_series(n, e - 1));
      CHECK(q.jacobian_socle_coordinate() != 0);
      const int j = s.uniform(e, q.top_degree());
      const Form a = s.form(n, j), b = s.form(n, j);
      const Form member = s.form(n, j - e) * t[static_cast<std::size_t>(k % n)];
      CHECK(q.normal_form(member).isZero());
      CHECK(q.normal_form(a + b) == q.normal_form(a) + q.normal_form(b));
      CHECK(q.normal_form(a + member) == q.normal_form(a));
      CHECK(q.ideal_piece(j).rows() == static_cast<Eigen::Index>(monomial_count(n, j) - q.hilbert_function()[static_cast<std::size_t>(j)]));
    }
}

TEST_CASE("socle pairing is perfect") {
  // multiplication H_j x H_(top-j) -> socle is nondegenerate
  Sampler s(13);
  const auto q = GradedQuotient::build(s.hsop_tuple(2, 4));
  for (int j = 0; j <= q.top_degree(); ++j) {
    const auto a = q.standard_monomials(j), b = q.standard_monomials(q.top_degree() - j);
    REQUIRE(a.size() == b.size());
    oracle::Rows m;
    for (const auto& u : a) {
      m.emplace_back();
      for (const auto& v : b)
        m.back().push_back(q.socle_coordinate(Form::monomial(std::span<const int>(u)) * Form::monomial(std::span<const int>(v))));
    }
    CHECK(oracle::det(m) != 0);
  }
}
