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

#include "assocform/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace assocform {

namespace {

void require_binary(const Form& f) {
  if (f.num_vars() != 2) throw std::invalid_argument("binary form expected");
}

Form y_power(int k) { return Form::monomial({0, k}); }

}  // namespace

int y_valuation(const Form& f) {
  require_binary(f);
  const auto i = f.leading_index();
  if (i < 0) throw std::invalid_argument("valuation of the zero form");
  return static_cast<int>(i);
}

Univariate<Rational> dehomogenize(const Form& f) {
  require_binary(f);
  const int d = f.degree();
  std::vector<Rational> c(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) c[static_cast<std::size_t>(k)] = f[d - k];
  return Univariate<Rational>(std::move(c));
}

Form homogenize(const Univariate<Rational>& p, int degree) {
  if (p.degree() > degree) throw std::invalid_argument("homogenization degree too small");
  Vector<Rational> c = Vector<Rational>::Zero(degree + 1);
  for (int k = 0; k <= p.degree(); ++k) c(degree - k) = p[k];
  return {2, degree, std::move(c)};
}

Form gcd_binary(const Form& f, const Form& g) {
  require_binary(f);
  require_binary(g);
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero forms");
  int v;
  if (f.is_zero()) {
    v = y_valuation(g);
  } else if (g.is_zero()) {
    v = y_valuation(f);
  } else {
    v = std::min(y_valuation(f), y_valuation(g));
  }
  const auto p = gcd(dehomogenize(f), dehomogenize(g));
  return homogenize(p, p.degree()) * y_power(v);
}

Form exact_quotient(const Form& f, const Form& g) {
  require_binary(f);
  require_binary(g);
  if (g.is_zero()) throw std::domain_error("division by the zero form");
  if (g.degree() > f.degree()) throw std::domain_error("inexact form division");
  if (f.is_zero()) return Form(2, f.degree() - g.degree());
  const int vf = y_valuation(f), vg = y_valuation(g);
  if (vg > vf) throw std::domain_error("inexact form division");
  const auto q = exact_div(dehomogenize(f), dehomogenize(g));
  const int qdeg = f.degree() - g.degree();
  return homogenize(q, q.degree()) * y_power(qdeg - q.degree());
}

int SquarefreeDecomposition::max_multiplicity() const {
  int m = 0;
  for (const auto& s : factors) m = std::max(m, s.multiplicity);
  return m;
}

Form SquarefreeDecomposition::expand() const {
  auto r = Form::constant(2, unit);
  for (const auto& s : factors) r = r * power(s.factor, s.multiplicity);
  return r;
}

SquarefreeDecomposition squarefree_decomposition(const Form& f) {
  require_binary(f);
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero form");
  const int v = y_valuation(f);
  const auto p = dehomogenize(f);
  SquarefreeDecomposition out{p.lead(), {}};

  // Yun's algorithm on the monic dehomogenization
  std::vector<std::pair<Univariate<Rational>, int>> parts;
  if (p.degree() > 0) {
    const auto q = p.monic();
    const auto dq = q.derivative();
    const auto b = gcd(q, dq);
    auto c = exact_div(q, b);
    auto d = exact_div(dq, b) - c.derivative();
    for (int e = 1; c.degree() > 0; ++e) {
      const auto a = gcd(c, d);
      if (a.degree() > 0) parts.emplace_back(a, e);
      c = exact_div(c, a);
      d = exact_div(d, a) - c.derivative();
    }
  }

  bool placed_y = (v == 0);
  for (auto& [a, e] : parts) {
    Form s = homogenize(a, a.degree());
    if (e == v) {
      s = s * y_power(1);
      placed_y = true;
    }
    out.factors.push_back({std::move(s), e});
  }
  if (!placed_y) out.factors.push_back({y_power(1), v});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const SquarefreeFactor& a, const SquarefreeFactor& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

MatrixQ sylvester_matrix(const Form& f, const Form& g) {
  require_binary(f);
  require_binary(g);
  if (f.degree() != g.degree()) throw std::invalid_argument("resultant needs forms of equal degree");
  const int m = f.degree();
  MatrixQ s = MatrixQ::Zero(2 * m, 2 * m);
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= m; ++i) {
      s(r, r + i) = f[i];
      s(m + r, r + i) = g[i];
    }
  }
  return s;
}

Rational sylvester_resultant(const Form& f, const Form& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero form");
  return determinant(sylvester_matrix(f, g));
}

DiscriminantCheck discriminant_nonzero(const Form& f) {
  require_binary(f);
  if (f.degree() < 3) throw std::invalid_argument("discriminant check needs degree >= 3");
  const Form fx = differentiate(f, 0), fy = differentiate(f, 1);
  if (fx.is_zero() || fy.is_zero()) return {false, Rational(0)};
  const Rational r = sylvester_resultant(fx, fy);
  return {r != 0, r};
}

}  // namespace assocform
