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

#include "assocform/sampling.hpp"

#include "assocform/binary.hpp"
#include "assocform/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace assocform {

namespace {

bool proportional_linear(const Form& a, const Form& b) { return a[0] * b[1] - a[1] * b[0] == 0; }

}  // namespace

int Sampler::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

int Sampler::nonzero_coefficient() {
  for (;;) {
    const int c = coefficient();
    if (c != 0) return c;
    ++rejections_;
  }
}

Rational Sampler::nonzero_rational() {
  const int p = nonzero_coefficient();
  const int q = uniform(1, 9);
  return Rational(p, q);
}

Form Sampler::form(int num_vars, int degree) {
  const auto size = static_cast<Eigen::Index>(monomial_count(num_vars, degree));
  VectorQ c(size);
  for (Eigen::Index i = 0; i < size; ++i) c(i) = coefficient();
  return {num_vars, degree, std::move(c)};
}

Form Sampler::nonzero_form(int num_vars, int degree) {
  for (;;) {
    auto f = form(num_vars, degree);
    if (!f.is_zero()) return f;
    ++rejections_;
  }
}

GroupElement Sampler::group_element(int n) {
  for (;;) {
    MatrixQ m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = coefficient();
    if (determinant(m) != 0) return GroupElement(std::move(m));
    ++rejections_;
  }
}

FormTuple Sampler::hsop_tuple(int n, int e) {
  for (;;) {
    FormTuple t;
    for (int i = 0; i < n; ++i) t.push_back(nonzero_form(n, e));
    const bool ok = n == 2 ? sylvester_resultant(t[0], t[1]) != 0 : is_hsop(t);
    if (ok) return t;
    ++rejections_;
  }
}

FormTuple Sampler::pair_with_common_root(int e) {
  const Form l = linear_form();
  return {l * nonzero_form(2, e - 1), l * nonzero_form(2, e - 1)};
}

Form Sampler::nondegenerate_form(int n, int d) {
  for (;;) {
    const Form f = nonzero_form(n, d);
    const bool ok = n == 2 && d >= 3 ? discriminant_nonzero(f).nonzero : is_hsop(gradient(f));
    if (ok) return f;
    ++rejections_;
  }
}

Form Sampler::irreducible_quadratic() {
  for (;;) {
    const int b = coefficient(), c = coefficient();
    if (b * b - 4 * c < 0) return Form::monomial({2, 0}) + Form::monomial({1, 1}, b) + Form::monomial({0, 2}, c);
    ++rejections_;
  }
}

std::pair<Form, Form> Sampler::independent_linear_pair() {
  const Form a = linear_form();
  for (;;) {
    Form b = linear_form();
    if (!proportional_linear(a, b)) return {a, std::move(b)};
    ++rejections_;
  }
}

Form Sampler::form_with_root_multiplicities(int d, int cap) {
  if (cap < 1) throw std::invalid_argument("root multiplicity cap must be positive");
  if (d < 1) throw std::invalid_argument("degree must be positive");
  std::vector<Form> linears, quadratics;
  Form f = Form::constant(2, Rational(nonzero_coefficient()));
  int remaining = d;
  while (remaining > 0) {
    const int e = uniform(1, std::min(cap, remaining));
    if (2 * e <= remaining && uniform(0, 3) == 0) {
      Form q = irreducible_quadratic();
      if (std::find(quadratics.begin(), quadratics.end(), q) != quadratics.end()) {
        ++rejections_;
        continue;
      }
      f = f * power(q, e);
      quadratics.push_back(std::move(q));
      remaining -= 2 * e;
    } else {
      Form l = linear_form();
      if (std::any_of(linears.begin(), linears.end(), [&](const Form& o) { return proportional_linear(o, l); })) {
        ++rejections_;
        continue;
      }
      f = f * power(l, e);
      linears.push_back(std::move(l));
      remaining -= e;
    }
  }
  return f;
}

Form Sampler::split_balanced_form(int d, Form* l1, Form* l2) {
  if (d % 2 != 0) throw std::invalid_argument("balanced forms need even degree");
  auto [a, b] = independent_linear_pair();
  Form f = power(a * b, d / 2);
  if (l1) *l1 = a;
  if (l2) *l2 = b;
  return f;
}

Subspace Sampler::pencil(int m) {
  if (m < 2) throw std::invalid_argument("pencil degree must be at least 2");
  for (;;) {
    Form p, q;
    switch (uniform(0, 5)) {
      case 0:
        p = nonzero_form(2, m);
        q = nonzero_form(2, m);
        break;
      case 1: {  // common factor L^i
        const int i = uniform(1, m - 1);
        const Form li = power(linear_form(), i);
        p = li * nonzero_form(2, m - i);
        q = li * nonzero_form(2, m - i);
        break;
      }
      case 2: {  // a member vanishing to order j
        const int j = uniform(1, m);
        p = power(linear_form(), j) * nonzero_form(2, m - j);
        q = nonzero_form(2, m);
        break;
      }
      case 3: {  // both at the same point
        const int i = uniform(1, m - 1), j = uniform(i + 1, m);
        const Form l = linear_form();
        p = power(l, j) * nonzero_form(2, m - j);
        q = power(l, i) * nonzero_form(2, m - i);
        break;
      }
      case 4: {  // a gradient pencil
        const Form f = form_with_root_multiplicities(m + 1, uniform(1, m));
        p = differentiate(f, 0);
        q = differentiate(f, 1);
        break;
      }
      default: {  // torus type <L1^(m-i) L2^i, L1^i L2^(m-i)>, possibly perturbed
        const int i = uniform(0, (m - 1) / 2);
        auto [l1, l2] = independent_linear_pair();
        p = power(l1, m - i) * power(l2, i);
        q = power(l1, i) * power(l2, m - i);
        if (uniform(0, 1) == 0) q += power(l1, m - i) * power(l2, i) * Rational(coefficient());
        if (uniform(0, 2) == 0) p = power(l1, m - i) * nonzero_form(2, i);
        break;
      }
    }
    auto w = Subspace::span({p, q});
    if (w.dimension() == 2) return w;
    ++rejections_;
  }
}

}  // namespace assocform
