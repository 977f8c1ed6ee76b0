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

// Binary-form primitives. A binary form of degree d is stored with the
// coefficient of x^(d-i) y^i at index i. Roots at [1:0] show up as powers
// of y and are tracked through the y-valuation; everything else is handled
// through the dehomogenization f(x, 1).

#include "assocform/form.hpp"
#include "assocform/univariate.hpp"

#include <vector>

namespace assocform {

/// Largest v with y^v | f; f must be nonzero.
int y_valuation(const Form& f);

/// f(x, 1) as a polynomial in x.
Univariate<Rational> dehomogenize(const Form& f);

/// The binary form y^(degree - deg p) * p(x/y) * y^deg p.
Form homogenize(const Univariate<Rational>& p, int degree);

/// Monic homogeneous gcd; the constant 1 when the inputs are coprime.
Form gcd_binary(const Form& f, const Form& g);

/// q with f = q * g; throws if g does not divide f.
Form exact_quotient(const Form& f, const Form& g);

struct SquarefreeFactor {
  Form factor;  // monic, squarefree, positive degree
  int multiplicity;
};

/// f = unit * prod factor^multiplicity, factors pairwise coprime.
struct SquarefreeDecomposition {
  Rational unit;
  std::vector<SquarefreeFactor> factors;  // increasing multiplicity

  int max_multiplicity() const;
  Form expand() const;
};

SquarefreeDecomposition squarefree_decomposition(const Form& f);

/// The 2m x 2m Sylvester matrix: m rows of shifted f-coefficients above m rows
/// of shifted g-coefficients, coefficients listed from x^m down to y^m. Using
/// all m+1 coefficients makes the determinant vanish exactly when f and g
/// share a projective root, including [1:0].
MatrixQ sylvester_matrix(const Form& f, const Form& g);
Rational sylvester_resultant(const Form& f, const Form& g);

struct DiscriminantCheck {
  bool nonzero;
  Rational resultant;  // Res(f_x, f_y)
};

DiscriminantCheck discriminant_nonzero(const Form& f);

}  // namespace assocform
