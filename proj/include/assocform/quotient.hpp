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
#include "assocform/linalg.hpp"

#include <cstddef>
#include <vector>

namespace assocform {

using HilbertFunction = std::vector<std::size_t>;

/// Coefficients of (1 + t + ... + t^(generator_degree-1))^num_vars, the
/// Hilbert function of a complete intersection of num_vars forms of degree
/// generator_degree.
HilbertFunction expected_hilbert_function(int num_vars, int generator_degree);

/// The graded algebra O(V)/(f_1, ..., f_n) for n forms of a common degree e
/// in n variables, built degree by degree through top_degree + 1 where
/// top_degree = n(e-1). Construction succeeds only when the tuple is a
/// homogeneous system of parameters; otherwise NotHsop reports the first
/// degree whose quotient dimension disagrees with the complete-intersection
/// prediction.
class GradedQuotient {
 public:
  static GradedQuotient build(const FormTuple& generators);

  int num_vars() const { return num_vars_; }
  int generator_degree() const { return generator_degree_; }
  int top_degree() const { return top_degree_; }
  const FormTuple& generators() const { return generators_; }

  HilbertFunction hilbert_function() const;

  /// Standard monomials (quotient basis) of degree j.
  std::vector<Exponent> standard_monomials(int j) const;

  /// Coordinates of the image of h over the standard monomials of deg h.
  VectorQ normal_form(const Form& h) const;

  /// The coordinate of h (of degree top_degree) on the one-dimensional socle.
  Rational socle_coordinate(const Form& h) const;

  /// socle_coordinate(jac(f)), nonzero for every built quotient.
  const Rational& jacobian_socle_coordinate() const { return jac_coordinate_; }

  /// RREF basis of the ideal's degree-j piece (rows over graded-lex monomials).
  const MatrixQ& ideal_piece(int j) const;

  /// Row i holds the normal form of the i-th degree-j monomial.
  const MatrixQ& reduction(int j) const { return piece(j).reduction; }

 private:
  struct Piece {
    std::vector<Eigen::Index> standard;  // non-pivot monomial indices
    MatrixQ ideal;                       // RREF rows spanning I_j
    MatrixQ reduction;                   // monomials x standard: normal form of each monomial
  };

  GradedQuotient() = default;
  const Piece& piece(int j) const;

  int num_vars_ = 0;
  int generator_degree_ = 0;
  int top_degree_ = 0;
  FormTuple generators_;
  std::vector<Piece> pieces_;
  Rational jac_coordinate_;
};

/// Degree-j piece of the ideal generated by a tuple, as RREF rows; no hsop
/// requirement.
MatrixQ ideal_piece(const FormTuple& generators, int j);

bool is_hsop(const FormTuple& generators);

}  // namespace assocform
