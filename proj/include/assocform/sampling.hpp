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

// Seeded random constructions. Integer coefficients are drawn from
// [-9, 9]; degenerate draws are rejected and counted. Draws are reduced
// from raw mt19937_64 output, so a seed gives the same stream with every
// standard library.

#include "assocform/form.hpp"
#include "assocform/group.hpp"
#include "assocform/subspace.hpp"

#include <cstdint>
#include <random>

namespace assocform {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  int coefficient() { return uniform(-9, 9); }
  int nonzero_coefficient();
  /// p/q with p in [-9, 9] \ {0}, q in [1, 9].
  Rational nonzero_rational();

  Form form(int num_vars, int degree);
  Form nonzero_form(int num_vars, int degree);
  Form linear_form() { return nonzero_form(2, 1); }

  GroupElement group_element(int n);

  /// n forms of degree e forming an hsop (resultant test for n = 2,
  /// quotient dimensions otherwise).
  FormTuple hsop_tuple(int n, int e);
  /// A binary pair of degree e sharing a linear factor.
  FormTuple pair_with_common_root(int e);
  /// A form of degree d whose gradient is an hsop.
  Form nondegenerate_form(int n, int d);

  /// Binary forms assembled from pairwise coprime root data: rational
  /// linear factors and irreducible quadratics, with every root
  /// multiplicity at most `cap`.
  Form form_with_root_multiplicities(int d, int cap);
  /// All root multiplicities <= d/2.
  Form semistable_form(int d) { return form_with_root_multiplicities(d, d / 2); }
  /// All root multiplicities < d/2.
  Form stable_form(int d) { return form_with_root_multiplicities(d, (d - 1) / 2); }
  /// (L1 L2)^(d/2) for distinct random L1, L2; d even.
  Form split_balanced_form(int d, Form* l1 = nullptr, Form* l2 = nullptr);

  /// Two linear forms that are not proportional.
  std::pair<Form, Form> independent_linear_pair();

  /// A 2-dimensional pencil of degree-m forms, mixing generic draws with
  /// planted common factors and high-order vanishing.
  Subspace pencil(int m);

  std::size_t rejections() const { return rejections_; }

 private:
  Form irreducible_quadratic();

  std::mt19937_64 rng_;
  std::size_t rejections_ = 0;
};

}  // namespace assocform
