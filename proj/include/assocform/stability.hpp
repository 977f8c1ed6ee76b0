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

// Stability of binary forms and of pencils (2-dimensional subspaces of
// binary forms of degree m) under SL2.
//
// A frame is a change of coordinates g; the one-parameter subgroup it
// selects is rho(t) = diag(t^-1, t) in the coordinates act(g, .), so the
// monomial x^(m-c) y^c has weight m - 2c. For a pencil, k is the first
// nonzero column and l the first column independent of column k in the
// 2 x (m+1) coefficient matrix, and mu = 2(m - k - l). A subspace is
// rho-semistable iff mu >= 0.

#include "assocform/errors.hpp"
#include "assocform/form.hpp"
#include "assocform/group.hpp"
#include "assocform/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace assocform {

class Frame {
 public:
  static constexpr int tau = -1;

  explicit Frame(GroupElement g) : g_(std::move(g)) {
    if (g_.size() != 2) throw std::invalid_argument("frames are 2 x 2");
  }
  static Frame identity() { return Frame(GroupElement::identity(2)); }
  /// The coordinate change taking the linear form to_y to y.
  static Frame sending_to_y(const Form& to_y);
  /// The coordinate change taking to_x to x and to_y to y.
  static Frame sending(const Form& to_x, const Form& to_y);

  const GroupElement& coordinates() const { return g_; }

 private:
  GroupElement g_;
};

struct HmIndex {
  int mu;
  int k;
  int l;  // -1 for the index of a single form
  friend bool operator==(const HmIndex&, const HmIndex&) = default;
};

enum class Verdict { unstable, strictly_semistable, stable };
std::string to_string(Verdict v);

/// Outcome of a stability decision with its supporting data.
///
/// i, j describe the critical points: every form in W vanishes to order i
/// there and some nonzero form to order j (for a single form, i is the
/// maximal root multiplicity and j = 0). The critical points are the roots
/// of `locus`; when there is exactly one it is rational and `point` holds it
/// as a monic linear form, together with a frame moving it to y.
struct StabilityCertificate {
  Verdict verdict = Verdict::stable;
  bool polystable = false;
  int degree = 0;
  int i = 0;
  int j = 0;
  std::optional<Form> locus;
  std::optional<Form> point;
  std::optional<Frame> frame;
  std::optional<HmIndex> index;  // at `frame`
  std::optional<Subspace> limit;  // closed-orbit representative, frame coordinates

  bool semistable() const { return verdict != Verdict::unstable; }
};

/// The pencil spanned by the partials; throws DependentPartials when f is a
/// power of a linear form.
Subspace nabla(const Form& f);

HmIndex hm_index(const Subspace& w, const Frame& frame);

/// For a single binary form of degree d: k = y-valuation in frame
/// coordinates and mu = d - 2k.
HmIndex form_hm_index(const Form& f, const Frame& frame);

StabilityCertificate form_stability(const Form& f);
StabilityCertificate subspace_stability(const Subspace& w);

/// lim rho(t)^-1 W as t -> 0, in frame coordinates: the monomial pencil
/// <x^(m-k) y^k, x^(m-l) y^l>. Throws NotSemistable when mu < 0.
Subspace one_ps_limit(const Subspace& w, const Frame& frame);

class NotSemistable : public DomainError {
 public:
  explicit NotSemistable(const std::string& what) : DomainError("not_semistable", what) {}
};

struct PairPoint {
  Form f1, f2;
};

struct WPrimeResult {
  bool member;
  bool no_minors;  // d = 4: the matrix is 4 x 3, so membership is automatic
  int rank;
  MatrixQ matrix;  // stacked binomially normalized rows, 4 x (d-1)
  std::vector<int> minor_columns;  // first nonzero 4 x 4 minor, when not a member
  Rational minor;
};

WPrimeResult wprime_membership(const PairPoint& p);

/// The binary form act(g, f) for 2 x 2 g, without the general substitution.
Form act_binary(const GroupElement& g, const Form& f);

}  // namespace assocform
