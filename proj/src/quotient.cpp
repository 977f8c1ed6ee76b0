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

#include "assocform/quotient.hpp"

#include <stdexcept>
#include <string>

namespace assocform {

namespace {

void validate_tuple(const FormTuple& t) {
  if (t.empty()) throw std::invalid_argument("empty tuple");
  const int n = t.front().num_vars();
  if (static_cast<int>(t.size()) != n)
    throw std::invalid_argument("tuple length " + std::to_string(t.size()) + " must equal the number of variables " +
                                std::to_string(n));
  for (const auto& f : t) {
    if (f.num_vars() != n || f.degree() != t.front().degree())
      throw std::invalid_argument("tuple entries must share variables and degree");
  }
  if (t.front().degree() < 2) throw std::invalid_argument("generators must have degree >= 2");
  for (const auto& f : t)
    if (f.is_zero()) throw DegenerateForm("tuple has a zero entry");
}

}  // namespace

HilbertFunction expected_hilbert_function(int num_vars, int generator_degree) {
  HilbertFunction h{1};
  for (int k = 0; k < num_vars; ++k) {
    HilbertFunction next(h.size() + static_cast<std::size_t>(generator_degree - 1), 0);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (int s = 0; s < generator_degree; ++s) next[i + static_cast<std::size_t>(s)] += h[i];
    h = std::move(next);
  }
  return h;
}

MatrixQ ideal_piece(const FormTuple& generators, int j) {
  const int n = generators.front().num_vars();
  const int e = generators.front().degree();
  const auto cols = static_cast<Eigen::Index>(monomial_count(n, j));
  if (j < e) return MatrixQ(0, cols);
  const auto multipliers = monomials(n, j - e);
  MatrixQ span(static_cast<Eigen::Index>(multipliers.size() * generators.size()), cols);
  Eigen::Index r = 0;
  for (const auto& f : generators) {
    for (const auto& m : multipliers) {
      span.row(r++) = (Form::monomial(std::span<const int>(m)) * f).coefficients().transpose();
    }
  }
  return rref(span).rows;
}

GradedQuotient GradedQuotient::build(const FormTuple& generators) {
  validate_tuple(generators);
  GradedQuotient q;
  q.num_vars_ = generators.front().num_vars();
  q.generator_degree_ = generators.front().degree();
  q.top_degree_ = q.num_vars_ * (q.generator_degree_ - 1);
  q.generators_ = generators;
  const auto target = expected_hilbert_function(q.num_vars_, q.generator_degree_);

  for (int j = 0; j <= q.top_degree_ + 1; ++j) {
    const auto e = rref(assocform::ideal_piece(generators, j));
    const auto cols = static_cast<Eigen::Index>(monomial_count(q.num_vars_, j));
    Piece p;
    p.ideal = e.rows;
    std::vector<Eigen::Index> pivot_row(static_cast<std::size_t>(cols), -1);
    for (Eigen::Index r = 0; r < e.rank(); ++r) pivot_row[static_cast<std::size_t>(e.pivots[static_cast<std::size_t>(r)])] = r;
    for (Eigen::Index c = 0; c < cols; ++c)
      if (pivot_row[static_cast<std::size_t>(c)] < 0) p.standard.push_back(c);

    const std::size_t expected = j <= q.top_degree_ ? target[static_cast<std::size_t>(j)] : 0;
    if (p.standard.size() != expected) throw NotHsop(j, expected, p.standard.size());

    // pivot monomial m_c = -sum_s R(r, s) m_s modulo the ideal
    const auto nstd = static_cast<Eigen::Index>(p.standard.size());
    p.reduction = MatrixQ::Zero(cols, nstd);
    for (Eigen::Index s = 0; s < nstd; ++s) p.reduction(p.standard[static_cast<std::size_t>(s)], s) = 1;
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto r = pivot_row[static_cast<std::size_t>(c)];
      if (r < 0) continue;
      for (Eigen::Index s = 0; s < nstd; ++s) p.reduction(c, s) = -e.rows(r, p.standard[static_cast<std::size_t>(s)]);
    }
    q.pieces_.push_back(std::move(p));
  }

  q.jac_coordinate_ = q.socle_coordinate(jacobian_det(generators));
  if (q.jac_coordinate_ == 0) throw std::logic_error("jacobian does not generate the socle");
  return q;
}

const GradedQuotient::Piece& GradedQuotient::piece(int j) const {
  if (j < 0 || j > top_degree_ + 1) throw std::out_of_range("degree outside the computed range");
  return pieces_[static_cast<std::size_t>(j)];
}

HilbertFunction GradedQuotient::hilbert_function() const {
  HilbertFunction h;
  for (int j = 0; j <= top_degree_; ++j) h.push_back(piece(j).standard.size());
  return h;
}

std::vector<Exponent> GradedQuotient::standard_monomials(int j) const {
  const auto all = monomials(num_vars_, j);
  std::vector<Exponent> out;
  for (auto c : piece(j).standard) out.push_back(all[static_cast<std::size_t>(c)]);
  return out;
}

VectorQ GradedQuotient::normal_form(const Form& h) const {
  if (h.num_vars() != num_vars_) throw std::invalid_argument("form has the wrong number of variables");
  const auto& p = piece(h.degree());
  return p.reduction.transpose() * h.coefficients();
}

Rational GradedQuotient::socle_coordinate(const Form& h) const {
  if (h.degree() != top_degree_) throw std::invalid_argument("socle coordinate needs a form of the top degree");
  return normal_form(h)(0);
}

const MatrixQ& GradedQuotient::ideal_piece(int j) const { return piece(j).ideal; }

bool is_hsop(const FormTuple& generators) {
  try {
    GradedQuotient::build(generators);
    return true;
  } catch (const NotHsop&) {
    return false;
  } catch (const DegenerateForm&) {
    return false;
  }
}

}  // namespace assocform
