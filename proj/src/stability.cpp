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

#include "assocform/stability.hpp"

#include "assocform/binary.hpp"
#include "assocform/linalg.hpp"

#include <stdexcept>

namespace assocform {

namespace {

using Poly = Univariate<Rational>;
template <typename Scalar>
std::vector<Scalar> convolve(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> r(a.size() + b.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// f(a x + b y, c x + d y) on coefficient vectors indexed by the y-exponent.
template <typename Scalar>
std::vector<Scalar> substitute_binary(const std::vector<Scalar>& f, const Scalar& a, const Scalar& b,
                                      const Scalar& c, const Scalar& d) {
  const std::size_t m = f.size() - 1;
  std::vector<std::vector<Scalar>> px{{Scalar(1)}}, py{{Scalar(1)}};
  const std::vector<Scalar> lx{a, b}, ly{c, d};
  for (std::size_t k = 1; k <= m; ++k) {
    px.push_back(convolve(px.back(), lx));
    py.push_back(convolve(py.back(), ly));
  }
  std::vector<Scalar> out(m + 1, Scalar(0));
  for (std::size_t e = 0; e <= m; ++e) {
    if (f[e] == 0) continue;
    const auto term = convolve(px[m - e], py[e]);
    for (std::size_t i = 0; i <= m; ++i) out[i] += f[e] * term[i];
  }
  return out;
}

// Integer multiple of a rational vector.
template <typename Range>
std::vector<Integer> clear_denominators(const Range& v) {
  Integer l = 1;
  for (const Rational& q : v) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(q)));
  std::vector<Integer> out;
  for (const Rational& q : v) out.push_back(Integer(boost::multiprecision::numerator(q)) * (l / Integer(boost::multiprecision::denominator(q))));
  return out;
}

void require_pencil(const Subspace& w) {
  if (w.num_vars() != 2) throw std::invalid_argument("stability is implemented for binary forms");
  if (w.dimension() != 2) throw DimensionError("expected a 2-dimensional subspace, got dimension " +
                                               std::to_string(w.dimension()));
}

void require_linear(const Form& l) {
  if (l.num_vars() != 2 || l.degree() != 1 || l.is_zero()) throw std::invalid_argument("expected a nonzero binary linear form");
}

Form monic(const Form& f) { return f * (Rational(1) / f.leading_coefficient()); }

Poly squarefree_part(const Poly& p) {
  if (p.degree() < 1) return p.monic();
  return exact_div(p.monic(), gcd(p, p.derivative()));
}

struct Critical {
  int score = 0;
  int i = 0, j = 0;
  Poly locus;  // squarefree, roots are the critical points (finite chart)
};

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::unstable:
      return "unstable";
    case Verdict::strictly_semistable:
      return "strictly_semistable";
    case Verdict::stable:
      return "stable";
  }
  return "unknown";
}

Frame Frame::sending_to_y(const Form& to_y) {
  require_linear(to_y);
  const Rational &a = to_y[0], &b = to_y[1];
  MatrixQ g(2, 2);
  if (a != 0) {
    g << 0, 1, a, b;
  } else {
    g << 1, 0, 0, b;
  }
  return Frame(GroupElement(std::move(g)));
}

Frame Frame::sending(const Form& to_x, const Form& to_y) {
  require_linear(to_x);
  require_linear(to_y);
  MatrixQ g(2, 2);
  g << to_x[0], to_x[1], to_y[0], to_y[1];
  if (determinant(g) == 0) throw std::invalid_argument("linear forms are proportional");
  return Frame(GroupElement(std::move(g)));
}

Form act_binary(const GroupElement& g, const Form& f) {
  if (g.size() != 2 || f.num_vars() != 2) throw std::invalid_argument("act_binary needs binary data");
  const MatrixQ inv = inverse(g.matrix());
  const auto c = substitute_binary<Rational>(std::vector<Rational>(f.coefficients().begin(), f.coefficients().end()),
                                             inv(0, 0), inv(0, 1), inv(1, 0), inv(1, 1));
  VectorQ out(f.degree() + 1);
  for (int i = 0; i <= f.degree(); ++i) out(i) = c[static_cast<std::size_t>(i)];
  return {2, f.degree(), std::move(out)};
}

Subspace nabla(const Form& f) {
  if (f.num_vars() != 2) throw std::invalid_argument("nabla is defined for binary forms");
  if (f.degree() < 1) throw std::invalid_argument("nabla needs degree >= 1");
  const auto w = Subspace::span({differentiate(f, 0), differentiate(f, 1)});
  if (w.dimension() != 2) throw DependentPartials();
  return w;
}

HmIndex hm_index(const Subspace& w, const Frame& frame) {
  require_pencil(w);
  const int m = w.degree();
  // Acting by the adjugate of an integral multiple of the frame instead of
  // its inverse rescales each form, which changes neither k nor l. The same
  // holds for the binomial normalization, which rescales whole columns.
  const MatrixQ& g = frame.coordinates().matrix();
  const auto gi = clear_denominators(std::vector<Rational>{g(0, 0), g(0, 1), g(1, 0), g(1, 1)});
  const Integer a = gi[3], b = -gi[1], c = -gi[2], d = gi[0];
  std::vector<std::vector<Integer>> rows;
  for (int r = 0; r < 2; ++r) {
    const auto& v = w.rows().row(r);
    rows.push_back(substitute_binary<Integer>(clear_denominators(std::vector<Rational>(v.begin(), v.end())), a, b, c, d));
  }
  int k = -1;
  for (int col = 0; col <= m && k < 0; ++col)
    if (rows[0][static_cast<std::size_t>(col)] != 0 || rows[1][static_cast<std::size_t>(col)] != 0) k = col;
  const auto ku = static_cast<std::size_t>(k);
  for (int col = k + 1; col <= m; ++col) {
    const auto cu = static_cast<std::size_t>(col);
    if (rows[0][ku] * rows[1][cu] - rows[0][cu] * rows[1][ku] != 0) return {2 * (m - k - col), k, col};
  }
  throw std::logic_error("pencil basis is dependent");
}

HmIndex form_hm_index(const Form& f, const Frame& frame) {
  if (f.num_vars() != 2 || f.is_zero()) throw std::invalid_argument("expected a nonzero binary form");
  const int v = y_valuation(act_binary(frame.coordinates(), f));
  return {f.degree() - 2 * v, v, -1};
}

Subspace one_ps_limit(const Subspace& w, const Frame& frame) {
  const auto idx = hm_index(w, frame);
  if (idx.mu < 0)
    throw NotSemistable("subspace is unstable for this frame (mu = " + std::to_string(idx.mu) + ")");
  const int m = w.degree();
  return Subspace::span({Form::monomial({m - idx.k, idx.k}), Form::monomial({m - idx.l, idx.l})});
}

StabilityCertificate form_stability(const Form& f) {
  if (f.num_vars() != 2) throw std::invalid_argument("stability is implemented for binary forms");
  if (f.is_zero()) throw std::invalid_argument("stability of the zero form");
  if (f.degree() < 1) throw std::invalid_argument("stability needs degree >= 1");
  const int d = f.degree();
  const auto sq = squarefree_decomposition(f);
  const auto& top = sq.factors.back();

  StabilityCertificate c;
  c.degree = d;
  c.i = top.multiplicity;
  c.locus = top.factor;
  if (2 * c.i > d) {
    c.verdict = Verdict::unstable;
  } else if (2 * c.i == d) {
    c.verdict = Verdict::strictly_semistable;
  } else {
    c.verdict = Verdict::stable;
  }
  c.polystable = c.verdict == Verdict::stable ||
                 (c.verdict == Verdict::strictly_semistable && sq.factors.size() == 1 && top.factor.degree() == 2);
  if (top.factor.degree() == 1) {
    c.point = top.factor;
    c.frame = Frame::sending_to_y(top.factor);
    c.index = form_hm_index(f, *c.frame);
  }
  return c;
}

StabilityCertificate subspace_stability(const Subspace& w) {
  require_pencil(w);
  const int m = w.degree();
  StabilityCertificate cert;
  cert.degree = m;

  if (m == 1) {
    // the whole space of linear forms: the closed orbit <y, x> with i = 0
    cert.verdict = Verdict::strictly_semistable;
    cert.polystable = true;
    cert.i = 0;
    cert.j = 1;
    cert.frame = Frame::identity();
    cert.index = hm_index(w, *cert.frame);
    cert.limit = w;
    return cert;
  }

  // Shear coordinates until [1:0] is a generic point (no common root, and
  // no member vanishing there to order 2). Each shear moves a different
  // point to infinity and only finitely many points are special.
  std::optional<GroupElement> shear;
  Form f1, f2;
  for (int s = 0;; ++s) {
    MatrixQ g(2, 2);
    g << 1, 0, s, 1;
    GroupElement ge(std::move(g));
    const auto moved = act(ge, w);
    if (moved.pivots()[0] == 0 && moved.pivots()[1] == 1) {
      f1 = moved.basis_form(0);
      f2 = moved.basis_form(1);
      shear = std::move(ge);
      break;
    }
  }

  // strata of the common factor, keyed by vanishing order
  std::vector<std::pair<Poly, int>> strata;
  const Form common = gcd_binary(f1, f2);
  if (common.degree() > 0) {
    for (const auto& s : squarefree_decomposition(common).factors)
      strata.emplace_back(dehomogenize(s.factor), s.multiplicity);
  }

  // derivatives of the dehomogenized basis
  std::vector<Poly> d1{dehomogenize(f1)}, d2{dehomogenize(f2)};
  for (int k = 1; k < m; ++k) {
    d1.push_back(d1.back().derivative());
    d2.push_back(d2.back().derivative());
  }

  // points with some member vanishing to order >= 1 are all points; the
  // i = 0, j = 1 candidate is always there.
  Critical best{1, 0, 1, Poly()};
  auto consider = [&](int i, int j, const Poly& locus) {
    if (i + j > best.score) best = {i + j, i, j, squarefree_part(locus)};
  };
  for (const auto& [s, i] : strata) consider(i, 1, s);

  Poly jet;  // P_j: common zeros of the minors D_{k,l}, k < l < j
  for (int j = 2; j <= m; ++j) {
    const int l = j - 1;
    for (int k = 0; k < l; ++k) {
      const Poly minor = d1[static_cast<std::size_t>(k)] * d2[static_cast<std::size_t>(l)] -
                         d1[static_cast<std::size_t>(l)] * d2[static_cast<std::size_t>(k)];
      jet = gcd(jet, minor);
    }
    if (jet.degree() < 1) break;  // empty locus; it only shrinks with j
    consider(0, j, jet);
    for (const auto& [s, i] : strata) {
      const Poly g = gcd(s, jet);
      if (g.degree() >= 1) consider(i, j, g);
    }
  }

  cert.i = best.i;
  cert.j = best.j;
  if (best.score > m) {
    cert.verdict = Verdict::unstable;
  } else if (best.score == m) {
    cert.verdict = Verdict::strictly_semistable;
  } else {
    cert.verdict = Verdict::stable;
  }

  // Two distinct critical points of score m force W into the orbit of
  // <x^i y^(m-i), x^(m-i) y^i>; one critical point leaves it outside.
  const int critical_points = best.locus.degree();
  cert.polystable = cert.verdict == Verdict::stable ||
                    (cert.verdict == Verdict::strictly_semistable && critical_points >= 2);

  if (critical_points >= 1) {
    const GroupElement back = shear->inverse();
    cert.locus = monic(act(back, homogenize(best.locus, best.locus.degree())));
    if (critical_points == 1) {
      cert.point = cert.locus;
      cert.frame = Frame::sending_to_y(*cert.point);
      cert.index = hm_index(w, *cert.frame);
      if (cert.verdict != Verdict::stable && cert.index->mu != 2 * (m - cert.i - cert.j))
        throw std::logic_error("frame witness disagrees with the critical pair");
      if (cert.verdict == Verdict::strictly_semistable) cert.limit = one_ps_limit(w, *cert.frame);
    }
  }
  if (cert.verdict == Verdict::strictly_semistable && cert.polystable && !cert.limit) {
    // W already lies on the closed orbit; report the torus-fixed representative
    cert.limit = Subspace::span({Form::monomial({m - cert.i, cert.i}), Form::monomial({cert.i, m - cert.i})});
  }
  return cert;
}

WPrimeResult wprime_membership(const PairPoint& p) {
  const Form &f1 = p.f1, &f2 = p.f2;
  if (f1.num_vars() != 2 || f2.num_vars() != 2) throw std::invalid_argument("expected binary forms");
  if (f1.degree() != f2.degree()) throw std::invalid_argument("pair entries must have equal degree");
  const int m = f1.degree();
  if (m < 3) throw std::invalid_argument("pair entries need degree d-1 >= 3");

  WPrimeResult r;
  r.matrix = MatrixQ(4, m);
  for (int c = 0; c < m; ++c) {
    const Rational b0(binomial(m, c)), b1(binomial(m, c + 1));
    r.matrix(0, c) = f1[c] / b0;
    r.matrix(1, c) = f1[c + 1] / b1;
    r.matrix(2, c) = f2[c] / b0;
    r.matrix(3, c) = f2[c + 1] / b1;
  }
  r.rank = static_cast<int>(rank(r.matrix));
  r.no_minors = m == 3;
  r.member = r.rank <= 3;
  r.minor = 0;
  if (!r.member) {
    std::vector<int> cols{0, 1, 2, 3};
    for (;;) {
      MatrixQ sub(4, 4);
      for (int q = 0; q < 4; ++q) sub.col(q) = r.matrix.col(cols[static_cast<std::size_t>(q)]);
      const Rational det = determinant(sub);
      if (det != 0) {
        r.minor_columns = cols;
        r.minor = det;
        break;
      }
      // next 4-subset of {0..m-1} in lexicographic order
      int q = 3;
      while (q >= 0 && cols[static_cast<std::size_t>(q)] == m - 4 + q) --q;
      if (q < 0) throw std::logic_error("rank 4 matrix without a nonzero 4 x 4 minor");
      ++cols[static_cast<std::size_t>(q)];
      for (int t = q + 1; t < 4; ++t) cols[static_cast<std::size_t>(t)] = cols[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return r;
}

}  // namespace assocform
