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

#include "assocform/verify.hpp"

#include "assocform/apolarity.hpp"
#include "assocform/binary.hpp"
#include "assocform/parse.hpp"
#include "assocform/quotient.hpp"
#include "assocform/sampling.hpp"
#include "assocform/stability.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace assocform {

namespace {

using Outcome = std::optional<std::string>;  // counterexample, if any
using Trial = std::function<Outcome(Sampler&, int d, int n)>;

constexpr int kFramesPerSemistableTrial = 500;

std::string show(const Form& f) { return format_form(f); }
std::string show(const FormTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + format_form(t[i]);
  return s + ")";
}
std::string show(const Subspace& w) { return "span" + show(w.basis()); }
std::string show(const GroupElement& g) {
  std::string s = "[";
  for (int r = 0; r < g.size(); ++r) {
    s += r ? "; " : "";
    for (int c = 0; c < g.size(); ++c) s += (c ? " " : "") + to_string(g.matrix()(r, c));
  }
  return s + "]";
}

Outcome diagonal(Sampler& s, int d, int n) {
  Form f(n, d);
  Rational prod = 1;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const Rational a = s.nonzero_rational();
    prod *= a;
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    x[static_cast<std::size_t>(i)] = d;
    f += Form::monomial(std::span<const int>(x), a);
    e[static_cast<std::size_t>(i)] = d - 2;
  }
  Rational scale = Rational(factorial(n * (d - 2))) / Rational(boost::multiprecision::pow(factorial(d), static_cast<unsigned>(n)));
  const Form expected = Form::monomial(std::span<const int>(e), scale / prod);
  const Form got = associated_form(f).form();
  if (got == expected) return {};
  return "A(" + show(f) + ") = " + format_form(got, FormatStyle::text, Variables::dual);
}

Outcome hilbert(Sampler& s, int d, int n) {
  const int e = d - 1;
  FormTuple t;
  if (n == 2 && s.uniform(0, 3) == 0) {
    t = s.pair_with_common_root(e);
  } else {
    for (int i = 0; i < n; ++i) t.push_back(s.nonzero_form(n, e));
  }
  std::optional<GradedQuotient> q;
  try {
    q = GradedQuotient::build(t);
  } catch (const NotHsop&) {
  }
  if (n == 2 && q.has_value() != (sylvester_resultant(t[0], t[1]) != 0))
    return "hsop test disagrees with the resultant on " + show(t);
  if (!q) return {};
  const auto hf = q->hilbert_function();
  if (hf != expected_hilbert_function(n, e)) return "Hilbert function mismatch on " + show(t);
  for (std::size_t i = 0; i < hf.size(); ++i)
    if (hf[i] != hf[hf.size() - 1 - i]) return "asymmetric Hilbert function on " + show(t);
  if (q->jacobian_socle_coordinate() == 0) return "jacobian outside the socle on " + show(t);
  const int j = s.uniform(e, q->top_degree() + 1);
  const auto i = static_cast<std::size_t>(s.uniform(0, n - 1));
  const Form h2 = s.form(n, j);
  const Form h = s.form(n, j - e) * t[i] + h2;
  if (q->normal_form(h) != q->normal_form(h2)) return "ideal member with nonzero normal form on " + show(t);
  return {};
}

Outcome inverse_system(Sampler& s, int d, int n) {
  const auto t = s.hsop_tuple(n, d - 1);
  const auto q = GradedQuotient::build(t);
  const DualForm a = associated_form_tuple(q);
  for (const auto& f : t)
    if (!polar_apply(f, a).is_zero()) return "generator not apolar to A on " + show(t);
  for (int j = 0; j <= q.top_degree() + 1; ++j)
    if (!(apolar_component(a, j) == Subspace(n, j, q.ideal_piece(j))))
      return "A-perp differs from the ideal in degree " + std::to_string(j) + " on " + show(t);
  return {};
}

Outcome equivariance(Sampler& s, int d, int n) {
  const Form f = s.nondegenerate_form(n, d);
  const GroupElement g = s.group_element(n);
  const Form gf = act(g, f);
  const Rational det2 = g.det() * g.det();
  if (!(associated_form(gf) == det2 * act(g, associated_form(f))))
    return "A(g f) != det(g)^2 g A(f) for f = " + show(f) + ", g = " + show(g);
  if (gradient(gf) != act(g, g, gradient(f))) return "grad(g f) != (g, g) grad f for f = " + show(f);
  if (!(hessian_det(gf) * det2 == act(g, hessian_det(f))))
    return "g hess(f) != det(g)^2 hess(g f) for f = " + show(f) + ", g = " + show(g);

  const auto t = s.hsop_tuple(n, d - 1);
  const GroupElement g1 = s.group_element(n), g2 = s.group_element(n);
  const DualForm lhs = associated_form_tuple(act(g1, g2, t));
  const DualForm rhs = (g1.det() * g2.det()) * act(g1, associated_form_tuple(t));
  if (!(lhs == rhs)) return "tuple equivariance fails for " + show(t) + ", g1 = " + show(g1) + ", g2 = " + show(g2);
  return {};
}

Outcome catalecticant_suite(Sampler& s, int d, int /*n*/) {
  const auto t = s.hsop_tuple(2, d - 1);
  if (catalecticant(associated_form_tuple(t)) == 0) return "Cat(A) = 0 for " + show(t);
  return {};
}

Outcome roundtrip(Sampler& s, int d, int n) {
  const auto t = s.hsop_tuple(n, d - 1);
  const Subspace w = Subspace::span(std::span<const Form>(t));
  const DualForm a = associated_form_tuple(t);
  const auto b = b_map(a, d);
  if (!b.member() || !(b.subspace == w)) return "B(A(W)) != W for W = " + show(w);
  if (n != 2) return {};

  for (;;) {
    const DualForm f = a + DualForm(s.form(2, a.degree()) * Rational(1, s.uniform(1, 9)));
    if (f.is_zero() || catalecticant(f) == 0) continue;
    const auto bf = b_map(f, d);
    if (!bf.member()) return "Cat != 0 but B(F) outside the resultant locus for F = " + show(f.form());
    if (!proportional(associated_form_tuple(bf.subspace.basis()), f))
      return "A(B(F)) not proportional to F = " + show(f.form());
    return {};
  }
}

Outcome stability(Sampler& s, int d, int /*n*/) {
  const int m = d - 1;
  const Subspace w = s.pencil(m);
  const auto c = subspace_stability(w);
  if (c.verdict == Verdict::unstable) {
    if (c.i + c.j <= m) return "unstable verdict without i + j > m for " + show(w);
    if (!c.frame || !c.index || c.index->mu >= 0 || hm_index(w, *c.frame).mu != 2 * (m - c.i - c.j))
      return "unstable verdict without a destabilizing frame for " + show(w);
    return {};
  }
  for (int k = 0; k < kFramesPerSemistableTrial; ++k) {
    const Frame frame(s.group_element(2));
    if (hm_index(w, frame).mu < 0)
      return "semistable verdict refuted by frame " + show(frame.coordinates()) + " for " + show(w);
  }
  if (c.verdict == Verdict::strictly_semistable) {
    const auto target = Subspace::span({Form::monomial({m - c.i, c.i}), Form::monomial({c.i, m - c.i})});
    if (!c.limit || !(*c.limit == target)) return "limit is not the closed-orbit representative for " + show(w);
  }
  return {};
}

Outcome nabla_stability(Sampler& s, int d, int /*n*/) {
  const Form f = s.semistable_form(d);
  if (!subspace_stability(nabla(f)).semistable()) return "nabla(f) unstable for semistable f = " + show(f);

  if (d % 2 == 0 && s.uniform(0, 1) == 0) {
    Form l1, l2;
    const Form p = s.split_balanced_form(d, &l1, &l2);
    const Subspace w = nabla(p);
    if (!subspace_stability(w).polystable) return "nabla(f) not polystable for f = " + show(p);
    const auto target =
        Subspace::span({Form::monomial({d / 2 - 1, d / 2}), Form::monomial({d / 2, d / 2 - 1})});
    if (!(one_ps_limit(w, Frame::sending_to_y(l1)) == target)) return "limit of nabla(f) is off for f = " + show(p);
  } else {
    const Form p = s.stable_form(d);
    if (!subspace_stability(nabla(p)).polystable) return "nabla(f) not polystable for stable f = " + show(p);
  }

  // per-frame: f is rho-semistable iff nabla(f) is
  for (;;) {
    const Form l = s.linear_form();
    const int k = s.uniform(0, d - 1);
    const Form h = power(l, k) * s.nonzero_form(2, d - k);
    Subspace w(2, d - 1);
    try {
      w = nabla(h);
    } catch (const DependentPartials&) {
      continue;
    }
    const Frame frame = s.uniform(0, 1) == 0 ? Frame::sending_to_y(l) : Frame(s.group_element(2));
    if ((form_hm_index(h, frame).mu >= 0) != (hm_index(w, frame).mu >= 0))
      return "per-frame semistability differs for f = " + show(h) + ", frame " + show(frame.coordinates());
    return {};
  }
}

Outcome wprime(Sampler& s, int d, int /*n*/) {
  const Form f = s.nonzero_form(2, d);
  const FormTuple g = gradient(f);
  if (!wprime_membership({g[0], g[1]}).member) return "gradient pair outside W' for f = " + show(f);
  const auto moved = act(s.group_element(2), s.group_element(2), g);
  if (!wprime_membership({moved[0], moved[1]}).member) return "translated gradient pair outside W' for " + show(moved);
  return {};
}

struct Suite {
  Trial trial;
  int min_d;
  bool binary_only;
};

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> r{
      {"diagonal", {diagonal, 3, false}},
      {"hilbert", {hilbert, 3, false}},
      {"inverse-system", {inverse_system, 3, false}},
      {"equivariance", {equivariance, 3, false}},
      {"catalecticant", {catalecticant_suite, 3, true}},
      {"roundtrip", {roundtrip, 3, false}},
      {"stability", {stability, 3, true}},
      {"nabla-stability", {nabla_stability, 3, true}},
      {"wprime", {wprime, 4, true}},
  };
  return r;
}

std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite, int d, int n) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char ch : suite) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return seed * 0x9E3779B97F4A7C15ULL ^ h ^ (static_cast<std::uint64_t>(d) << 8) ^ static_cast<std::uint64_t>(n);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"diagonal",  "hilbert",   "inverse-system",  "equivariance", "catalecticant",
                                              "roundtrip", "stability", "nabla-stability", "wprime"};
  return names;
}

SuiteReport run_suite(const std::string& suite, int d, int trials, std::uint64_t seed, int n) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  const Suite& entry = it->second;
  if (trials < 0) throw std::invalid_argument("trials must be nonnegative");
  if (n < 2 || (entry.binary_only && n != 2))
    throw std::invalid_argument("suite " + suite + (entry.binary_only ? " needs n = 2" : " needs n >= 2"));
  if (d < entry.min_d) throw std::invalid_argument("suite " + suite + " needs d >= " + std::to_string(entry.min_d));

  SuiteReport report;
  report.suite = suite;
  report.d = d;
  report.n = n;
  report.trials = trials;
  Sampler sampler(suite_seed(seed, suite, d, n));
  for (int k = 0; k < trials; ++k) {
    Outcome out;
    try {
      out = entry.trial(sampler, d, n);
    } catch (const std::exception& e) {
      out = std::string("exception: ") + e.what();
    }
    if (out) {
      ++report.failed;
      if (!report.first_counterexample) report.first_counterexample = *out;
    } else {
      ++report.passed;
    }
  }
  report.rejections = sampler.rejections();
  return report;
}

}  // namespace assocform
