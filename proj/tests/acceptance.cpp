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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Reference values come from oracle.hpp or closed forms.

#include "assocform/apolarity.hpp"
#include "assocform/binary.hpp"
#include "assocform/parse.hpp"
#include "assocform/quotient.hpp"
#include "assocform/sampling.hpp"
#include "assocform/stability.hpp"
#include "oracle.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using namespace assocform;

namespace {

/// Collects the first few failures of one criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 3) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
  }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed: " << notes_.str();
    return s.str();
  }

 private:
  int checks_ = 0, failures_ = 0;
  std::ostringstream notes_;
};

std::string str(const Form& f) { return format_form(f); }

Form pure(int n, int var, int d) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(var)] = d;
  return Form::monomial(std::span<const int>(e));
}

oracle::Mat2 mat(const GroupElement& g) {
  const auto& m = g.matrix();
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

// ---- 1 --------------------------------------------------------------------

void diagonal(Tally& t) {
  Sampler s(101);
  auto check = [&](int n, int d, const std::vector<Rational>& a) {
    Form f(n, d);
    Rational prod = 1;
    for (int i = 0; i < n; ++i) {
      f += a[static_cast<std::size_t>(i)] * pure(n, i, d);
      prod *= a[static_cast<std::size_t>(i)];
    }
    Rational denom = prod;
    for (int i = 0; i < n; ++i) denom *= oracle::factorial(d);
    const Rational c = oracle::factorial(n * (d - 2)) / denom;
    std::vector<int> e(static_cast<std::size_t>(n), d - 2);
    const Form expected = Form::monomial(std::span<const int>(e), c);
    const Form got = associated_form(f).form();
    t.expect(got == expected, "A(" + str(f) + ") = " + str(got) + ", expected " + str(expected));
  };
  for (int d = 4; d <= 8; ++d)
    for (int k = 0; k < 20; ++k) check(2, d, {s.nonzero_rational(), s.nonzero_rational()});
  check(3, 3, {Rational(2), Rational(-3, 5), Rational(7, 2)});
}

// ---- 2, 3, 5 --------------------------------------------------------------

void hilbert(Tally& t) {
  Sampler s(202);
  for (int d = 4; d <= 8; ++d) {
    const auto predicted = oracle::hilbert_series(2, d - 2);
    for (int k = 0; k < 50; ++k) {
      const auto pair = s.hsop_tuple(2, d - 1);
      t.expect(oracle::resultant(pair[0], pair[1]) != 0, "sampler returned a pair with a common root");
      const auto q = GradedQuotient::build(pair);
      t.expect(q.hilbert_function() == predicted, "Hilbert function off for (" + str(pair[0]) + ", " + str(pair[1]) + ")");
    }
    // Cross-oracle on pairs that may or may not share a root.
    for (int k = 0; k < 50; ++k) {
      FormTuple pair = k % 2 ? s.pair_with_common_root(d - 1) : FormTuple{s.nonzero_form(2, d - 1), s.nonzero_form(2, d - 1)};
      if (k % 5 == 0) pair[1] = pair[0] * Rational(s.nonzero_coefficient());
      bool raised = false;
      try {
        GradedQuotient::build(pair);
      } catch (const NotHsop&) {
        raised = true;
      }
      t.expect(raised == (oracle::resultant(pair[0], pair[1]) == 0),
               "NotHsop disagrees with the resultant on (" + str(pair[0]) + ", " + str(pair[1]) + ")");
    }
  }
}

void inverse_system(Tally& t) {
  Sampler s(202);  // the samples of criterion 2
  for (int d = 4; d <= 8; ++d) {
    for (int k = 0; k < 50; ++k) {
      const auto pair = s.hsop_tuple(2, d - 1);
      const auto q = GradedQuotient::build(pair);
      const DualForm a = associated_form_tuple(q);
      for (const auto& f : pair) t.expect(oracle::contract(f, a.form()).is_zero(), "generator not apolar");
      for (int j = 0; j <= 2 * (d - 2) + 1; ++j) {
        // ideal piece from the monomial multiples of the generators
        std::vector<Form> mult;
        if (j >= d - 1)
          for (const auto& f : pair)
            for (int c = 0; c <= j - (d - 1); ++c) mult.push_back(Form::monomial({j - (d - 1) - c, c}) * f);
        const int ideal_dim = oracle::rank_of(mult);
        // perp dimension from the contraction map on monomials
        std::vector<Form> images;
        for (int c = 0; c <= j; ++c) images.push_back(oracle::contract(Form::monomial({j - c, c}), a.form()));
        const int perp_dim = j + 1 - (j > a.degree() ? 0 : oracle::rank_of(images));
        bool members = true;
        for (const auto& m : mult) members = members && oracle::contract(m, a.form()).is_zero();
        const Subspace perp = apolar_component(a, j);
        t.expect(members && ideal_dim == perp_dim && perp.dimension() == perp_dim &&
                     (mult.empty() ? perp.dimension() == 0 : perp == Subspace::span(std::span<const Form>(mult))),
                 "ideal and A-perp differ in degree " + std::to_string(j) + " for (" + str(pair[0]) + ", " +
                     str(pair[1]) + ")");
      }
    }
  }
}

void catalecticant_nonvanishing(Tally& t) {
  const Form x2y2 = Form::monomial({2, 2});
  t.expect(catalecticant(DualForm(x2y2)) == Rational(-1, 216), "Cat(x^2y^2) != -1/216");
  t.expect(oracle::catalecticant(x2y2) == Rational(-1, 216), "oracle Cat(x^2y^2) != -1/216");
  Sampler s(202);
  for (int d = 4; d <= 8; ++d)
    for (int k = 0; k < 50; ++k) {
      const auto pair = s.hsop_tuple(2, d - 1);
      const DualForm a = associated_form_tuple(pair);
      const Rational c = catalecticant(a);
      t.expect(c != 0 && c == oracle::catalecticant(a.form()), "Cat(A) vanishes or disagrees for " + str(pair[0]));
    }
}

// ---- 4 --------------------------------------------------------------------

void equivariance(Tally& t) {
  {
    const GroupElement g = GroupElement::diagonal({Rational(2), Rational(1)});
    const Form f = parse_form("x^4 + y^4", 2);
    const Form lhs = associated_form(act(g, f)).form();
    const Form rhs = g.det() * g.det() * act_dual(g, associated_form(f).form());
    const Form golden = parse_form("2/3*y1^2*y2^2", 2, Variables::dual);
    t.expect(lhs == golden && rhs == golden, "diag(2,1) instance: " + str(lhs) + " vs " + str(rhs));
  }
  Sampler s(404);
  for (int d = 4; d <= 6; ++d)
    for (int k = 0; k < 100; ++k) {
      const Form f = s.nondegenerate_form(2, d);
      const GroupElement g = s.group_element(2);
      const auto gm = mat(g);
      const Form lhs = associated_form(oracle::act(gm, f)).form();
      const Form rhs = gm.det() * gm.det() * oracle::act_dual(gm, associated_form(f).form());
      t.expect(lhs == rhs, "A(g f) != det(g)^2 g A(f) for f = " + str(f));

      const auto tup = s.hsop_tuple(2, d - 1);
      const GroupElement g1 = s.group_element(2), g2 = s.group_element(2);
      const auto m1 = mat(g1), m2inv = mat(g2).inverse();
      const Form a0 = oracle::act(m1, tup[0]), a1 = oracle::act(m1, tup[1]);
      const FormTuple moved{m2inv.a * a0 + m2inv.c * a1, m2inv.b * a0 + m2inv.d * a1};
      const Form tl = associated_form_tuple(moved).form();
      const Form tr = m1.det() * mat(g2).det() * oracle::act_dual(m1, associated_form_tuple(tup).form());
      t.expect(tl == tr, "tuple equivariance fails for " + str(tup[0]) + ", " + str(tup[1]));
    }
}

// ---- 6 --------------------------------------------------------------------

void roundtrips(Tally& t) {
  Sampler s(606);
  for (int d = 4; d <= 6; ++d) {
    for (int k = 0; k < 50; ++k) {
      const auto tup = s.hsop_tuple(2, d - 1);
      const Subspace w = Subspace::span(std::span<const Form>(tup));
      const auto b = b_map(associated_form_tuple(w.basis()), d);
      t.expect(b.member() && b.subspace == w, "B(A(W)) != W");
    }
    for (int k = 0; k < 25;) {
      const DualForm a = associated_form_tuple(s.hsop_tuple(2, d - 1));
      const DualForm f = a + DualForm(s.form(2, a.degree()) * Rational(1, s.uniform(1, 9)));
      if (oracle::catalecticant(f.form()) == 0) continue;
      ++k;
      const auto b = b_map(f, d);
      t.expect(b.member(), "Cat != 0 but B(F) is not an hsop");
      if (!b.member()) continue;
      const Form back = associated_form_tuple(b.subspace.basis()).form();
      // proportional: every 2 x 2 minor of the coefficient pair vanishes, and back != 0
      bool prop = !back.is_zero();
      for (Eigen::Index i = 0; i < back.coefficients().size() && prop; ++i)
        for (Eigen::Index j = i + 1; j < back.coefficients().size() && prop; ++j)
          prop = back[i] * f.form()[j] == back[j] * f.form()[i];
      t.expect(prop, "A(B(F)) not proportional to F = " + str(f.form()));
    }
  }
}

// ---- 7 --------------------------------------------------------------------

int oracle_mu(const Subspace& w, const GroupElement& frame) {
  const auto g = mat(frame);
  return oracle::hm_mu(oracle::act(g, w.basis_form(0)), oracle::act(g, w.basis_form(1)));
}

void stability_certificates(Tally& t) {
  for (int d = 4; d <= 8; ++d) {
    const auto c = subspace_stability(Subspace::span({pure(2, 0, d - 1), pure(2, 1, d - 1)}));
    t.expect(c.verdict == Verdict::strictly_semistable && c.polystable, "<x^(d-1), y^(d-1)> not strictly semistable and polystable");
    if (d % 2 == 0) {
      const auto fc = form_stability(Form::monomial({d / 2, d / 2}));
      t.expect(fc.verdict == Verdict::strictly_semistable && fc.polystable, "x^(d/2) y^(d/2) verdict off");
    }
  }
  {
    const Subspace w = Subspace::span({Form::monomial({3, 0}), Form::monomial({2, 1})});
    const auto c = subspace_stability(w);
    t.expect(c.verdict == Verdict::unstable && c.frame && c.index && c.index->mu == -4 &&
                 oracle_mu(w, c.frame->coordinates()) == -4,
             "<x^3, x^2 y> witness off");
  }

  Sampler s(707);
  int unstable = 0, semistable = 0;
  for (int d = 4; d <= 8; ++d) {
    const int m = d - 1;
    for (int k = 0; k < 100; ++k) {
      const Subspace w = s.pencil(m);
      const auto c = subspace_stability(w);
      if (c.verdict == Verdict::unstable) {
        ++unstable;
        t.expect(c.frame && c.index && c.index->mu < 0 && oracle_mu(w, c.frame->coordinates()) == c.index->mu,
                 "unstable verdict without a destabilizing frame");
        continue;
      }
      ++semistable;
      bool survived = true;
      for (int r = 0; r < 500; ++r) {
        const Frame frame(s.group_element(2));
        const int mu = hm_index(w, frame).mu;
        if (r < 5) t.expect(mu == oracle_mu(w, frame.coordinates()), "hm_index disagrees with the Pluecker oracle");
        survived = survived && mu >= 0;
      }
      t.expect(survived, "semistable verdict refuted by a frame");
    }
  }
  t.expect(unstable > 0 && semistable > 0, "pencil sampler never hit one of the verdicts");
}

// ---- 8 --------------------------------------------------------------------

void nabla_preservation(Tally& t) {
  Sampler s(808);
  for (int d = 4; d <= 8; ++d) {
    for (int k = 0; k < 200; ++k) {
      const Form f = s.semistable_form(d);
      t.expect(form_stability(f).semistable(), "sampled form is not semistable");
      t.expect(subspace_stability(nabla(f)).semistable(), "nabla(f) unstable for f = " + str(f));
    }
    for (int k = 0; k < 50; ++k) {
      const bool balanced = d % 2 == 0 && k % 2 == 0;
      const Form f = balanced ? s.split_balanced_form(d) : s.stable_form(d);
      t.expect(form_stability(f).polystable, "sampled form is not polystable");
      t.expect(subspace_stability(nabla(f)).polystable, "nabla(f) not polystable for f = " + str(f));
    }
    if (d % 2 == 0) {
      const Subspace target = Subspace::span({Form::monomial({d / 2 - 1, d / 2}), Form::monomial({d / 2, d / 2 - 1})});
      for (int k = 0; k < 10; ++k) {
        Form l1, l2;
        const Form f = s.split_balanced_form(d, &l1, &l2);
        t.expect(one_ps_limit(nabla(f), Frame::sending(l1, l2)) == target, "limit of nabla(" + str(f) + ") off");
      }
    }
  }
}

// ---- 9 --------------------------------------------------------------------

bool oracle_member(const Form& f1, const Form& f2) {
  return oracle::rank_of({differentiate(f1, 0), differentiate(f1, 1), differentiate(f2, 0), differentiate(f2, 1)}) < 4;
}

void wprime(Tally& t) {
  Sampler s(909);
  for (int d = 5; d <= 7; ++d) {
    for (int k = 0; k < 50; ++k) {
      const Form f = s.nonzero_form(2, d);
      const Form fx = differentiate(f, 0), fy = differentiate(f, 1);
      t.expect(wprime_membership({fx, fy}).member && oracle_member(fx, fy), "gradient pair outside W'");
      const auto g1 = mat(s.group_element(2)), g2inv = mat(s.group_element(2)).inverse();
      const Form a = oracle::act(g1, fx), b = oracle::act(g1, fy);
      const Form m1 = g2inv.a * a + g2inv.c * b, m2 = g2inv.b * a + g2inv.d * b;
      t.expect(wprime_membership({m1, m2}).member && oracle_member(m1, m2), "translated pair outside W'");
    }
  }
  const Form f1 = parse_form("x^4 + x^3*y", 2), f2 = parse_form("y^4 + x*y^3", 2);
  const auto r = wprime_membership({f1, f2});
  t.expect(!r.member && !oracle_member(f1, f2) && r.minor == Rational(1, 256), "non-member golden minor off");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Tally&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "diagonal-form formula", diagonal},
      {2, "Hilbert function and hsop cross-oracle", hilbert},
      {3, "inverse-system identity", inverse_system},
      {4, "equivariance", equivariance},
      {5, "catalecticant nonvanishing", catalecticant_nonvanishing},
      {6, "roundtrips", roundtrips},
      {7, "stability certificates", stability_certificates},
      {8, "gradient map preserves stability", nabla_preservation},
      {9, "W' membership", wprime},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && t.ok();
    std::cout << (t.ok() ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << t.summary() << " in "
              << std::fixed << std::setprecision(2) << secs << " s" << std::endl;
  }
  return all ? 0 : 1;
}
