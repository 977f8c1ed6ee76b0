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

// assocform: command-line front end.
//
// Exit status: 0 success, 1 usage or parse error, 2 domain error (not an
// hsop, degenerate form, wrong dimension, ...), 3 a verify suite failed.

#include "assocform/apolarity.hpp"
#include "assocform/binary.hpp"
#include "assocform/certificate.hpp"
#include "assocform/parse.hpp"
#include "assocform/quotient.hpp"
#include "assocform/stability.hpp"
#include "assocform/verify.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace assocform;

struct Options {
  std::optional<int> d;
  int n = 2;
  std::uint64_t seed = 1;
  int trials = 20;
  std::string format = "json";
  std::string suite;
  std::string frame;
  std::vector<std::string> forms;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---- input helpers --------------------------------------------------------

Form source_form(const std::string& text, const Options& o, std::optional<int> degree = std::nullopt) {
  return parse_form(text, o.n, Variables::source, degree);
}

/// Dual forms may be written in y1..yn or, for convenience, in the source names.
DualForm dual_form(const std::string& text, const Options& o, std::optional<int> degree = std::nullopt) {
  try {
    return DualForm(parse_form(text, o.n, Variables::dual, degree));
  } catch (const ParseError&) {
    return DualForm(parse_form(text, o.n, Variables::source, degree));
  }
}

void expect_forms(const Options& o, std::size_t count, const char* what) {
  if (o.forms.size() != count)
    throw UsageError("expected " + std::to_string(count) + " " + what + ", got " + std::to_string(o.forms.size()));
}

FormTuple source_tuple(const Options& o) {
  expect_forms(o, static_cast<std::size_t>(o.n), "forms (one per variable)");
  FormTuple t;
  for (const auto& s : o.forms) t.push_back(source_form(s, o));
  for (const auto& f : t)
    if (f.degree() != t.front().degree()) throw UsageError("tuple entries must have equal degree");
  return t;
}

Subspace source_pencil(const Options& o) {
  if (o.n != 2) throw UsageError("pencils are binary (--n 2)");
  expect_forms(o, 2, "forms");
  const Form f1 = source_form(o.forms[0], o), f2 = source_form(o.forms[1], o, f1.degree());
  return Subspace::span({f1, f2});
}

Frame parse_frame(const std::string& text) {
  if (text.empty()) return Frame::identity();
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',' || c == ';' || c == '[' || c == ']') c = ' ';
  std::istringstream in(cleaned);
  std::vector<Rational> entries;
  for (std::string tok; in >> tok;) entries.push_back(parse_rational(tok));
  if (entries.size() != 4) throw UsageError("--frame needs four entries \"a b; c d\"");
  MatrixQ g(2, 2);
  g << entries[0], entries[1], entries[2], entries[3];
  if (determinant(g) == 0) throw UsageError("--frame matrix is singular");
  return Frame(GroupElement(std::move(g)));
}

Json tuple_json(const FormTuple& t) {
  Json a = Json::array();
  for (const auto& f : t) a.push_back(form_json(f));
  return a;
}

Json input_json(const Options& o) {
  Json in;
  in["forms"] = o.forms;
  in["n"] = o.n;
  if (o.d) in["d"] = *o.d;
  return in;
}

// ---- subcommands ----------------------------------------------------------

Json cmd_assoc(const Options& o) {
  expect_forms(o, 1, "form");
  const Form f = source_form(o.forms[0], o, o.d);
  const DualForm a = associated_form(f);
  Json flags{{"hsop", true}};
  if (o.n == 2) flags["cat_nonzero"] = catalecticant(a) != 0;
  Json witnesses{{"hessian", form_json(hessian_det(f))}};
  if (o.n == 2 && f.degree() >= 3) witnesses["discriminant_resultant"] = to_string(discriminant_nonzero(f).resultant);
  return make_certificate("assoc", input_json(o), {{"associated_form", form_json(a.form(), Variables::dual)}},
                          std::move(flags), std::move(witnesses));
}

Json cmd_assoc_tuple(const Options& o) {
  const auto q = GradedQuotient::build(source_tuple(o));
  const DualForm a = associated_form_tuple(q);
  Json flags{{"hsop", true}};
  if (o.n == 2) flags["cat_nonzero"] = catalecticant(a) != 0;
  return make_certificate("assoc-tuple", input_json(o), {{"associated_form", form_json(a.form(), Variables::dual)}},
                          std::move(flags),
                          {{"jacobian", form_json(jacobian_det(q.generators()))},
                           {"jacobian_socle_coordinate", to_string(q.jacobian_socle_coordinate())}});
}

Json cmd_cat(const Options& o) {
  expect_forms(o, 1, "form");
  if (o.n != 2) throw UsageError("cat is defined for binary forms (--n 2)");
  const DualForm f = dual_form(o.forms[0], o);
  const Rational c = catalecticant(f);
  const int half = f.degree() / 2;
  return make_certificate("cat", input_json(o), {{"catalecticant", to_string(c)}}, {{"cat_nonzero", c != 0}},
                          {{"catalecticant_matrix", matrix_json(catalecticant_matrix(f, half))}});
}

Json cmd_res(const Options& o) {
  if (o.n != 2) throw UsageError("res is defined for binary forms (--n 2)");
  expect_forms(o, 2, "forms");
  const Form f = source_form(o.forms[0], o), g = source_form(o.forms[1], o, f.degree());
  const Rational r = sylvester_resultant(f, g);
  return make_certificate("res", input_json(o), {{"resultant", to_string(r)}}, {{"hsop", r != 0}},
                          {{"gcd", form_json(gcd_binary(f, g))}});
}

Json cmd_disc(const Options& o) {
  if (o.n != 2) throw UsageError("disc is defined for binary forms (--n 2)");
  expect_forms(o, 1, "form");
  const Form f = source_form(o.forms[0], o, o.d);
  const auto c = discriminant_nonzero(f);
  return make_certificate("disc", input_json(o), {{"discriminant_nonzero", c.nonzero}}, {{"hsop", c.nonzero}},
                          {{"gradient_resultant", to_string(c.resultant)}});
}

Json cmd_hilbert(const Options& o) {
  const auto t = source_tuple(o);
  const auto q = GradedQuotient::build(t);
  return make_certificate(
      "hilbert", input_json(o),
      {{"hilbert_function", hilbert_json(q.hilbert_function())}, {"top_degree", q.top_degree()}}, {{"hsop", true}},
      {{"expected", hilbert_json(expected_hilbert_function(o.n, t.front().degree()))},
       {"jacobian_socle_coordinate", to_string(q.jacobian_socle_coordinate())}});
}

Json cmd_inverse_system(const Options& o) {
  const auto q = GradedQuotient::build(source_tuple(o));
  const DualForm a = associated_form_tuple(q);
  bool all_apolar = true;
  for (const auto& f : q.generators()) all_apolar = all_apolar && polar_apply(f, a).is_zero();
  Json degrees = Json::array();
  bool all_equal = true;
  for (int j = 0; j <= q.top_degree() + 1; ++j) {
    const Subspace perp = apolar_component(a, j);
    const Subspace ideal(o.n, j, q.ideal_piece(j));
    const bool same = perp == ideal;
    all_equal = all_equal && same;
    degrees.push_back({{"degree", j}, {"ideal_dimension", ideal.dimension()}, {"perp_dimension", perp.dimension()},
                       {"equal", same}});
  }
  return make_certificate("inverse-system", input_json(o),
                          {{"inverse_system", form_json(a.form(), Variables::dual)},
                           {"generators_apolar", all_apolar},
                           {"ideal_equals_perp", all_equal}},
                          {{"hsop", true}}, {{"degrees", std::move(degrees)}});
}

Json cmd_b_map(const Options& o) {
  expect_forms(o, 1, "form");
  if (!o.d) throw UsageError("b-map needs --d");
  const DualForm f = dual_form(o.forms[0], o, o.n * (*o.d - 2));
  const auto b = b_map(f, *o.d);
  Json flags{{"hsop", b.hsop}, {"u_res_member", b.member()}};
  if (o.n == 2) flags["cat_nonzero"] = catalecticant(f) != 0;
  return make_certificate("b-map", input_json(o), {{"subspace", subspace_json(b.subspace)}}, std::move(flags),
                          {{"dimension_ok", b.dimension_ok}});
}

Json cmd_nabla(const Options& o) {
  if (o.n != 2) throw UsageError("nabla is defined for binary forms (--n 2)");
  expect_forms(o, 1, "form");
  const Form f = source_form(o.forms[0], o, o.d);
  return make_certificate("nabla", input_json(o), {{"subspace", subspace_json(nabla(f))}});
}

Json cmd_stability(const Options& o) {
  if (o.n != 2) throw UsageError("stability is defined for binary forms (--n 2)");
  expect_forms(o, 1, "form");
  const Form f = source_form(o.forms[0], o, o.d);
  const auto c = form_stability(f);
  Json w{{"root_multiplicities", Json::array()}};
  for (const auto& s : squarefree_decomposition(f).factors)
    w["root_multiplicities"].push_back({{"factor", form_json(s.factor)}, {"multiplicity", s.multiplicity}});
  return make_certificate("stability", input_json(o), stability_json(c), Json::object(), std::move(w));
}

Json cmd_subspace_stability(const Options& o) {
  const Subspace w = source_pencil(o);
  const auto c = subspace_stability(w);
  Json wit{{"gcd", form_json(gcd_binary(w.basis_form(0), w.basis_form(1)))}};
  return make_certificate("subspace-stability", input_json(o),
                          {{"subspace", subspace_json(w)}, {"certificate", stability_json(c)}}, Json::object(),
                          std::move(wit));
}

Json cmd_hm_index(const Options& o) {
  const Subspace w = source_pencil(o);
  const Frame frame = parse_frame(o.frame);
  const auto h = hm_index(w, frame);
  return make_certificate("hm-index", input_json(o), hm_index_json(h),
                          {{"rho_semistable", h.mu >= 0}, {"rho_stable", h.mu > 0}},
                          {{"frame", matrix_json(frame.coordinates().matrix())}, {"tau", Frame::tau}});
}

Json cmd_limit(const Options& o) {
  const Subspace w = source_pencil(o);
  const Frame frame = parse_frame(o.frame);
  const auto lim = one_ps_limit(w, frame);
  return make_certificate("limit", input_json(o), {{"limit", subspace_json(lim)}}, Json::object(),
                          {{"frame", matrix_json(frame.coordinates().matrix())},
                           {"index", hm_index_json(hm_index(w, frame))}});
}

Json cmd_wprime(const Options& o) {
  if (o.n != 2) throw UsageError("wprime is defined for binary forms (--n 2)");
  expect_forms(o, 2, "forms");
  const Form f1 = source_form(o.forms[0], o), f2 = source_form(o.forms[1], o, f1.degree());
  const auto r = wprime_membership({f1, f2});
  Json wit{{"matrix", matrix_json(r.matrix)}, {"rank", r.rank}, {"no_minors", r.no_minors}};
  if (!r.member) wit["minor"] = {{"columns", r.minor_columns}, {"value", to_string(r.minor)}};
  return make_certificate("wprime", input_json(o), {{"member", r.member}}, Json::object(), std::move(wit));
}

/// Degrees a suite covers when --d is not given.
std::vector<int> default_degrees(const std::string& suite) {
  if (suite == "equivariance" || suite == "roundtrip") return {4, 5, 6};
  if (suite == "wprime") return {5, 6, 7};
  return {4, 5, 6, 7, 8};
}

std::pair<Json, bool> cmd_verify(const Options& o) {
  std::vector<std::string> suites;
  if (o.suite.empty() || o.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(o.suite);
  }
  Json reports = Json::array();
  bool ok = true;
  for (const auto& s : suites) {
    const std::vector<int> degrees = o.d ? std::vector<int>{*o.d} : default_degrees(s);
    for (int d : degrees) {
      const auto r = run_suite(s, d, o.trials, o.seed, o.n);
      ok = ok && r.ok();
      Json j{{"suite", r.suite}, {"d", r.d},          {"n", r.n},           {"trials", r.trials},
             {"passed", r.passed}, {"failed", r.failed}, {"rejections", r.rejections}};
      j["first_counterexample"] = r.first_counterexample ? Json(*r.first_counterexample) : Json(nullptr);
      reports.push_back(std::move(j));
    }
  }
  Json in{{"suites", suites}, {"n", o.n}, {"trials", o.trials}, {"seed", o.seed}};
  if (o.d) in["d"] = *o.d;
  return {make_certificate("verify", std::move(in), {{"all_passed", ok}, {"reports", std::move(reports)}}), ok};
}

// ---- output ---------------------------------------------------------------

void emit_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      emit_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) emit_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

void emit(const Json& j, const Options& o) {
  if (o.format == "text") {
    emit_text(j, "", std::cout);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

int report_error(const Options& o, const std::string& code, const std::string& message, int status) {
  if (o.format == "json") {
    Json j{{"schema", kCertificateSchema}, {"error", {{"code", code}, {"message", message}}}};
    std::cout << j.dump(2) << "\n";
  }
  std::cerr << "assocform: " << message << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Associated forms, inverse systems and stability certificates, in exact arithmetic"};
  app.require_subcommand(1);
  Options o;

  struct Entry {
    const char* name;
    const char* help;
    std::function<Json(const Options&)> run;
  };
  const std::vector<Entry> entries{
      {"assoc", "associated form A(f) of a nondegenerate form", cmd_assoc},
      {"assoc-tuple", "associated form of an hsop tuple (f1, ..., fn)", cmd_assoc_tuple},
      {"cat", "catalecticant of a binary form of even degree", cmd_cat},
      {"res", "Sylvester resultant of two binary forms of equal degree", cmd_res},
      {"disc", "discriminant indicator Res(f_x, f_y) != 0", cmd_disc},
      {"hilbert", "Hilbert function of O(V)/(f1, ..., fn)", cmd_hilbert},
      {"inverse-system", "Macaulay inverse system of an hsop tuple, degree by degree", cmd_inverse_system},
      {"b-map", "F-perp in degree d-1 and resultant-locus membership", cmd_b_map},
      {"nabla", "the pencil <f_x, f_y>", cmd_nabla},
      {"stability", "stability certificate of a binary form", cmd_stability},
      {"subspace-stability", "stability certificate of the pencil <f1, f2>", cmd_subspace_stability},
      {"hm-index", "Hilbert-Mumford index of <f1, f2> in a frame", cmd_hm_index},
      {"limit", "limit of <f1, f2> under the frame's one-parameter subgroup", cmd_limit},
      {"wprime", "membership of the pair (f1, f2) in W'_d", cmd_wprime},
  };

  std::function<int()> dispatch;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "form degree d");
    sub->add_option("--n", o.n, "number of variables")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    common(sub);
    sub->add_option("forms", o.forms, "forms in the text grammar");
    if (std::string(e.name) == "hm-index" || std::string(e.name) == "limit")
      sub->add_option("--frame", o.frame, "frame matrix \"a b; c d\" (default identity)");
    sub->callback([&, run = e.run] {
      dispatch = [&, run] {
        emit(run(o), o);
        return 0;
      };
    });
  }
  auto* verify = app.add_subcommand("verify", "run randomized property suites");
  common(verify);
  verify->add_option("--suite", o.suite, "suite name or 'all'");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--trials", o.trials, "trials per suite and degree")->check(CLI::NonNegativeNumber);
  verify->callback([&] {
    dispatch = [&] {
      auto [j, ok] = cmd_verify(o);
      emit(j, o);
      return ok ? 0 : 3;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    return dispatch();
  } catch (const DomainError& e) {
    return report_error(o, e.code(), e.what(), 2);
  } catch (const std::domain_error& e) {
    return report_error(o, "domain", e.what(), 2);
  } catch (const ParseError& e) {
    return report_error(o, "parse", e.what(), 1);
  } catch (const std::invalid_argument& e) {
    return report_error(o, "usage", e.what(), 1);
  } catch (const std::out_of_range& e) {
    return report_error(o, "usage", e.what(), 1);
  }
}
