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

#include "assocform/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace assocform {

namespace {

struct Term {
  Rational coeff;
  Exponent exps;
};

class Parser {
 public:
  Parser(std::string_view text, int num_vars, Variables vars)
      : text_(text), num_vars_(num_vars), vars_(vars) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty input");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
        // a second sign is allowed only directly after a binary operator
        if (!first && (peek() == '+' || peek() == '-')) sign *= get() == '-' ? -1 : 1;
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      skip_ws();
      auto t = term();
      t.coeff *= sign;
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
    }
    return terms;
  }

 private:
  Term term() {
    Term t{Rational(1), Exponent(static_cast<std::size_t>(num_vars_), 0)};
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = coefficient();
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        factor(t.exps);
        have_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        factor(t.exps);
        have_factor = true;
      } else {
        return t;
      }
    } else {
      factor(t.exps);
      have_factor = true;
    }
    while (have_factor) {
      skip_ws();
      if (peek() != '*') break;
      get();
      skip_ws();
      factor(t.exps);
    }
    return t;
  }

  Rational coefficient() {
    const std::size_t start = pos_;
    Integer num = integer();
    skip_ws();
    if (peek() == '/') {
      get();
      skip_ws();
      Integer den = integer();
      if (den == 0) throw ParseError(start, "zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  Integer integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected a digit");
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void factor(Exponent& exps) {
    const std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected a variable");
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name.push_back(get());
    const int var = variable_index(name, start);
    skip_ws();
    int e = 1;
    if (peek() == '^') {
      get();
      skip_ws();
      const std::size_t epos = pos_;
      const Integer v = integer();
      if (v < 1 || v > 10000) throw ParseError(epos, "exponent must be a positive integer");
      e = v.convert_to<int>();
    }
    exps[static_cast<std::size_t>(var)] += e;
  }

  int variable_index(const std::string& name, std::size_t where) const {
    if (vars_ == Variables::source && num_vars_ == 2) {
      if (name == "x") return 0;
      if (name == "y") return 1;
    }
    const char prefix = vars_ == Variables::source ? 'x' : 'y';
    if (name.size() >= 2 && name[0] == prefix) {
      bool digits = true;
      for (std::size_t i = 1; i < name.size(); ++i) digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
      if (digits && name[1] != '0') {
        const int k = std::stoi(name.substr(1));
        if (k >= 1 && k <= num_vars_) return k - 1;
      }
    }
    throw ParseError(where, "unknown variable '" + name + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }

  std::string_view text_;
  int num_vars_;
  Variables vars_;
  std::size_t pos_ = 0;
};

std::string variable_name(int i, int num_vars, Variables vars, FormatStyle style) {
  if (vars == Variables::source && num_vars == 2) return i == 0 ? "x" : "y";
  const std::string base = vars == Variables::source ? "x" : "y";
  if (style == FormatStyle::latex) return base + "_{" + std::to_string(i + 1) + "}";
  return base + std::to_string(i + 1);
}

std::string format_coefficient_latex(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return "\\frac{" + numerator(q).str() + "}{" + denominator(q).str() + "}";
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Parser p(text, 1, Variables::source);
  const auto terms = p.parse();
  if (terms.size() != 1 || terms[0].exps[0] != 0) throw ParseError(0, "expected a rational number");
  return terms[0].coeff;
}

Form parse_form(std::string_view text, int num_vars, Variables vars, std::optional<int> expected_degree) {
  if (num_vars < 1) throw std::invalid_argument("num_vars must be positive");
  Parser p(text, num_vars, vars);
  const auto terms = p.parse();

  std::map<Exponent, Rational> collected;
  std::optional<int> degree;
  for (const auto& t : terms) {
    int d = 0;
    for (int e : t.exps) d += e;
    if (t.coeff == 0) continue;
    if (degree && *degree != d) throw ParseError(0, "inhomogeneous polynomial (degrees " + std::to_string(*degree) +
                                                        " and " + std::to_string(d) + ")");
    degree = d;
    collected[t.exps] += t.coeff;
  }
  if (degree && expected_degree && *degree != *expected_degree)
    throw ParseError(0, "expected a form of degree " + std::to_string(*expected_degree) + ", got degree " +
                            std::to_string(*degree));
  const int deg = degree.value_or(expected_degree.value_or(0));
  Form f(num_vars, deg);
  for (const auto& [e, c] : collected)
    if (c != 0) f += Form::monomial(std::span<const int>(e), c);
  return f;
}

std::string format_form(const Form& f, FormatStyle style, Variables vars) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  f.for_each_term([&](const Exponent& e, const Rational& c) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (int i = 0; i < f.num_vars(); ++i) {
      const int k = e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      std::string v = variable_name(i, f.num_vars(), vars, style);
      if (k > 1) v += style == FormatStyle::latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
      factors.push_back(std::move(v));
    }
    const bool show_coeff = factors.empty() || mag != 1;
    const std::string sep = style == FormatStyle::latex ? " " : "*";
    if (show_coeff) {
      out << (style == FormatStyle::latex ? format_coefficient_latex(mag) : to_string(mag));
      if (!factors.empty()) out << sep;
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out << sep;
      out << factors[i];
    }
  });
  return out.str();
}

}  // namespace assocform
