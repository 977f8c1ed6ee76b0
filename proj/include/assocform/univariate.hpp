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

#include "assocform/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace assocform {

/// Dense univariate polynomial over a field, coefficients low to high,
/// no trailing zeros (the zero polynomial has no coefficients).
template <typename Scalar>
class Univariate {
 public:
  Univariate() = default;
  explicit Univariate(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar operator[](int i) const { return i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Scalar(0); }
  const Scalar& lead() const { return c_.back(); }

  Univariate monic() const {
    if (is_zero()) return *this;
    Univariate r = *this;
    const Scalar inv = Scalar(1) / lead();
    for (auto& a : r.c_) a *= inv;
    return r;
  }

  Univariate derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<int>(i));
    return Univariate(std::move(d));
  }

  friend Univariate operator*(const Univariate& a, const Univariate& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Univariate(std::move(r));
  }
  friend Univariate operator-(const Univariate& a, const Univariate& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Univariate(std::move(r));
  }
  friend bool operator==(const Univariate& a, const Univariate& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

/// Quotient and remainder of a by b.
template <typename Scalar>
std::pair<Univariate<Scalar>, Univariate<Scalar>> divmod(const Univariate<Scalar>& a, const Univariate<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<Scalar> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Univariate<Scalar>(), a};
  std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - db + 1), Scalar(0));
  const Scalar inv = Scalar(1) / b.lead();
  for (int k = a.degree(); k >= db; --k) {
    const Scalar c = r[static_cast<std::size_t>(k)] * inv;
    q[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= c * b[i];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Univariate<Scalar>(std::move(q)), Univariate<Scalar>(std::move(r))};
}

/// Monic gcd; gcd(0, 0) is 0.
template <typename Scalar>
Univariate<Scalar> gcd(Univariate<Scalar> a, Univariate<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Exact quotient; throws if b does not divide a.
template <typename Scalar>
Univariate<Scalar> exact_div(const Univariate<Scalar>& a, const Univariate<Scalar>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

}  // namespace assocform
