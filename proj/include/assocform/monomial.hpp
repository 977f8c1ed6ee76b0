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

// Monomials of a fixed degree in graded-lexicographic order with
// x1 > x2 > ... > xn: index 0 is x1^d, the last index is xn^d. For two
// variables the index of x^(d-i) y^i is i.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace assocform {

using Exponent = std::vector<int>;

/// Number of monomials of degree d in n variables, C(d+n-1, n-1).
inline std::size_t monomial_count(int num_vars, int degree) {
  if (degree < 0) return 0;
  std::size_t r = 1;
  for (int i = 1; i < num_vars; ++i) {
    r = r * static_cast<std::size_t>(degree + i) / static_cast<std::size_t>(i);
  }
  return r;
}

namespace detail {
inline void enumerate(int pos, int remaining, Exponent& cur, std::vector<Exponent>& out) {
  const int n = static_cast<int>(cur.size());
  if (pos == n - 1) {
    cur[static_cast<std::size_t>(pos)] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<std::size_t>(pos)] = e;
    enumerate(pos + 1, remaining - e, cur, out);
  }
}
}  // namespace detail

inline std::vector<Exponent> monomials(int num_vars, int degree) {
  if (num_vars < 1) throw std::invalid_argument("num_vars must be positive");
  std::vector<Exponent> out;
  if (degree < 0) return out;
  out.reserve(monomial_count(num_vars, degree));
  Exponent cur(static_cast<std::size_t>(num_vars), 0);
  detail::enumerate(0, degree, cur, out);
  return out;
}

/// Position of an exponent vector within monomials(n, |e|).
inline std::size_t monomial_index(std::span<const int> e) {
  const int n = static_cast<int>(e.size());
  int remaining = 0;
  for (int a : e) remaining += a;
  std::size_t idx = 0;
  for (int k = 0; k + 1 < n; ++k) {
    const int tail_vars = n - k - 1;
    // monomials with a larger exponent in slot k come first
    for (int larger = e[static_cast<std::size_t>(k)] + 1; larger <= remaining; ++larger)
      idx += monomial_count(tail_vars, remaining - larger);
    remaining -= e[static_cast<std::size_t>(k)];
  }
  return idx;
}

}  // namespace assocform
