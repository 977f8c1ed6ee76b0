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

// Text format for forms:
//
//   form   ::= term { ('+' | '-') term }
//   term   ::= [sign] [coeff ['*']] factor { '*' factor } | [sign] coeff
//   coeff  ::= int ['/' positive-int]
//   factor ::= var ['^' positive-int]
//
// Source variables are x, y (two variables) or x1..xn; dual variables are
// y1..yn. Whitespace is ignored.

#include "assocform/errors.hpp"
#include "assocform/form.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace assocform {

enum class Variables { source, dual };
enum class FormatStyle { text, latex };

/// Parses a homogeneous form. The degree is inferred from the terms; a zero
/// form takes expected_degree (or 0). Throws ParseError.
Form parse_form(std::string_view text, int num_vars, Variables vars = Variables::source,
                std::optional<int> expected_degree = std::nullopt);

std::string format_form(const Form& f, FormatStyle style = FormatStyle::text,
                        Variables vars = Variables::source);

Rational parse_rational(std::string_view text);

}  // namespace assocform
