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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace assocform {

/// A well-formed request whose mathematical preconditions fail (non-hsop
/// tuple, degenerate form, wrong dimension). The CLI maps these to exit 2.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class NotHsop : public DomainError {
 public:
  NotHsop(int degree, std::size_t expected, std::size_t actual)
      : DomainError("not_hsop", "not a homogeneous system of parameters: quotient has dimension " +
                                    std::to_string(actual) + " in degree " + std::to_string(degree) +
                                    ", expected " + std::to_string(expected)),
        degree_(degree),
        expected_(expected),
        actual_(actual) {}
  int failing_degree() const { return degree_; }
  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  int degree_;
  std::size_t expected_, actual_;
};

class DegenerateForm : public DomainError {
 public:
  explicit DegenerateForm(const std::string& what) : DomainError("degenerate", what) {}
};

class DimensionError : public DomainError {
 public:
  explicit DimensionError(const std::string& what) : DomainError("dimension", what) {}
};

class DependentPartials : public DomainError {
 public:
  DependentPartials() : DomainError("dependent_partials", "partial derivatives are linearly dependent") {}
};

/// Input text that does not follow the polynomial grammar.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace assocform
