// Copyright 2026 The zerocurve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZEROCURVE_ERRORS_HPP
#define ZEROCURVE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zerocurve {

/// Precondition violated: invalid degree, non-coprime indices, q outside the domain, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation hit a pole of a rational map.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Polynomial text did not match the grammar.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, const std::string& expected)
      : std::invalid_argument("parse error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace zerocurve

#endif  // ZEROCURVE_ERRORS_HPP
