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

#ifndef ZEROCURVE_PARSE_HPP
#define ZEROCURVE_PARSE_HPP

#include <cctype>
#include <charconv>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace zerocurve {

inline constexpr unsigned kMaxParsedExponent = 64;

/// Polynomial text plus the name of its variable.
struct PolySource {
  std::string text;
  char variable = 'z';
};

namespace detail {

// expr  := term (('+'|'-') term)*          (a leading sign is allowed)
// term  := coeff | coeff '*'? var power? | var power?
// coeff := real | 'i' | real 'i' | '(' real (('+'|'-') real 'i')? ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, char var) : s_(text), var_(var) {}

  ComplexPoly parse() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "a term");
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
    }
    term(sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') throw ParseError(pos_, "'+' or '-'");
      ++pos_;
      term(op == '-' ? -1.0 : 1.0);
    }
    return ComplexPoly(std::move(acc_));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool starts_real() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  double real_literal() {
    skip_ws();
    if (!starts_real()) throw ParseError(pos_, "a real literal");
    double v = 0.0;
    const char* first = s_.data() + pos_;
    const char* last = s_.data() + s_.size();
    const auto res = std::from_chars(first, last, v, std::chars_format::general);
    if (res.ec != std::errc{}) throw ParseError(pos_, "a real literal");
    pos_ += static_cast<std::size_t>(res.ptr - first);
    return v;
  }

  bool is_imag_unit() const { return peek() == 'i' && var_ != 'i'; }

  cplx paren_literal() {
    ++pos_;  // '('
    skip_ws();
    double sign = 1.0;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
    }
    const double re = sign * real_literal();
    skip_ws();
    cplx value{re, 0.0};
    if (is_imag_unit()) {
      ++pos_;
      value = {0.0, re};
    } else if (peek() == '+' || peek() == '-') {
      const double s2 = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
      const double im = s2 * real_literal();
      skip_ws();
      if (!is_imag_unit()) throw ParseError(pos_, "'i'");
      ++pos_;
      value = {re, im};
    }
    skip_ws();
    if (peek() != ')') throw ParseError(pos_, "')'");
    ++pos_;
    return value;
  }

  std::size_t power() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    unsigned v = 0;
    const char* first = s_.data() + pos_;
    const auto res = std::from_chars(first, s_.data() + s_.size(), v);
    if (res.ec != std::errc{}) throw ParseError(at, "an unsigned exponent");
    pos_ += static_cast<std::size_t>(res.ptr - first);
    if (v > kMaxParsedExponent) throw ParseError(at, "an exponent <= 64");
    return v;
  }

  void term(double sign) {
    skip_ws();
    const std::size_t start = pos_;
    bool have_coeff = false;
    cplx coeff{1.0, 0.0};
    if (peek() == '(') {
      coeff = paren_literal();
      have_coeff = true;
    } else if (starts_real()) {
      coeff = real_literal();
      have_coeff = true;
      skip_ws();
      if (is_imag_unit()) {
        ++pos_;
        coeff = {0.0, coeff.real()};
      }
    } else if (is_imag_unit()) {
      ++pos_;
      coeff = {0.0, 1.0};
      have_coeff = true;
    }
    skip_ws();
    bool star = false;
    if (have_coeff && peek() == '*') {
      ++pos_;
      skip_ws();
      star = true;
    }
    std::size_t exponent = 0;
    if (peek() == var_) {
      ++pos_;
      exponent = power();
    } else if (star || !have_coeff) {
      throw ParseError(pos_ == start && !have_coeff ? start : pos_,
                       std::string("variable '") + var_ + "'" + (have_coeff ? "" : " or a coefficient"));
    }
    if (acc_.size() <= exponent) acc_.resize(exponent + 1, cplx{});
    acc_[exponent] += sign * coeff;
  }

  std::string_view s_;
  char var_;
  std::size_t pos_ = 0;
  std::vector<cplx> acc_;
};

inline std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace detail

/// Parses text such as "7z^5 - 2z + i" or "(1.5-2i)*z^2 + 3".
inline ComplexPoly parse_poly(const PolySource& src) {
  if (src.text.empty()) throw ParseError(0, "a nonempty polynomial");
  if (!std::isalpha(static_cast<unsigned char>(src.variable)) || src.variable == 'i')
    throw DomainError("polynomial variable must be an ASCII letter other than 'i'");
  return detail::PolyParser(src.text, src.variable).parse();
}

inline ComplexPoly parse_poly(std::string_view text, char variable = 'z') {
  return parse_poly(PolySource{std::string(text), variable});
}

/// Text that parse_poly reads back to identical coefficients (shortest round-trip doubles).
inline std::string format_poly(const ComplexPoly& p, char variable = 'z') {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const cplx c = p[i];
    if (c == cplx{}) continue;
    std::string body;
    bool negative = false;
    if (c.imag() == 0.0) {
      negative = std::signbit(c.real());
      body = detail::shortest(std::abs(c.real()));
    } else if (c.real() == 0.0) {
      negative = std::signbit(c.imag());
      body = detail::shortest(std::abs(c.imag())) + "i";
    } else {
      body = "(" + detail::shortest(c.real()) + (std::signbit(c.imag()) ? "-" : "+") +
             detail::shortest(std::abs(c.imag())) + "i)";
    }
    if (i > 0) {
      if (body == "1") body.clear();
      else body += "*";
      body += variable;
      if (i > 1) body += "^" + std::to_string(i);
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace zerocurve

#endif  // ZEROCURVE_PARSE_HPP
