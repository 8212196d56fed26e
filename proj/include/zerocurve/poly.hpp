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

#ifndef ZEROCURVE_POLY_HPP
#define ZEROCURVE_POLY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace zerocurve {

using cplx = std::complex<double>;

/// Coefficients at or below this magnitude are dropped from the top of a
/// polynomial. Only an underflow guard; numerical degree decisions belong to callers.
inline constexpr double kTrimThreshold = 1e-300;

/// Dense univariate polynomial with complex coefficients, lowest degree first.
/// The zero polynomial has no coefficients and no degree.
class ComplexPoly {
 public:
  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<cplx> coeffs) : c_(std::move(coeffs)) { trim(); }
  ComplexPoly(std::initializer_list<cplx> coeffs) : c_(coeffs) { trim(); }

  static ComplexPoly constant(cplx value) { return ComplexPoly(std::vector<cplx>{value}); }

  static ComplexPoly monomial(cplx value, std::size_t power) {
    std::vector<cplx> c(power + 1, cplx{});
    c[power] = value;
    return ComplexPoly(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }

  std::optional<std::size_t> degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }

  /// Degree, or DomainError for the zero polynomial.
  std::size_t checked_degree() const {
    if (c_.empty()) throw DomainError("zero polynomial has no degree");
    return c_.size() - 1;
  }

  std::span<const cplx> coeffs() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }

  /// Coefficient of x^i; zero past the degree.
  cplx operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : cplx{}; }

  cplx leading() const noexcept { return c_.empty() ? cplx{} : c_.back(); }

  double max_abs_coeff() const noexcept {
    double m = 0.0;
    for (const auto& x : c_) m = std::max(m, std::abs(x));
    return m;
  }

  /// Sum of |c_i| |z|^i, the natural magnitude against which p(z) is judged small.
  double eval_scale(cplx z) const noexcept {
    const double r = std::abs(z);
    double s = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * r + std::abs(*it);
    return s;
  }

  /// Horner evaluation.
  cplx operator()(cplx z) const noexcept {
    cplx acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  bool is_finite() const noexcept {
    return std::all_of(c_.begin(), c_.end(),
                       [](const cplx& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
  }

  ComplexPoly& operator+=(const ComplexPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  ComplexPoly& operator-=(const ComplexPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  ComplexPoly& operator*=(cplx s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
  friend ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
  friend ComplexPoly operator*(ComplexPoly a, cplx s) { return a *= s; }
  friend ComplexPoly operator*(cplx s, ComplexPoly a) { return a *= s; }
  friend ComplexPoly operator-(ComplexPoly a) { return a *= cplx{-1.0, 0.0}; }

  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<cplx> r(a.c_.size() + b.c_.size() - 1, cplx{});
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == cplx{}) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return ComplexPoly(std::move(r));
  }

  friend bool operator==(const ComplexPoly&, const ComplexPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && std::abs(c_.back()) <= kTrimThreshold) c_.pop_back();
  }

  std::vector<cplx> c_;
};

/// Integer power by repeated squaring; negative exponents invert.
inline cplx ipow(cplx base, long long e) {
  const bool inv = e < 0;
  unsigned long long u = inv ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  cplx r{1.0, 0.0};
  while (u > 0) {
    if (u & 1ULL) r *= base;
    u >>= 1ULL;
    if (u > 0) base *= base;
  }
  return inv ? 1.0 / r : r;
}

inline ComplexPoly derivative(const ComplexPoly& p) {
  if (p.size() <= 1) return {};
  std::vector<cplx> d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<double>(i);
  return ComplexPoly(std::move(d));
}

inline ComplexPoly pow(const ComplexPoly& p, unsigned e) {
  ComplexPoly result = ComplexPoly::constant(1.0);
  ComplexPoly base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Max coefficient-wise distance, relative to the larger max-coefficient magnitude.
inline double relative_distance(const ComplexPoly& a, const ComplexPoly& b) {
  const double scale = std::max({a.max_abs_coeff(), b.max_abs_coeff(), 1e-300});
  double d = 0.0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d / scale;
}

namespace detail {

/// Determinant by Gaussian elimination with partial pivoting.
inline cplx determinant(std::vector<cplx> m, std::size_t n) {
  cplx det{1.0, 0.0};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(m[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(m[r * n + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0.0) return {};
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[col * n + j], m[piv * n + j]);
      det = -det;
    }
    const cplx p = m[col * n + col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const cplx f = m[r * n + col] / p;
      if (f == cplx{}) continue;
      for (std::size_t j = col; j < n; ++j) m[r * n + j] -= f * m[col * n + j];
    }
  }
  return det;
}

inline bool is_odd(std::size_t v) { return (v & 1U) != 0; }

}  // namespace detail

/// Determinant of the Sylvester matrix of p (degree n) and q (degree m).
/// Equals lc(p)^m times the product of q over the roots of p.
inline cplx sylvester_resultant(const ComplexPoly& p, const ComplexPoly& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant of the zero polynomial");
  const std::size_t n = *p.degree();
  const std::size_t m = *q.degree();
  const std::size_t dim = n + m;
  if (dim == 0) return {1.0, 0.0};
  std::vector<cplx> mat(dim * dim, cplx{});
  // m shifted rows of p, then n shifted rows of q; highest coefficient first.
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) mat[r * dim + r + i] = p[n - i];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) mat[(m + r) * dim + r + i] = q[m - i];
  return detail::determinant(std::move(mat), dim);
}

/// (-1)^{n(n-1)/2} Res(p, p') / a_n.
inline cplx discriminant(const ComplexPoly& p) {
  if (p.is_zero() || *p.degree() == 0) throw DomainError("discriminant needs degree >= 1");
  const std::size_t n = *p.degree();
  const cplx res = sylvester_resultant(p, derivative(p));
  const double sign = detail::is_odd(n * (n - 1) / 2) ? -1.0 : 1.0;
  return sign * res / p.leading();
}

/// q-integer [i]_q = 1 + q + ... + q^{i-1}; equals (1 - q^i)/(1 - q) and is continuous at q = 1.
inline cplx q_integer(std::size_t i, cplx q) {
  cplx s{};
  cplx qp{1.0, 0.0};
  for (std::size_t j = 0; j < i; ++j) {
    s += qp;
    qp *= q;
  }
  return s;
}

/// Jackson q-derivative (P(t) - P(qt)) / ((1 - q) t). At q = 1 this is the ordinary derivative.
inline ComplexPoly q_derivative(const ComplexPoly& p, cplx q) {
  if (p.size() <= 1) return {};
  std::vector<cplx> d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * q_integer(i, q);
  return ComplexPoly(std::move(d));
}

}  // namespace zerocurve

#endif  // ZEROCURVE_POLY_HPP
