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

#ifndef ZEROCURVE_QDISC_HPP
#define ZEROCURVE_QDISC_HPP

#include <cmath>
#include <complex>
#include <numeric>
#include <span>
#include <string>

#include "errors.hpp"
#include "poly.hpp"
#include "roots.hpp"

namespace zerocurve {

enum class QDiscPath { definitional, ismail, trinomial_closed_form };

inline const char* to_string(QDiscPath p) {
  switch (p) {
    case QDiscPath::definitional: return "definitional";
    case QDiscPath::ismail: return "ismail";
    case QDiscPath::trinomial_closed_form: return "trinomial-closed-form";
  }
  return "?";
}

struct QDiscResult {
  cplx value;
  QDiscPath path;
  cplx q;
  std::string note;
};

namespace detail {

inline void check_roots(const ComplexPoly& p, std::span<const cplx> roots) {
  if (p.is_zero() || *p.degree() == 0) throw DomainError("q-discriminant needs degree >= 1");
  if (roots.size() != *p.degree()) throw DomainError("q-discriminant: root count does not match degree");
}

inline double sign_of_half_n_n1(std::size_t n) { return is_odd(n * (n - 1) / 2) ? -1.0 : 1.0; }

}  // namespace detail

/// q^{n(n-1)/2} a_n^{2n-2} prod_{i<j} (x_i^2 + x_j^2 - (q + 1/q) x_i x_j).
/// At q = 1 this is the ordinary discriminant.
inline QDiscResult q_discriminant_definitional(const ComplexPoly& p, cplx q, std::span<const cplx> roots) {
  if (q == cplx{}) throw DomainError("q-discriminant: q = 0");
  detail::check_roots(p, roots);
  const std::size_t n = roots.size();
  const cplx s = q + 1.0 / q;
  cplx prod{1.0, 0.0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx xi = roots[i], xj = roots[j];
      prod *= xi * xi + xj * xj - s * xi * xj;
    }
  const cplx value = ipow(q, static_cast<long long>(n * (n - 1) / 2)) *
                     ipow(p.leading(), static_cast<long long>(2 * n - 2)) * prod;
  return {value, QDiscPath::definitional, q, ""};
}

inline QDiscResult q_discriminant_definitional(const ComplexPoly& p, cplx q, const RootSet& rs) {
  return q_discriminant_definitional(p, q, std::span<const cplx>(rs.roots));
}

/// (-1)^{n(n-1)/2} a_n^{n-2} prod_i (D_q p)(x_i).
inline QDiscResult q_discriminant_ismail(const ComplexPoly& p, cplx q, std::span<const cplx> roots) {
  if (q == cplx{}) throw DomainError("q-discriminant: q = 0");
  detail::check_roots(p, roots);
  const std::size_t n = roots.size();
  const ComplexPoly dq = q_derivative(p, q);
  cplx prod{1.0, 0.0};
  for (const auto& x : roots) prod *= dq(x);
  const cplx lead_pow = ipow(p.leading(), static_cast<long long>(n) - 2);
  return {detail::sign_of_half_n_n1(n) * lead_pow * prod, QDiscPath::ismail, q, ""};
}

inline QDiscResult q_discriminant_ismail(const ComplexPoly& p, cplx q, const RootSet& rs) {
  return q_discriminant_ismail(p, q, std::span<const cplx>(rs.roots));
}

/// Root-finding convenience wrappers.
inline QDiscResult q_discriminant_definitional(const ComplexPoly& p, cplx q) {
  return q_discriminant_definitional(p, q, find_roots(p));
}
inline QDiscResult q_discriminant_ismail(const ComplexPoly& p, cplx q) {
  return q_discriminant_ismail(p, q, find_roots(p));
}

/// Denominator trinomial A t^k + B t^l + 1.
inline ComplexPoly trinomial(cplx a, cplx b, int k, int l) {
  std::vector<cplx> c(static_cast<std::size_t>(k) + 1, cplx{});
  c[0] = 1.0;
  c[static_cast<std::size_t>(l)] += b;
  c[static_cast<std::size_t>(k)] += a;
  return ComplexPoly(std::move(c));
}

namespace detail {

inline void check_trinomial_args(int k, int l, cplx q) {
  if (l < 1 || l >= k) throw DomainError("trinomial q-discriminant needs 1 <= l < k");
  if (std::gcd(k, l) != 1) throw DomainError("trinomial q-discriminant needs gcd(k, l) = 1");
  if (q == cplx{} || q == cplx{1.0, 0.0})
    throw DomainError("closed form undefined at q in {0, 1}; use the definitional path");
}

}  // namespace detail

/// Closed form for D(t) = A t^k + B t^l + 1:
///   (-1)^{k(k+1)/2} [(q^k-1)^k A^l - B^k (1-q^l)^l (q^l-q^k)^{k-l}] A^{k-l-1} B^{l-1} (1-q)^{-k}.
/// Differs from the definitional value by the factor B^{l-1} (recorded in `note`);
/// its vanishing locus is what the curve results rely on.
inline QDiscResult q_discriminant_trinomial(cplx a, cplx b, int k, int l, cplx q) {
  detail::check_trinomial_args(k, l, q);
  if (a == cplx{}) throw DomainError("trinomial q-discriminant needs A != 0");
  const cplx qk = ipow(q, k), ql = ipow(q, l);
  const cplx bracket = ipow(qk - 1.0, k) * ipow(a, l) - ipow(b, k) * ipow(1.0 - ql, l) * ipow(ql - qk, k - l);
  const cplx w = ipow(a, k - l - 1) * ipow(b, l - 1) * ipow(1.0 - q, -k);
  const double sign = detail::is_odd(static_cast<std::size_t>(k * (k + 1) / 2)) ? -1.0 : 1.0;
  std::string note = l == 1 ? "equals definitional value (B^{l-1} = 1)"
                            : "closed form = B^" + std::to_string(l - 1) + " x definitional value";
  return {sign * bracket * w, QDiscPath::trinomial_closed_form, q, std::move(note)};
}

/// The l = 1 form A^{n-2} (B^n q^{n-1} (1-q^{n-1})^{n-1} / (1-q)^{n-1} + (-1)^{n-1} A (1-q^n)^n / (1-q)^n),
/// with the overall sign fixed to (-1)^{(n-1)(n-2)/2} so that it matches the definitional value.
inline QDiscResult q_discriminant_trinomial_l1(cplx a, cplx b, int n, cplx q) {
  if (n < 2) throw DomainError("l = 1 trinomial form needs degree >= 2");
  detail::check_trinomial_args(n, 1, q);
  const cplx one_minus_q = 1.0 - q;
  const cplx first = ipow(b, n) * ipow(q, n - 1) * ipow(1.0 - ipow(q, n - 1), n - 1) / ipow(one_minus_q, n - 1);
  const cplx second = ((n - 1) % 2 == 0 ? 1.0 : -1.0) * a * ipow(1.0 - ipow(q, n), n) / ipow(one_minus_q, n);
  const double sign = (((n - 1) * (n - 2) / 2) % 2 == 0) ? 1.0 : -1.0;
  return {sign * ipow(a, n - 2) * (first + second), QDiscPath::trinomial_closed_form, q,
          "l = 1 form; sign fixed to match the definitional value"};
}

}  // namespace zerocurve

#endif  // ZEROCURVE_QDISC_HPP
