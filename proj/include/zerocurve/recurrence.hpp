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

#ifndef ZEROCURVE_RECURRENCE_HPP
#define ZEROCURVE_RECURRENCE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "qdisc.hpp"

namespace zerocurve {

/// The family P_n + B P_{n-l} + A P_{n-k} = 0 with P_0 = 1 and P_{<0} = 0.
struct RecurrenceSpec {
  int k = 3;
  int l = 2;
  ComplexPoly A;
  ComplexPoly B;
};

inline void validate(const RecurrenceSpec& s) {
  if (s.k < 2) throw DomainError("recurrence needs k >= 2");
  if (s.l < 1 || s.l >= s.k) throw DomainError("recurrence needs 1 <= l < k");
  if (std::gcd(s.k, s.l) != 1) throw DomainError("recurrence needs gcd(k, l) = 1");
  if (s.A.is_zero()) throw DomainError("recurrence needs A not identically zero");
  if (s.B.is_zero()) throw DomainError("recurrence needs B not identically zero");
}

/// P_0 .. P_{n_max} of one spec.
struct SequenceWindow {
  RecurrenceSpec spec;
  std::vector<ComplexPoly> polys;
};

inline SequenceWindow sequence_generate(const RecurrenceSpec& spec, int n_max) {
  validate(spec);
  if (n_max < 0) throw DomainError("sequence_generate needs n_max >= 0");
  SequenceWindow win{spec, {}};
  auto& p = win.polys;
  p.reserve(static_cast<std::size_t>(n_max) + 1);
  p.push_back(ComplexPoly::constant(1.0));
  for (int n = 1; n <= n_max; ++n) {
    ComplexPoly next;
    if (n >= spec.l) next -= spec.B * p[static_cast<std::size_t>(n - spec.l)];
    if (n >= spec.k) next -= spec.A * p[static_cast<std::size_t>(n - spec.k)];
    p.push_back(std::move(next));
  }
  return win;
}

/// Taylor coefficients of 1 / den(t) where den has polynomial-in-z coefficients
/// den[0], den[1], ... and den[0] is a nonzero constant.
inline std::vector<ComplexPoly> reciprocal_series(const std::vector<ComplexPoly>& den, int n_max) {
  if (den.empty() || den[0].is_zero() || *den[0].degree() != 0)
    throw DomainError("reciprocal_series needs a nonzero constant term");
  const cplx d0 = den[0][0];
  std::vector<ComplexPoly> c;
  c.reserve(static_cast<std::size_t>(n_max) + 1);
  c.push_back(ComplexPoly::constant(1.0 / d0));
  for (int n = 1; n <= n_max; ++n) {
    ComplexPoly acc;
    const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(n), den.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) {
      if (den[j].is_zero()) continue;
      acc += den[j] * c[static_cast<std::size_t>(n) - j];
    }
    c.push_back(acc * (-1.0 / d0));
  }
  return c;
}

/// Generating-function route: coefficients of 1 / (1 + B t^l + A t^k).
inline SequenceWindow series_expand(const RecurrenceSpec& spec, int n_max) {
  validate(spec);
  if (n_max < 0) throw DomainError("series_expand needs n_max >= 0");
  std::vector<ComplexPoly> den(static_cast<std::size_t>(spec.k) + 1);
  den[0] = ComplexPoly::constant(1.0);
  den[static_cast<std::size_t>(spec.l)] = spec.B;
  den[static_cast<std::size_t>(spec.k)] = spec.A;
  return {spec, reciprocal_series(den, n_max)};
}

/// D(t, z0) = A(z0) t^k + B(z0) t^l + 1.
inline ComplexPoly denominator_at(const RecurrenceSpec& spec, cplx z0) {
  return trinomial(spec.A(z0), spec.B(z0), spec.k, spec.l);
}

/// Exact structural factorization P_n = A^a_min B^b_min * cofactor, from
/// P_n = sum over k a + l b = n of C(a+b, a) (-A)^a (-B)^b.
struct StructuralFactor {
  int a_min = 0;
  int b_min = 0;
  ComplexPoly cofactor;
  bool empty = true;  // no (a, b) solves k a + l b = n, so P_n = 0
};

inline StructuralFactor structural_factor(const RecurrenceSpec& spec, int n) {
  validate(spec);
  if (n < 0) throw DomainError("structural_factor needs n >= 0");
  std::vector<std::pair<int, int>> terms;
  for (int a = 0; spec.k * a <= n; ++a) {
    const int rest = n - spec.k * a;
    if (rest % spec.l == 0) terms.emplace_back(a, rest / spec.l);
  }
  StructuralFactor sf;
  if (terms.empty()) return sf;
  sf.empty = false;
  sf.a_min = terms.front().first;
  sf.b_min = terms.front().second;
  for (const auto& [a, b] : terms) {
    sf.a_min = std::min(sf.a_min, a);
    sf.b_min = std::min(sf.b_min, b);
  }
  for (const auto& [a, b] : terms) {
    // C(a+b, a) in floating point.
    double binom = 1.0;
    for (int i = 1; i <= a; ++i) binom = binom * static_cast<double>(b + i) / static_cast<double>(i);
    const double sign = ((a + b) % 2 == 0) ? 1.0 : -1.0;
    sf.cofactor += pow(spec.A, static_cast<unsigned>(a - sf.a_min)) * pow(spec.B, static_cast<unsigned>(b - sf.b_min)) *
                   cplx{sign * binom, 0.0};
  }
  return sf;
}

/// P_n(z) and P_n'(z) by running the recurrence on values. Magnitudes are
/// renormalized as they grow, so only the returned ratio is meaningful when
/// `rescaled` is set.
struct PointValue {
  cplx value;
  cplx derivative;
  bool rescaled = false;
};

inline PointValue evaluate_sequence(const RecurrenceSpec& spec, int n, cplx z) {
  validate(spec);
  if (n < 0) throw DomainError("evaluate_sequence needs n >= 0");
  const cplx a = spec.A(z), b = spec.B(z);
  const cplx da = derivative(spec.A)(z), db = derivative(spec.B)(z);
  const std::size_t k = static_cast<std::size_t>(spec.k), l = static_cast<std::size_t>(spec.l);
  // ring buffers of the last k values; index n mod k
  std::vector<cplx> v(k, cplx{}), d(k, cplx{});
  v[0] = 1.0;
  bool rescaled = false;
  for (std::size_t m = 1; m <= static_cast<std::size_t>(n); ++m) {
    const cplx pl = m >= l ? v[(m - l) % k] : cplx{};
    const cplx dl = m >= l ? d[(m - l) % k] : cplx{};
    const cplx pk = m >= k ? v[(m - k) % k] : cplx{};
    const cplx dk = m >= k ? d[(m - k) % k] : cplx{};
    const cplx nv = -b * pl - a * pk;
    const cplx nd = -db * pl - b * dl - da * pk - a * dk;
    v[m % k] = nv;
    d[m % k] = nd;
    double mag = 0.0;
    for (std::size_t i = 0; i < k; ++i) mag = std::max({mag, std::abs(v[i]), std::abs(d[i])});
    const double f = mag > 1e150 ? 1e-150 : (mag > 0.0 && mag < 1e-150 ? 1e150 : 1.0);
    if (f != 1.0) {
      for (std::size_t i = 0; i < k; ++i) {
        v[i] *= f;
        d[i] *= f;
      }
      rescaled = true;
    }
  }
  return {v[static_cast<std::size_t>(n) % k], d[static_cast<std::size_t>(n) % k], rescaled};
}

/// Newton ratio c/c' of the cofactor c = P_n / (A^a_min B^b_min) at z, from the
/// logarithmic derivative of P_n computed on values. Zero when P_n(z) = 0 exactly.
inline cplx cofactor_newton_ratio(const RecurrenceSpec& spec, int n, const StructuralFactor& sf, cplx z) {
  const PointValue pv = evaluate_sequence(spec, n, z);
  if (pv.value == cplx{}) return {};
  cplx logd = pv.derivative / pv.value;
  if (sf.a_min > 0) logd -= static_cast<double>(sf.a_min) * derivative(spec.A)(z) / spec.A(z);
  if (sf.b_min > 0) logd -= static_cast<double>(sf.b_min) * derivative(spec.B)(z) / spec.B(z);
  return 1.0 / logd;
}

}  // namespace zerocurve

#endif  // ZEROCURVE_RECURRENCE_HPP
