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

#ifndef ZEROCURVE_ROOTS_HPP
#define ZEROCURVE_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace zerocurve {

struct RootOptions {
  int max_iters = 200;
  /// Per-root stopping criterion on the Aberth correction, relative to |root|.
  double tol = 1e-13;
  /// A root is certified when its scaled residual is at most this.
  double certify_tol = 1e-10;
  /// Relative modulus gap below which two roots count as tied for ordering.
  double tie_tol = 1e-9;
};

/// All roots of one polynomial. `order` sorts them by modulus, ties by principal argument.
struct RootSet {
  std::vector<cplx> roots;
  std::vector<double> residuals;
  std::vector<std::size_t> order;
  bool certified = false;
  int iterations = 0;

  std::size_t size() const noexcept { return roots.size(); }
  /// i-th root in modulus order.
  cplx sorted(std::size_t i) const { return roots[order.at(i)]; }
  std::vector<cplx> sorted_roots() const {
    std::vector<cplx> out;
    out.reserve(order.size());
    for (auto i : order) out.push_back(roots[i]);
    return out;
  }
};

namespace detail {

struct NewtonRatio {
  cplx ratio;     // p(z) / p'(z)
  bool exact_zero;
};

/// p/p' without overflow: direct Horner inside the unit disc, reversed
/// polynomial in 1/z outside it.
inline NewtonRatio newton_ratio(std::span<const cplx> c, cplx z) {
  const std::size_t n = c.size() - 1;
  if (std::abs(z) <= 1.0) {
    cplx p = c[n], dp{};
    for (std::size_t i = n; i-- > 0;) {
      dp = dp * z + p;
      p = p * z + c[i];
    }
    if (p == cplx{}) return {cplx{}, true};
    return {p / dp, false};
  }
  const cplx y = 1.0 / z;
  cplx r = c[0], dr{};
  for (std::size_t i = 1; i <= n; ++i) {
    dr = dr * y + r;
    r = r * y + c[i];
  }
  if (r == cplx{}) return {cplx{}, true};
  // p(z) = z^n r(1/z); p'(z) = z^{n-1} (n r - y r').
  return {z * r / (static_cast<double>(n) * r - y * dr), false};
}

/// |p(z)| / (max|c| (1 + |z|)^n), evaluated without forming z^n.
inline double scaled_residual(std::span<const cplx> c, cplx z) {
  const std::size_t n = c.size() - 1;
  double cmax = 0.0;
  for (const auto& x : c) cmax = std::max(cmax, std::abs(x));
  const double rz = std::abs(z);
  if (rz <= 1.0) {
    cplx p{};
    for (std::size_t i = n + 1; i-- > 0;) p = p * z + c[i];
    return std::abs(p) / (cmax * std::pow(1.0 + rz, static_cast<double>(n)));
  }
  const cplx y = 1.0 / z;
  cplx r{};
  for (std::size_t i = 0; i <= n; ++i) r = r * y + c[i];
  return std::abs(r) / cmax * std::pow(rz / (1.0 + rz), static_cast<double>(n));
}

/// Starting points on circles whose radii come from the upper convex hull of
/// (i, log|c_i|); with a single hull edge this is one circle of the
/// coefficient-ratio radius.
inline std::vector<cplx> initial_guesses(std::span<const cplx> c) {
  const std::size_t n = c.size() - 1;
  std::vector<double> lg(n + 1);
  for (std::size_t i = 0; i <= n; ++i) lg[i] = c[i] == cplx{} ? -1e300 : std::log(std::abs(c[i]));
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i <= n; ++i) {
    if (lg[i] <= -1e299) continue;
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2], b = hull.back();
      const double cross = (static_cast<double>(b) - static_cast<double>(a)) * (lg[i] - lg[a]) -
                           (lg[b] - lg[a]) * (static_cast<double>(i) - static_cast<double>(a));
      if (cross >= 0.0) hull.pop_back();
      else break;
    }
    hull.push_back(i);
  }
  std::vector<cplx> z;
  z.reserve(n);
  constexpr double sigma = 0.7;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const std::size_t a = hull[h], b = hull[h + 1];
    const std::size_t cnt = b - a;
    const double radius = std::exp((lg[a] - lg[b]) / static_cast<double>(cnt));
    for (std::size_t j = 0; j < cnt; ++j) {
      const double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(cnt) +
                         2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(n) + sigma;
      z.push_back(std::polar(radius, ang));
    }
  }
  return z;
}

/// Modulus order with principal-argument tie break inside runs of near-equal moduli.
inline std::vector<std::size_t> modulus_order(const std::vector<cplx>& r, double tie_tol) {
  std::vector<std::size_t> idx(r.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return std::abs(r[a]) < std::abs(r[b]); });
  std::size_t start = 0;
  while (start < idx.size()) {
    std::size_t end = start + 1;
    while (end < idx.size()) {
      const double m0 = std::abs(r[idx[end - 1]]), m1 = std::abs(r[idx[end]]);
      if (m1 - m0 > tie_tol * std::max(m1, 1e-300)) break;
      ++end;
    }
    std::stable_sort(idx.begin() + static_cast<std::ptrdiff_t>(start), idx.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](std::size_t a, std::size_t b) { return std::arg(r[a]) < std::arg(r[b]); });
    start = end;
  }
  return idx;
}

}  // namespace detail

/// All complex roots by Aberth-Ehrlich simultaneous iteration followed by one
/// Newton polishing pass. Exact zero low-order coefficients yield exact zero roots.
inline RootSet find_roots(const ComplexPoly& p, const RootOptions& opts = {}) {
  if (p.is_zero() || *p.degree() == 0) throw DomainError("find_roots needs degree >= 1");
  if (!p.is_finite()) throw DomainError("find_roots: non-finite coefficient");

  const double cmax = p.max_abs_coeff();
  std::vector<cplx> all(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : all) x /= cmax;

  std::size_t zeros = 0;
  while (zeros < all.size() && all[zeros] == cplx{}) ++zeros;
  std::vector<cplx> c(all.begin() + static_cast<std::ptrdiff_t>(zeros), all.end());
  const std::size_t n = c.size() - 1;

  RootSet rs;
  rs.roots.assign(zeros, cplx{});
  std::vector<cplx> z;
  bool converged_all = true;
  if (n == 1) {
    z.push_back(-c[0] / c[1]);
  } else if (n > 1) {
    z = detail::initial_guesses(c);
    std::vector<char> done(n, 0);
    std::size_t remaining = n;
    int it = 0;
    for (; it < opts.max_iters && remaining > 0; ++it) {
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        const auto nr = detail::newton_ratio(c, z[i]);
        if (nr.exact_zero) {
          done[i] = 1;
          --remaining;
          continue;
        }
        cplx sum{};
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) sum += 1.0 / (z[i] - z[j]);
        const cplx corr = nr.ratio / (1.0 - nr.ratio * sum);
        if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) continue;
        z[i] -= corr;
        if (std::abs(corr) <= opts.tol * std::max(std::abs(z[i]), 1e-300)) {
          done[i] = 1;
          --remaining;
        }
      }
    }
    rs.iterations = it;
    // Roots stuck at the rounding floor of a cluster still count as converged.
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && detail::scaled_residual(c, z[i]) > opts.certify_tol) converged_all = false;

    for (auto& zi : z) {
      const auto nr = detail::newton_ratio(c, zi);
      if (nr.exact_zero) continue;
      const cplx cand = zi - nr.ratio;
      if (std::isfinite(cand.real()) && std::isfinite(cand.imag()) &&
          detail::scaled_residual(c, cand) < detail::scaled_residual(c, zi))
        zi = cand;
    }
  }
  rs.roots.insert(rs.roots.end(), z.begin(), z.end());
  rs.residuals.reserve(rs.roots.size());
  bool ok = converged_all;
  for (const auto& r : rs.roots) {
    const double res = detail::scaled_residual(all, r);
    rs.residuals.push_back(res);
    if (!(res <= opts.certify_tol)) ok = false;
  }
  rs.certified = ok;
  rs.order = detail::modulus_order(rs.roots, opts.tie_tol);
  return rs;
}

/// Ratios of roots to the smallest-modulus root.
struct QuotientProfile {
  cplx base;
  std::vector<cplx> quotients;  // q_2, q_3, ... in modulus order
  bool smallest_pair_equimodular = false;
};

inline QuotientProfile quotient_profile(const RootSet& rs, double equimodular_tol = 1e-6) {
  if (rs.order.empty()) throw DomainError("quotient_profile: empty root set");
  QuotientProfile qp;
  qp.base = rs.sorted(0);
  if (qp.base == cplx{}) throw DomainError("quotient_profile: smallest root is zero");
  for (std::size_t i = 1; i < rs.order.size(); ++i) qp.quotients.push_back(rs.sorted(i) / qp.base);
  if (!qp.quotients.empty()) qp.smallest_pair_equimodular = std::abs(qp.quotients[0]) <= 1.0 + equimodular_tol;
  return qp;
}

}  // namespace zerocurve

#endif  // ZEROCURVE_ROOTS_HPP
