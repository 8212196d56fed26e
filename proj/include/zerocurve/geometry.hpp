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

#ifndef ZEROCURVE_GEOMETRY_HPP
#define ZEROCURVE_GEOMETRY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

// Quotient geometry of the smallest roots of A t^k + B t^l + 1 for the two
// settled families (k, l) = (3, 2) and (4, 3).

namespace zerocurve {

enum class Family { k3_l2, k4_l3 };

inline Family family_of(int k, int l) {
  if (k == 3 && l == 2) return Family::k3_l2;
  if (k == 4 && l == 3) return Family::k4_l3;
  throw DomainError("quotient geometry exists only for (k, l) in {(3, 2), (4, 3)}");
}

enum class GammaBranch { C1, C2, C3 };

inline const char* to_string(GammaBranch b) {
  switch (b) {
    case GammaBranch::C1: return "C1";
    case GammaBranch::C2: return "C2";
    case GammaBranch::C3: return "C3";
  }
  return "?";
}

/// Membership in Gamma = C1 u C2 u C3:
///   C1: |q| = 1, Re q <= -1/2;  C2: |q + 1| = 1, Re q >= -1/2;  C3: Re q = -1/2, |Im q| >= sqrt(3)/2.
/// `branches` lists every branch within tolerance (junction points match several); empty means none.
struct GammaVerdict {
  std::vector<GammaBranch> branches;
  double distance = 0.0;
  std::array<double, 3> branch_distance{};

  bool on_gamma() const noexcept { return !branches.empty(); }
  bool on(GammaBranch b) const { return std::find(branches.begin(), branches.end(), b) != branches.end(); }
};

namespace detail {

inline constexpr double kHalfSqrt3 = 0.8660254037844386;

/// Distance from p to the arc {c + r e^{i phi} : phi in [lo, hi]} (lo < hi within (-pi, pi]) .
inline double arc_distance(cplx p, cplx center, double lo, double hi) {
  const cplx d = p - center;
  const double rad = std::abs(d);
  const cplx end_lo = center + std::polar(1.0, lo);
  const cplx end_hi = center + std::polar(1.0, hi);
  const double to_ends = std::min(std::abs(p - end_lo), std::abs(p - end_hi));
  if (rad == 0.0) return 1.0;
  const double phi = std::arg(d);
  if (phi >= lo && phi <= hi) return std::min(std::abs(rad - 1.0), to_ends);
  return to_ends;
}

}  // namespace detail

inline GammaVerdict gamma_classify(cplx q, double tol = 1e-6) {
  using std::numbers::pi;
  GammaVerdict v;
  // C1: angles [2pi/3, 4pi/3] about 0 -> check via the reflected angle range of -q.
  v.branch_distance[0] = detail::arc_distance(-q, 0.0, -pi / 3.0, pi / 3.0);
  // C2: angles [-pi/3, pi/3] about -1.
  v.branch_distance[1] = detail::arc_distance(q, -1.0, -pi / 3.0, pi / 3.0);
  // C3: vertical line Re = -1/2 outside the gap |Im| < sqrt(3)/2.
  double y = q.imag();
  if (std::abs(y) < detail::kHalfSqrt3) y = y < 0.0 ? -detail::kHalfSqrt3 : detail::kHalfSqrt3;
  v.branch_distance[2] = std::abs(q - cplx{-0.5, y});
  v.distance = *std::min_element(v.branch_distance.begin(), v.branch_distance.end());
  constexpr std::array<GammaBranch, 3> all{GammaBranch::C1, GammaBranch::C2, GammaBranch::C3};
  for (std::size_t i = 0; i < 3; ++i)
    if (v.branch_distance[i] <= tol) v.branches.push_back(all[i]);
  return v;
}

inline cplx mobius_invert(cplx z) {
  if (z == cplx{}) throw DomainError("mobius_invert: z = 0");
  return 1.0 / z;
}

/// Quartic C5: 1 + 2x + 2x^2 + 2x^3 + x^4 - 2y^2 + 2xy^2 + 2x^2y^2 + y^4 = 0, and the arc
/// C4 = {|u| = 1, Re u >= -1/3}.
struct QuarticVerdict {
  double residual = 0.0;
  double normalized = 0.0;  // |residual| / |gradient|, a distance proxy
  bool on_curve = false;
  bool c4_arc = false;
};

inline double quartic_c5(double x, double y) {
  const double x2 = x * x, y2 = y * y;
  return 1.0 + 2.0 * x + 2.0 * x2 + 2.0 * x2 * x + x2 * x2 - 2.0 * y2 + 2.0 * x * y2 + 2.0 * x2 * y2 + y2 * y2;
}

inline std::pair<double, double> quartic_c5_gradient(double x, double y) {
  const double x2 = x * x, y2 = y * y;
  const double gx = 2.0 + 4.0 * x + 6.0 * x2 + 4.0 * x2 * x + 2.0 * y2 + 4.0 * x * y2;
  const double gy = -4.0 * y + 4.0 * x * y + 4.0 * x2 * y + 4.0 * y2 * y;
  return {gx, gy};
}

inline QuarticVerdict quartic_classify(cplx q, double tol = 1e-6) {
  QuarticVerdict v;
  v.residual = quartic_c5(q.real(), q.imag());
  const auto [gx, gy] = quartic_c5_gradient(q.real(), q.imag());
  const double g = std::hypot(gx, gy);
  v.normalized = g > 0.0 ? std::abs(v.residual) / g : std::abs(v.residual);
  v.on_curve = v.normalized <= tol;
  v.c4_arc = std::abs(std::abs(q) - 1.0) <= tol && q.real() >= -1.0 / 3.0 - tol;
  return v;
}

/// Roots of q^2 + u(u+1)/(u^2+u+1) q + u^2/(u^2+u+1) = 0: the remaining two
/// quotients of the (4, 3) trinomial once u = q_2 is known.
inline std::pair<cplx, cplx> quotient_pair_from_u(cplx u) {
  const cplx den = u * u + u + 1.0;
  if (std::abs(den) <= 1e-14 * (1.0 + std::norm(u))) throw DomainError("quotient_pair_from_u: u^2 + u + 1 = 0");
  const cplx b = u * (u + 1.0) / den;
  const cplx c = u * u / den;
  const cplx root = std::sqrt(b * b - 4.0 * c);
  // Pick the sign that avoids cancellation, recover the other root from the product.
  const cplx big = std::real(std::conj(b) * root) >= 0.0 ? -(b + root) / 2.0 : -(b - root) / 2.0;
  if (big == cplx{}) return {cplx{}, cplx{}};
  const cplx small = c / big;
  return {big, small};
}

/// B^3/A^2 as a function of a root quotient q, family (3, 2).
inline cplx f32(cplx q) {
  if (q == cplx{} || q == cplx{-1.0, 0.0}) throw PoleError("f32 pole at q in {0, -1}");
  const cplx s = 1.0 + q + q * q;
  const cplx d = q * (1.0 + q);
  return -(s * s * s) / (d * d);
}

/// B^4/A^3 as a function of q, family (4, 3), in the sign convention that matches
/// the repeated-root value f43(1) = 256/27; continuous at q = 1.
inline cplx f43(cplx q) {
  const cplx s = 1.0 + q + q * q;
  if (q == cplx{} || std::abs(s) <= 1e-15) throw PoleError("f43 pole at q = 0 or a primitive cube root of unity");
  const cplx a = (1.0 + q) * (1.0 + q * q);
  const cplx a2 = a * a;
  return a2 * a2 / (q * q * q * s * s * s);
}

/// Real parametrization of f on the unit circle q = e^{i theta}.
inline double F_theta(Family fam, double theta) {
  using std::numbers::pi;
  const double t = std::fmod(std::fmod(theta, 2.0 * pi) + 2.0 * pi, 2.0 * pi);
  constexpr double eps = 1e-12;
  auto near = [&](double p) { return std::abs(t - p) <= eps || std::abs(t - p - 2.0 * pi) <= eps || std::abs(t - p + 2.0 * pi) <= eps; };
  if (fam == Family::k3_l2) {
    if (near(pi)) throw PoleError("F_theta(3,2) pole at theta = pi");
    const double c = std::cos(t);
    const double s = 2.0 * c + 1.0;
    return -(s * s * s) / (2.0 * c + 2.0);
  }
  if (near(0.0) || near(2.0 * pi / 3.0) || near(4.0 * pi / 3.0)) throw PoleError("F_theta(4,3) pole");
  const double num = std::cos(4.0 * t) - 1.0;
  return num * num / ((std::cos(3.0 * t) - 1.0) * (std::cos(2.0 * t) - std::cos(t)));
}

/// h(q) = (1-q^k)^k / ((1-q^l)^l (q^l-q^k)^{k-l}); real on |q| = 1.
inline cplx h_ratio(cplx q, int k, int l) {
  if (l < 1 || l >= k) throw DomainError("h_ratio needs 1 <= l < k");
  const cplx qk = ipow(q, k), ql = ipow(q, l);
  const cplx f1 = 1.0 - ql, f2 = ql - qk;
  const double scale = 1.0 + std::abs(qk);
  if (std::abs(f1) <= 1e-14 * scale || std::abs(f2) <= 1e-14 * scale) throw PoleError("h_ratio pole");
  return ipow(1.0 - qk, k) / (ipow(f1, l) * ipow(f2, k - l));
}

/// Admissible arc of the second quotient u = e^{i theta} (closed intervals).
inline bool omega_membership(Family fam, double theta) {
  using std::numbers::pi;
  constexpr double eps = 1e-12;
  if (fam == Family::k3_l2) return theta >= 2.0 * pi / 3.0 - eps && theta <= 4.0 * pi / 3.0 + eps;
  return (theta >= pi / 2.0 - eps && theta <= 2.0 * pi / 3.0 + eps) ||
         (theta >= 4.0 * pi / 3.0 - eps && theta <= 3.0 * pi / 2.0 + eps);
}

}  // namespace zerocurve

#endif  // ZEROCURVE_GEOMETRY_HPP
