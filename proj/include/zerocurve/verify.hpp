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

#ifndef ZEROCURVE_VERIFY_HPP
#define ZEROCURVE_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curvetrace.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "parallel.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "qdisc.hpp"
#include "recurrence.hpp"
#include "roots.hpp"
#include "version.hpp"

namespace zerocurve {

/// Where a zero of P_n came from in the factorization A^a B^b * cofactor.
enum class ZeroOrigin { factor_a, factor_b, cofactor };

inline const char* to_string(ZeroOrigin o) {
  switch (o) {
    case ZeroOrigin::factor_a: return "factor-A";
    case ZeroOrigin::factor_b: return "factor-B";
    case ZeroOrigin::cofactor: return "cofactor";
  }
  return "?";
}

/// Zeros of P_n with multiplicity, assembled from the structural factorization.
struct SequenceZeros {
  std::size_t degree = 0;
  bool identically_zero = false;
  std::vector<cplx> z;
  std::vector<double> residual;  // scaled residual against the factor it was found from
  std::vector<ZeroOrigin> origin;
  bool certified = true;
};

namespace detail {

/// Aberth sweeps on the cofactor, with the Newton ratio taken from the
/// recurrence on values instead of the expanded coefficients. Returns the
/// final relative correction of each root.
inline std::vector<double> refine_cofactor_roots(const RecurrenceSpec& spec, int n, const StructuralFactor& sf,
                                                 std::vector<cplx>& z, int max_sweeps = 80) {
  const std::size_t m = z.size();
  std::vector<double> step(m, std::numeric_limits<double>::infinity());
  std::vector<char> done(m, 0);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool all = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (done[i]) continue;
      const cplx r = cofactor_newton_ratio(spec, n, sf, z[i]);
      if (r == cplx{}) {
        step[i] = 0.0;
        done[i] = 1;
        continue;
      }
      cplx sum{};
      for (std::size_t j = 0; j < m; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      const cplx corr = r / (1.0 - r * sum);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) {
        all = false;
        continue;
      }
      z[i] -= corr;
      step[i] = std::abs(corr) / (1.0 + std::abs(z[i]));
      if (step[i] <= 1e-15) done[i] = 1;
      else all = false;
    }
    if (all) break;
  }
  // final correction size at the returned points
  for (std::size_t i = 0; i < m; ++i) {
    const cplx r = cofactor_newton_ratio(spec, n, sf, z[i]);
    cplx sum{};
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) sum += 1.0 / (z[i] - z[j]);
    const cplx corr = r == cplx{} ? cplx{} : r / (1.0 - r * sum);
    step[i] = std::isfinite(std::abs(corr)) ? std::abs(corr) / (1.0 + std::abs(z[i])) : std::numeric_limits<double>::infinity();
  }
  return step;
}

}  // namespace detail

/// Zeros of A and B come from their own root sets. Cofactor roots start from
/// the expanded coefficients and are then refined against P_n evaluated by the
/// recurrence; their residual is the final relative Aberth correction.
inline SequenceZeros sequence_zeros(const RecurrenceSpec& spec, int n, const RootOptions& ro = {}) {
  const StructuralFactor sf = structural_factor(spec, n);
  SequenceZeros out;
  if (sf.empty) {
    out.identically_zero = true;
    return out;
  }
  auto add = [&](const ComplexPoly& p, int times, ZeroOrigin o) {
    if (times <= 0 || p.degree().value_or(0) == 0) return;
    const RootSet rs = find_roots(p, ro);
    out.certified = out.certified && rs.certified;
    for (int t = 0; t < times; ++t)
      for (std::size_t i = 0; i < rs.size(); ++i) {
        out.z.push_back(rs.roots[i]);
        out.residual.push_back(rs.residuals[i]);
        out.origin.push_back(o);
      }
  };
  add(spec.A, sf.a_min, ZeroOrigin::factor_a);
  add(spec.B, sf.b_min, ZeroOrigin::factor_b);
  if (sf.cofactor.degree().value_or(0) > 0) {
    const RootSet rs = find_roots(sf.cofactor, ro);
    std::vector<cplx> z = rs.roots;
    const std::vector<double> step = detail::refine_cofactor_roots(spec, n, sf, z);
    for (std::size_t i = 0; i < z.size(); ++i) {
      out.z.push_back(z[i]);
      out.residual.push_back(step[i]);
      out.origin.push_back(ZeroOrigin::cofactor);
      if (!(step[i] <= ro.certify_tol)) out.certified = false;
    }
  }
  out.degree = out.z.size();
  return out;
}

/// Per-zero diagnostics.
struct ZeroRecord {
  cplx z;
  double residual = 0.0;
  ZeroOrigin origin = ZeroOrigin::cofactor;
  double abs_a = 0.0, abs_b = 0.0;
  double rel_a = 0.0, rel_b = 0.0;  // |A(z)| and |B(z)| over their evaluation scales
  bool filtered = false;
  cplx w;
  double im_defect = 0.0;  // |sin(arg w)|
  bool re_sign_ok = false;
  bool repeated_root = false;
  double rel_disc = 1.0;  // relative discriminant of D(t, z)
  std::optional<double> gamma_distance;
  std::optional<double> c4_distance;  // ||u| - 1|
  std::optional<double> u_real;
  std::optional<double> c5_residual;  // max normalized C5 residual over q_3, q_4
  std::optional<bool> in_omega;
  std::optional<bool> equimodular;
  bool pass = true;
  std::vector<std::string> flags;
};

struct Aggregates {
  std::size_t total = 0;
  std::size_t filtered = 0;
  std::size_t passing = 0;
  std::size_t failing = 0;
  std::size_t repeated = 0;
  double max_im_defect = 0.0;
  double max_gamma_distance = 0.0;
  double max_c4_distance = 0.0;
  double max_c5_residual = 0.0;
  double fraction_passing = 1.0;
  bool certified = true;
};

/// One row of the q-discriminant equivalence run.
struct QDiscRow {
  std::string label;
  std::vector<cplx> coeffs;
  int k = 0, l = 0;  // zero when the row is a plain polynomial
  cplx q;
  cplx definitional;
  std::optional<cplx> ismail;
  std::optional<cplx> closed_form;
  std::optional<cplx> discriminant;
  std::optional<cplx> ratio;  // closed form / definitional
  bool ok = true;
};

struct VerificationReport {
  std::string mode;
  RecurrenceSpec spec;
  int n = 0;
  double tol = 0.0;
  double ab_eps = 0.0;
  bool theorem_backed = false;
  std::vector<ZeroRecord> records;
  std::vector<QDiscRow> qdisc;
  Aggregates aggregates;
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;

  bool passed() const { return aggregates.failing == 0 && aggregates.certified; }
  /// Failures that contradict a proved statement rather than a conjecture.
  bool theorem_violation() const { return theorem_backed && aggregates.failing > 0; }
};

struct VerifyOptions {
  double tol = 1e-6;
  double ab_eps = 1e-8;
  /// Relative discriminant of D(t, z) at or below which z counts as a repeated-root point.
  double repeated_tol = 1e-10;
  unsigned jobs = 1;
  RootOptions roots;
};

inline bool is_theorem_backed(int k, int l) { return (k == 3 && l == 2) || (k == 4 && l == 3); }

namespace detail {

inline void fill_point(ZeroRecord& r, const RecurrenceSpec& spec, const VerifyOptions& o) {
  const cplx a = spec.A(r.z), b = spec.B(r.z);
  r.abs_a = std::abs(a);
  r.abs_b = std::abs(b);
  const double sa = spec.A.eval_scale(r.z), sb = spec.B.eval_scale(r.z);
  r.rel_a = sa > 0.0 ? r.abs_a / sa : r.abs_a;
  r.rel_b = sb > 0.0 ? r.abs_b / sb : r.abs_b;
  r.filtered = std::min(r.rel_a, r.rel_b) <= o.ab_eps;
  if (r.filtered) {
    r.flags.emplace_back("filtered");
    return;
  }
  const WPolar wp = w_polar(r.z, spec);
  r.w = wp.value();
  r.im_defect = std::abs(std::sin(wp.arg));
  r.re_sign_ok = classify_region(r.w, spec.k, spec.l) == SignClass::admissible;
  const RootSet d = find_roots(denominator_at(spec, r.z), o.roots);
  r.rel_disc = relative_discriminant(d.roots);
  r.repeated_root = r.rel_disc <= o.repeated_tol;
  if (r.repeated_root) r.flags.emplace_back("repeated-root");
  if (!d.certified) r.flags.emplace_back("uncertified-denominator");
}

inline void finish(VerificationReport& rep) {
  Aggregates& g = rep.aggregates;
  g.total = rep.records.size();
  for (auto& r : rep.records) {
    if (r.filtered) {
      ++g.filtered;
      continue;
    }
    if (r.repeated_root) ++g.repeated;
    g.max_im_defect = std::max(g.max_im_defect, r.im_defect);
    if (r.gamma_distance) g.max_gamma_distance = std::max(g.max_gamma_distance, *r.gamma_distance);
    if (r.c4_distance) g.max_c4_distance = std::max(g.max_c4_distance, *r.c4_distance);
    if (r.c5_residual) g.max_c5_residual = std::max(g.max_c5_residual, *r.c5_residual);
    if (r.pass) {
      ++g.passing;
    } else {
      ++g.failing;
      r.flags.emplace_back(rep.theorem_backed ? "theorem-violation" : "conjecture-candidate");
    }
  }
  const std::size_t tested = g.passing + g.failing;
  g.fraction_passing = tested == 0 ? 1.0 : static_cast<double>(g.passing) / static_cast<double>(tested);
}

inline VerificationReport start_report(const RecurrenceSpec& spec, int n, const VerifyOptions& o, const char* mode) {
  validate(spec);
  if (n < 1) throw DomainError("verification needs n >= 1");
  if (!(o.tol > 0.0) || !(o.ab_eps > 0.0)) throw DomainError("verification needs tol > 0 and ab_eps > 0");
  VerificationReport rep;
  rep.mode = mode;
  rep.spec = spec;
  rep.n = n;
  rep.tol = o.tol;
  rep.ab_eps = o.ab_eps;
  rep.theorem_backed = is_theorem_backed(spec.k, spec.l);
  const SequenceZeros sz = sequence_zeros(spec, n, o.roots);
  rep.aggregates.certified = sz.certified;
  rep.records.resize(sz.z.size());
  for (std::size_t i = 0; i < sz.z.size(); ++i) {
    rep.records[i].z = sz.z[i];
    rep.records[i].residual = sz.residual[i];
    rep.records[i].origin = sz.origin[i];
  }
  return rep;
}

}  // namespace detail

/// Zeros of P_n against Im(B^k/A^l) = 0 and the sign rule for (k, l). Zeros
/// where A or B is relatively below ab_eps are filtered. Repeated-root points
/// of D(t, z) only need w real.
inline VerificationReport verify_zeros_on_curve(const RecurrenceSpec& spec, int n, const VerifyOptions& o = {}) {
  VerificationReport rep = detail::start_report(spec, n, o, "zeros");
  parallel_for(rep.records.size(), o.jobs, [&](std::size_t i) {
    ZeroRecord& r = rep.records[i];
    detail::fill_point(r, spec, o);
    if (r.filtered) return;
    r.pass = r.im_defect <= o.tol && (r.re_sign_ok || r.repeated_root);
  });
  detail::finish(rep);
  return rep;
}

inline VerificationReport verify_zeros_on_curve(const RecurrenceSpec& spec, int n, double tol, double ab_eps = 1e-8) {
  VerifyOptions o;
  o.tol = tol;
  o.ab_eps = ab_eps;
  return verify_zeros_on_curve(spec, n, o);
}

/// Quotients t_i/t_1 of D(t, z0) at zeros z0 of P_n: Gamma for (3,2), the arc
/// C4 and the quartic C5 for (4,3).
inline VerificationReport verify_quotients(const RecurrenceSpec& spec, int n, const VerifyOptions& o = {}) {
  const Family fam = family_of(spec.k, spec.l);
  VerificationReport rep = detail::start_report(spec, n, o, "quotients");
  parallel_for(rep.records.size(), o.jobs, [&](std::size_t i) {
    ZeroRecord& r = rep.records[i];
    detail::fill_point(r, spec, o);
    if (r.filtered) return;
    if (r.repeated_root) {
      // two roots of D coincide, so some quotient is 1 and the curves do not apply
      r.pass = r.im_defect <= o.tol;
      return;
    }
    const RootSet d = find_roots(denominator_at(spec, r.z), o.roots);
    const QuotientProfile qp = quotient_profile(d, o.tol);
    r.equimodular = qp.smallest_pair_equimodular;
    if (fam == Family::k3_l2) {
      const double g = std::max(gamma_classify(qp.quotients[0], o.tol).distance,
                                gamma_classify(qp.quotients[1], o.tol).distance);
      r.gamma_distance = g;
      r.pass = g <= o.tol;
    } else {
      const cplx u = qp.quotients[0];
      r.c4_distance = std::abs(std::abs(u) - 1.0);
      r.u_real = u.real();
      double theta = std::arg(u);
      if (theta < 0.0) theta += 2.0 * std::numbers::pi;
      r.in_omega = omega_membership(fam, theta);
      r.c5_residual = std::max(quartic_classify(qp.quotients[1], o.tol).normalized,
                               quartic_classify(qp.quotients[2], o.tol).normalized);
      const bool on_c4 = *r.c4_distance <= o.tol && u.real() >= -1.0 / 3.0 - o.tol;
      if (*r.c4_distance > o.tol) r.flags.emplace_back("off-unit-circle");
      else if (!on_c4) r.flags.emplace_back("outside-c4-arc");
      if (*r.c5_residual > o.tol) r.flags.emplace_back("off-c5");
      r.pass = on_c4 && *r.c5_residual <= o.tol;
    }
    if (!*r.equimodular) {
      r.flags.emplace_back("smallest-pair-not-equimodular");
      r.pass = false;
    }
  });
  detail::finish(rep);
  return rep;
}

inline VerificationReport verify_quotients(const RecurrenceSpec& spec, int n, double tol) {
  VerifyOptions o;
  o.tol = tol;
  return verify_quotients(spec, n, o);
}

namespace detail {

inline bool close_rel(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * (1.0 + std::abs(a)); }

inline QDiscRow trinomial_row(std::string label, cplx a, cplx b, int k, int l, cplx q) {
  QDiscRow row;
  row.label = std::move(label);
  const ComplexPoly p = trinomial(a, b, k, l);
  row.coeffs.assign(p.coeffs().begin(), p.coeffs().end());
  row.k = k;
  row.l = l;
  row.q = q;
  const RootSet rs = find_roots(p);
  row.definitional = q_discriminant_definitional(p, q, rs).value;
  row.ismail = q_discriminant_ismail(p, q, rs).value;
  row.ok = close_rel(row.definitional, *row.ismail, 1e-8);
  if (q != cplx{1.0, 0.0}) {
    row.closed_form = q_discriminant_trinomial(a, b, k, l, q).value;
    if (std::abs(row.definitional) > 1e-8 * (1.0 + std::abs(*row.closed_form))) {
      row.ratio = *row.closed_form / row.definitional;
      row.ok = row.ok && close_rel(*row.ratio, ipow(b, l - 1), 1e-6);
    }
  } else {
    row.discriminant = discriminant(p);
    row.ok = row.ok && close_rel(row.definitional, *row.discriminant, 1e-8);
  }
  return row;
}

}  // namespace detail

/// Randomized agreement of the definitional, product and closed-form
/// q-discriminants, plus fixed checkpoints. Deterministic in the seed.
inline VerificationReport verify_qdisc_consistency(int samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("verify_qdisc_consistency needs samples >= 1");
  VerificationReport rep;
  rep.mode = "qdisc";
  rep.seed = seed;
  rep.tol = 1e-8;
  rep.theorem_backed = false;
  rep.qdisc.push_back(detail::trinomial_row("checkpoint", 1.0, 1.0, 3, 2, 2.0));
  rep.qdisc.push_back(detail::trinomial_row("checkpoint", 2.0, 1.0, 3, 2, 2.0));
  rep.qdisc.push_back(detail::trinomial_row("checkpoint", 1.0, 2.0, 3, 2, 2.0));
  rep.qdisc.push_back(detail::trinomial_row("q=1", 1.0, 1.0, 3, 2, 1.0));
  rep.qdisc.push_back(detail::trinomial_row("q=1", 1.0, 1.0, 4, 3, 1.0));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto disc_point = [&] { return std::polar(std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng)); };
  auto annulus = [&](double lo, double hi) { return std::polar(lo + (hi - lo) * unit(rng), 2.0 * std::numbers::pi * unit(rng)); };
  for (int s = 0; s < samples; ++s) {
    // random polynomial, definitional vs product formula
    const int deg = 2 + static_cast<int>(rng() % 5);
    std::vector<cplx> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = disc_point();
    if (std::abs(c.back()) < 0.05) c.back() = 0.5;
    const ComplexPoly p(c);
    cplx q = annulus(0.5, 2.0);
    QDiscRow row;
    row.label = "random";
    row.coeffs.assign(p.coeffs().begin(), p.coeffs().end());
    row.q = q;
    const RootSet rs = find_roots(p);
    row.definitional = q_discriminant_definitional(p, q, rs).value;
    row.ismail = q_discriminant_ismail(p, q, rs).value;
    row.ok = detail::close_rel(row.definitional, *row.ismail, 1e-8);
    rep.qdisc.push_back(std::move(row));

    // random trinomial, closed form over definitional
    const bool first = (s % 2) == 0;
    const cplx a = annulus(0.5, 2.0), b = annulus(0.5, 2.0);
    rep.qdisc.push_back(detail::trinomial_row("trinomial", a, b, first ? 3 : 4, first ? 2 : 3, annulus(0.5, 2.0)));
  }
  for (const auto& r : rep.qdisc) r.ok ? ++rep.aggregates.passing : ++rep.aggregates.failing;
  rep.aggregates.total = rep.qdisc.size();
  rep.aggregates.fraction_passing = static_cast<double>(rep.aggregates.passing) / static_cast<double>(rep.aggregates.total);
  return rep;
}

/// The worked examples with curve figures.
struct ExampleCase {
  std::string id;
  int k, l;
  std::string a_text, b_text;
  int default_n;
};

inline const std::vector<ExampleCase>& example_catalog() {
  static const std::vector<ExampleCase> cat{
      {"5.1", 3, 2, "z+5", "-z^2+2z+5", 30},
      {"5.2", 3, 2, "z^3-z+6", "-z^2+7z-5", 200},
      {"5.3", 4, 3, "z^2+1", "z^3-1", 40},
      {"5.4", 4, 3, "7z^5-2z+i", "-z^2-2z+5", 150},
  };
  return cat;
}

inline const ExampleCase& example_case(const std::string& id) {
  for (const auto& e : example_catalog())
    if (e.id == id) return e;
  throw DomainError("unknown example id: " + id);
}

inline RecurrenceSpec example_spec(const std::string& id) {
  const auto& e = example_case(id);
  return {e.k, e.l, parse_poly(e.a_text), parse_poly(e.b_text)};
}

struct FigureData {
  RecurrenceSpec spec;
  int n = 0;
  BBox bbox;
  SequenceZeros zeros;
  CurveNet curve;
};

/// Padded, square bounding box around a point set.
inline BBox auto_bbox(const std::vector<cplx>& pts, double pad = 0.15) {
  if (pts.empty()) return {};
  double x0 = pts[0].real(), x1 = x0, y0 = pts[0].imag(), y1 = y0;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.real());
    x1 = std::max(x1, p.real());
    y0 = std::min(y0, p.imag());
    y1 = std::max(y1, p.imag());
  }
  const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
  const double half = std::max({0.5 * (x1 - x0), 0.5 * (y1 - y0), 0.5}) * (1.0 + pad);
  return {cx - half, cx + half, cy - half, cy + half};
}

inline FigureData reproduce_figure(const RecurrenceSpec& spec, int n, int grid = 300, unsigned jobs = 1,
                                   std::optional<BBox> bbox = std::nullopt) {
  FigureData fd;
  fd.spec = spec;
  fd.n = n;
  fd.zeros = sequence_zeros(spec, n);
  fd.bbox = bbox ? *bbox : auto_bbox(fd.zeros.z);
  TraceOptions to;
  to.jobs = jobs;
  fd.curve = trace_curve(spec, fd.bbox, grid, grid, to);
  return fd;
}

inline FigureData reproduce_figure(const std::string& example_id, int n, int grid = 300, unsigned jobs = 1) {
  return reproduce_figure(example_spec(example_id), n, grid, jobs);
}

}  // namespace zerocurve

#endif  // ZEROCURVE_VERIFY_HPP
