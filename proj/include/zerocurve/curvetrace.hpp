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

#ifndef ZEROCURVE_CURVETRACE_HPP
#define ZEROCURVE_CURVETRACE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "parallel.hpp"
#include "poly.hpp"
#include "recurrence.hpp"
#include "roots.hpp"

namespace zerocurve {

struct BBox {
  double x0 = -1.0, x1 = 1.0, y0 = -1.0, y1 = 1.0;

  bool valid() const noexcept { return x1 > x0 && y1 > y0 && std::isfinite(x0 + x1 + y0 + y1); }
  bool contains(cplx z) const noexcept { return z.real() >= x0 && z.real() <= x1 && z.imag() >= y0 && z.imag() <= y1; }
};

/// w = B^k / A^l in polar form: log|w| and arg w, accumulated from A and B so
/// that high powers never overflow.
struct WPolar {
  double log_abs = 0.0;
  double arg = 0.0;
  bool zero = false;  // B(z) = 0

  /// Im(w) / (1 + |w|), bounded in (-1, 1).
  double defect() const noexcept {
    if (zero) return 0.0;
    return std::sin(arg) / (1.0 + std::exp(-log_abs));
  }
  cplx value() const { return zero ? cplx{} : std::polar(std::exp(log_abs), arg); }
};

inline WPolar w_polar(cplx z, const RecurrenceSpec& spec) {
  const cplx a = spec.A(z);
  if (a == cplx{}) throw PoleError("w_map: A(z) = 0");
  const cplx b = spec.B(z);
  if (b == cplx{}) return {0.0, 0.0, true};
  WPolar w;
  w.log_abs = spec.k * std::log(std::abs(b)) - spec.l * std::log(std::abs(a));
  w.arg = std::remainder(spec.k * std::arg(b) - spec.l * std::arg(a), 2.0 * std::numbers::pi);
  return w;
}

inline cplx w_map(cplx z, const RecurrenceSpec& spec) { return w_polar(z, spec).value(); }

/// Whether w lies in the range the sign rules allow for (k, l).
enum class SignClass { admissible, excluded };

inline const char* to_string(SignClass c) { return c == SignClass::admissible ? "admissible" : "excluded"; }

/// l = 1: 0 <= (-1)^k Re w <= k^k / (k-1)^{k-1}.
/// l > 1: Re w >= 0 when k is even or l is even, Re w <= 0 when k and l are both odd.
inline SignClass classify_region(cplx w, int k, int l, double tol = 1e-9) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return SignClass::excluded;
  const double slack = tol * (1.0 + std::abs(w));
  if (l == 1) {
    const double v = (k % 2 == 0 ? 1.0 : -1.0) * w.real();
    const double bound = std::pow(static_cast<double>(k), k) / std::pow(static_cast<double>(k - 1), k - 1);
    return (v >= -slack && v <= bound + slack) ? SignClass::admissible : SignClass::excluded;
  }
  const bool nonneg = (k % 2 == 0) || (l % 2 == 0);
  const double v = nonneg ? w.real() : -w.real();
  return v >= -slack ? SignClass::admissible : SignClass::excluded;
}

struct CurveVertex {
  cplx z;
  cplx w;
  SignClass sign = SignClass::excluded;
};

struct Polyline {
  std::vector<CurveVertex> vertices;
  bool closed = false;
};

/// Polyline approximation of Im(B^k/A^l) = 0 inside a box.
struct CurveNet {
  BBox bbox;
  int nx = 0, ny = 0;
  double refine_tol = 0.0;
  std::vector<Polyline> polylines;

  std::size_t vertex_count() const {
    std::size_t n = 0;
    for (const auto& p : polylines) n += p.vertices.size();
    return n;
  }
};

struct TraceOptions {
  double refine_tol = 1e-10;
  unsigned jobs = 1;
  /// |A(z)| below this times the evaluation scale of A marks a pole node.
  double pole_guard = 1e-12;
};

namespace detail {

struct Grid {
  BBox box;
  int nx, ny;
  double hx() const { return (box.x1 - box.x0) / nx; }
  double hy() const { return (box.y1 - box.y0) / ny; }
  cplx node(int i, int j) const { return {box.x0 + i * hx(), box.y0 + j * hy()}; }
  std::size_t node_id(int i, int j) const { return static_cast<std::size_t>(j) * (nx + 1) + i; }
  // horizontal edges (i,j)-(i+1,j) first, then vertical edges (i,j)-(i,j+1)
  std::size_t hedge(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
  std::size_t vedge(int i, int j) const {
    return static_cast<std::size_t>(nx) * (ny + 1) + static_cast<std::size_t>(j) * (nx + 1) + i;
  }
};

inline double defect_at(cplx z, const RecurrenceSpec& spec) { return w_polar(z, spec).defect(); }

/// Bisection for the sign change of Im(w)/(1+|w|) on segment [za, zb] until the
/// bracket is narrower than tol and the defect at its midpoint is at most tol.
/// A jump across a pole of w never meets the second test and is dropped.
inline std::optional<cplx> refine_crossing(cplx za, cplx zb, double fa, const RecurrenceSpec& spec, double tol) {
  cplx lo = za, hi = zb;
  double flo = fa;
  try {
    for (int it = 0; it < 400; ++it) {
      const cplx mid = 0.5 * (lo + hi);
      const double fm = defect_at(mid, spec);
      if (fm == 0.0 || (std::abs(hi - lo) <= tol && std::abs(fm) <= tol)) return mid;
      if (mid == lo || mid == hi) return std::nullopt;
      if ((fm >= 0.0) == (flo >= 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
  } catch (const PoleError&) {
  }
  return std::nullopt;
}

}  // namespace detail

/// Marching squares on s(z) = Im(w)/(1+|w|) over an nx-by-ny cell grid; each
/// edge crossing refined by bisection, saddles resolved by the cell-center sign.
/// Cells touching a zero of A are skipped.
inline CurveNet trace_curve(const RecurrenceSpec& spec, const BBox& bbox, int nx, int ny, const TraceOptions& opts = {}) {
  validate(spec);
  if (!bbox.valid()) throw DomainError("trace_curve: degenerate bounding box");
  if (nx < 8 || ny < 8) throw DomainError("trace_curve: grid must be at least 8x8");
  const detail::Grid g{bbox, nx, ny};

  const std::size_t n_nodes = static_cast<std::size_t>(nx + 1) * (ny + 1);
  std::vector<double> s(n_nodes, 0.0);
  std::vector<char> ok(n_nodes, 1);
  parallel_for(n_nodes, opts.jobs, [&](std::size_t id) {
    const int i = static_cast<int>(id % (nx + 1)), j = static_cast<int>(id / (nx + 1));
    const cplx z = g.node(i, j);
    if (std::abs(spec.A(z)) <= opts.pole_guard * spec.A.eval_scale(z)) {
      ok[id] = 0;
      return;
    }
    s[id] = detail::defect_at(z, spec);
  });

  std::vector<char> cell_ok(static_cast<std::size_t>(nx) * ny, 1);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (!ok[g.node_id(i, j)] || !ok[g.node_id(i + 1, j)] || !ok[g.node_id(i, j + 1)] || !ok[g.node_id(i + 1, j + 1)])
        cell_ok[static_cast<std::size_t>(j) * nx + i] = 0;
  if (spec.A.degree().value_or(0) >= 1) {
    for (const auto& r : find_roots(spec.A).roots) {
      const double fi = (r.real() - bbox.x0) / g.hx(), fj = (r.imag() - bbox.y0) / g.hy();
      if (fi < -1.0 || fj < -1.0 || fi > nx + 1.0 || fj > ny + 1.0) continue;
      // the cell holding the pole plus any neighbour it sits on the border of
      for (int j = static_cast<int>(std::floor(fj - 1e-9)); j <= static_cast<int>(std::floor(fj + 1e-9)); ++j)
        for (int i = static_cast<int>(std::floor(fi - 1e-9)); i <= static_cast<int>(std::floor(fi + 1e-9)); ++i)
          if (i >= 0 && j >= 0 && i < nx && j < ny) cell_ok[static_cast<std::size_t>(j) * nx + i] = 0;
    }
  }

  std::map<std::size_t, std::optional<cplx>> crossings;
  auto crossing = [&](std::size_t edge, int ia, int ja, int ib, int jb) -> std::optional<cplx> {
    auto it = crossings.find(edge);
    if (it != crossings.end()) return it->second;
    auto r = detail::refine_crossing(g.node(ia, ja), g.node(ib, jb), s[g.node_id(ia, ja)], spec, opts.refine_tol);
    crossings.emplace(edge, r);
    return r;
  };

  std::map<std::size_t, std::vector<std::size_t>> adj;
  auto link = [&](std::size_t a, std::size_t b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };

  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      if (!cell_ok[static_cast<std::size_t>(j) * nx + i]) continue;
      const bool p00 = s[g.node_id(i, j)] >= 0.0, p10 = s[g.node_id(i + 1, j)] >= 0.0;
      const bool p11 = s[g.node_id(i + 1, j + 1)] >= 0.0, p01 = s[g.node_id(i, j + 1)] >= 0.0;
      // edges: bottom, right, top, left
      std::array<std::size_t, 4> ids{g.hedge(i, j), g.vedge(i + 1, j), g.hedge(i, j + 1), g.vedge(i, j)};
      std::array<bool, 4> cut{p00 != p10, p10 != p11, p01 != p11, p00 != p01};
      std::array<std::optional<cplx>, 4> pts;
      if (cut[0]) pts[0] = crossing(ids[0], i, j, i + 1, j);
      if (cut[1]) pts[1] = crossing(ids[1], i + 1, j, i + 1, j + 1);
      if (cut[2]) pts[2] = crossing(ids[2], i, j + 1, i + 1, j + 1);
      if (cut[3]) pts[3] = crossing(ids[3], i, j, i, j + 1);
      auto connect = [&](int a, int b) {
        if (pts[a] && pts[b]) link(ids[a], ids[b]);
      };
      const int ncut = cut[0] + cut[1] + cut[2] + cut[3];
      if (ncut == 2) {
        std::array<int, 2> e{};
        int m = 0;
        for (int t = 0; t < 4; ++t)
          if (cut[t]) e[m++] = t;
        connect(e[0], e[1]);
      } else if (ncut == 4) {
        const cplx center = g.node(i, j) + cplx{0.5 * g.hx(), 0.5 * g.hy()};
        bool pc;
        try {
          pc = detail::defect_at(center, spec) >= 0.0;
        } catch (const PoleError&) {
          continue;
        }
        if (pc == p00) {
          connect(0, 1);  // isolates corner (1,0)
          connect(2, 3);  // isolates corner (0,1)
        } else {
          connect(3, 0);  // isolates corner (0,0)
          connect(1, 2);  // isolates corner (1,1)
        }
      }
    }
  }

  CurveNet net;
  net.bbox = bbox;
  net.nx = nx;
  net.ny = ny;
  net.refine_tol = opts.refine_tol;
  auto make_vertex = [&](std::size_t edge) {
    const cplx z = *crossings.at(edge);
    CurveVertex v;
    v.z = z;
    v.w = w_map(z, spec);
    v.sign = classify_region(v.w, spec.k, spec.l);
    return v;
  };
  std::map<std::size_t, bool> used;
  auto walk = [&](std::size_t start) {
    Polyline pl;
    std::size_t prev = std::numeric_limits<std::size_t>::max();
    std::size_t cur = start;
    for (;;) {
      used[cur] = true;
      pl.vertices.push_back(make_vertex(cur));
      std::size_t next = std::numeric_limits<std::size_t>::max();
      for (auto nb : adj[cur]) {
        if (nb == prev) continue;
        if (nb == start && pl.vertices.size() > 2) {
          pl.closed = true;
          break;
        }
        if (!used[nb]) {
          next = nb;
          break;
        }
      }
      if (pl.closed || next == std::numeric_limits<std::size_t>::max()) break;
      prev = cur;
      cur = next;
    }
    if (pl.closed) pl.vertices.push_back(pl.vertices.front());
    net.polylines.push_back(std::move(pl));
  };
  for (const auto& [id, nbs] : adj)
    if (nbs.size() == 1 && !used[id]) walk(id);
  for (const auto& [id, nbs] : adj)
    if (!used[id]) walk(id);
  return net;
}

inline CurveNet trace_curve(const RecurrenceSpec& spec, const BBox& bbox, int nx, int ny, double refine_tol) {
  TraceOptions o;
  o.refine_tol = refine_tol;
  return trace_curve(spec, bbox, nx, ny, o);
}

enum class DominanceClass { unique_dominant, equimodular, near_degenerate, degree_drop };

inline const char* to_string(DominanceClass c) {
  switch (c) {
    case DominanceClass::unique_dominant: return "unique-dominant";
    case DominanceClass::equimodular: return "equimodular-smallest-pair";
    case DominanceClass::near_degenerate: return "near-degenerate-discriminant";
    case DominanceClass::degree_drop: return "degree-drop";
  }
  return "?";
}

struct DominanceCell {
  cplx z;
  double ratio = 0.0;  // |t_2| / |t_1|
  double rel_disc = 0.0;
  DominanceClass cls = DominanceClass::unique_dominant;
  bool certified = false;
};

/// Per-cell classification of the two smallest roots of D(t, z) at cell centers.
struct DominanceField {
  BBox bbox;
  int nx = 0, ny = 0;
  std::vector<DominanceCell> cells;  // row-major, row j = imaginary index

  const DominanceCell& at(int i, int j) const { return cells.at(static_cast<std::size_t>(j) * nx + i); }
  std::size_t count(DominanceClass c) const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [c](const auto& x) { return x.cls == c; }));
  }
};

struct DominanceOptions {
  double equimodular_tol = 1e-6;
  double degenerate_tol = 1e-10;
  /// Also mark a cell equimodular when |t2|/|t1| - 1 is no larger than its
  /// change to some neighbouring cell, i.e. the locus passes within about one
  /// cell. Without it, a fixed tolerance almost never meets a curve at grid points.
  bool grid_resolved = false;
  unsigned jobs = 1;
};

/// Scale-free discriminant measure prod|t_i - t_j|^2 / prod(|t_i| + |t_j|)^2 in [0, 1].
inline double relative_discriminant(const std::vector<cplx>& t) {
  double r = 1.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const double den = std::abs(t[i]) + std::abs(t[j]);
      if (den == 0.0) return 0.0;
      const double q = std::abs(t[i] - t[j]) / den;
      r *= q * q;
    }
  return r;
}

inline DominanceField dominance_map(const RecurrenceSpec& spec, const BBox& bbox, int nx, int ny,
                                    const DominanceOptions& opts = {}) {
  validate(spec);
  if (!bbox.valid()) throw DomainError("dominance_map: degenerate bounding box");
  if (nx < 8 || ny < 8) throw DomainError("dominance_map: grid must be at least 8x8");
  DominanceField f;
  f.bbox = bbox;
  f.nx = nx;
  f.ny = ny;
  f.cells.resize(static_cast<std::size_t>(nx) * ny);
  const double hx = (bbox.x1 - bbox.x0) / nx, hy = (bbox.y1 - bbox.y0) / ny;
  parallel_for(f.cells.size(), opts.jobs, [&](std::size_t id) {
    const int i = static_cast<int>(id % nx), j = static_cast<int>(id / nx);
    DominanceCell& c = f.cells[id];
    c.z = {bbox.x0 + (i + 0.5) * hx, bbox.y0 + (j + 0.5) * hy};
    const cplx a = spec.A(c.z);
    if (std::abs(a) <= 1e-12 * spec.A.eval_scale(c.z)) {
      c.cls = DominanceClass::degree_drop;
      return;
    }
    const RootSet rs = find_roots(denominator_at(spec, c.z));
    c.certified = rs.certified;
    const auto t = rs.sorted_roots();
    c.ratio = std::abs(t[1]) / std::abs(t[0]);
    c.rel_disc = relative_discriminant(t);
    if (c.rel_disc <= opts.degenerate_tol) c.cls = DominanceClass::near_degenerate;
    else if (c.ratio - 1.0 <= opts.equimodular_tol) c.cls = DominanceClass::equimodular;
    else c.cls = DominanceClass::unique_dominant;
  });
  if (opts.grid_resolved) {
    std::vector<char> mark(f.cells.size(), 0);
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const auto& c = f.at(i, j);
        if (c.cls != DominanceClass::unique_dominant) continue;
        const double fc = c.ratio - 1.0;
        double step = 0.0;
        const std::array<std::pair<int, int>, 4> nbs{{{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}}};
        for (auto [a, b] : nbs) {
          if (a < 0 || b < 0 || a >= nx || b >= ny) continue;
          const auto& n = f.at(a, b);
          if (n.cls == DominanceClass::degree_drop) continue;
          step = std::max(step, std::abs((n.ratio - 1.0) - fc));
        }
        if (fc <= step) mark[static_cast<std::size_t>(j) * nx + i] = 1;
      }
    for (std::size_t id = 0; id < mark.size(); ++id)
      if (mark[id]) f.cells[id].cls = DominanceClass::equimodular;
  }
  return f;
}

}  // namespace zerocurve

#endif  // ZEROCURVE_CURVETRACE_HPP
