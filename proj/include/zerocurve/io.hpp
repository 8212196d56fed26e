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

#ifndef ZEROCURVE_IO_HPP
#define ZEROCURVE_IO_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvetrace.hpp"
#include "parse.hpp"
#include "recurrence.hpp"
#include "roots.hpp"
#include "verify.hpp"
#include "version.hpp"

namespace zerocurve {

using nlohmann::json;

namespace detail {

inline std::string num(double v) { return shortest(v); }

inline json pair_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline json coeffs_json(const ComplexPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(pair_json(c));
  return a;
}

inline json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace detail

// ---- CSV ---------------------------------------------------------------

inline void write_roots_csv(std::ostream& os, const RootSet& rs) {
  os << "index,re,im,modulus,residual,certified\n";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const cplx r = rs.sorted(i);
    const double res = rs.residuals[rs.order[i]];
    os << i << ',' << detail::num(r.real()) << ',' << detail::num(r.imag()) << ',' << detail::num(std::abs(r)) << ','
       << detail::num(res) << ',' << (res <= RootOptions{}.certify_tol ? "true" : "false") << '\n';
  }
}

/// Zeros of P_n; roots from one factor keep their factor order.
inline void write_roots_csv(std::ostream& os, const SequenceZeros& sz, double certify_tol = RootOptions{}.certify_tol) {
  os << "index,re,im,modulus,residual,certified\n";
  for (std::size_t i = 0; i < sz.z.size(); ++i) {
    const cplx r = sz.z[i];
    os << i << ',' << detail::num(r.real()) << ',' << detail::num(r.imag()) << ',' << detail::num(std::abs(r)) << ','
       << detail::num(sz.residual[i]) << ',' << (sz.residual[i] <= certify_tol ? "true" : "false") << '\n';
  }
}

inline void write_curve_csv(std::ostream& os, const CurveNet& net) {
  os << "segment_id,vertex_index,re,im,re_w,sign_class\n";
  for (std::size_t s = 0; s < net.polylines.size(); ++s) {
    const auto& pl = net.polylines[s];
    for (std::size_t v = 0; v < pl.vertices.size(); ++v) {
      const auto& x = pl.vertices[v];
      os << s << ',' << v << ',' << detail::num(x.z.real()) << ',' << detail::num(x.z.imag()) << ','
         << detail::num(x.w.real()) << ',' << to_string(x.sign) << '\n';
    }
  }
}

inline void write_dominance_csv(std::ostream& os, const DominanceField& f) {
  os << "i,j,re,im,ratio,rel_disc,class,certified\n";
  for (int j = 0; j < f.ny; ++j)
    for (int i = 0; i < f.nx; ++i) {
      const auto& c = f.at(i, j);
      os << i << ',' << j << ',' << detail::num(c.z.real()) << ',' << detail::num(c.z.imag()) << ','
         << detail::num(c.ratio) << ',' << detail::num(c.rel_disc) << ',' << to_string(c.cls) << ','
         << (c.certified ? "true" : "false") << '\n';
    }
}

// ---- JSON --------------------------------------------------------------

inline json spec_json(const RecurrenceSpec& s) {
  return {{"k", s.k}, {"l", s.l}, {"A", format_poly(s.A)}, {"B", format_poly(s.B)}};
}

/// {"spec": ..., "polys": [[[re, im], ...], ...]} with coefficients lowest degree first.
inline json sequence_json(const SequenceWindow& win) {
  json polys = json::array();
  for (const auto& p : win.polys) polys.push_back(detail::coeffs_json(p));
  return {{"spec", spec_json(win.spec)}, {"polys", polys}};
}

inline json record_json(const ZeroRecord& r) {
  json j = {{"z", detail::pair_json(r.z)},
            {"origin", to_string(r.origin)},
            {"residual", r.residual},
            {"abs_A", r.abs_a},
            {"abs_B", r.abs_b},
            {"rel_A", r.rel_a},
            {"rel_B", r.rel_b},
            {"w", detail::pair_json(r.w)},
            {"im_defect", r.im_defect},
            {"re_sign_ok", r.re_sign_ok},
            {"repeated_root", r.repeated_root},
            {"rel_disc", r.rel_disc},
            {"gamma_distance", detail::opt_json(r.gamma_distance)},
            {"c4_distance", detail::opt_json(r.c4_distance)},
            {"u_re", detail::opt_json(r.u_real)},
            {"c5_residual", detail::opt_json(r.c5_residual)},
            {"in_omega", r.in_omega ? json(*r.in_omega) : json(nullptr)},
            {"equimodular", r.equimodular ? json(*r.equimodular) : json(nullptr)},
            {"pass", r.pass},
            {"flags", r.flags}};
  return j;
}

inline json qdisc_row_json(const QDiscRow& r) {
  json c = json::array();
  for (const auto& x : r.coeffs) c.push_back(detail::pair_json(x));
  auto opt = [](const std::optional<cplx>& v) { return v ? detail::pair_json(*v) : json(nullptr); };
  return {{"label", r.label},          {"coeffs", c},
          {"k", r.k},                  {"l", r.l},
          {"q", detail::pair_json(r.q)}, {"definitional", detail::pair_json(r.definitional)},
          {"ismail", opt(r.ismail)},   {"closed_form", opt(r.closed_form)},
          {"discriminant", opt(r.discriminant)}, {"ratio", opt(r.ratio)},
          {"ok", r.ok}};
}

inline json report_json(const VerificationReport& rep) {
  const Aggregates& g = rep.aggregates;
  json out;
  out["mode"] = rep.mode;
  out["spec"] = rep.mode == "qdisc" ? json(nullptr) : spec_json(rep.spec);
  out["n"] = rep.n;
  out["tol"] = rep.tol;
  out["ab_eps"] = rep.ab_eps;
  out["theorem_backed"] = rep.theorem_backed;
  json recs = json::array();
  for (const auto& r : rep.records) recs.push_back(record_json(r));
  out["records"] = recs;
  if (!rep.qdisc.empty()) {
    json rows = json::array();
    for (const auto& r : rep.qdisc) rows.push_back(qdisc_row_json(r));
    out["qdisc"] = rows;
  }
  out["aggregates"] = {{"total", g.total},
                       {"filtered", g.filtered},
                       {"passing", g.passing},
                       {"failing", g.failing},
                       {"repeated_root", g.repeated},
                       {"max_im_defect", g.max_im_defect},
                       {"max_gamma_distance", g.max_gamma_distance},
                       {"max_c4_distance", g.max_c4_distance},
                       {"max_c5_residual", g.max_c5_residual},
                       {"fraction_passing", g.fraction_passing},
                       {"certified", g.certified}};
  out["seed"] = rep.seed;
  out["tool_version"] = rep.tool_version;
  return out;
}

// ---- SVG ---------------------------------------------------------------

struct SvgLayer {
  const CurveNet* curve = nullptr;
  const SequenceZeros* zeros = nullptr;
  const DominanceField* dominance = nullptr;
  std::vector<bool> zero_filtered;  // optional, parallel to zeros->z
  std::string title;
};

namespace detail {

struct Canvas {
  BBox box;
  static constexpr double size = 800.0, margin = 40.0;
  double x(double re) const { return margin + (re - box.x0) / (box.x1 - box.x0) * (size - 2 * margin); }
  double y(double im) const { return size - margin - (im - box.y0) / (box.y1 - box.y0) * (size - 2 * margin); }
};

inline std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace detail

/// 800x800 figure, imaginary axis up. The first line after the header is a
/// version comment; everything else depends only on the data.
inline void write_svg(std::ostream& os, const BBox& box, const SvgLayer& layer) {
  using detail::fmt3;
  const detail::Canvas cv{box};
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<!-- " << kToolVersion << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
  os << "<rect x=\"40\" y=\"40\" width=\"720\" height=\"720\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";

  if (layer.dominance) {
    const auto& f = *layer.dominance;
    const double cw = 720.0 / f.nx, ch = 720.0 / f.ny;
    os << "<g id=\"equimodular\" fill=\"#cde\" stroke=\"none\">\n";
    for (int j = 0; j < f.ny; ++j)
      for (int i = 0; i < f.nx; ++i)
        if (f.at(i, j).cls == DominanceClass::equimodular)
          os << "<rect x=\"" << fmt3(40.0 + i * cw) << "\" y=\"" << fmt3(760.0 - (j + 1) * ch) << "\" width=\""
             << fmt3(cw) << "\" height=\"" << fmt3(ch) << "\"/>\n";
    os << "</g>\n";
  }

  os << "<g id=\"axes\" stroke=\"#999\" stroke-width=\"0.8\">\n";
  if (box.y0 <= 0.0 && box.y1 >= 0.0)
    os << "<line x1=\"40\" y1=\"" << fmt3(cv.y(0.0)) << "\" x2=\"760\" y2=\"" << fmt3(cv.y(0.0)) << "\"/>\n";
  if (box.x0 <= 0.0 && box.x1 >= 0.0)
    os << "<line x1=\"" << fmt3(cv.x(0.0)) << "\" y1=\"40\" x2=\"" << fmt3(cv.x(0.0)) << "\" y2=\"760\"/>\n";
  os << "</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  os << "<text x=\"40\" y=\"775\">" << fmt3(box.x0) << "</text>\n";
  os << "<text x=\"760\" y=\"775\" text-anchor=\"end\">" << fmt3(box.x1) << "</text>\n";
  os << "<text x=\"36\" y=\"760\" text-anchor=\"end\">" << fmt3(box.y0) << "</text>\n";
  os << "<text x=\"36\" y=\"48\" text-anchor=\"end\">" << fmt3(box.y1) << "</text>\n";
  os << "<text x=\"400\" y=\"790\" text-anchor=\"middle\">Re z</text>\n";
  os << "<text x=\"12\" y=\"400\" text-anchor=\"middle\" transform=\"rotate(-90 12 400)\">Im z</text>\n";
  if (!layer.title.empty()) os << "<text x=\"400\" y=\"25\" text-anchor=\"middle\" font-size=\"14\">" << layer.title << "</text>\n";
  os << "</g>\n";

  if (layer.curve) {
    os << "<g id=\"curve\" fill=\"none\" stroke-width=\"1.2\">\n";
    for (const auto& pl : layer.curve->polylines) {
      std::size_t start = 0;
      // split each polyline into runs of constant sign class
      while (start + 1 < pl.vertices.size()) {
        const SignClass cls = pl.vertices[start + 1].sign;
        std::size_t end = start + 1;
        while (end + 1 < pl.vertices.size() && pl.vertices[end + 1].sign == cls) ++end;
        os << "<polyline class=\"" << to_string(cls) << "\" stroke=\""
           << (cls == SignClass::admissible ? "#1f5fbf" : "#aaaaaa") << "\""
           << (cls == SignClass::admissible ? "" : " stroke-dasharray=\"4 3\"") << " points=\"";
        for (std::size_t v = start; v <= end; ++v) {
          if (v > start) os << ' ';
          os << fmt3(cv.x(pl.vertices[v].z.real())) << ',' << fmt3(cv.y(pl.vertices[v].z.imag()));
        }
        os << "\"/>\n";
        start = end;
      }
    }
    os << "</g>\n";
  }

  if (layer.zeros) {
    os << "<g id=\"zeros\" stroke=\"none\">\n";
    for (std::size_t i = 0; i < layer.zeros->z.size(); ++i) {
      const cplx z = layer.zeros->z[i];
      if (!box.contains(z)) continue;
      const bool filt = i < layer.zero_filtered.size() && layer.zero_filtered[i];
      os << "<circle cx=\"" << fmt3(cv.x(z.real())) << "\" cy=\"" << fmt3(cv.y(z.imag())) << "\" r=\"2.6\" fill=\""
         << (filt ? "#f29900" : "#d62728") << "\"/>\n";
    }
    os << "</g>\n";
  }

  os << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  os << "<rect x=\"560\" y=\"50\" width=\"190\" height=\"74\" fill=\"white\" stroke=\"#999\"/>\n";
  os << "<line x1=\"570\" y1=\"64\" x2=\"595\" y2=\"64\" stroke=\"#1f5fbf\" stroke-width=\"1.5\"/>"
        "<text x=\"602\" y=\"68\">Im w = 0, admissible sign</text>\n";
  os << "<line x1=\"570\" y1=\"82\" x2=\"595\" y2=\"82\" stroke=\"#aaaaaa\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\"/>"
        "<text x=\"602\" y=\"86\">Im w = 0, excluded sign</text>\n";
  os << "<circle cx=\"582\" cy=\"100\" r=\"3\" fill=\"#d62728\"/><text x=\"602\" y=\"104\">zeros of P_n</text>\n";
  os << "<circle cx=\"582\" cy=\"116\" r=\"3\" fill=\"#f29900\"/><text x=\"602\" y=\"120\">zeros at A = 0 or B = 0</text>\n";
  os << "</g>\n";
  os << "</svg>\n";
}

inline void write_figure_svg(std::ostream& os, const FigureData& fd, const std::string& title = {}) {
  SvgLayer layer;
  layer.curve = &fd.curve;
  layer.zeros = &fd.zeros;
  layer.title = title;
  for (const auto o : fd.zeros.origin) layer.zero_filtered.push_back(o != ZeroOrigin::cofactor);
  write_svg(os, fd.bbox, layer);
}

}  // namespace zerocurve

#endif  // ZEROCURVE_IO_HPP
