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

#ifndef ZEROCURVE_TOOLS_CLI_HPP
#define ZEROCURVE_TOOLS_CLI_HPP

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zerocurve/zerocurve.hpp"

namespace zerocurve::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kUncertified = 3, kViolation = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  int k = 3, l = 2;
  std::string a_text = "1", b_text = "1";
  std::vector<int> n{30};
  std::optional<BBox> bbox;
  int nx = 200, ny = 200;
  double tol = 1e-6;
  double ab_eps = 1e-8;
  std::uint64_t seed = 0;
  std::string out;
  std::vector<std::string> formats;
  unsigned jobs = 1;
  std::optional<std::string> q;
  std::optional<std::string> example;
  int samples = 200;

  RecurrenceSpec spec() const { return {k, l, parse_poly(a_text), parse_poly(b_text)}; }
};

inline const std::vector<std::string>& option_keys() {
  static const std::vector<std::string> keys{"k",  "l",    "A",   "B",    "n",      "bbox",  "grid",    "tol",
                                             "ab-eps", "seed", "out", "format", "jobs", "q", "example", "samples"};
  return keys;
}

using RawValues = std::map<std::string, std::vector<std::string>>;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

template <class T>
T number(const std::string& key, const std::string& text) {
  T v{};
  std::istringstream is(text);
  is >> v;
  if (!is || !(is >> std::ws).eof()) throw UsageError("--" + key + ": not a number: '" + text + "'");
  return v;
}

inline std::string json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return zerocurve::detail::shortest(v.get<double>());
  throw UsageError("config: unsupported value " + v.dump());
}

}  // namespace detail

/// Reads a JSON config with the same keys as the flags; "ab_eps" is accepted for "ab-eps".
inline RawValues load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  RawValues raw;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key = it.key() == "ab_eps" ? "ab-eps" : it.key();
    if (std::find(option_keys().begin(), option_keys().end(), key) == option_keys().end())
      throw UsageError("config: unknown key '" + it.key() + "'");
    std::vector<std::string> vals;
    if (it->is_array()) {
      std::vector<std::string> parts;
      for (const auto& x : *it) parts.push_back(detail::json_scalar(x));
      if (key == "format") {
        vals = parts;
      } else {
        std::string joined;
        for (std::size_t i = 0; i < parts.size(); ++i) joined += (i ? "," : "") + parts[i];
        vals.push_back(joined);
      }
    } else {
      vals.push_back(detail::json_scalar(*it));
    }
    raw[key] = vals;
  }
  return raw;
}

inline RunConfig make_config(const std::string& sub, const RawValues& raw) {
  RunConfig c;
  c.subcommand = sub;
  auto get = [&](const std::string& key) -> const std::string* {
    auto it = raw.find(key);
    return it == raw.end() || it->second.empty() ? nullptr : &it->second.back();
  };
  if (auto v = get("example")) {
    const auto& e = example_case(*v);
    c.example = *v;
    c.k = e.k;
    c.l = e.l;
    c.a_text = e.a_text;
    c.b_text = e.b_text;
    c.n = {e.default_n};
  }
  if (auto v = get("k")) c.k = detail::number<int>("k", *v);
  if (auto v = get("l")) c.l = detail::number<int>("l", *v);
  if (auto v = get("A")) c.a_text = *v;
  if (auto v = get("B")) c.b_text = *v;
  if (auto v = get("n")) {
    c.n.clear();
    for (const auto& part : detail::split(*v, ',')) c.n.push_back(detail::number<int>("n", part));
    if (c.n.empty()) throw UsageError("--n: empty list");
  }
  if (auto v = get("bbox")) {
    const auto parts = detail::split(*v, ',');
    if (parts.size() != 4) throw UsageError("--bbox expects x0,x1,y0,y1");
    BBox b{detail::number<double>("bbox", parts[0]), detail::number<double>("bbox", parts[1]),
           detail::number<double>("bbox", parts[2]), detail::number<double>("bbox", parts[3])};
    if (!b.valid()) throw UsageError("--bbox must satisfy x0 < x1 and y0 < y1");
    c.bbox = b;
  }
  if (auto v = get("grid")) {
    const auto parts = detail::split(*v, ',');
    if (parts.size() == 1) c.nx = c.ny = detail::number<int>("grid", parts[0]);
    else if (parts.size() == 2) {
      c.nx = detail::number<int>("grid", parts[0]);
      c.ny = detail::number<int>("grid", parts[1]);
    } else {
      throw UsageError("--grid expects nx,ny");
    }
  }
  if (auto v = get("tol")) c.tol = detail::number<double>("tol", *v);
  if (auto v = get("ab-eps")) c.ab_eps = detail::number<double>("ab-eps", *v);
  if (auto v = get("seed")) c.seed = detail::number<std::uint64_t>("seed", *v);
  if (auto v = get("out")) c.out = *v;
  if (auto v = get("jobs")) c.jobs = detail::number<unsigned>("jobs", *v);
  if (auto v = get("q")) c.q = *v;
  if (auto v = get("samples")) c.samples = detail::number<int>("samples", *v);
  if (auto it = raw.find("format"); it != raw.end())
    for (const auto& f : it->second)
      for (const auto& part : detail::split(f, ',')) {
        if (part != "csv" && part != "svg" && part != "json") throw UsageError("--format must be csv, svg or json");
        c.formats.push_back(part);
      }
  if (c.jobs == 0) c.jobs = 1;
  return c;
}

/// One output file. With no --out, selected artifacts go to stdout.
struct Artifact {
  std::string format;
  std::string name;
  std::function<void(std::ostream&)> write;
};

inline void emit(const RunConfig& c, const std::vector<Artifact>& arts, const std::vector<std::string>& defaults,
                 std::ostream& out) {
  const auto& want = c.formats.empty() ? defaults : c.formats;
  auto wanted = [&](const std::string& f) { return std::find(want.begin(), want.end(), f) != want.end(); };
  if (c.out.empty()) {
    for (const auto& a : arts)
      if (wanted(a.format)) a.write(out);
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(c.out, ec);
  if (ec) throw UsageError("cannot create output directory " + c.out + ": " + ec.message());
  for (const auto& a : arts) {
    if (!wanted(a.format)) continue;
    const auto path = std::filesystem::path(c.out) / a.name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path.string());
    a.write(f);
    out << "wrote " << path.string() << '\n';
  }
}

inline std::string format_value(cplx v) {
  char re[64], im[64];
  std::snprintf(re, sizeof re, "%.12g", v.real());
  if (std::abs(v.imag()) <= 1e-12 * (1.0 + std::abs(v.real()))) return re;
  std::snprintf(im, sizeof im, "%+.12g", v.imag());
  return std::string(re) + im + "i";
}

inline cplx constant_of(const std::string& key, const std::string& text) {
  const ComplexPoly p = parse_poly(text);
  if (p.is_zero()) return {};
  if (*p.degree() != 0) throw UsageError("--" + key + " must be a constant for qdisc");
  return p[0];
}

inline std::string n_suffix(const RunConfig& c, int n) { return c.n.size() > 1 ? "_n" + std::to_string(n) : ""; }

inline BBox bbox_or_auto(const RunConfig& c, const RecurrenceSpec& spec, int n) {
  if (c.bbox) return *c.bbox;
  return auto_bbox(sequence_zeros(spec, n).z);
}

// ---- subcommands -------------------------------------------------------

inline int cmd_seq(const RunConfig& c, std::ostream& out) {
  const auto win = sequence_generate(c.spec(), c.n.back());
  emit(c, {{"json", "sequence.json", [&](std::ostream& os) { os << sequence_json(win).dump(2) << '\n'; }}}, {"json"}, out);
  return kOk;
}

inline int cmd_zeros(const RunConfig& c, std::ostream& out) {
  const auto spec = c.spec();
  int code = kOk;
  std::vector<Artifact> arts;
  std::vector<SequenceZeros> all;
  all.reserve(c.n.size());
  for (int n : c.n) {
    all.push_back(sequence_zeros(spec, n));
    const SequenceZeros& sz = all.back();
    if (!sz.certified) code = kUncertified;
    arts.push_back({"csv", "roots" + n_suffix(c, n) + ".csv", [&sz](std::ostream& os) { write_roots_csv(os, sz); }});
    arts.push_back({"json", "roots" + n_suffix(c, n) + ".json", [&sz, &spec, n](std::ostream& os) {
                      nlohmann::json z = nlohmann::json::array();
                      for (std::size_t i = 0; i < sz.z.size(); ++i)
                        z.push_back({{"z", {sz.z[i].real(), sz.z[i].imag()}},
                                     {"residual", sz.residual[i]},
                                     {"origin", to_string(sz.origin[i])}});
                      os << nlohmann::json{{"spec", spec_json(spec)}, {"n", n}, {"certified", sz.certified}, {"zeros", z}}.dump(2)
                         << '\n';
                    }});
  }
  emit(c, arts, {"csv"}, out);
  return code;
}

inline int cmd_curve(const RunConfig& c, std::ostream& out) {
  const auto spec = c.spec();
  const int n = c.n.back();
  const BBox box = bbox_or_auto(c, spec, n);
  TraceOptions to;
  to.jobs = c.jobs;
  const CurveNet net = trace_curve(spec, box, c.nx, c.ny, to);
  emit(c,
       {{"csv", "curve.csv", [&](std::ostream& os) { write_curve_csv(os, net); }},
        {"svg", "curve.svg",
         [&](std::ostream& os) {
           SvgLayer layer;
           layer.curve = &net;
           write_svg(os, box, layer);
         }}},
       {"csv"}, out);
  return kOk;
}

inline int cmd_dominance(const RunConfig& c, std::ostream& out) {
  const auto spec = c.spec();
  const BBox box = bbox_or_auto(c, spec, c.n.back());
  DominanceOptions o;
  o.jobs = c.jobs;
  const DominanceField f = dominance_map(spec, box, c.nx, c.ny, o);
  bool certified = true;
  for (const auto& cell : f.cells)
    if (cell.cls != DominanceClass::degree_drop && !cell.certified) certified = false;
  emit(c,
       {{"csv", "dominance.csv", [&](std::ostream& os) { write_dominance_csv(os, f); }},
        {"svg", "dominance.svg",
         [&](std::ostream& os) {
           SvgLayer layer;
           layer.dominance = &f;
           write_svg(os, box, layer);
         }}},
       {"csv"}, out);
  return certified ? kOk : kUncertified;
}

inline int report_code(const VerificationReport& r) {
  if (r.theorem_violation()) return kViolation;
  if (!r.aggregates.certified) return kUncertified;
  return kOk;
}

inline void summarize(std::ostream& out, const VerificationReport& r) {
  const auto& g = r.aggregates;
  out << r.mode << " n=" << r.n << ": " << g.passing << " pass, " << g.failing << " fail, " << g.filtered
      << " filtered, max im_defect " << format_value(g.max_im_defect) << '\n';
}

inline int run_reports(const RunConfig& c, std::ostream& out, bool quotients) {
  const auto spec = c.spec();
  VerifyOptions o;
  o.tol = c.tol;
  o.ab_eps = c.ab_eps;
  o.jobs = c.jobs;
  int code = kOk;
  std::vector<VerificationReport> reps;
  reps.reserve(c.n.size());
  std::vector<Artifact> arts;
  for (int n : c.n) {
    reps.push_back(quotients ? verify_quotients(spec, n, o) : verify_zeros_on_curve(spec, n, o));
    reps.back().seed = c.seed;
    code = std::max(code, report_code(reps.back()));
    const auto& r = reps.back();
    arts.push_back({"json", (quotients ? "quotients" : "report") + n_suffix(c, n) + ".json",
                    [&r](std::ostream& os) { os << report_json(r).dump(2) << '\n'; }});
  }
  emit(c, arts, {"json"}, out);
  if (!c.out.empty())
    for (const auto& r : reps) summarize(out, r);
  return code;
}

inline int cmd_qdisc(const RunConfig& c, std::ostream& out) {
  if (c.q) {
    const cplx a = constant_of("A", c.a_text), b = constant_of("B", c.b_text);
    const cplx q = constant_of("q", *c.q);
    const ComplexPoly p = trinomial(a, b, c.k, c.l);
    const RootSet rs = find_roots(p);
    const QDiscResult def = q_discriminant_definitional(p, q, rs);
    const QDiscResult ism = q_discriminant_ismail(p, q, rs);
    out << format_value(def.value) << '\n';
    out << "definitional " << format_value(def.value) << '\n';
    out << "ismail " << format_value(ism.value) << '\n';
    if (q == cplx{1.0, 0.0}) {
      out << "discriminant " << format_value(discriminant(p)) << '\n';
    } else {
      const QDiscResult cf = q_discriminant_trinomial(a, b, c.k, c.l, q);
      out << "closed-form " << format_value(cf.value) << '\n';
      out << "note " << cf.note << '\n';
    }
    return kOk;
  }
  const auto rep = verify_qdisc_consistency(c.samples, c.seed);
  emit(c, {{"json", "qdisc.json", [&](std::ostream& os) { os << report_json(rep).dump(2) << '\n'; }}}, {"json"}, out);
  if (!c.out.empty())
    out << "qdisc: " << rep.aggregates.passing << " rows agree, " << rep.aggregates.failing << " disagree\n";
  return rep.aggregates.failing == 0 ? kOk : kUncertified;
}

inline int cmd_figure(const RunConfig& c, std::ostream& out) {
  const auto spec = c.spec();
  const int n = c.n.back();
  const FigureData fd = reproduce_figure(spec, n, std::max(c.nx, c.ny), c.jobs, c.bbox);
  const std::string title = (c.example ? "Example " + *c.example + ", " : std::string{}) + "zeros of P_" + std::to_string(n);
  emit(c,
       {{"svg", "figure.svg", [&](std::ostream& os) { write_figure_svg(os, fd, title); }},
        {"csv", "roots.csv", [&](std::ostream& os) { write_roots_csv(os, fd.zeros); }},
        {"csv", "curve.csv", [&](std::ostream& os) { write_curve_csv(os, fd.curve); }}},
       {"svg", "csv"}, out);
  return fd.zeros.certified ? kOk : kUncertified;
}

inline int dispatch(const RunConfig& c, std::ostream& out) {
  if (c.subcommand == "seq") return cmd_seq(c, out);
  if (c.subcommand == "zeros") return cmd_zeros(c, out);
  if (c.subcommand == "curve") return cmd_curve(c, out);
  if (c.subcommand == "dominance") return cmd_dominance(c, out);
  if (c.subcommand == "quotients") return run_reports(c, out, true);
  if (c.subcommand == "qdisc") return cmd_qdisc(c, out);
  if (c.subcommand == "verify") return run_reports(c, out, false);
  if (c.subcommand == "figure") return cmd_figure(c, out);
  throw UsageError("unknown subcommand " + c.subcommand);
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"zero loci of three-term polynomial recurrences", "zerocurve"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1, 1);
  const std::vector<std::pair<std::string, std::string>> subs{
      {"seq", "polynomials P_0..P_n as JSON"},
      {"zeros", "zeros of P_n"},
      {"curve", "trace Im(B^k/A^l) = 0 over a box"},
      {"dominance", "equimodular map of the smallest roots of D(t, z)"},
      {"quotients", "quotient-curve checks at the zeros of P_n"},
      {"qdisc", "q-discriminants of A t^k + B t^l + 1, or a randomized agreement run"},
      {"verify", "zeros of P_n against the curve and its sign rule"},
      {"figure", "curve, zeros and CSVs for one sequence"}};
  std::map<std::string, std::string> single;
  std::vector<std::string> formats;
  std::string config_path;
  std::map<std::string, CLI::Option*> opts;
  std::map<std::string, CLI::App*> apps;
  const std::map<std::string, std::string> help{
      {"k", "recurrence length k"},
      {"l", "middle index l, 1 <= l < k"},
      {"A", "polynomial A(z), e.g. \"z+5\""},
      {"B", "polynomial B(z)"},
      {"n", "index n, or a comma list"},
      {"bbox", "x0,x1,y0,y1"},
      {"grid", "nx,ny"},
      {"tol", "verification tolerance"},
      {"ab-eps", "relative radius around zeros of A and B"},
      {"seed", "random seed"},
      {"out", "output directory"},
      {"jobs", "worker threads"},
      {"q", "q for qdisc"},
      {"example", "worked example id: 5.1, 5.2, 5.3 or 5.4"},
      {"samples", "random samples for the qdisc run"}};
  for (const auto& [name, desc] : subs) {
    CLI::App* sub = app.add_subcommand(name, desc);
    apps[name] = sub;
    for (const auto& [key, h] : help) opts[name + "/" + key] = sub->add_option("--" + key, single[name + "/" + key], h);
    opts[name + "/format"] = sub->add_option("--format", formats, "csv, svg or json; repeatable")->delimiter(',');
    sub->add_option("--config", config_path, "JSON file with the same keys; flags override");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  std::string sub_name;
  for (const auto& [name, a] : apps)
    if (a->parsed()) sub_name = name;
  if (apps[sub_name]->get_help_ptr()->count() > 0) {
    out << apps[sub_name]->help();
    return kOk;
  }

  try {
    RawValues raw;
    if (!config_path.empty()) raw = load_config(config_path);
    for (const auto& key : option_keys()) {
      CLI::Option* o = opts.at(sub_name + "/" + key);
      if (o->count() == 0) continue;
      raw[key] = key == "format" ? formats : std::vector<std::string>{single[sub_name + "/" + key]};
    }
    const RunConfig cfg = make_config(sub_name, raw);
    return dispatch(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace zerocurve::cli

#endif  // ZEROCURVE_TOOLS_CLI_HPP
