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

#include <gtest/gtest.h>

#include "zerocurve/io.hpp"
#include "zerocurve/verify.hpp"

using namespace zerocurve;

TEST(SequenceZeros, DegreeAndFactors) {
  const RecurrenceSpec s = example_spec("5.4");
  const SequenceZeros z = sequence_zeros(s, 50);
  const auto w = sequence_generate(s, 50);
  EXPECT_EQ(z.degree, *w.polys[50].degree());
  EXPECT_TRUE(z.certified);
  std::size_t fa = 0;
  for (auto o : z.origin) fa += o == ZeroOrigin::factor_a;
  EXPECT_EQ(fa, 10u);  // A^2 with deg A = 5
}

TEST(SequenceZeros, IdenticallyZeroAndConstant) {
  const RecurrenceSpec s{3, 2, ComplexPoly::constant(1.0), ComplexPoly::constant(1.0)};
  EXPECT_TRUE(sequence_zeros(s, 1).identically_zero);
  const SequenceZeros z = sequence_zeros(s, 12);
  EXPECT_EQ(z.degree, 0u);
  const auto rep = verify_zeros_on_curve(s, 12, 1e-6);
  EXPECT_EQ(rep.aggregates.total, 0u);
  EXPECT_TRUE(rep.passed());
}

TEST(VerifyZeros, Example51) {
  const auto rep = verify_zeros_on_curve(example_spec("5.1"), 30, 1e-6);
  EXPECT_TRUE(rep.theorem_backed);
  EXPECT_EQ(rep.aggregates.failing, 0u);
  EXPECT_EQ(rep.aggregates.total, 30u);
  for (const auto& r : rep.records) {
    if (r.filtered) continue;
    EXPECT_LE(r.im_defect, 1e-6);
    EXPECT_GE(r.w.real(), -1e-6 * (1.0 + std::abs(r.w)));
  }
}

TEST(VerifyZeros, CountsConsistentAndFilterSound) {
  for (const char* id : {"5.1", "5.2", "5.3", "5.4"})
    for (int n : {10, 20, 30, 40}) {
      const RecurrenceSpec s = example_spec(id);
      const auto rep = verify_zeros_on_curve(s, n, 1e-6);
      const auto& g = rep.aggregates;
      EXPECT_EQ(g.passing + g.failing + g.filtered, g.total);
      EXPECT_EQ(g.total, sequence_generate(s, n).polys[n].degree().value_or(0)) << id << " " << n;
      EXPECT_EQ(g.failing, 0u) << id << " n=" << n;
      for (const auto& r : rep.records) {
        EXPECT_EQ(r.filtered, std::min(r.rel_a, r.rel_b) <= rep.ab_eps);
        if (r.filtered) {
          const double sa = s.A.eval_scale(r.z), sb = s.B.eval_scale(r.z);
          EXPECT_LE(std::min(std::abs(s.A(r.z)) / sa, std::abs(s.B(r.z)) / sb), rep.ab_eps);
        }
      }
    }
}

TEST(VerifyZeros, TranWindow) {
  const RecurrenceSpec s{2, 1, parse_poly("z"), parse_poly("z")};
  const auto rep = verify_zeros_on_curve(s, 40, 1e-8);
  EXPECT_FALSE(rep.theorem_backed);
  EXPECT_EQ(rep.aggregates.failing, 0u);
  for (const auto& r : rep.records) {
    EXPECT_LE(std::abs(r.z.imag()), 1e-8);
    EXPECT_GE(r.z.real(), -1e-8);
    EXPECT_LE(r.z.real(), 4.0 + 1e-8);
  }
}

TEST(VerifyZeros, ExploratoryNeverThrows) {
  std::mt19937_64 rng(71);
  for (auto [k, l] : {std::pair{5, 2}, {5, 3}, {4, 1}, {5, 4}, {7, 3}}) {
    std::vector<cplx> a(2), b(2);
    std::normal_distribution<double> g;
    for (auto& x : a) x = {g(rng), g(rng)};
    for (auto& x : b) x = {g(rng), g(rng)};
    const RecurrenceSpec s{k, l, ComplexPoly(a), ComplexPoly(b)};
    const auto rep = verify_zeros_on_curve(s, 30, 1e-6);
    EXPECT_FALSE(rep.theorem_violation());
    for (const auto& r : rep.records)
      if (!r.pass && !r.filtered) {
        EXPECT_EQ(r.flags.back(), "conjecture-candidate");
      }
  }
}

TEST(VerifyQuotients, Example51OnGamma) {
  const auto rep = verify_quotients(example_spec("5.1"), 30, 1e-6);
  EXPECT_EQ(rep.aggregates.failing, 0u);
  EXPECT_LE(rep.aggregates.max_gamma_distance, 1e-6);
  for (const auto& r : rep.records)
    if (!r.filtered) {
      EXPECT_TRUE(*r.equimodular);
    }
}

TEST(VerifyQuotients, Example53UnitCircleAndOmega) {
  // u always lands on |u| = 1 inside the admissible arcs; the C4 half-plane
  // Re u >= -1/3 is the part that does not hold for every zero
  const auto rep = verify_quotients(example_spec("5.3"), 40, 1e-6);
  EXPECT_LE(rep.aggregates.max_c4_distance, 1e-6);
  std::size_t outside = 0;
  for (const auto& r : rep.records) {
    if (r.filtered) continue;
    EXPECT_TRUE(*r.in_omega);
    if (*r.u_real < -1.0 / 3.0) {
      ++outside;
      EXPECT_GT(*r.c5_residual, 1e-6);
    } else {
      EXPECT_LE(*r.c5_residual, 1e-6);
    }
  }
  EXPECT_EQ(outside, rep.aggregates.failing);
}

TEST(VerifyQuotients, UnsupportedFamily) {
  const RecurrenceSpec s{5, 2, parse_poly("z"), parse_poly("z")};
  EXPECT_THROW(verify_quotients(s, 10, 1e-6), DomainError);
}

TEST(VerifyQuotients, ConjugatePairEquimodular) {
  const RootSet rs = find_roots(trinomial(1.0, 1.0, 3, 2));
  EXPECT_NEAR(std::abs(quotient_profile(rs).quotients[0]), 1.0, 1e-13);
}

TEST(QDiscConsistency, RowsAgree) {
  const auto rep = verify_qdisc_consistency(50, 5);
  EXPECT_EQ(rep.aggregates.failing, 0u);
  const auto& r0 = rep.qdisc[0];
  EXPECT_NEAR(r0.definitional.real(), -379.0, 1e-9);
  EXPECT_NEAR(r0.closed_form->real(), -379.0, 1e-12);
  const auto& r2 = rep.qdisc[2];
  EXPECT_NEAR(r2.ratio->real(), 2.0, 1e-10);
  EXPECT_NEAR(rep.qdisc[3].discriminant->real(), -31.0, 1e-9);
  EXPECT_NEAR(rep.qdisc[4].definitional.real(), 229.0, 1e-9);
}

TEST(QDiscConsistency, DeterministicJson) {
  const auto a = report_json(verify_qdisc_consistency(20, 9)).dump();
  const auto b = report_json(verify_qdisc_consistency(20, 9)).dump();
  const auto c = report_json(verify_qdisc_consistency(20, 10)).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(Report, DeterministicAcrossJobs) {
  VerifyOptions one, many;
  many.jobs = 4;
  const auto a = report_json(verify_zeros_on_curve(example_spec("5.2"), 60, one)).dump();
  const auto b = report_json(verify_zeros_on_curve(example_spec("5.2"), 60, many)).dump();
  EXPECT_EQ(a, b);
}

TEST(Report, SchemaKeys) {
  const auto j = report_json(verify_zeros_on_curve(example_spec("5.1"), 10, 1e-6));
  for (const char* key : {"spec", "n", "records", "aggregates", "seed", "tool_version"}) EXPECT_TRUE(j.contains(key)) << key;
  const auto& r = j["records"][0];
  for (const char* key : {"z", "w", "im_defect", "re_sign_ok", "gamma_distance", "flags"}) EXPECT_TRUE(r.contains(key)) << key;
}

TEST(Figure, AutoBoxContainsZeros) {
  const FigureData fd = reproduce_figure("5.1", 30, 60);
  for (auto z : fd.zeros.z) EXPECT_TRUE(fd.bbox.contains(z));
  EXPECT_GT(fd.curve.vertex_count(), 0u);
  std::ostringstream svg;
  write_figure_svg(svg, fd);
  EXPECT_NE(svg.str().find("<svg"), std::string::npos);
  EXPECT_NE(svg.str().find("width=\"800\""), std::string::npos);
  EXPECT_THROW(reproduce_figure("6.1", 10), DomainError);
}

TEST(Csv, ShortestRoundTrip) {
  const SequenceZeros z = sequence_zeros(example_spec("5.1"), 12);
  std::ostringstream os;
  write_roots_csv(os, z);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "index,re,im,modulus,residual,certified");
  std::getline(is, line);
  const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
  EXPECT_EQ(std::stod(line.substr(c1 + 1, c2 - c1 - 1)), z.z[0].real());
}
