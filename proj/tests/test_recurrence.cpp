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

#include <random>

#include "oracle.hpp"
#include "zerocurve/parse.hpp"
#include "zerocurve/recurrence.hpp"

using namespace zerocurve;

namespace {

RecurrenceSpec random_spec(std::mt19937_64& rng, int k, int l) {
  return {k, l, ComplexPoly(oracle::random_poly(rng, static_cast<int>(rng() % 4))),
          ComplexPoly(oracle::random_poly(rng, static_cast<int>(rng() % 4)))};
}

}  // namespace

TEST(RecurrenceSpec, Validation) {
  const ComplexPoly one = ComplexPoly::constant(1.0);
  EXPECT_NO_THROW(validate({3, 2, one, one}));
  EXPECT_THROW(validate({1, 1, one, one}), DomainError);
  EXPECT_THROW(validate({4, 2, one, one}), DomainError);
  EXPECT_THROW(validate({3, 3, one, one}), DomainError);
  EXPECT_THROW(validate({3, 0, one, one}), DomainError);
  EXPECT_THROW(validate({3, 2, ComplexPoly{}, one}), DomainError);
  EXPECT_THROW(validate({3, 2, one, ComplexPoly{}}), DomainError);
}

TEST(Sequence, FirstTerms32) {
  const RecurrenceSpec s{3, 2, parse_poly("z+5"), parse_poly("-z^2+2z+5")};
  const auto w = sequence_generate(s, 6);
  EXPECT_EQ(w.polys[0], ComplexPoly::constant(1.0));
  EXPECT_TRUE(w.polys[1].is_zero());
  EXPECT_EQ(w.polys[2], -s.B);
  EXPECT_EQ(w.polys[3], -s.A);
  EXPECT_EQ(w.polys[4], s.B * s.B);
  EXPECT_EQ(w.polys[5], s.A * s.B + s.B * s.A);
}

TEST(Sequence, FirstTerms43) {
  const RecurrenceSpec s{4, 3, parse_poly("z^2+1"), parse_poly("z^3-1")};
  const auto w = sequence_generate(s, 6);
  EXPECT_TRUE(w.polys[1].is_zero());
  EXPECT_TRUE(w.polys[2].is_zero());
  EXPECT_EQ(w.polys[3], -s.B);
  EXPECT_EQ(w.polys[4], -s.A);
  EXPECT_TRUE(w.polys[5].is_zero());
  EXPECT_EQ(w.polys[6], s.B * s.B);
}

TEST(Sequence, RecurrenceHoldsExactly) {
  const RecurrenceSpec s{3, 2, parse_poly("z^3-z+6"), parse_poly("-z^2+7z-5")};
  const auto w = sequence_generate(s, 40);
  for (int n = 3; n <= 40; ++n) {
    const auto& p = w.polys;
    // integer coefficients pass 2^53 around n = 30, so compare at rounding level
    const ComplexPoly rhs = -(s.B * p[n - 2] + s.A * p[n - 3]);
    EXPECT_LE(relative_distance(p[n], rhs), 1e-15) << n;
  }
}

TEST(Sequence, MatchesBinomialSum) {
  std::mt19937_64 rng(41);
  for (auto [k, l] : {std::pair{3, 2}, {4, 3}, {2, 1}, {5, 2}}) {
    const RecurrenceSpec s = random_spec(rng, k, l);
    const auto w = sequence_generate(s, 30);
    const oracle::Coeffs A(s.A.coeffs().begin(), s.A.coeffs().end()), B(s.B.coeffs().begin(), s.B.coeffs().end());
    for (int n = 0; n <= 30; ++n) {
      const ComplexPoly want(oracle::sequence_term(k, l, A, B, n));
      EXPECT_LE(relative_distance(w.polys[n], want), 1e-12) << k << "," << l << " n=" << n;
    }
  }
}

TEST(Series, LowOrders) {
  const RecurrenceSpec s{3, 2, parse_poly("z+5"), parse_poly("-z^2+2z+5")};
  const auto w = series_expand(s, 4);
  EXPECT_EQ(w.polys[0], ComplexPoly::constant(1.0));
  EXPECT_EQ(w.polys[2], -s.B);
}

TEST(Series, AgreesWithRecurrenceProperty) {
  std::mt19937_64 rng(42);
  for (auto [k, l] : {std::pair{3, 2}, {4, 3}, {2, 1}, {5, 2}})
    for (int t = 0; t < 5; ++t) {
      const RecurrenceSpec s = random_spec(rng, k, l);
      const auto a = sequence_generate(s, 50), b = series_expand(s, 50);
      for (int n = 0; n <= 50; ++n)
        for (std::size_t i = 0; i < std::max(a.polys[n].size(), b.polys[n].size()); ++i)
          EXPECT_LE(std::abs(a.polys[n][i] - b.polys[n][i]), 1e-12 * std::max(1.0, a.polys[n].max_abs_coeff()));
    }
}

TEST(Sequence, DegreeIsLargestTermDegree) {
  // generic coefficients: no cancellation among leading terms of the binomial sum
  std::mt19937_64 rng(43);
  for (auto [k, l] : {std::pair{3, 2}, {4, 3}, {5, 2}}) {
    const int da = 2, db = 1;
    RecurrenceSpec s{k, l, ComplexPoly(oracle::random_poly(rng, da)), ComplexPoly(oracle::random_poly(rng, db))};
    const auto w = sequence_generate(s, 40);
    for (int n = 0; n <= 40; ++n) {
      int want = -1;
      for (int a = 0; a * k <= n; ++a)
        if ((n - a * k) % l == 0) want = std::max(want, a * da + (n - a * k) / l * db);
      if (want < 0) {
        EXPECT_TRUE(w.polys[n].is_zero()) << "n=" << n;
      } else {
        ASSERT_TRUE(w.polys[n].degree().has_value()) << "n=" << n;
        EXPECT_EQ(*w.polys[n].degree(), static_cast<std::size_t>(want)) << "n=" << n;
      }
    }
  }
}

TEST(StructuralFactor, ReassemblesSequence) {
  const RecurrenceSpec s{4, 3, parse_poly("7z^5-2z+i"), parse_poly("-z^2-2z+5")};
  const auto w = sequence_generate(s, 60);
  for (int n = 0; n <= 60; ++n) {
    const auto sf = structural_factor(s, n);
    if (sf.empty) {
      EXPECT_TRUE(w.polys[n].is_zero()) << n;
      continue;
    }
    const ComplexPoly back =
        pow(s.A, static_cast<unsigned>(sf.a_min)) * pow(s.B, static_cast<unsigned>(sf.b_min)) * sf.cofactor;
    EXPECT_LE(relative_distance(back, w.polys[n]), 1e-12) << n;
  }
}

TEST(PointEvaluation, MatchesPolynomial) {
  const RecurrenceSpec s{3, 2, parse_poly("z+5"), parse_poly("-z^2+2z+5")};
  const auto w = sequence_generate(s, 25);
  for (cplx z : {cplx(0.3, 0.2), cplx(-1.0, 2.0), cplx(2.5, -0.5)}) {
    const PointValue pv = evaluate_sequence(s, 25, z);
    EXPECT_FALSE(pv.rescaled);
    EXPECT_LE(std::abs(pv.value - w.polys[25](z)), 1e-10 * (1.0 + std::abs(pv.value)));
    EXPECT_LE(std::abs(pv.derivative - derivative(w.polys[25])(z)), 1e-10 * (1.0 + std::abs(pv.derivative)));
  }
}

TEST(PointEvaluation, RescalingKeepsRatio) {
  const RecurrenceSpec s{3, 2, parse_poly("z+5"), parse_poly("-z^2+2z+5")};
  const cplx z{3.0, 4.0};
  const PointValue big = evaluate_sequence(s, 400, z);
  EXPECT_TRUE(big.rescaled);
  EXPECT_TRUE(std::isfinite(std::abs(big.value / big.derivative)));
}

TEST(Denominator, Trinomial) {
  const RecurrenceSpec s{3, 2, parse_poly("z+5"), parse_poly("-z^2+2z+5")};
  EXPECT_EQ(denominator_at(s, 0.0), (ComplexPoly{1.0, 0.0, 5.0, 5.0}));
}
