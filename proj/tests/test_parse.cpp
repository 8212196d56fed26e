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

#include "zerocurve/parse.hpp"

using namespace zerocurve;

TEST(Parse, WorkedExamples) {
  EXPECT_EQ(parse_poly("z+5"), (ComplexPoly{5.0, 1.0}));
  EXPECT_EQ(parse_poly("-z^2 + 7z - 5"), (ComplexPoly{-5.0, 7.0, -1.0}));
  EXPECT_EQ(parse_poly("7z^5 - 2z + i"), (ComplexPoly{cplx(0, 1), -2.0, 0.0, 0.0, 0.0, 7.0}));
  EXPECT_EQ(parse_poly("-z^2+2z+5"), (ComplexPoly{5.0, 2.0, -1.0}));
  EXPECT_EQ(parse_poly("z^3-z+6"), (ComplexPoly{6.0, -1.0, 0.0, 1.0}));
  EXPECT_EQ(parse_poly("z^2+1"), (ComplexPoly{1.0, 0.0, 1.0}));
  EXPECT_EQ(parse_poly("z^3-1"), (ComplexPoly{-1.0, 0.0, 0.0, 1.0}));
}

TEST(Parse, ZeroIsCanonical) {
  EXPECT_TRUE(parse_poly("0").is_zero());
  EXPECT_TRUE(parse_poly("z - z").is_zero());
}

TEST(Parse, ComplexCoefficients) {
  EXPECT_EQ(parse_poly("(1+2i)*z - 2i"), (ComplexPoly{cplx(0, -2), cplx(1, 2)}));
  EXPECT_EQ(parse_poly("(1.5-0.25i)z^2"), (ComplexPoly{0.0, 0.0, cplx(1.5, -0.25)}));
  EXPECT_EQ(parse_poly("i z"), (ComplexPoly{0.0, cplx(0, 1)}));
  EXPECT_EQ(parse_poly("3i"), ComplexPoly::constant(cplx(0, 3)));
  EXPECT_EQ(parse_poly("(2)"), ComplexPoly::constant(2.0));
  EXPECT_EQ(parse_poly("1e-3 z"), (ComplexPoly{0.0, 1e-3}));
}

TEST(Parse, LikeTermsAccumulate) {
  EXPECT_EQ(parse_poly("z + z + 2*z^2 - z^2"), (ComplexPoly{0.0, 2.0, 1.0}));
}

TEST(Parse, OtherVariable) {
  EXPECT_EQ(parse_poly("t^3 + t^2 + 1", 't'), (ComplexPoly{1.0, 0.0, 1.0, 1.0}));
  EXPECT_EQ(parse_poly(PolySource{"x - 2", 'x'}), (ComplexPoly{-2.0, 1.0}));
  EXPECT_THROW(parse_poly("i", 'i'), DomainError);
}

TEST(Parse, SyntaxErrorsCarryOffset) {
  try {
    parse_poly("z + * 3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  EXPECT_THROW(parse_poly(""), ParseError);
  EXPECT_THROW(parse_poly("z^"), ParseError);
  EXPECT_THROW(parse_poly("z +"), ParseError);
  EXPECT_THROW(parse_poly("(1+2)"), ParseError);
  EXPECT_THROW(parse_poly("z y"), ParseError);
  EXPECT_THROW(parse_poly("2 3"), ParseError);
}

TEST(Parse, ExponentBound) {
  EXPECT_NO_THROW(parse_poly("z^64"));
  EXPECT_THROW(parse_poly("z^65"), ParseError);
}

TEST(Format, RoundTripExamples) {
  for (const char* s : {"z+5", "-z^2+2z+5", "z^3-z+6", "-z^2+7z-5", "z^2+1", "z^3-1", "7z^5-2z+i", "-z^2-2z+5", "0"}) {
    const ComplexPoly p = parse_poly(s);
    EXPECT_EQ(parse_poly(format_poly(p)), p) << s << " -> " << format_poly(p);
  }
}

TEST(Format, RoundTripRandom) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> g(0.0, 3.0);
  for (int t = 0; t < 100; ++t) {
    std::vector<cplx> c(1 + t % 9);
    for (auto& x : c) {
      const int kind = static_cast<int>(rng() % 4);
      x = kind == 0 ? cplx{} : kind == 1 ? cplx(g(rng), 0.0) : kind == 2 ? cplx(0.0, g(rng)) : cplx(g(rng), g(rng));
    }
    const ComplexPoly p(c);
    EXPECT_EQ(parse_poly(format_poly(p)), p) << format_poly(p);
  }
}

TEST(Format, Shape) {
  EXPECT_EQ(format_poly(ComplexPoly{cplx(0, -2), cplx(1, 2), 0.0, -1.5}), "-1.5*z^3 + (1+2i)*z - 2i");
  EXPECT_EQ(format_poly(ComplexPoly{}), "0");
}
