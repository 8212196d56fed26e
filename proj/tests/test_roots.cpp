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

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "zerocurve/qdisc.hpp"
#include "zerocurve/roots.hpp"

using namespace zerocurve;

namespace {

std::vector<double> sorted_moduli(const RootSet& rs) {
  std::vector<double> m;
  for (auto r : rs.sorted_roots()) m.push_back(std::abs(r));
  return m;
}

}  // namespace

TEST(FindRoots, CubeRootsOfMinusOne) {
  const RootSet rs = find_roots(ComplexPoly{1.0, 0.0, 0.0, 1.0});
  ASSERT_EQ(rs.size(), 3u);
  EXPECT_TRUE(rs.certified);
  for (double m : sorted_moduli(rs)) EXPECT_NEAR(m, 1.0, 1e-14);
}

TEST(FindRoots, KnownFactorization) {
  const RootSet rs = find_roots(ComplexPoly{1.0, 0.0, 1.0, 2.0});
  const auto m = sorted_moduli(rs);
  EXPECT_NEAR(m[0], std::sqrt(0.5), 1e-14);
  EXPECT_NEAR(m[1], std::sqrt(0.5), 1e-14);
  EXPECT_NEAR(m[2], 1.0, 1e-14);
  EXPECT_NEAR(std::abs(rs.sorted(2) + 1.0), 0.0, 1e-14);
}

TEST(FindRoots, DoubleRoot) {
  const RootSet rs = find_roots(ComplexPoly{1.0, -2.0, 1.0});
  EXPECT_TRUE(rs.certified);
  for (auto r : rs.roots) EXPECT_LE(std::abs(r - 1.0), 1e-6);
}

TEST(FindRoots, ZeroLowOrderCoefficients) {
  const RootSet rs = find_roots(ComplexPoly{0.0, 0.0, -1.0, 1.0});
  EXPECT_EQ(rs.sorted(0), cplx{});
  EXPECT_EQ(rs.sorted(1), cplx{});
  EXPECT_NEAR(std::abs(rs.sorted(2) - 1.0), 0.0, 1e-15);
}

TEST(FindRoots, Errors) {
  EXPECT_THROW(find_roots(ComplexPoly{}), DomainError);
  EXPECT_THROW(find_roots(ComplexPoly::constant(3.0)), DomainError);
}

TEST(FindRoots, OrderingIsPermutationWithTieBreak) {
  const RootSet rs = find_roots(ComplexPoly{-1.0, 0.0, 0.0, 0.0, 1.0});
  std::vector<std::size_t> o = rs.order;
  std::sort(o.begin(), o.end());
  for (std::size_t i = 0; i < o.size(); ++i) EXPECT_EQ(o[i], i);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_LT(std::arg(rs.sorted(i - 1)), std::arg(rs.sorted(i)));
}

TEST(FindRoots, MatchesEigenOracle) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 40; ++t) {
    const auto c = oracle::random_poly(rng, 2 + t % 12);
    const RootSet rs = find_roots(ComplexPoly(c));
    auto want = oracle::roots(c);
    for (auto r : rs.roots) {
      auto it = std::min_element(want.begin(), want.end(), [&](cplx a, cplx b) { return std::abs(a - r) < std::abs(b - r); });
      EXPECT_LE(std::abs(*it - r), 1e-8 * (1.0 + std::abs(r)));
      want.erase(it);
    }
  }
}

TEST(FindRoots, ReconstructionProperty) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 30; ++t) {
    const int deg = 2 + static_cast<int>(rng() % 49);
    const auto c = oracle::random_poly(rng, deg);
    const ComplexPoly p(c);
    const RootSet rs = find_roots(p);
    EXPECT_TRUE(rs.certified) << deg;
    ComplexPoly back = ComplexPoly::constant(p.leading());
    for (auto r : rs.roots) back = back * ComplexPoly{-r, 1.0};
    // expanding the product loses about eps * deg * prod(1+|r|) / max|c|
    double growth = 1.0;
    for (auto r : rs.roots) growth *= 1.0 + std::abs(r);
    const double bound = 64.0 * deg * 2.2e-16 * growth * std::abs(p.leading()) / p.max_abs_coeff();
    EXPECT_LE(relative_distance(back, p), std::max(1e-12, bound)) << deg;
  }
}

TEST(FindRoots, ScaleInvarianceProperty) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 20; ++t) {
    const ComplexPoly p(oracle::random_poly(rng, 3 + t % 8));
    const auto base = find_roots(p).sorted_roots();
    for (double s : {1e-6, 1e6}) {
      const auto scaled = find_roots(p * cplx(s, 0.0)).sorted_roots();
      for (std::size_t i = 0; i < base.size(); ++i) EXPECT_LE(std::abs(base[i] - scaled[i]), 1e-12 * (1.0 + std::abs(base[i])));
    }
  }
}

TEST(FindRoots, VietaForTrinomials) {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 50; ++t) {
    const int k = 2 + t % 6, l = 1 + static_cast<int>(rng() % static_cast<unsigned>(k - 1));
    const cplx A = oracle::random_annulus(rng, 0.1, 10.0), B = oracle::random_annulus(rng, 0.1, 10.0);
    const RootSet rs = find_roots(trinomial(A, B, k, l));
    cplx prod{1.0, 0.0};
    for (auto r : rs.roots) prod *= r;
    const cplx want = (k % 2 ? -1.0 : 1.0) / A;
    EXPECT_LE(std::abs(prod - want), 1e-10 * std::abs(want));
  }
}

TEST(FindRoots, HighDegreeCertified) {
  std::mt19937_64 rng(55);
  const ComplexPoly p(oracle::random_poly(rng, 300));
  const RootSet rs = find_roots(p);
  EXPECT_TRUE(rs.certified);
  EXPECT_EQ(rs.size(), 300u);
}

TEST(QuotientProfile, SimpleRatios) {
  RootSet rs;
  rs.roots = {4.0, 1.0, 2.0};
  rs.residuals = {0, 0, 0};
  rs.order = {1, 2, 0};
  const auto qp = quotient_profile(rs);
  EXPECT_EQ(qp.base, cplx(1.0));
  EXPECT_EQ(qp.quotients, (std::vector<cplx>{2.0, 4.0}));
  EXPECT_FALSE(qp.smallest_pair_equimodular);
}

TEST(QuotientProfile, ConjugatePairs) {
  const auto qa = quotient_profile(find_roots(ComplexPoly{1.0, 0.0, 1.0, 2.0}));
  EXPECT_NEAR(std::abs(qa.quotients[0]), 1.0, 1e-13);
  EXPECT_TRUE(qa.smallest_pair_equimodular);
  const auto qb = quotient_profile(find_roots(ComplexPoly{1.0, 0.0, 1.0, 1.0}));
  EXPECT_NEAR(std::abs(qb.quotients[0]), 1.0, 1e-13);
  EXPECT_NEAR(std::abs(qb.quotients[1]), 1.7742, 1e-4);
  EXPECT_NEAR(std::abs(qb.base), 0.8260, 1e-4);
}

TEST(QuotientProfile, ZeroBaseRejected) {
  EXPECT_THROW(quotient_profile(find_roots(ComplexPoly{0.0, 1.0, 1.0})), DomainError);
}
