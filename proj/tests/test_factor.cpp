/*
   Copyright 2026 The bingcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "bingcheck/poly/factor.hpp"
#include "bingcheck/poly/real_cyclotomic.hpp"
#include "bingcheck/poly/sturm.hpp"

using namespace bingcheck;
using namespace bingcheck::poly;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

// Eisenstein at 2 or 3, hence irreducible over Q.
IntPoly random_eisenstein(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<long> small(-3, 3), coin(0, 1);
  const long p = coin(rng) ? 2 : 3;
  const long unit = coin(rng) ? 1 : -1;
  std::vector<BigInt> c;
  c.emplace_back(p * unit);
  for (int i = 1; i < degree; ++i) c.emplace_back(p * small(rng));
  c.emplace_back(coin(rng) ? 1 : 5);
  return IntPoly(std::move(c));
}

}  // namespace

TEST(Zp, ModularFactorsMultiplyBack) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-20, 20);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BigInt> c;
    for (int i = 0; i < 9; ++i) c.emplace_back(coef(rng));
    c.emplace_back(1);
    IntPoly f(c);
    const zp::Coeff p = 101;
    zp::Poly fp = zp::reduce(f, p);
    if (!zp::is_squarefree(fp, p)) continue;
    auto fs = zp::factor_squarefree(fp, p, 1234);
    zp::Poly prod{1};
    for (const auto& g : fs) prod = zp::mul(prod, g, p);
    EXPECT_EQ(prod, zp::monic(fp, p));
  }
}

TEST(Factor, CyclotomicProducts) {
  // t^12 - 1 = Phi_1 Phi_2 Phi_3 Phi_4 Phi_6 Phi_12
  LaurentPoly f = LaurentPoly::from_dense(ip({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  Factorization fac = factor_rational(f);
  ASSERT_EQ(fac.factors.size(), 6u);
  std::vector<IntPoly> expected;
  for (long d : {1, 2, 3, 4, 6, 12}) expected.push_back(cyclotomic(d));
  std::sort(expected.begin(), expected.end(), canonical_less);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(fac.factors[i].first, expected[i]);
    EXPECT_EQ(fac.factors[i].second, 1);
  }
  EXPECT_EQ(fac.expand(), f);
}

TEST(Factor, Multiplicities) {
  IntPoly phi6 = cyclotomic(6), lin = ip({-2, 1});
  LaurentPoly f = LaurentPoly::from_dense(phi6 * phi6 * phi6 * lin, -4) * LaurentPoly(Rational(-5, 3));
  Factorization fac = factor_rational(f);
  EXPECT_EQ(fac.shift, -4);
  EXPECT_EQ(fac.content, Rational(-5, 3));
  ASSERT_EQ(fac.factors.size(), 2u);
  EXPECT_EQ(fac.factors[0], std::make_pair(lin, 1));
  EXPECT_EQ(fac.factors[1], std::make_pair(phi6, 3));
}

TEST(Factor, SwinnertonDyerIsIrreducible) {
  // x^4 - 10x^2 + 1 splits modulo every prime into factors of degree <= 2.
  IntPoly f = ip({1, 0, -10, 0, 1});
  auto fs = factor_squarefree_primitive(f);
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_EQ(fs[0], f);
}

TEST(Factor, ProductsOfEisensteinPolynomials) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> deg(1, 4), count(2, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<IntPoly> parts;
    IntPoly prod = IntPoly::constant(BigInt(1));
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      IntPoly g = primitive_part(random_eisenstein(rng, deg(rng)));
      bool dup = false;
      for (const auto& h : parts) dup = dup || h == g;
      if (dup) continue;
      parts.push_back(g);
      prod = prod * g;
    }
    std::sort(parts.begin(), parts.end(), canonical_less);
    auto fs = factor_squarefree_primitive(prod);
    EXPECT_EQ(fs, parts) << prod;
  }
}

TEST(Factor, AlexanderExamples) {
  EXPECT_EQ(factor_rational(parse_laurent("2t^2 - 5t + 2")).factors.size(), 2u);
  EXPECT_EQ(factor_rational(parse_laurent("t^2 - 3t + 1")).factors.size(), 1u);
  Factorization f = factor_rational(parse_laurent("1/4*t^2 + 1/2*t + 1/4"));
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].second, 2);
  EXPECT_EQ(f.content, Rational(1, 4));
}

// Brute-force oracle: roots of prod (b_i x - a_i) are the known rationals a_i / b_i.
TEST(Sturm, CountsKnownRoots) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<Rational> roots;
    IntPoly f = IntPoly::constant(BigInt(1));
    for (int i = 0; i < 5; ++i) {
      Rational r(BigInt(num(rng)), BigInt(den(rng)));
      roots.insert(r);
      f = f * IntPoly{BigInt(-r.num()), r.den()};
    }
    Rational lo(-2), hi(3);
    int expected = 0;
    for (const auto& r : roots) expected += (lo < r && r < hi) ? 1 : 0;
    auto ivs = sturm_isolate(f, lo, hi);
    EXPECT_EQ(static_cast<int>(ivs.size()), expected) << f;
    std::vector<Rational> inside;
    for (const auto& r : roots) {
      if (lo < r && r < hi) inside.push_back(r);
    }
    for (std::size_t i = 0; i < ivs.size() && i < inside.size(); ++i) {
      EXPECT_LE(ivs[i].lo, inside[i]);
      EXPECT_GE(ivs[i].hi, inside[i]);
    }
  }
}

TEST(Sturm, MatchesSignScanOnIrrationalRoots) {
  // Roots of products of x^2 - k: +-sqrt(k). Scan signs on a fine grid.
  for (long a = 2; a < 12; ++a) {
    for (long b = a + 1; b < 14; ++b) {
      IntPoly f = ip({-a, 0, 1}) * ip({-b, 0, 1});
      int scan = 0;
      double prev = f.eval(BigInt(-4)).get_d();
      for (int i = 1; i <= 8000; ++i) {
        double x = -4 + i * 1e-3;
        double v = 0;
        for (int k = f.degree(); k >= 0; --k) v = v * x + f[static_cast<std::size_t>(k)].get_d();
        if ((v > 0) != (prev > 0)) ++scan;
        prev = v;
      }
      EXPECT_EQ(static_cast<int>(sturm_isolate(f, Rational(-4), Rational(4)).size()), scan);
    }
  }
}

TEST(Sturm, EndpointRootsAreExcluded) {
  IntPoly f = ip({-1, 0, 1});  // roots +-1
  EXPECT_EQ(sturm_isolate(f, Rational(-1), Rational(1)).size(), 0u);
  EXPECT_EQ(sturm_isolate(f, Rational(-1), Rational(2)).size(), 1u);
  auto ivs = sturm_isolate(f * ip({0, 1}), Rational(-2), Rational(2));
  ASSERT_EQ(ivs.size(), 3u);
  EXPECT_TRUE(ivs[1].is_exact());
  EXPECT_EQ(ivs[1].lo, Rational(0));
}

TEST(RealCyclotomic, MinimalPolynomials) {
  EXPECT_EQ(real_cyclotomic(5), ip({-1, 1, 1}));
  EXPECT_EQ(real_cyclotomic(7), ip({-1, -2, 1, 1}));
  EXPECT_EQ(real_cyclotomic(8), ip({-2, 0, 1}));
  for (long q = 3; q <= 40; ++q) {
    EXPECT_EQ(real_cyclotomic(q).degree(), euler_phi(q) / 2) << q;
    double c = 2 * std::cos(2 * std::numbers::pi / static_cast<double>(q));
    double v = 0;
    const IntPoly psi = real_cyclotomic(q);
    for (int k = psi.degree(); k >= 0; --k) v = v * c + psi[static_cast<std::size_t>(k)].get_d();
    EXPECT_NEAR(v, 0.0, 1e-6) << q;
  }
}

TEST(RealCyclotomic, SignsAgreeWithFloatingPoint) {
  std::mt19937 rng(19);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (long q : {5L, 7L, 9L, 11L, 12L, 13L, 17L, 24L, 31L, 101L}) {
    auto emb = UnitRootEmbedding::get(q);
    const double c = 2 * std::cos(2 * std::numbers::pi / static_cast<double>(q));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<BigInt> h;
      for (int i = 0; i < 5; ++i) h.emplace_back(coef(rng));
      IntPoly hp(h);
      double v = 0;
      for (int k = hp.degree(); k >= 0; --k) v = v * c + hp[static_cast<std::size_t>(k)].get_d();
      if (std::abs(v) < 1e-6) continue;
      EXPECT_EQ(emb->sign(hp), v > 0 ? 1 : -1) << q << " " << hp;
    }
    // exact zero: psi itself and a multiple
    EXPECT_EQ(emb->sign(emb->minimal_polynomial() * ip({3, 1})), 0);
  }
}

TEST(RealCyclotomic, CyclicSignsMatchCosineSums) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (long q : {3L, 4L, 5L, 6L, 8L, 10L, 15L, 22L}) {
    auto emb = UnitRootEmbedding::get(q);
    for (int trial = 0; trial < 30; ++trial) {
      // symmetric g so that the value is real
      std::vector<BigInt> g(static_cast<std::size_t>(q), BigInt(0));
      for (long k = 0; k <= q / 2; ++k) {
        BigInt v(coef(rng));
        g[static_cast<std::size_t>(k)] = v;
        g[static_cast<std::size_t>((q - k) % q)] = v;
      }
      double val = 0;
      for (long k = 0; k < q; ++k) val += g[static_cast<std::size_t>(k)].get_d() * std::cos(2 * std::numbers::pi * k / q);
      if (std::abs(val) < 1e-9) continue;
      EXPECT_EQ(emb->sign_cyclic(g), val > 0 ? 1 : -1) << q;
    }
  }
}
