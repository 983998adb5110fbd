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

#include <random>

#include "bingcheck/cover/cover.hpp"
#include "bingcheck/witt/battery.hpp"
#include "bingcheck/witt/witt.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace bingcheck;
using namespace bingcheck::witt;
using poly::parse_laurent;
using seifert::Angle;

namespace {

LaurentPoly L(const char* s) { return parse_laurent(s); }

const SeifertMatrix kUnknot;
const SeifertMatrix kTrefoil(exactmat::QMatrix{{-1, 1}, {0, -1}});
const SeifertMatrix kFigureEight(exactmat::QMatrix{{1, 1}, {0, -1}});
const SeifertMatrix kStevedore(exactmat::QMatrix{{1, 1}, {0, -2}});

std::vector<SeifertMatrix> knots() {
  std::vector<SeifertMatrix> out{kUnknot, kTrefoil, kFigureEight, kStevedore};
  for (long n = -5; n <= 5; ++n) {
    if (n != 0) out.emplace_back(gen::twist(n));
  }
  return out;
}

std::vector<Angle> small_angles() {
  std::vector<Angle> out;
  for (long q = 2; q <= 11; ++q) {
    for (long a = 1; a < q; ++a) {
      if (std::gcd(a, q) == 1) out.push_back(Angle::make(a, q));
    }
  }
  return out;
}

}  // namespace

TEST(FromSeifert, SpecExamples) {
  EXPECT_EQ(from_seifert(kUnknot).size(), 0u);
  WittPresentation p = from_seifert(kTrefoil);
  EXPECT_EQ(p.matrix(), (LMatrix{{L("t + t^-1 - 2"), L("1 - t")}, {L("1 - t^-1"), L("t + t^-1 - 2")}}));
  EXPECT_EQ(p.ring(), Ring::Z);
  EXPECT_EQ(p.order(), L("t^2 - t + 1"));
  for (const auto& k : knots()) {
    const LMatrix b = from_seifert(k).matrix();
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) EXPECT_EQ(b(j, i), b(i, j).reciprocal());
    }
    EXPECT_EQ(from_seifert(k).order(), seifert::alexander(k));
  }
  SeifertMatrix rational(exactmat::QMatrix{{Rational(1, 2), 1}, {0, Rational(-1, 2)}});
  EXPECT_EQ(from_seifert(rational).ring(), Ring::Q);
  EXPECT_THROW(WittPresentation(LMatrix{{L("t")}}, Ring::Z), DomainError);
}

TEST(Phi, SpecExamples) {
  WittPresentation p = from_seifert(kFigureEight);
  EXPECT_EQ(phi(p, 1), p);
  EXPECT_EQ(phi(phi(p, 3), 5), phi(p, 15));
  EXPECT_EQ(phi(p, 3).order(), poly::normalize_unit(p.order().substitute_power(3)));
  EXPECT_THROW(phi(p, 0), DomainError);
}

TEST(Phi, ReparametrizationAtRationalAngles) {
  for (const auto& k : knots()) {
    WittPresentation p = from_seifert(k);
    for (long n : {3L, 5L}) {
      WittPresentation pn = phi(p, n);
      EXPECT_EQ(pn.size(), p.size());
      for (const auto& ang : small_angles()) {
        long num = (n * ang.a) % ang.q;
        auto lhs = seifert::hermitian_signature_at(pn.matrix(), ang);
        if (num == 0) {
          EXPECT_EQ(lhs, (exactmat::SignatureCount{0, static_cast<int>(p.size())}));
          continue;
        }
        EXPECT_EQ(lhs, seifert::hermitian_signature_at(p.matrix(), Angle::make(num, ang.q)));
      }
    }
  }
}

TEST(WittSum, AdditiveAndMultiplicative) {
  WittPresentation a = from_seifert(kTrefoil), b = from_seifert(kStevedore);
  EXPECT_EQ(witt_sum(a, WittPresentation()), a);
  WittPresentation ab = witt_sum(a, b);
  EXPECT_EQ(ab.order(), poly::normalize_unit(a.order() * b.order()));
  for (const auto& ang : small_angles()) {
    auto sa = seifert::hermitian_signature_at(a.matrix(), ang), sb = seifert::hermitian_signature_at(b.matrix(), ang);
    auto sab = seifert::hermitian_signature_at(ab.matrix(), ang);
    EXPECT_EQ(sab.signature, sa.signature + sb.signature);
  }
  EXPECT_EQ(witt_sum(a, with_ring(b, Ring::Z2loc)).ring(), Ring::Z2loc);
  EXPECT_EQ(witt_sum(with_ring(a, Ring::Q), with_ring(b, Ring::Z2loc)).ring(), Ring::Q);
}

TEST(WittSum, OddMultipleScalesSignatures) {
  for (const auto& k : knots()) {
    WittPresentation p = from_seifert(k);
    for (long m : {3L, 5L}) {
      WittPresentation sum = p;
      for (long i = 1; i < m; ++i) sum = witt_sum(sum, p);
      for (const auto& ang : small_angles()) {
        auto one = seifert::hermitian_signature_at(p.matrix(), ang);
        auto many = seifert::hermitian_signature_at(sum.matrix(), ang);
        EXPECT_EQ(many.signature, m * one.signature);
        EXPECT_EQ(many.nullity, m * one.nullity);
      }
    }
  }
}

TEST(Jpq, SpecExamples) {
  EXPECT_EQ(jpq_presentation(kUnknot, 2, 3).size(), 0u);
  LaurentPoly d = L("t^2 - t + 1");
  EXPECT_EQ(jpq_presentation(kTrefoil, 1, 2).order(),
            poly::normalize_unit(d * d.substitute_power(3) * d.substitute_power(2)));
  for (long p = 1; p <= 3; ++p) {
    for (long q = 1; q <= 3; ++q) {
      EXPECT_EQ(obstruction_battery(jpq_presentation(kStevedore, p, q)).verdict(), Verdict::NO_OBSTRUCTION_FOUND)
          << p << "," << q;
    }
  }
}

TEST(CyclotomicFactors, SpecExamples) {
  EXPECT_EQ(cyclotomic_factors(L("t^2 - t + 1")), std::vector<long>{6});
  EXPECT_TRUE(cyclotomic_factors(L("t^2 - 3t + 1")).empty());
  LaurentPoly synthetic = LaurentPoly::from_dense(poly::cyclotomic(5) * poly::cyclotomic(6));
  EXPECT_EQ(cyclotomic_factors(synthetic), (std::vector<long>{5, 6}));
  EXPECT_EQ(poly::eval_rational(synthetic, Rational(1)), Rational(5));
  EXPECT_EQ(cyclotomic_factors(L("t^12 - 1")), (std::vector<long>{1, 2, 3, 4, 6, 12}));
}

TEST(CyclotomicFactors, NoPrimePowersInAlexanderPolynomials) {
  std::mt19937 rng(307);
  for (int trial = 0; trial < 60; ++trial) {
    SeifertMatrix s(gen::random_admissible(rng, 1 + trial % 2));
    for (long d : cyclotomic_factors(seifert::alexander(s))) {
      long p = 0;
      EXPECT_FALSE(poly::is_prime_power(d, &p)) << d;
      EXPECT_NE(d, 1);
    }
  }
}

TEST(Battery, SpecExamples) {
  ObstructionReport st = obstruction_battery(kStevedore);
  EXPECT_EQ(st.verdict(), Verdict::NO_OBSTRUCTION_FOUND);
  EXPECT_TRUE(st.fox_milnor.pass);
  EXPECT_TRUE(st.signature_function.identically_zero());
  EXPECT_EQ(st.arf, 0);

  ObstructionReport tr = obstruction_battery(kTrefoil);
  EXPECT_EQ(tr.verdict(), Verdict::NOT_ALG_SLICE);
  ASSERT_NE(tr.certificate(), nullptr);
  EXPECT_EQ(tr.certificate()->test, "signature_function");
  EXPECT_NE(tr.certificate()->detail.find("value -2"), std::string::npos);
  EXPECT_EQ(tr.cyclotomic_factors, std::vector<long>{6});

  ObstructionReport fe = obstruction_battery(kFigureEight);
  EXPECT_EQ(fe.verdict(), Verdict::NOT_ALG_SLICE);
  EXPECT_EQ(fe.certificate()->test, "fox_milnor");
  EXPECT_NE(fe.certificate()->detail.find("Delta(-1) = 5"), std::string::npos);
  EXPECT_EQ(fe.determinant, BigInt(5));
  EXPECT_EQ(fe.determinant_is_square, false);

  ObstructionReport un = obstruction_battery(kUnknot);
  EXPECT_EQ(un.verdict(), Verdict::NO_OBSTRUCTION_FOUND);
}

TEST(Battery, KnotPlusReverseMirrorIsUnobstructed) {
  for (const auto& k : knots()) {
    EXPECT_EQ(obstruction_battery(seifert::connected_sum(k, seifert::mirror(k))).verdict(),
              Verdict::NO_OBSTRUCTION_FOUND);
  }
}

TEST(Battery, CoveringClassOfTrefoil) {
  SeifertMatrix tilde = cover::covering_seifert_matrix(kTrefoil, 3);
  ObstructionReport r = obstruction_battery(tilde);
  EXPECT_EQ(r.ring, Ring::Q);
  EXPECT_FALSE(r.arf.has_value());
  EXPECT_EQ(r.verdict(), Verdict::NO_OBSTRUCTION_FOUND);
}

TEST(Bing, SpecExamples) {
  BingReport un = bing_double_verdict(kUnknot, 3);
  EXPECT_EQ(un.verdict(), Verdict::NO_OBSTRUCTION_FOUND);
  for (const auto& c : un.checks) EXPECT_TRUE(c.passed) << c.name;
  EXPECT_EQ(un.conclusions, std::vector<std::string>{"no obstruction found"});

  BingReport fe = bing_double_verdict(kFigureEight, 2);
  EXPECT_EQ(fe.verdict(), Verdict::NOT_ALG_SLICE);
  EXPECT_EQ(fe.battery.certificate()->test, "fox_milnor");
  EXPECT_EQ(fe.conclusions.front(), "B(K) is not slice");

  BingReport tr = bing_double_verdict(kTrefoil, 2);
  EXPECT_EQ(tr.battery.certificate()->test, "signature_function");
  ASSERT_EQ(tr.conclusions.size(), 2u);
  EXPECT_NE(tr.conclusions[1].find("Arf"), std::string::npos);
  for (const auto& c : tr.checks) EXPECT_TRUE(c.passed) << c.name;

  BingReport st = bing_double_verdict(kStevedore, 3);
  EXPECT_EQ(st.verdict(), Verdict::NO_OBSTRUCTION_FOUND);
  for (const auto& c : st.checks) {
    EXPECT_TRUE(c.passed) << c.name;
    EXPECT_TRUE(c.applicable) << c.name;
  }
}
