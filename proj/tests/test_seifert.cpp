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

#include <complex>
#include <numbers>
#include <random>

#include "bingcheck/seifert/seifert.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace bingcheck;
using namespace bingcheck::seifert;
using poly::parse_laurent;

namespace {

const SeifertMatrix kUnknot;
const SeifertMatrix kTrefoil(QMatrix{{-1, 1}, {0, -1}});
const SeifertMatrix kFigureEight(QMatrix{{1, 1}, {0, -1}});
const SeifertMatrix kStevedore(QMatrix{{1, 1}, {0, -2}});

LaurentPoly L(const char* s) { return parse_laurent(s); }

// Numeric Levine-Tristram form (1 - w) A + (1 - conj w) A^T.
std::pair<int, int> numeric_signature(const QMatrix& a, double theta) {
  const std::complex<double> w = std::polar(1.0, theta);
  const std::size_t n = a.rows();
  std::vector<std::vector<std::complex<double>>> h(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      h[i][j] = (1.0 - w) * a(i, j).to_double() + (1.0 - std::conj(w)) * a(j, i).to_double();
    }
  }
  return oracle::numeric_hermitian_signature(h);
}

LaurentPoly cofactor_alexander(const QMatrix& a) {
  std::vector<std::vector<LaurentPoly>> m(a.rows(), std::vector<LaurentPoly>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = LaurentPoly(a(i, j)) - LaurentPoly::monomial(a(j, i), 1);
  }
  return oracle::cofactor_det(m);
}

}  // namespace

TEST(Admissibility, FlagsAndErrors) {
  EXPECT_TRUE(kTrefoil.is_integral());
  EXPECT_THROW(SeifertMatrix(QMatrix{{1, 0}, {0, 1}}), AdmissibilityError);
  EXPECT_THROW(SeifertMatrix(QMatrix(2, 3)), AdmissibilityError);
  SeifertMatrix half(QMatrix{{Rational(1, 2), 1}, {0, Rational(-1, 2)}});
  EXPECT_FALSE(half.is_integral());
  EXPECT_THROW(SeifertMatrix(QMatrix{{Rational(1, 2), 1}, {0, 1}}, Integrality::integral), AdmissibilityError);
  EXPECT_FALSE(SeifertMatrix(QMatrix{{0, 2}, {0, 0}}).is_integral());  // det(A - A^T) = 4
}

TEST(Alexander, SpecExamples) {
  EXPECT_EQ(alexander(kUnknot), LaurentPoly(1));
  EXPECT_EQ(alexander(kTrefoil), L("t^2 - t + 1"));
  EXPECT_EQ(alexander(kFigureEight), L("t^2 - 3t + 1"));
  EXPECT_EQ(alexander(kStevedore), L("2t^2 - 5t + 2"));
  EXPECT_EQ(poly::eval_rational(alexander(kFigureEight), Rational(-1)), Rational(5));
}

TEST(Alexander, MatchesCofactorAndKnotConditions) {
  std::mt19937 rng(211);
  for (int trial = 0; trial < 100; ++trial) {
    QMatrix a = gen::random_admissible(rng, 1 + trial % 2);
    SeifertMatrix s(a, Integrality::integral);
    LaurentPoly d = alexander(s);
    EXPECT_EQ(d, poly::normalize_unit(cofactor_alexander(a)));
    Rational at1 = poly::eval_rational(d, Rational(1));
    EXPECT_TRUE(at1 == Rational(1) || at1 == Rational(-1));
    EXPECT_EQ(poly::normalize_unit(d), poly::normalize_unit(d.reciprocal()));
    LaurentPoly q;
    EXPECT_FALSE(poly::try_divide(d, L("t - 1"), q));
  }
}

TEST(SignatureAt, SpecExamples) {
  EXPECT_EQ(signature_at(kTrefoil, 1, 2), (SignatureCount{-2, 0}));
  EXPECT_EQ(signature_at(kFigureEight, 1, 2), (SignatureCount{0, 0}));
  EXPECT_EQ(signature_at(kTrefoil, 1, 6).nullity, 1);
  EXPECT_EQ(signature_at(mirror(kTrefoil), 1, 2), (SignatureCount{2, 0}));
  EXPECT_EQ(signature_at(kUnknot, 1, 3), (SignatureCount{0, 0}));
  EXPECT_THROW(signature_at(kTrefoil, 0, 3), DomainError);
  EXPECT_THROW(signature_at(kTrefoil, 3, 3), DomainError);
  EXPECT_THROW(signature_at(kTrefoil, 4, 3), DomainError);
}

TEST(SignatureAt, MatchesNumericEigenvalues) {
  std::mt19937 rng(223);
  std::uniform_int_distribution<long> qd(3, 23);
  for (int trial = 0; trial < 60; ++trial) {
    QMatrix a = gen::random_admissible(rng, 1 + trial % 2, 2);
    SeifertMatrix s(a);
    long q = qd(rng);
    std::uniform_int_distribution<long> ad(1, q - 1);
    long aa = ad(rng);
    Angle ang = Angle::make(aa, q);
    auto exact = signature_at(s, ang);
    auto numeric = numeric_signature(a, ang.radians());
    EXPECT_EQ(exact.signature, numeric.first) << aa << "/" << q;
    EXPECT_EQ(exact.nullity, numeric.second) << aa << "/" << q;
    // conjugation symmetry
    EXPECT_EQ(signature_at(s, Angle::make(q - aa, q)), exact);
  }
}

TEST(SignatureAt, NullityDetectsAlexanderRoots) {
  // Delta(omega) = 0 iff nullity > 0; check with cyclotomic Alexander polynomials.
  for (long n = -5; n <= 5; ++n) {
    if (n == 0) continue;
    SeifertMatrix s(gen::twist(n));
    LaurentPoly d = alexander(s);
    for (long q = 2; q <= 12; ++q) {
      for (long a = 1; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        std::map<long, Rational> terms(d.terms().begin(), d.terms().end());
        bool root = std::abs(oracle::eval_complex(terms, std::polar(1.0, 2 * std::numbers::pi * a / q))) < 1e-9;
        EXPECT_EQ(signature_at(s, a, q).nullity > 0, root) << n << " " << a << "/" << q;
      }
    }
  }
}

TEST(SignatureFunction, SpecExamples) {
  SignatureFunction fe = signature_function(kFigureEight);
  EXPECT_EQ(fe.arcs.size(), 1u);
  EXPECT_TRUE(fe.identically_zero());

  SignatureFunction tr = signature_function(kTrefoil);
  ASSERT_EQ(tr.jumps.size(), 1u);
  EXPECT_TRUE(tr.jumps[0].u.is_exact());
  EXPECT_EQ(tr.jumps[0].u.lo, Rational(1));  // 2cos(2 pi / 6)
  EXPECT_EQ(tr.jumps[0].nullity, 1);
  ASSERT_EQ(tr.arcs.size(), 2u);
  EXPECT_EQ(tr.arcs[0].value, 0);
  EXPECT_EQ(tr.arcs[1].value, -2);  // arc containing omega = -1

  SignatureFunction un = signature_function(kUnknot);
  EXPECT_EQ(un.arcs.size(), 1u);
  EXPECT_EQ(un.arcs[0].value, 0);
}

TEST(SignatureFunction, MatchesNumericScan) {
  std::mt19937 rng(227);
  for (int trial = 0; trial < 30; ++trial) {
    QMatrix a = gen::random_admissible(rng, 1 + trial % 2, 2);
    SeifertMatrix s(a);
    SignatureFunction sf = signature_function(s);
    EXPECT_EQ(sf.arcs.front().value, 0);
    for (std::size_t i = 0; i < sf.jumps.size(); ++i) {
      EXPECT_EQ((sf.arcs[i].value - sf.arcs[i + 1].value) % 2, 0);
      EXPECT_GE(sf.jumps[i].nullity, 1);
    }
    for (const auto& arc : sf.arcs) {
      double u_lo = arc.u_lo.to_double(), u_hi = arc.u_hi.to_double();
      for (int k = 1; k < 8; ++k) {
        double u = u_lo + (u_hi - u_lo) * k / 8.0;
        if (u - u_lo < 1e-4 || u_hi - u < 1e-4) continue;
        double theta = std::acos(u / 2);
        EXPECT_EQ(numeric_signature(a, theta).first, arc.value);
      }
    }
  }
}

TEST(Arf, SpecExamples) {
  EXPECT_EQ(arf(kUnknot), 0);
  EXPECT_EQ(arf(kTrefoil), 1);
  EXPECT_EQ(arf(kFigureEight), 1);
  EXPECT_EQ(arf(kStevedore), 0);
  EXPECT_THROW(arf(SeifertMatrix(QMatrix{{Rational(1, 2), 1}, {0, Rational(-1, 2)}})), DomainError);
}

TEST(Determinant, SpecExamples) {
  EXPECT_EQ(determinant_invariant(kUnknot), 1);
  EXPECT_EQ(determinant_invariant(kTrefoil), 3);
  EXPECT_EQ(determinant_invariant(kFigureEight), 5);
  EXPECT_EQ(determinant_invariant(kStevedore), 9);
}

TEST(FoxMilnor, SpecExamples) {
  auto one = fox_milnor(LaurentPoly(1));
  EXPECT_TRUE(one.pass);
  EXPECT_EQ(*one.witness, LaurentPoly(1));
  auto stev = fox_milnor(L("2t^2 - 5t + 2"));
  EXPECT_TRUE(stev.pass);
  EXPECT_EQ(*stev.witness, L("2t - 1"));
  EXPECT_FALSE(fox_milnor(L("t^2 - 3t + 1")).pass);
  EXPECT_FALSE(fox_milnor(L("t^2 - t + 1")).pass);
  auto sq = fox_milnor(L("1/4*t^2 + 1/2*t + 1/4"));
  EXPECT_TRUE(sq.pass);
  EXPECT_EQ(*sq.witness, L("1/2*t + 1/2"));
}

TEST(FoxMilnor, WitnessReproducesDelta) {
  std::mt19937 rng(229);
  for (int trial = 0; trial < 40; ++trial) {
    SeifertMatrix s(gen::random_admissible(rng, 1 + trial % 2));
    SeifertMatrix sum = connected_sum(s, mirror(s));
    LaurentPoly d = alexander(sum);
    auto fm = fox_milnor(d);
    ASSERT_TRUE(fm.pass);
    EXPECT_EQ(poly::normalize_unit(*fm.witness * fm.witness->reciprocal()), d);
    BigInt det = determinant_invariant(sum);
    BigInt root = sqrt(det);
    EXPECT_EQ(root * root, det);
  }
}

TEST(ConnectedSum, Additivity) {
  std::mt19937 rng(233);
  for (int trial = 0; trial < 25; ++trial) {
    SeifertMatrix a(gen::random_admissible(rng, 1)), b(gen::random_admissible(rng, 1));
    SeifertMatrix ab = connected_sum(a, b);
    EXPECT_EQ(alexander(ab), poly::normalize_unit(alexander(a) * alexander(b)));
    EXPECT_EQ(arf(ab), arf(a) ^ arf(b));
    for (auto [x, q] : {std::pair{1L, 2L}, {1L, 5L}, {3L, 7L}, {2L, 9L}}) {
      auto sa = signature_at(a, x, q), sb = signature_at(b, x, q), sab = signature_at(ab, x, q);
      EXPECT_EQ(sab.signature, sa.signature + sb.signature);
      EXPECT_EQ(sab.nullity, sa.nullity + sb.nullity);
    }
  }
  EXPECT_EQ(connected_sum(kTrefoil, kUnknot), kTrefoil);
}

TEST(Mirror, NegatesSignatures) {
  for (const auto& s : {kTrefoil, kFigureEight, kStevedore}) {
    EXPECT_EQ(mirror(mirror(s)), s);
    EXPECT_EQ(alexander(mirror(s)), alexander(s));
    for (long q = 2; q <= 9; ++q) {
      for (long a = 1; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        EXPECT_EQ(signature_at(mirror(s), a, q).signature, -signature_at(s, a, q).signature);
      }
    }
  }
}
