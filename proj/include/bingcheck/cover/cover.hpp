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

#pragma once

#include <optional>
#include <string>

#include "bingcheck/error.hpp"
#include "bingcheck/exactmat/matrix.hpp"
#include "bingcheck/poly/laurent.hpp"
#include "bingcheck/poly/resultant.hpp"
#include "bingcheck/seifert/seifert.hpp"

namespace bingcheck::cover {

using exactmat::LMatrix;
using exactmat::QMatrix;
using poly::LaurentPoly;
using seifert::SeifertMatrix;

/// |H_1| of a branched cyclic cover: a nonnegative integer, or infinite.
struct HomologyOrder {
  std::optional<BigInt> value;  // empty means infinite

  bool is_infinite() const { return !value.has_value(); }
  std::string to_string() const { return value ? value->get_str() : "INFINITE"; }
  friend bool operator==(const HomologyOrder&, const HomologyOrder&) = default;
};

/// Fox's formula |prod_{i=1}^{p-1} Delta(zeta^i)| as |Res(Delta, 1 + t + ... + t^(p-1))|.
inline HomologyOrder branched_cover_homology_order(const LaurentPoly& delta, long p) {
  if (delta.is_zero()) throw DomainError("branched cover of a zero Alexander polynomial");
  if (p < 2) throw DomainError("branched cover degree p must be at least 2");
  if (!delta.is_integral()) throw DomainError("Fox's formula needs integer coefficients");
  // |zeta| = 1, so the shift by t^min does not change the absolute value.
  auto [shift, dense] = delta.to_dense();
  (void)shift;
  std::vector<BigInt> c;
  for (const auto& r : dense.coeffs()) c.push_back(r.num());
  poly::IntPoly f(std::move(c));
  poly::IntPoly g(std::vector<BigInt>(static_cast<std::size_t>(p), BigInt(1)));
  BigInt r = poly::resultant(f, g);
  if (r == 0) return {};
  return {abs(r)};
}

/// Seifert matrix of the preimage of a knot in its p-fold branched cover,
///   A~ = A - A^T (G^(p-1) - (G - I)^(p-1)) (G^p - (G - I)^p)^-1 G,
/// with G = (A - A^T)^-1 A. Always flagged rational.
inline SeifertMatrix covering_seifert_matrix(const SeifertMatrix& s, long p) {
  if (p < 2) throw DomainError("cover degree p must be at least 2");
  const QMatrix& a = s.matrix();
  const std::size_t n = a.rows();
  if (n == 0) return SeifertMatrix(QMatrix(), seifert::Integrality::rational);
  const QMatrix id = QMatrix::identity(n);
  const QMatrix gamma = exactmat::inverse(a - a.transpose()) * a;
  const QMatrix shifted = gamma - id;
  QMatrix g_pow = id, s_pow = id;
  for (long k = 0; k < p - 1; ++k) {
    g_pow = g_pow * gamma;
    s_pow = s_pow * shifted;
  }
  const QMatrix x = g_pow - s_pow;                            // G^(p-1) - (G-I)^(p-1)
  const QMatrix y = g_pow * gamma - s_pow * shifted;          // G^p - (G-I)^p
  if (exactmat::det(y).is_zero()) {
    throw HypothesisViolation("formula hypothesis violated: Gamma^p - (Gamma - I)^p is singular");
  }
  const QMatrix tilde = a - a.transpose() * x * exactmat::inverse(y) * gamma;
  if (exactmat::det(tilde - tilde.transpose()).is_zero()) {
    throw HypothesisViolation("formula hypothesis violated: covering matrix has A - A^T singular");
  }
  return SeifertMatrix(tilde, seifert::Integrality::rational);
}

/// Presentation of the (n, 1)-cable: t -> t^n.
inline LMatrix cable_presentation(const LMatrix& p, long n) {
  if (n < 1) throw DomainError("cable parameter n must be at least 1");
  if (exactmat::det(p).is_zero()) throw DomainError("presentation matrix has zero determinant");
  return exactmat::mat_substitute_power(p, n);
}

/// Presentation of a satellite with pattern data P2 and winding number w:
/// P1 (+) P2(t^w). For w = 0 the pattern block is evaluated at t = 1.
inline LMatrix satellite_presentation(const LMatrix& p1, const LMatrix& p2, long w) {
  if (exactmat::det(p1).is_zero() || exactmat::det(p2).is_zero()) {
    throw DomainError("presentation matrix has zero determinant");
  }
  if (w == 0) {
    return exactmat::block_sum(p1, p2.map([](const LaurentPoly& f) { return LaurentPoly(f.eval(Rational(1))); }));
  }
  return exactmat::block_sum(p1, exactmat::mat_substitute_power(p2, w));
}

}  // namespace bingcheck::cover
