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

#include <utility>

#include "bingcheck/error.hpp"
#include "bingcheck/poly/dense_poly.hpp"

namespace bingcheck::poly {

/// Res(f, g) by the subresultant polynomial remainder sequence.
///
/// All intermediate divisions are exact in Z, so coefficients stay integral and
/// grow only polynomially. Zero inputs are rejected.
inline BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant: zero polynomial");
  if (f.degree() == 0 && g.degree() == 0) return BigInt(1);
  if (f.degree() == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), f.lead().get_mpz_t(), static_cast<unsigned long>(g.degree()));
    return r;
  }
  if (g.degree() == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), g.lead().get_mpz_t(), static_cast<unsigned long>(f.degree()));
    return r;
  }

  auto ipow = [](const BigInt& base, long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
  };

  IntPoly a = f, b = g;
  BigInt ca = content(a), cb = content(b);
  if (a.lead() < 0) ca = -ca;
  if (b.lead() < 0) cb = -cb;
  a = primitive_part(a);
  b = primitive_part(b);
  BigInt t = ipow(ca, b.degree()) * ipow(cb, a.degree());
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -1;
  }
  BigInt gg = 1, h = 1;
  while (true) {
    long delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    BigInt divisor = gg * ipow(h, delta);
    if (r.is_zero()) return BigInt(0);
    std::vector<BigInt> rc = r.coeffs();
    for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    b = IntPoly(std::move(rc));
    gg = a.lead();
    // h <- h^(1 - delta) * g^delta
    if (delta == 0) {
      // h unchanged
    } else {
      BigInt num = ipow(gg, delta);
      BigInt den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) {
      long da = a.degree();
      BigInt num = ipow(b.lead(), da);
      BigInt den = ipow(h, da - 1);
      BigInt hh;
      mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return BigInt(s) * t * hh;
    }
  }
}

}  // namespace bingcheck::poly
