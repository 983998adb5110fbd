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

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "bingcheck/error.hpp"
#include "bingcheck/poly/cyclotomic.hpp"
#include "bingcheck/poly/dense_poly.hpp"
#include "bingcheck/poly/laurent.hpp"
#include "bingcheck/poly/zp.hpp"

namespace bingcheck::poly {

/// f = content * t^shift * prod factor_i^multiplicity_i, each factor primitive,
/// irreducible over Q, with positive leading coefficient.
struct Factorization {
  long shift = 0;
  Rational content{1};
  std::vector<std::pair<IntPoly, int>> factors;

  LaurentPoly expand() const {
    IntPoly prod = IntPoly::constant(BigInt(1));
    for (const auto& [g, m] : factors) {
      for (int i = 0; i < m; ++i) prod = prod * g;
    }
    return LaurentPoly::from_dense(prod, shift) * LaurentPoly(content);
  }
};

// Degree first, then coefficient vectors compared lexicographically from t^0 up.
inline bool canonical_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

namespace detail {

inline IntPoly lift_to_z(const zp::Poly& a) {
  std::vector<BigInt> c;
  c.reserve(a.size());
  for (auto v : a) c.emplace_back(static_cast<unsigned long>(v));
  return IntPoly(std::move(c));
}

inline IntPoly mod_coeffs(const IntPoly& a, const BigInt& m) {
  std::vector<BigInt> c = a.coeffs();
  for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

inline IntPoly symmetric_mod(const IntPoly& a, const BigInt& m) {
  BigInt half = m / 2;
  std::vector<BigInt> c = a.coeffs();
  for (auto& v : c) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  return IntPoly(std::move(c));
}

// Given f = g0 * h0 mod p with g0 monic and lc(h0) = lc(f) mod p, returns
// (G, H) with f = G * H mod p^k, G monic lifting g0, lc(H) = lc(f).
inline std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& f, const zp::Poly& g0, const zp::Poly& h0,
                                               zp::Coeff p, unsigned k) {
  auto [s, t] = zp::bezout(g0, h0, p);
  IntPoly g = lift_to_z(g0);
  std::vector<BigInt> hc = lift_to_z(h0).coeffs();
  hc.back() = f.lead();
  IntPoly h(std::move(hc));
  BigInt m(static_cast<unsigned long>(p));
  const BigInt pz(static_cast<unsigned long>(p));
  for (unsigned j = 1; j < k; ++j) {
    IntPoly diff = f - g * h;
    std::vector<BigInt> dc = diff.coeffs();
    for (auto& v : dc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    zp::Poly e = zp::reduce(IntPoly(std::move(dc)), p);
    if (!e.empty()) {
      auto [q, dg] = zp::divmod(zp::mul(e, t, p), g0, p);
      zp::Poly dh = zp::add(zp::mul(e, s, p), zp::mul(q, h0, p), p);
      g += lift_to_z(dg) * m;
      h += lift_to_z(dh) * m;
    }
    m *= pz;
  }
  return {mod_coeffs(g, m), h};
}

inline void hensel_all(const IntPoly& f, const std::vector<zp::Poly>& modular, std::size_t lo, std::size_t hi,
                       zp::Coeff p, unsigned k, const BigInt& pk, std::vector<IntPoly>& out) {
  if (hi - lo == 1) {
    BigInt inv;
    BigInt lc = f.lead();
    if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t()) == 0) {
      throw InvariantViolation("hensel: leading coefficient not invertible mod p^k");
    }
    out.push_back(mod_coeffs(f * inv, pk));
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  zp::Poly g0{1}, h0{1};
  for (std::size_t i = lo; i < mid; ++i) g0 = zp::mul(g0, modular[i], p);
  for (std::size_t i = mid; i < hi; ++i) h0 = zp::mul(h0, modular[i], p);
  h0 = zp::scale(h0, zp::reduce(IntPoly::constant(f.lead()), p)[0], p);
  auto [g, h] = hensel_pair(f, g0, h0, p, k);
  hensel_all(g, modular, lo, mid, p, k, pk, out);
  hensel_all(h, modular, mid, hi, p, k, pk, out);
}

inline BigInt factor_coefficient_bound(const IntPoly& f) {
  // |lc(f)| * 2^deg(f) * ceil(||f||_2) bounds every coefficient of lc(f)/lc(g) * g
  // for any divisor g of f.
  BigInt norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  BigInt bound = abs(f.lead()) * root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  return bound;
}

// Enumerates k-subsets of [0, n) in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Irreducible factors over Z of a primitive, squarefree f with positive
/// leading coefficient (Zassenhaus: modular factorization, Hensel lifting,
/// subset recombination). Output is in canonical order.
inline std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& input) {
  IntPoly f = primitive_part(input);
  std::vector<IntPoly> result;
  if (f.degree() <= 0) return result;
  if (f[0] == 0) {
    result.push_back(IntPoly::x());
    IntPoly rest = exact_quotient(f, IntPoly::x());
    for (auto& g : factor_squarefree_primitive(rest)) result.push_back(std::move(g));
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
  }
  if (f.degree() == 1) return {f};

  // Prime choice: among the first few usable primes, take the one with the fewest
  // modular factors.
  zp::Coeff best_p = 0;
  std::size_t best_count = 0;
  int tried = 0;
  for (zp::Coeff p = 3; tried < 6 && p < 100000; p += 2) {
    if (!is_prime(static_cast<long>(p))) continue;
    BigInt pz(static_cast<unsigned long>(p));
    if (mpz_divisible_p(f.lead().get_mpz_t(), pz.get_mpz_t())) continue;
    zp::Poly fp = zp::reduce(f, p);
    if (!zp::is_squarefree(fp, p)) continue;
    ++tried;
    std::size_t count = 0;
    for (const auto& [g, d] : zp::distinct_degree(zp::monic(fp, p), p)) {
      count += static_cast<std::size_t>(zp::degree(g) / d);
    }
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
    if (count == 1) break;
  }
  if (best_p == 0) throw InvariantViolation("factor: no suitable prime found");
  if (best_count == 1) return {f};

  const zp::Coeff p = best_p;
  std::vector<zp::Poly> modular = zp::factor_squarefree(zp::reduce(f, p), p);

  BigInt bound = 2 * detail::factor_coefficient_bound(f) + 1;
  unsigned k = 1;
  BigInt pk(static_cast<unsigned long>(p));
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(p);
    ++k;
  }
  std::vector<IntPoly> lifted;
  detail::hensel_all(f, modular, 0, modular.size(), p, k, pk, lifted);

  std::vector<IntPoly> remaining = lifted;
  IntPoly rest = f;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      IntPoly cand = IntPoly::constant(rest.lead());
      for (auto i : idx) cand = detail::mod_coeffs(cand * remaining[i], pk);
      cand = primitive_part(detail::symmetric_mod(cand, pk));
      IntPoly quotient;
      if (cand.degree() > 0 && try_divide(rest, cand, quotient)) {
        result.push_back(cand);
        rest = quotient;
        std::vector<IntPoly> keep;
        for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          keep.push_back(remaining[i]);
        }
        remaining = std::move(keep);
        found = true;
        break;
      }
    } while (detail::next_combination(idx, remaining.size()));
    if (!found) ++s;
  }
  if (rest.degree() > 0) result.push_back(primitive_part(rest));
  std::sort(result.begin(), result.end(), canonical_less);
  return result;
}

/// Complete factorization of a nonzero Laurent polynomial over Q.
inline Factorization factor_rational(const LaurentPoly& f) {
  if (f.is_zero()) throw DomainError("factor_rational: zero polynomial");
  Factorization out;
  auto form = integral_form(f);
  out.shift = form.shift;
  out.content = form.content;
  for (const auto& [g, m] : squarefree_decomposition(form.poly)) {
    for (auto& h : factor_squarefree_primitive(g)) out.factors.emplace_back(std::move(h), m);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

}  // namespace bingcheck::poly
