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
#include <random>
#include <utility>
#include <vector>

#include "bingcheck/error.hpp"
#include "bingcheck/poly/dense_poly.hpp"

// Polynomials over Z/p for a word-size odd prime p < 2^31, ascending coefficients.
namespace bingcheck::poly::zp {

using Coeff = std::uint64_t;
using Poly = std::vector<Coeff>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Coeff pow_mod(Coeff base, std::uint64_t e, Coeff p) {
  Coeff r = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) r = r * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return r;
}

inline Coeff inv_mod(Coeff a, Coeff p) {
  if (a % p == 0) throw DomainError("inverse of zero modulo p");
  return pow_mod(a, p - 2, p);
}

inline Poly reduce(const IntPoly& f, Coeff p) {
  Poly r(f.size());
  BigInt m(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    BigInt v;
    mpz_fdiv_r(v.get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    r[i] = v.get_ui();
  }
  trim(r);
  return r;
}

inline Poly add(const Poly& a, const Poly& b, Coeff p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, Coeff p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

inline Poly scale(const Poly& a, Coeff s, Coeff p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * (s % p) % p;
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, Coeff p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, Coeff p) {
  if (b.empty()) throw DomainError("division by zero polynomial mod p");
  if (a.size() < b.size()) return {Poly{}, a};
  Poly r = a;
  Poly q(a.size() - b.size() + 1, 0);
  const Coeff inv = inv_mod(b.back(), p);
  const std::size_t db = b.size() - 1;
  for (std::size_t k = a.size(); k-- > db;) {
    Coeff f = r[k] * inv % p;
    if (f == 0) continue;
    q[k - db] = f;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = (r[k - db + i] + p - f * b[i] % p) % p;
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

inline Poly rem(const Poly& a, const Poly& b, Coeff p) { return divmod(a, b, p).second; }

inline Poly monic(const Poly& a, Coeff p) {
  if (a.empty()) return a;
  return scale(a, inv_mod(a.back(), p), p);
}

inline Poly gcd(Poly a, Poly b, Coeff p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
inline std::pair<Poly, Poly> bezout(const Poly& a, const Poly& b, Coeff p) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0) throw InvariantViolation("bezout: inputs are not coprime mod p");
  Coeff inv = inv_mod(r0[0], p);
  return {scale(s0, inv, p), scale(t0, inv, p)};
}

inline Poly derivative(const Poly& a, Coeff p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  trim(r);
  return r;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, Coeff p) { return rem(mul(a, b, p), m, p); }

inline Poly powmod(Poly base, const BigInt& e, const Poly& m, Coeff p) {
  Poly r{1};
  base = rem(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mulmod(r, r, m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, m, p);
  }
  return r;
}

inline bool is_squarefree(const Poly& f, Coeff p) {
  Poly d = derivative(f, p);
  if (d.empty()) return false;
  return degree(gcd(f, d, p)) == 0;
}

// Groups the irreducible factors of a monic squarefree f by degree.
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f, Coeff p) {
  std::vector<std::pair<Poly, int>> out;
  Poly x{0, 1};
  Poly h = x;
  BigInt pp(static_cast<unsigned long>(p));
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(h, pp, f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, degree(f));
  return out;
}

// Splits a product of irreducibles all of degree d (Cantor-Zassenhaus, odd p).
inline void equal_degree(const Poly& f, int d, Coeff p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  BigInt e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<Coeff> dist(0, p - 1);
  while (true) {
    Poly a(static_cast<std::size_t>(degree(f)));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly g = gcd(f, a, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
    Poly b = sub(powmod(a, e, f, p), Poly{1}, p);
    g = gcd(f, b, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a squarefree f (made monic first).
inline std::vector<Poly> factor_squarefree(const Poly& f, Coeff p, std::uint64_t seed = 0x5eed) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  for (const auto& [g, d] : distinct_degree(monic(f, p), p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

}  // namespace bingcheck::poly::zp
