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
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "bingcheck/error.hpp"
#include "bingcheck/rational.hpp"

namespace bingcheck::poly {

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and degree() is -1 for it. T is BigInt or Rational.
template <class T>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static DensePoly constant(T value) { return DensePoly(std::vector<T>{std::move(value)}); }
  static DensePoly monomial(T value, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = std::move(value);
    return DensePoly(std::move(c));
  }
  static DensePoly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& lead() const { return c_.back(); }
  const T& trailing() const { return c_.front(); }

  DensePoly& operator+=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator*=(const T& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator-(DensePoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend DensePoly operator*(DensePoly a, const T& s) { return a *= s; }
  friend DensePoly operator*(const T& s, DensePoly a) { return a *= s; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return DensePoly(std::move(r));
  }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  // Horner evaluation in any ring U that T converts into.
  template <class U>
  U eval(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += U(*it);
    }
    return acc;
  }

  DensePoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
    return DensePoly(std::move(r));
  }

  // x -> x^-1 times x^deg.
  DensePoly reversed() const {
    std::vector<T> r(c_.rbegin(), c_.rend());
    return DensePoly(std::move(r));
  }

  // p(x) -> p(-x)
  DensePoly negated_argument() const {
    DensePoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  DensePoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> r(k, T(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return DensePoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = DensePoly<BigInt>;
using RatPoly = DensePoly<Rational>;

template <class T>
std::string to_string(const DensePoly<T>& p, const char* var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    T c = p[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string cs;
    if constexpr (std::is_same_v<T, BigInt>) cs = c.get_str(); else cs = c.to_string();
    if (k == 0) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const DensePoly<T>& p) {
  return os << to_string(p);
}

// ---------------------------------------------------------------------------
// Integer polynomials

inline BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Content removed and leading coefficient made positive.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  BigInt g = content(p);
  if (p.lead() < 0) g = -g;
  std::vector<BigInt> r = p.coeffs();
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(r));
}

// lc(b)^(deg a - deg b + 1) * a = q * b + r
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    BigInt lead = r[static_cast<std::size_t>(k)];
    for (auto& v : r) v *= lb;
    if (lead != 0) {
      for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= lead * b[static_cast<std::size_t>(i)];
    }
    r.pop_back();
  }
  return IntPoly(std::move(r));
}

// Exact division over Z. Returns false if b does not divide a in Z[x].
inline bool try_divide(const IntPoly& a, const IntPoly& b, IntPoly& quotient) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) {
    quotient = {};
    return true;
  }
  if (a.degree() < b.degree()) return false;
  std::vector<BigInt> r = a.coeffs();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  const BigInt& lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    const BigInt& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()) == 0) return false;
    BigInt f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= f * b[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(k - db)] = f;
  }
  for (const auto& v : r) {
    if (v != 0) return false;
  }
  quotient = IntPoly(std::move(q));
  return true;
}

inline IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!try_divide(a, b, q)) throw InvariantViolation("polynomial division expected to be exact");
  return q;
}

inline bool divides(const IntPoly& b, const IntPoly& a) {
  IntPoly q;
  return try_divide(a, b, q);
}

// Primitive gcd with positive leading coefficient (primitive PRS).
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  IntPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? IntPoly{} : primitive_part(r);
  }
  return primitive_part(x);
}

// ---------------------------------------------------------------------------
// Rational polynomials

inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  const Rational inv_lead = b.lead().inverse();
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[static_cast<std::size_t>(k)] * inv_lead;
    if (f.is_zero()) continue;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= f * b[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(k - db)] = f;
  }
  r.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

inline RatPoly remainder(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

inline RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p * p.lead().inverse();
}

inline RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = remainder(x, y);
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

inline RatPoly exact_quotient(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantViolation("polynomial division expected to be exact");
  return q;
}

inline RatPoly to_rat(const IntPoly& p) {
  std::vector<Rational> r;
  r.reserve(p.size());
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return RatPoly(std::move(r));
}

// Clears denominators: returns (c, q) with p = c * q, q primitive integral with positive lead.
inline std::pair<Rational, IntPoly> split_content(const RatPoly& p) {
  if (p.is_zero()) return {Rational(0), IntPoly{}};
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<BigInt> z;
  z.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    BigInt v = c.num() * (l / c.den());
    z.push_back(v);
  }
  IntPoly zi(std::move(z));
  IntPoly prim = primitive_part(zi);
  BigInt g = content(zi);
  if (zi.lead() < 0) g = -g;
  return {Rational(g, l), prim};
}

// Extended Euclid over Q: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<RatPoly, RatPoly, RatPoly> extended_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(Rational(1)), s1;
  RatPoly t0, t1 = RatPoly::constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = r0.lead().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

// Yun's algorithm. Returns (factor, multiplicity) pairs with squarefree,
// pairwise coprime, nonconstant primitive factors; constants are dropped.
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  std::vector<std::pair<IntPoly, int>> out;
  if (f.degree() <= 0) return out;
  RatPoly a = to_rat(primitive_part(f));
  RatPoly b = a.derivative();
  RatPoly c = gcd(a, b);
  RatPoly w = exact_quotient(a, c);
  RatPoly y = exact_quotient(b, c);
  int i = 1;
  while (w.degree() > 0) {
    RatPoly z = y - w.derivative();
    RatPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(split_content(g).second, i);
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    ++i;
  }
  return out;
}

inline IntPoly squarefree_part(const IntPoly& f) {
  IntPoly r = IntPoly::constant(BigInt(1));
  for (const auto& [g, m] : squarefree_decomposition(f)) r = r * g;
  return r;
}

}  // namespace bingcheck::poly
