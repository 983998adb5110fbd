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

#include <cctype>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "bingcheck/error.hpp"
#include "bingcheck/poly/dense_poly.hpp"
#include "bingcheck/rational.hpp"

namespace bingcheck::poly {

/// Element of Q[t, t^-1]: a finite map exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  using Terms = std::map<long, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(0, c);
  }
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Rational& c, long k) {
    LaurentPoly r;
    if (!c.is_zero()) r.terms_.emplace(k, c);
    return r;
  }
  static LaurentPoly t(long k = 1) { return monomial(Rational(1), k); }

  static LaurentPoly from_terms(const Terms& terms) {
    LaurentPoly r;
    for (const auto& [k, c] : terms) r.add_term(k, c);
    return r;
  }

  // t^shift * p(t)
  template <class T>
  static LaurentPoly from_dense(const DensePoly<T>& p, long shift = 0) {
    LaurentPoly r;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != 0) r.terms_.emplace(shift + static_cast<long>(i), Rational(p[i]));
    }
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  long min_exponent() const { return is_zero() ? 0 : terms_.begin()->first; }
  long max_exponent() const { return is_zero() ? 0 : terms_.rbegin()->first; }
  long span() const { return max_exponent() - min_exponent(); }
  Rational coeff(long k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_integral() const {
    for (const auto& [k, c] : terms_) {
      if (!c.is_integer()) return false;
    }
    return true;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [i, ci] : a.terms_) {
      for (const auto& [j, cj] : b.terms_) r.add_term(i + j, ci * cj);
    }
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // f(t) -> f(t^n)
  LaurentPoly substitute_power(long n) const {
    if (n == 0) throw DomainError("substitute_power: exponent multiplier must be nonzero");
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k * n, c);
    return r;
  }
  LaurentPoly reciprocal() const { return substitute_power(-1); }

  LaurentPoly shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  Rational eval(const Rational& r) const {
    if (r.is_zero() && !is_zero() && min_exponent() < 0) {
      throw DomainError("evaluation at 0 of a polynomial with negative exponents");
    }
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
      Rational p = k >= 0 ? pow(r, static_cast<unsigned long>(k)) : pow(r.inverse(), static_cast<unsigned long>(-k));
      acc += c * p;
    }
    return acc;
  }

  // (shift, p) with f = t^shift * p and p(0) != 0.
  std::pair<long, RatPoly> to_dense() const {
    if (is_zero()) return {0, RatPoly{}};
    long lo = min_exponent();
    std::vector<Rational> c(static_cast<std::size_t>(span() + 1));
    for (const auto& [k, v] : terms_) c[static_cast<std::size_t>(k - lo)] = v;
    return {lo, RatPoly(std::move(c))};
  }

 private:
  void add_term(long k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Canonical representative of the class f * (+-t^k): lowest exponent 0 and
/// positive lowest coefficient. Idempotent. Rejects the zero polynomial.
inline LaurentPoly normalize_unit(const LaurentPoly& f) {
  if (f.is_zero()) throw DomainError("normalize_unit: zero polynomial has no unit class");
  LaurentPoly r = f.shifted(-f.min_exponent());
  if (r.coeff(0).sign() < 0) r = -r;
  return r;
}

inline bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize_unit(a) == normalize_unit(b);
}

inline Rational eval_rational(const LaurentPoly& f, const Rational& r) {
  if (r.is_zero()) throw DomainError("eval_rational: evaluation point must be nonzero");
  return f.eval(r);
}

inline bool is_self_reciprocal(const LaurentPoly& f) {
  if (f.is_zero()) throw DomainError("is_self_reciprocal: zero polynomial");
  return normalize_unit(f) == normalize_unit(f.reciprocal());
}

// Exact division in Q[t, t^-1]; false if b does not divide a.
inline bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient) {
  if (b.is_zero()) throw DomainError("division by zero Laurent polynomial");
  if (a.is_zero()) {
    quotient = {};
    return true;
  }
  auto [sa, pa] = a.to_dense();
  auto [sb, pb] = b.to_dense();
  auto [q, r] = divmod(pa, pb);
  if (!r.is_zero()) return false;
  quotient = LaurentPoly::from_dense(q, sa - sb);
  return true;
}

inline LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q;
  if (!try_divide(a, b, q)) throw InvariantViolation("Laurent division expected to be exact");
  return q;
}

// Integer polynomial with f = c * t^k * p, p primitive with positive leading coefficient.
struct IntegralForm {
  Rational content;
  long shift = 0;
  IntPoly poly;
};

inline IntegralForm integral_form(const LaurentPoly& f) {
  if (f.is_zero()) throw DomainError("integral_form: zero polynomial");
  auto [shift, p] = f.to_dense();
  auto [c, q] = split_content(p);
  return {c, shift, q};
}

// ---------------------------------------------------------------------------
// Text syntax: integer or a/b coefficients, t^k powers (k may be negative),
// +/- separators, optional '*' between coefficient and variable.
// Example: "t^-2 - 3 + t^2", "2*t^2 - 5*t + 2", "1/2t".

inline std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    long k = it->first;
    Rational c = it->second;
    bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += c.to_string();
      continue;
    }
    if (c != Rational(1)) out += c.to_string() + "*";
    out += "t";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << to_string(f); }

namespace detail {

class LaurentParser {
 public:
  LaurentParser(std::string_view text, std::size_t line, std::size_t column_offset)
      : s_(text), line_(line), col0_(column_offset) {}

  LaurentPoly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    LaurentPoly result;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [k, c] = term();
      result += LaurentPoly::monomial(sign < 0 ? -c : c, k);
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  std::pair<long, Rational> term() {
    if (at_end()) fail("expected a term");
    Rational coeff(1);
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_number = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 't') fail("expected 't' after '*'");
      }
    }
    if (!at_end() && peek() == 't') {
      ++pos_;
      skip_ws();
      long k = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        k = exponent();
      }
      return {k, coeff};
    }
    if (!have_number) fail("expected a coefficient or 't'");
    return {0, coeff};
  }

  Rational number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    BigInt num(std::string(s_.substr(start, pos_ - start)), 10);
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (dstart == pos_) fail("malformed fraction");
      BigInt den(std::string(s_.substr(dstart, pos_ - dstart)), 10);
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  long exponent() {
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("malformed exponent");
    if (pos_ - start > 12) fail("exponent out of range");
    long k = std::stol(std::string(s_.substr(start, pos_ - start)));
    return negative ? -k : k;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial syntax: " + what, line_, col0_ + pos_ + 1);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
};

}  // namespace detail

// Columns in errors are 1-based, offset by column_offset (for embedded fields).
inline LaurentPoly parse_laurent(std::string_view text, std::size_t line = 1, std::size_t column_offset = 0) {
  return detail::LaurentParser(text, line, column_offset).parse();
}

}  // namespace bingcheck::poly
