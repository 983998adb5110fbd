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
#include <vector>

#include "bingcheck/error.hpp"
#include "bingcheck/poly/dense_poly.hpp"

namespace bingcheck::poly {

// Sign of f(x) using the homogenized integer form, no rational intermediates.
inline int sign_at(const IntPoly& f, const Rational& x) {
  if (f.is_zero()) return 0;
  const BigInt a = x.num(), b = x.den();
  // sum c_i a^i b^(n-i): Horner in a with a running power of b; b > 0 keeps the sign.
  BigInt acc = 0, bpow = 1;
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * a + f[static_cast<std::size_t>(i)] * bpow;
    bpow *= b;
  }
  return sgn(acc);
}

/// A root known to lie in [lo, hi]; lo == hi marks an exact rational root.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
};

/// Sturm chain of the squarefree part of f, with integer members whose signs
/// match the classical chain f, f', -rem(...), ...
class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& f) {
    if (f.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
    IntPoly g = squarefree_part(f);
    if (f.lead() < 0) g = -g;
    chain_.push_back(g);
    if (g.degree() <= 0) return;
    chain_.push_back(without_content(g.derivative()));
    while (chain_.back().degree() > 0) {
      const IntPoly& a = chain_[chain_.size() - 2];
      const IntPoly& b = chain_.back();
      IntPoly r = pseudo_remainder(a, b);
      if (r.is_zero()) break;
      int delta = a.degree() - b.degree();
      bool negative_factor = b.lead() < 0 && (delta + 1) % 2 == 1;
      chain_.push_back(without_content(negative_factor ? r : -r));
    }
  }

  const IntPoly& squarefree() const { return chain_.front(); }
  const std::vector<IntPoly>& chain() const { return chain_; }

  int variations(const Rational& x) const { return count_variations(signs(x)); }

  // Variations just to the right / left of x; well defined even when x is a root.
  int variations_right(const Rational& x) const {
    auto s = signs(x);
    if (s[0] == 0 && s.size() > 1) s[0] = s[1];
    return count_variations(s);
  }
  int variations_left(const Rational& x) const {
    auto s = signs(x);
    if (s[0] == 0 && s.size() > 1) s[0] = -s[1];
    return count_variations(s);
  }

  // Number of distinct real roots in the open interval (a, b).
  int count_open(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return variations_right(a) - variations_left(b);
  }

 private:
  // Divides by the positive content, keeping signs.
  static IntPoly without_content(const IntPoly& p) {
    BigInt c = content(p);
    std::vector<BigInt> r = p.coeffs();
    for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(r));
  }

  std::vector<int> signs(const Rational& x) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& p : chain_) s.push_back(sign_at(p, x));
    return s;
  }

  static int count_variations(const std::vector<int>& s) {
    int count = 0, last = 0;
    for (int v : s) {
      if (v == 0) continue;
      if (last != 0 && v != last) ++count;
      last = v;
    }
    return count;
  }

  std::vector<IntPoly> chain_;
};

namespace detail {

inline void isolate(const SturmSequence& sturm, const Rational& a, const Rational& b, int count,
                    std::vector<RootInterval>& out) {
  if (count <= 0) return;
  const IntPoly& f = sturm.squarefree();
  if (count == 1) {
    Rational lo = a, hi = b;
    while (sign_at(f, lo) == 0 || sign_at(f, hi) == 0) {
      Rational m = (lo + hi) / Rational(2);
      if (sign_at(f, m) == 0) {
        out.push_back({m, m});
        return;
      }
      if (sturm.count_open(lo, m) == 1) hi = m; else lo = m;
    }
    out.push_back({lo, hi});
    return;
  }
  Rational m = (a + b) / Rational(2);
  int left = sturm.count_open(a, m);
  isolate(sturm, a, m, left, out);
  if (sign_at(f, m) == 0) out.push_back({m, m});
  isolate(sturm, m, b, sturm.count_open(m, b), out);
}

}  // namespace detail

/// Isolating intervals, in increasing order, for the distinct real roots of f in
/// the open interval (lo, hi). Non-exact intervals have endpoints where the
/// squarefree part of f is nonzero with opposite signs.
inline std::vector<RootInterval> sturm_isolate(const IntPoly& f, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw DomainError("sturm_isolate: empty interval");
  SturmSequence sturm(f);
  std::vector<RootInterval> out;
  if (sturm.squarefree().degree() <= 0) return out;
  detail::isolate(sturm, lo, hi, sturm.count_open(lo, hi), out);
  return out;
}

// One bisection step on a non-exact isolating interval of a root of squarefree f.
inline RootInterval bisect(const IntPoly& f, const RootInterval& iv) {
  if (iv.is_exact()) return iv;
  Rational m = iv.midpoint();
  int sm = sign_at(f, m);
  if (sm == 0) return {m, m};
  if (sm == sign_at(f, iv.lo)) return {m, iv.hi};
  return {iv.lo, m};
}

inline RootInterval refine(const IntPoly& squarefree_f, RootInterval iv, const Rational& max_width) {
  while (!iv.is_exact() && iv.width() > max_width) iv = bisect(squarefree_f, iv);
  return iv;
}

}  // namespace bingcheck::poly
