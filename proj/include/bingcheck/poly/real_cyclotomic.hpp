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

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

#include "bingcheck/error.hpp"
#include "bingcheck/poly/cyclotomic.hpp"
#include "bingcheck/poly/dense_poly.hpp"
#include "bingcheck/poly/laurent.hpp"
#include "bingcheck/poly/sturm.hpp"

namespace bingcheck::poly {

// V_k(u) with t^k + t^-k = V_k(t + t^-1): V_0 = 2, V_1 = u, V_{k+1} = u V_k - V_{k-1}.
inline IntPoly lucas_v(long k) {
  if (k < 0) k = -k;
  IntPoly prev = IntPoly::constant(BigInt(2));
  if (k == 0) return prev;
  IntPoly cur = IntPoly::x();
  for (long i = 1; i < k; ++i) {
    IntPoly next = IntPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// For f with f(t) = f(t^-1) exactly, the polynomial P with f(t) = P(t + t^-1).
inline RatPoly to_u_polynomial(const LaurentPoly& f) {
  if (!(f == f.reciprocal())) throw DomainError("to_u_polynomial: polynomial is not symmetric under t -> 1/t");
  RatPoly out;
  for (const auto& [k, c] : f.terms()) {
    if (k < 0) continue;
    RatPoly v = to_rat(lucas_v(k));
    if (k == 0) v = RatPoly::constant(Rational(1));
    out += v * c;
  }
  return out;
}

/// Shifts a palindromic polynomial (f = t^m f(t^-1) for some m) so that it is
/// symmetric about exponent 0. Requires an even span.
inline LaurentPoly centered(const LaurentPoly& f) {
  if (f.is_zero()) throw DomainError("centered: zero polynomial");
  if (f.span() % 2 != 0) throw DomainError("centered: odd span, no symmetric representative");
  LaurentPoly g = f.shifted(-(f.min_exponent() + f.span() / 2));
  if (!(g == g.reciprocal())) {
    if (g == -g.reciprocal()) throw DomainError("centered: polynomial is anti-palindromic");
    throw DomainError("centered: polynomial is not self-reciprocal");
  }
  return g;
}

/// Minimal polynomial over Q of 2cos(2 pi / q).
inline IntPoly real_cyclotomic(long q) {
  if (q < 1) throw DomainError("real_cyclotomic: q must be >= 1");
  if (q == 1) return IntPoly{BigInt(-2), BigInt(1)};
  if (q == 2) return IntPoly{BigInt(2), BigInt(1)};
  LaurentPoly phi = LaurentPoly::from_dense(cyclotomic(q));
  return split_content(to_u_polynomial(centered(phi))).second;
}

// Interval Horner evaluation over [lo, hi] with exact rational endpoints.
inline std::pair<Rational, Rational> interval_eval(const IntPoly& f, const Rational& lo, const Rational& hi) {
  Rational a(0), b(0);
  for (int i = f.degree(); i >= 0; --i) {
    Rational p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
    Rational mn = std::min({p1, p2, p3, p4});
    Rational mx = std::max({p1, p2, p3, p4});
    Rational c(f[static_cast<std::size_t>(i)]);
    a = mn + c;
    b = mx + c;
  }
  return {a, b};
}

/// The real number c = 2cos(2 pi / q), i.e. zeta + zeta^-1 for zeta = e^(2 pi i / q),
/// as a root of its minimal polynomial psi_q with a certified isolating interval.
///
/// Elements of Z[x]/(x^q - 1) whose image at x = zeta is real are mapped to
/// polynomials in u and their signs decided exactly: zero by reduction modulo
/// psi_q, nonzero by interval refinement.
class UnitRootEmbedding {
 public:
  explicit UnitRootEmbedding(long q) : q_(q), psi_(real_cyclotomic(q)) {
    if (q < 1 || q > 100000) throw DomainError("root of unity order out of supported range");
    if (psi_.degree() == 1) {
      // psi = u - c with c in {2, -2, -1, 0, 1}
      exact_ = Rational(BigInt(-psi_[0]), psi_[1]);
      return;
    }
    // The roots of psi are 2cos(2 pi k / q), gcd(k, q) = 1, separated by more than
    // 1e-8 for q in range; an interval of width 2^-29 around the double value with
    // a sign change of psi therefore isolates the k = 1 root.
    const double c = 2.0 * std::cos(2.0 * std::numbers::pi / static_cast<double>(q));
    const double eps = std::ldexp(1.0, -30);
    interval_ = {Rational::from_double(c - eps), Rational::from_double(std::min(c + eps, 2.0))};
    int slo = sign_at(psi_, interval_.lo), shi = sign_at(psi_, interval_.hi);
    if (slo == 0 || shi == 0 || slo == shi) {
      throw InvariantViolation("failed to isolate 2cos(2pi/q) for q = " + std::to_string(q));
    }
    // V_k mod psi for k <= q/2
    vmod_.reserve(static_cast<std::size_t>(q / 2 + 1));
    vmod_.push_back(IntPoly::constant(BigInt(2)));
    vmod_.push_back(reduce(IntPoly::x()));
    for (long k = 2; k <= q / 2; ++k) {
      vmod_.push_back(reduce(IntPoly::x() * vmod_[static_cast<std::size_t>(k - 1)] - vmod_[static_cast<std::size_t>(k - 2)]));
    }
  }

  long order() const { return q_; }
  const IntPoly& minimal_polynomial() const { return psi_; }
  bool is_rational() const { return psi_.degree() == 1; }

  // Sign of h(c) for an integer polynomial h in u.
  int sign(const IntPoly& h) const {
    IntPoly r = reduce(h);
    if (r.is_zero()) return 0;
    if (is_rational()) return sign_at(r, exact_);
    RootInterval iv = interval_;
    for (int iter = 0; iter < 4000; ++iter) {
      auto [lo, hi] = interval_eval(r, iv.lo, iv.hi);
      if (lo.sign() > 0) return 1;
      if (hi.sign() < 0) return -1;
      iv = bisect(psi_, iv);
      if (iv.is_exact()) return sign_at(r, iv.lo);
    }
    throw InvariantViolation("sign determination did not converge");
  }

  // Sign of c - r for rational r.
  int compare(const Rational& r) const {
    // h(u) = den * u - num
    return sign(IntPoly{BigInt(-r.num()), r.den()});
  }

  // Sign of 2cos(2 pi a / q) - r.
  int compare_cos(long a, const Rational& r) const {
    a %= q_;
    if (a < 0) a += q_;
    const long j = std::min(a, q_ - a);
    if (is_rational()) return (lucas_v(j).eval(exact_) - r).sign();
    IntPoly h = vmod_[static_cast<std::size_t>(j)] * r.den() - IntPoly::constant(r.num());
    return sign(h);
  }

  // Sign of the real number sum_k g_k zeta^k, given that it is real. The sign of
  // 2 * value = sum_k g_k V_{min(k, q - k)}(c) is returned.
  int sign_cyclic(const std::vector<BigInt>& g) const {
    if (static_cast<long>(g.size()) != q_) throw DomainError("cyclic element has wrong length");
    if (is_rational()) {
      // q in {1, 2, 3, 4, 6}: evaluate directly with V_k(c) rational.
      Rational sum(0);
      for (long k = 0; k < q_; ++k) {
        if (g[static_cast<std::size_t>(k)] == 0) continue;
        long j = std::min(k, q_ - k);
        sum += Rational(g[static_cast<std::size_t>(k)]) * lucas_v(j).eval(exact_);
      }
      return sum.sign();
    }
    IntPoly h;
    for (long k = 0; k < q_; ++k) {
      if (g[static_cast<std::size_t>(k)] == 0) continue;
      long j = std::min(k, q_ - k);
      h += vmod_[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(k)];
    }
    return sign(h);
  }

  // Shared instance per q.
  static std::shared_ptr<const UnitRootEmbedding> get(long q) {
    static std::mutex mutex;
    static std::map<long, std::shared_ptr<const UnitRootEmbedding>> cache;
    {
      std::lock_guard<std::mutex> lock(mutex);
      auto it = cache.find(q);
      if (it != cache.end()) return it->second;
    }
    auto made = std::make_shared<const UnitRootEmbedding>(q);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(q, made).first->second;
  }

 private:
  IntPoly reduce(const IntPoly& h) const {
    // psi is monic, so division stays in Z[u].
    if (h.degree() < psi_.degree()) return h;
    std::vector<BigInt> r = h.coeffs();
    const int d = psi_.degree();
    for (int k = h.degree(); k >= d; --k) {
      BigInt f = r[static_cast<std::size_t>(k)];
      if (f == 0) continue;
      for (int i = 0; i <= d; ++i) r[static_cast<std::size_t>(k - d + i)] -= f * psi_[static_cast<std::size_t>(i)];
    }
    r.resize(static_cast<std::size_t>(d));
    return IntPoly(std::move(r));
  }

  long q_;
  IntPoly psi_;
  Rational exact_;
  RootInterval interval_;
  std::vector<IntPoly> vmod_;
};

}  // namespace bingcheck::poly
