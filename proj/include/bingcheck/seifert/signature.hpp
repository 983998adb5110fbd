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

// Signatures of Hermitian matrices over Q[t, t^-1] (B(t)^T = B(t^-1)) at roots
// of unity, and the step function omega -> sign B(omega) on the unit circle.
//
// At omega = e^(2 pi i a / q) the entries live in Z[x]/(x^q - 1) after clearing
// denominators. The characteristic polynomial is computed there without
// division; its coefficients are real at x = zeta, and their signs are decided
// exactly. Since the characteristic polynomial of a Hermitian matrix has only
// real roots, Descartes' rule of signs counts positive and negative
// eigenvalues exactly.

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

#include "bingcheck/error.hpp"
#include "bingcheck/exactmat/matrix.hpp"
#include "bingcheck/poly/factor.hpp"
#include "bingcheck/poly/real_cyclotomic.hpp"
#include "bingcheck/poly/sturm.hpp"

namespace bingcheck::seifert {

using exactmat::LMatrix;
using exactmat::QMatrix;
using exactmat::SignatureCount;
using poly::IntPoly;
using poly::LaurentPoly;
using poly::RatPoly;

/// The rational angle a/q, reduced, 0 < a/q < 1; omega = e^(2 pi i a/q).
struct Angle {
  long a = 1;
  long q = 2;

  static Angle make(long a, long q) {
    if (q <= 0 || a <= 0 || a >= q) throw DomainError("angle a/q must satisfy 0 < a/q < 1");
    long g = std::gcd(a, q);
    return {a / g, q / g};
  }
  double radians() const { return 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(q); }
  friend bool operator==(const Angle&, const Angle&) = default;
};

namespace detail {

// Element of Z[x]/(x^q - 1).
class Cyclic {
 public:
  Cyclic() = default;
  explicit Cyclic(long q) : c_(static_cast<std::size_t>(q), BigInt(0)) {}
  static Cyclic one(long q) {
    Cyclic r(q);
    r.c_[0] = 1;
    return r;
  }

  std::vector<BigInt>& coeffs() { return c_; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  Cyclic& operator+=(const Cyclic& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyclic& operator-=(const Cyclic& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Cyclic operator-(Cyclic a, const Cyclic& b) { return a -= b; }
  friend Cyclic operator-(Cyclic a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Cyclic operator*(const Cyclic& a, const Cyclic& b) {
    const std::size_t q = a.c_.size();
    Cyclic r(static_cast<long>(q));
    for (std::size_t i = 0; i < q; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < q; ++j) {
        if (b.c_[j] == 0) continue;
        std::size_t k = i + j;
        if (k >= q) k -= q;
        r.c_[k] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  friend bool operator==(const Cyclic&, const Cyclic&) = default;

 private:
  std::vector<BigInt> c_;
};

// Connected components of the nonzero pattern; B is block diagonal after
// permuting each component together.
inline std::vector<std::vector<std::size_t>> components(const LMatrix& b) {
  const std::size_t n = b.rows();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> members{s}, stack{s};
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (comp[j] >= 0 || (b(i, j).is_zero() && b(j, i).is_zero())) continue;
        comp[j] = comp[s];
        members.push_back(j);
        stack.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline LMatrix principal(const LMatrix& b, const std::vector<std::size_t>& idx) {
  LMatrix out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = b(idx[i], idx[j]);
  }
  return out;
}

inline SignatureCount signature_block(const LMatrix& b, Angle angle) {
  const std::size_t n = b.rows();
  const long q = angle.q;
  BigInt den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : b(i, j).terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
    }
  }
  exactmat::Matrix<Cyclic> m(n, n, Cyclic(q));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto& coeffs = m(i, j).coeffs();
      for (const auto& [k, c] : b(i, j).terms()) {
        long e = (k % q) * angle.a % q;
        if (e < 0) e += q;
        coeffs[static_cast<std::size_t>(e)] += c.num() * (den / c.den());
      }
    }
  }
  std::vector<Cyclic> cp = exactmat::berkowitz(m, Cyclic(q), Cyclic::one(q));
  auto emb = poly::UnitRootEmbedding::get(q);
  std::vector<int> s;
  s.reserve(cp.size());
  for (const auto& c : cp) s.push_back(emb->sign_cyclic(c.coeffs()));

  std::size_t zeros = 0;
  while (zeros < s.size() && s[zeros] == 0) ++zeros;
  int pos = 0, neg = 0, last_p = 0, last_n = 0;
  for (std::size_t k = zeros; k < s.size(); ++k) {
    if (s[k] == 0) continue;
    int sp = s[k], sn = (k % 2 == 0) ? s[k] : -s[k];
    if (last_p != 0 && sp != last_p) ++pos;
    if (last_n != 0 && sn != last_n) ++neg;
    last_p = sp;
    last_n = sn;
  }
  if (static_cast<std::size_t>(pos + neg) + zeros != n) {
    throw InvariantViolation("eigenvalue count mismatch: characteristic polynomial is not real-rooted");
  }
  return {pos - neg, static_cast<int>(zeros)};
}

}  // namespace detail

/// Exact signature and nullity of B(omega), omega = e^(2 pi i a/q).
inline SignatureCount hermitian_signature_at(const LMatrix& b, Angle angle) {
  if (!b.is_square()) throw DomainError("signature of a non-square matrix");
  angle = Angle::make(angle.a, angle.q);
  SignatureCount total;
  for (const auto& idx : detail::components(b)) {
    SignatureCount part = detail::signature_block(detail::principal(b, idx), angle);
    total.signature += part.signature;
    total.nullity += part.nullity;
  }
  return total;
}

/// A root omega of det B on the upper unit semicircle, given by the irreducible
/// polynomial of u = omega + omega^-1 and an isolating interval in (-2, 2).
struct UnitCircleRoot {
  IntPoly factor;
  int multiplicity = 1;  // multiplicity of factor in the u-polynomial of det B
  poly::RootInterval u;
  int nullity = 0;  // dim ker B(omega)

  double approx() const { return u.midpoint().to_double(); }
};

/// Constant value of the signature on one arc between consecutive roots.
struct SignatureArc {
  Rational u_lo;  // lower end in u (a root approximation or -2)
  Rational u_hi;  // upper end in u (a root approximation or 2)
  Angle sample;   // certified rational angle with u(sample) strictly inside
  int value = 0;
};

/// Arcs ordered by increasing angle from omega = 1 to omega = -1 (decreasing u);
/// jumps[i] separates arcs[i] and arcs[i + 1].
struct SignatureFunction {
  std::vector<SignatureArc> arcs;
  std::vector<UnitCircleRoot> jumps;

  bool identically_zero() const {
    return std::all_of(arcs.begin(), arcs.end(), [](const SignatureArc& a) { return a.value == 0; });
  }
  // First arc (in angle order) with a nonzero value, or nullptr.
  const SignatureArc* first_nonzero() const {
    for (const auto& a : arcs) {
      if (a.value != 0) return &a;
    }
    return nullptr;
  }
};

namespace detail {

// Sign of 2cos(2 pi a/q) - r; floating point when the margin is comfortable,
// exact otherwise.
inline int compare_cos(long a, long q, const Rational& r) {
  const double d = 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(q)) - r.to_double();
  if (std::abs(d) > 1e-9) return d > 0 ? 1 : -1;
  return poly::UnitRootEmbedding::get(q)->compare_cos(a, r);
}

// Simplest a/q in (0, 1/2) with lo < 2cos(2 pi a/q) < hi (cosine is decreasing
// there, so this is a Stern-Brocot descent).
inline Angle sample_between(const Rational& lo, const Rational& hi) {
  long la = 0, lq = 1, ra = 1, rq = 2;
  while (true) {
    long ma = la + ra, mq = lq + rq;
    if (mq > 100000) throw InvariantViolation("signature arc too narrow to sample");
    if (compare_cos(ma, mq, hi) >= 0) {
      la = ma;
      lq = mq;
    } else if (compare_cos(ma, mq, lo) <= 0) {
      ra = ma;
      rq = mq;
    } else {
      return Angle::make(ma, mq);
    }
  }
}

// t^d g(t + 1/t) for the irreducible u-polynomial g.
inline RatPoly lift_to_t(const IntPoly& g) {
  const std::size_t d = static_cast<std::size_t>(g.degree());
  RatPoly t2p1{Rational(1), Rational(0), Rational(1)};
  RatPoly out;
  RatPoly power = RatPoly::constant(Rational(1));
  for (std::size_t i = 0; i <= d; ++i) {
    out += (power * Rational(g[i])).shifted(d - i);
    power = power * t2p1;
  }
  return out;
}

// dim ker B(omega) where omega is a root of m(t), computed in the field Q[t]/m.
inline int nullity_in_field(const LMatrix& b, const RatPoly& m) {
  auto [g, s, tinv] = poly::extended_gcd(m, RatPoly::x());
  if (g.degree() != 0) throw InvariantViolation("t is not invertible modulo the root polynomial");
  (void)s;
  auto reduce = [&m, tinv = tinv](const LaurentPoly& f) {
    auto [shift, dense] = f.to_dense();
    RatPoly r = poly::remainder(dense, m);
    RatPoly factor = RatPoly::constant(Rational(1));
    if (shift > 0) {
      for (long i = 0; i < shift; ++i) factor = poly::remainder(factor * RatPoly::x(), m);
    } else {
      for (long i = 0; i < -shift; ++i) factor = poly::remainder(factor * tinv, m);
    }
    return poly::remainder(r * factor, m);
  };
  const std::size_t n = b.rows();
  std::vector<std::vector<RatPoly>> a(n, std::vector<RatPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = reduce(b(i, j));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    auto [gg, inv, unused] = poly::extended_gcd(a[rank][c], m);
    (void)unused;
    if (gg.degree() != 0) throw InvariantViolation("root polynomial is not irreducible");
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      RatPoly f = poly::remainder(a[i][c] * inv, m);
      for (std::size_t j = c; j < n; ++j) a[i][j] = poly::remainder(a[i][j] - f * a[rank][j], m);
    }
    ++rank;
  }
  return static_cast<int>(n - rank);
}

}  // namespace detail

/// Signature step function of a Hermitian Laurent matrix with det B != 0.
inline SignatureFunction hermitian_signature_function(const LMatrix& b) {
  if (!exactmat::is_hermitian(b)) throw DomainError("signature function needs B(t)^T = B(t^-1)");
  const LaurentPoly d = exactmat::det(b);
  if (d.is_zero()) throw DomainError("signature function of a degenerate form (det B = 0)");

  SignatureFunction out;
  IntPoly upoly = poly::split_content(poly::to_u_polynomial(d)).second;
  const Rational two(2), minus_two(-2);
  for (const auto& [sqf, mult] : poly::squarefree_decomposition(upoly)) {
    for (const auto& g : poly::factor_squarefree_primitive(sqf)) {
      std::vector<poly::RootInterval> roots;
      if (g.degree() == 1) {
        Rational r(BigInt(-g[0]), g[1]);
        if (minus_two < r && r < two) roots.push_back({r, r});
      } else {
        roots = poly::sturm_isolate(g, minus_two, two);
      }
      for (const auto& iv : roots) out.jumps.push_back({g, mult, iv, 0});
    }
  }
  // Disjoint, then fine intervals; sort by decreasing u.
  const Rational fine(BigInt(1), BigInt(1) << 40);
  for (auto& j : out.jumps) j.u = poly::refine(j.factor, j.u, fine);
  auto by_u = [](const UnitCircleRoot& x, const UnitCircleRoot& y) { return y.u.hi < x.u.lo; };
  bool overlapping = true;
  while (overlapping) {
    overlapping = false;
    std::sort(out.jumps.begin(), out.jumps.end(),
              [](const UnitCircleRoot& x, const UnitCircleRoot& y) { return x.u.lo > y.u.lo; });
    for (std::size_t i = 0; i + 1 < out.jumps.size(); ++i) {
      if (!by_u(out.jumps[i], out.jumps[i + 1])) {
        overlapping = true;
        out.jumps[i].u = poly::bisect(out.jumps[i].factor, out.jumps[i].u);
        out.jumps[i + 1].u = poly::bisect(out.jumps[i + 1].factor, out.jumps[i + 1].u);
      }
    }
  }
  for (auto& j : out.jumps) j.nullity = detail::nullity_in_field(b, detail::lift_to_t(j.factor));

  // Arc boundaries in decreasing u.
  const std::size_t k = out.jumps.size();
  out.arcs.resize(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    Rational hi_bound = i == 0 ? two : out.jumps[i - 1].u.lo;
    Rational lo_bound = i == k ? minus_two : out.jumps[i].u.hi;
    out.arcs[i].u_hi = i == 0 ? two : out.jumps[i - 1].u.midpoint();
    out.arcs[i].u_lo = i == k ? minus_two : out.jumps[i].u.midpoint();
    out.arcs[i].sample = detail::sample_between(lo_bound, hi_bound);
  }
  std::vector<std::future<SignatureCount>> pending;
  for (const auto& arc : out.arcs) {
    pending.push_back(std::async(std::launch::async, [&b, angle = arc.sample] { return hermitian_signature_at(b, angle); }));
  }
  for (std::size_t i = 0; i <= k; ++i) {
    SignatureCount sc = pending[i].get();
    if (sc.nullity != 0) throw InvariantViolation("arc sample landed on a root of det B");
    out.arcs[i].value = sc.signature;
  }
  return out;
}

}  // namespace bingcheck::seifert
