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
#include <string>
#include <utility>
#include <vector>

#include "bingcheck/error.hpp"
#include "bingcheck/exactmat/matrix.hpp"
#include "bingcheck/poly/cyclotomic.hpp"
#include "bingcheck/poly/laurent.hpp"
#include "bingcheck/seifert/seifert.hpp"

namespace bingcheck::witt {

using exactmat::LMatrix;
using poly::LaurentPoly;
using seifert::SeifertMatrix;

/// Coefficient ring R of the Witt group: Z, Z localized at 2, or Q.
enum class Ring { Z, Z2loc, Q };

inline std::string to_string(Ring r) {
  switch (r) {
    case Ring::Z: return "Z";
    case Ring::Z2loc: return "Z(2)";
    case Ring::Q: return "Q";
  }
  return "?";
}

// Toward Q.
inline Ring promote(Ring a, Ring b) { return static_cast<Ring>(std::max(static_cast<int>(a), static_cast<int>(b))); }

/// Hermitian matrix B over Q[t, t^-1] presenting a linking form, together with
/// the product of the (1 - t^k)^n factors introduced by the Seifert bridge, so
/// that order() = det(B) / scale is the Alexander-type order.
class WittPresentation {
 public:
  WittPresentation() = default;

  WittPresentation(LMatrix b, Ring ring, LaurentPoly scale = LaurentPoly(1))
      : b_(std::move(b)), ring_(ring), scale_(std::move(scale)) {
    if (!exactmat::is_hermitian(b_)) throw DomainError("presentation matrix is not Hermitian: B(t)^T != B(t^-1)");
    if (exactmat::det(b_).is_zero()) throw DomainError("presentation matrix is degenerate (det B = 0)");
    if (scale_.is_zero()) throw DomainError("zero scale");
  }

  const LMatrix& matrix() const { return b_; }
  Ring ring() const { return ring_; }
  const LaurentPoly& scale() const { return scale_; }
  std::size_t size() const { return b_.rows(); }

  LaurentPoly order() const { return poly::normalize_unit(poly::exact_quotient(exactmat::det(b_), scale_)); }

  friend bool operator==(const WittPresentation&, const WittPresentation&) = default;

 private:
  LMatrix b_;
  Ring ring_ = Ring::Z;
  LaurentPoly scale_{1};
};

inline WittPresentation from_seifert(const SeifertMatrix& s) {
  const LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::t();
  LaurentPoly scale(1);
  for (std::size_t i = 0; i < s.size(); ++i) scale *= one_minus_t;
  return WittPresentation(seifert::hermitian_form(s.matrix()), s.is_integral() ? Ring::Z : Ring::Q, scale);
}

inline WittPresentation with_ring(const WittPresentation& p, Ring ring) {
  return WittPresentation(p.matrix(), ring, p.scale());
}

/// The map induced by t -> t^n.
inline WittPresentation phi(const WittPresentation& p, long n) {
  if (n < 1) throw DomainError("phi_n needs n >= 1");
  if (n == 1) return p;
  return WittPresentation(exactmat::mat_substitute_power(p.matrix(), n), p.ring(), p.scale().substitute_power(n));
}

inline WittPresentation witt_sum(const WittPresentation& a, const WittPresentation& b) {
  return WittPresentation(exactmat::block_sum(a.matrix(), b.matrix()), promote(a.ring(), b.ring()),
                          a.scale() * b.scale());
}

/// phi_p W(K) + phi_(p+q) W(K) + phi_q W(K).
inline WittPresentation jpq_presentation(const SeifertMatrix& s, long p, long q) {
  if (p < 1 || q < 1) throw DomainError("J(p, q) needs p, q >= 1");
  WittPresentation base = from_seifert(s);
  return witt_sum(phi(base, p), witt_sum(phi(base, p + q), phi(base, q)));
}

/// All d with Phi_d | delta, ascending; only d with phi(d) <= span(delta) can occur.
inline std::vector<long> cyclotomic_factors(const LaurentPoly& delta) {
  if (delta.is_zero()) throw DomainError("cyclotomic_factors: zero polynomial");
  std::vector<long> out;
  const long span = delta.span();
  if (span == 0) return out;
  // phi(d) >= sqrt(d / 2), so d <= 2 span^2 covers every candidate.
  const long limit = 2 * span * span + 2;
  for (long d = 1; d <= limit; ++d) {
    if (poly::euler_phi(d) > span) continue;
    LaurentPoly q;
    if (poly::try_divide(delta, LaurentPoly::from_dense(poly::cyclotomic(d)), q)) out.push_back(d);
  }
  return out;
}

}  // namespace bingcheck::witt
