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

// Necessary conditions for algebraic sliceness, and the Bing double verdict
// built on them: if B(K) is slice then K is algebraically slice, so any failed
// condition shows that B(K) is not slice.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bingcheck/poly/cyclotomic.hpp"
#include "bingcheck/seifert/seifert.hpp"
#include "bingcheck/witt/witt.hpp"

namespace bingcheck::witt {

enum class Verdict { NOT_ALG_SLICE, NO_OBSTRUCTION_FOUND };

inline std::string to_string(Verdict v) {
  return v == Verdict::NOT_ALG_SLICE ? "NOT_ALG_SLICE" : "NO_OBSTRUCTION_FOUND";
}

/// A failed necessary condition. test is one of signature_function,
/// fox_milnor, arf, determinant_square.
struct Failure {
  std::string test;
  std::string detail;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct ObstructionReport {
  std::string subject;
  Ring ring = Ring::Z;
  std::size_t size = 0;
  LaurentPoly alexander{1};
  seifert::FoxMilnorResult fox_milnor;
  seifert::SignatureFunction signature_function;
  std::optional<int> arf;              // empty: not applicable
  std::optional<BigInt> determinant;   // |Delta(-1)|, integral only
  std::optional<bool> determinant_is_square;
  std::vector<long> cyclotomic_factors;
  std::vector<Failure> failures;       // in certificate order

  Verdict verdict() const { return failures.empty() ? Verdict::NO_OBSTRUCTION_FOUND : Verdict::NOT_ALG_SLICE; }
  const Failure* certificate() const { return failures.empty() ? nullptr : &failures.front(); }
};

namespace detail {

inline std::string angle_text(const seifert::Angle& a) {
  return std::to_string(a.a) + "/" + std::to_string(a.q);
}

inline ObstructionReport assemble(std::string subject, Ring ring, std::size_t size, LaurentPoly delta,
                                  seifert::SignatureFunction sf, bool integral) {
  ObstructionReport r;
  r.subject = std::move(subject);
  r.ring = ring;
  r.size = size;
  r.alexander = std::move(delta);
  r.fox_milnor = seifert::fox_milnor(r.alexander);
  r.signature_function = std::move(sf);
  r.cyclotomic_factors = cyclotomic_factors(r.alexander);
  const Rational at_one = poly::eval_rational(r.alexander, Rational(1));
  if (integral && r.alexander.is_integral() && at_one.abs() == Rational(1)) {
    r.arf = seifert::arf_from_alexander(r.alexander);
    BigInt d = poly::eval_rational(r.alexander, Rational(-1)).abs().num();
    r.determinant = d;
    r.determinant_is_square = mpz_perfect_square_p(d.get_mpz_t()) != 0;
  }

  if (const auto* arc = r.signature_function.first_nonzero()) {
    r.failures.push_back({"signature_function", "value " + std::to_string(arc->value) + " at omega = e^(2 pi i " +
                                                    angle_text(arc->sample) + ")"});
  }
  if (!r.fox_milnor.pass) {
    std::string detail = r.fox_milnor.reason;
    if (r.determinant_is_square == false) detail += "; Delta(-1) = " + r.determinant->get_str() + " is not a square";
    r.failures.push_back({"fox_milnor", detail});
  }
  if (r.arf == 1) r.failures.push_back({"arf", "Arf invariant is 1"});
  if (r.determinant_is_square == false) {
    r.failures.push_back({"determinant_square", "determinant " + r.determinant->get_str() + " is not a square"});
  }
  return r;
}

}  // namespace detail

inline ObstructionReport obstruction_battery(const SeifertMatrix& s, std::string subject = {}) {
  return detail::assemble(std::move(subject), s.is_integral() ? Ring::Z : Ring::Q, s.size(), seifert::alexander(s),
                          seifert::signature_function(s), s.is_integral());
}

inline ObstructionReport obstruction_battery(const WittPresentation& p, std::string subject = {}) {
  return detail::assemble(std::move(subject), p.ring(), p.size(), p.order(),
                          seifert::hermitian_signature_function(p.matrix()), p.ring() == Ring::Z);
}

struct CrossCheck {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

struct BingReport {
  ObstructionReport battery;
  long range = 3;
  std::vector<CrossCheck> checks;
  std::vector<std::string> conclusions;
  bool telescoping_violated = false;

  Verdict verdict() const {
    return battery.verdict() == Verdict::NOT_ALG_SLICE || telescoping_violated ? Verdict::NOT_ALG_SLICE
                                                                               : Verdict::NO_OBSTRUCTION_FOUND;
  }
};

namespace detail {

inline long first_prime_above(long n) {
  long p = n + 1;
  while (!poly::is_prime(p)) ++p;
  return p;
}

// Signature of B at angle k*a/q reduced mod 1; omega^k = 1 gives B(1) = 0.
inline int signature_at_multiple(const LMatrix& b, long k, const seifert::Angle& angle) {
  long num = (k * angle.a) % angle.q;
  if (num == 0) return 0;
  return seifert::hermitian_signature_at(b, seifert::Angle::make(num, angle.q)).signature;
}

}  // namespace detail

/// Rational angles used to cross-check J(p, q) signature data: k/P for
/// k = 1..count with P the first prime above max(2 range, count).
inline std::vector<seifert::Angle> crosscheck_angles(long range, long count = 20) {
  const long prime = detail::first_prime_above(std::max(2 * range, count));
  std::vector<seifert::Angle> out;
  for (long k = 1; k <= count; ++k) out.push_back(seifert::Angle::make(k, prime));
  return out;
}

inline BingReport bing_double_verdict(const SeifertMatrix& s, long range = 3, std::string subject = {}) {
  if (!s.is_integral()) throw DomainError("the Bing double verdict needs an integral Seifert matrix");
  if (range < 1) throw DomainError("cross-check range must be at least 1");
  BingReport out;
  out.range = range;
  out.battery = obstruction_battery(s, std::move(subject));
  const WittPresentation base = from_seifert(s);
  const LMatrix& b = base.matrix();

  // J(p, q) signatures against sigma(omega^p) + sigma(omega^(p+q)) + sigma(omega^q).
  const auto angles = crosscheck_angles(range);
  for (long p = 1; p <= range; ++p) {
    for (long q = 1; q <= range; ++q) {
      CrossCheck c{"jpq_signature p=" + std::to_string(p) + " q=" + std::to_string(q), true, true, {}};
      const LMatrix j = jpq_presentation(s, p, q).matrix();
      int mismatches = 0;
      for (const auto& angle : angles) {
        int lhs = seifert::hermitian_signature_at(j, angle).signature;
        int rhs = detail::signature_at_multiple(b, p, angle) + detail::signature_at_multiple(b, p + q, angle) +
                  detail::signature_at_multiple(b, q, angle);
        if (lhs != rhs) ++mismatches;
      }
      c.passed = mismatches == 0;
      c.detail = std::to_string(angles.size() - static_cast<std::size_t>(mismatches)) + "/" +
                 std::to_string(angles.size()) + " angles agree";
      out.checks.push_back(std::move(c));
    }
  }

  // Telescoping: W(J(1, q)) = W(J(1, q - 1)) = 0 forces phi_(q-1) W = phi_(q+1) W.
  std::map<long, Verdict> j1;
  for (long q = 1; q <= range; ++q) j1[q] = obstruction_battery(jpq_presentation(s, 1, q)).verdict();
  for (long q = 2; q <= range; ++q) {
    CrossCheck c{"telescoping q=" + std::to_string(q), true, true, {}};
    if (j1[q] != Verdict::NO_OBSTRUCTION_FOUND || j1[q - 1] != Verdict::NO_OBSTRUCTION_FOUND) {
      c.applicable = false;
      c.detail = "J(1," + std::to_string(q - 1) + ") or J(1," + std::to_string(q) + ") battery is nonzero";
      out.checks.push_back(std::move(c));
      continue;
    }
    const LMatrix lo = phi(base, q - 1).matrix(), hi = phi(base, q + 1).matrix();
    std::vector<seifert::Angle> samples;
    for (const auto& arc : seifert::hermitian_signature_function(lo).arcs) samples.push_back(arc.sample);
    for (const auto& arc : seifert::hermitian_signature_function(hi).arcs) samples.push_back(arc.sample);
    int compared = 0, mismatches = 0;
    for (const auto& angle : samples) {
      auto a = seifert::hermitian_signature_at(lo, angle), h = seifert::hermitian_signature_at(hi, angle);
      if (a.nullity != 0 || h.nullity != 0) continue;
      ++compared;
      if (a.signature != h.signature) ++mismatches;
    }
    c.passed = mismatches == 0;
    c.detail = "phi_" + std::to_string(q - 1) + " vs phi_" + std::to_string(q + 1) + ": " +
               std::to_string(compared - mismatches) + "/" + std::to_string(compared) + " sample angles agree";
    if (!c.passed) out.telescoping_violated = true;
    out.checks.push_back(std::move(c));
  }

  if (out.verdict() == Verdict::NOT_ALG_SLICE) {
    out.conclusions.push_back("B(K) is not slice");
    if (out.battery.arf == 1) out.conclusions.push_back("Arf(K) = 1, so B(K) is not slice");
  } else {
    out.conclusions.push_back("no obstruction found");
  }
  return out;
}

}  // namespace bingcheck::witt
