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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bingcheck/error.hpp"
#include "bingcheck/exactmat/matrix.hpp"
#include "bingcheck/poly/factor.hpp"
#include "bingcheck/poly/laurent.hpp"
#include "bingcheck/seifert/signature.hpp"

namespace bingcheck::seifert {

enum class Integrality { integral, rational };

/// Seifert matrix of a knot: det(A - A^T) != 0. Integral matrices have integer
/// entries and det(A - A^T) = +-1; everything else admissible is rational.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;  // unknot

  explicit SeifertMatrix(QMatrix a, std::optional<Integrality> required = std::nullopt) : a_(std::move(a)) {
    if (!a_.is_square()) throw AdmissibilityError("Seifert matrix must be square");
    const Rational d = exactmat::det(a_ - a_.transpose());
    if (d.is_zero()) throw AdmissibilityError("A - A^T is singular");
    bool integer_entries = true;
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      for (std::size_t j = 0; j < a_.cols(); ++j) integer_entries = integer_entries && a_(i, j).is_integer();
    }
    const bool unimodular = d == Rational(1) || d == Rational(-1);
    integrality_ = integer_entries && unimodular ? Integrality::integral : Integrality::rational;
    if (required == Integrality::integral && integrality_ != Integrality::integral) {
      throw AdmissibilityError(integer_entries ? "det(A - A^T) is not +-1" : "Seifert matrix has non-integer entries");
    }
    if (required == Integrality::rational) integrality_ = Integrality::rational;
  }

  const QMatrix& matrix() const { return a_; }
  std::size_t size() const { return a_.rows(); }
  Integrality integrality() const { return integrality_; }
  bool is_integral() const { return integrality_ == Integrality::integral; }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  QMatrix a_;
  Integrality integrality_ = Integrality::integral;
};

/// A - t A^T, a presentation matrix of the Alexander module.
inline LMatrix alexander_matrix(const QMatrix& a) {
  return exactmat::to_laurent(a) - LaurentPoly::t() * exactmat::to_laurent(a.transpose());
}

/// det(A - t A^T), normalized.
inline LaurentPoly alexander(const SeifertMatrix& s) {
  return poly::normalize_unit(exactmat::det(alexander_matrix(s.matrix())));
}

/// B(t) = (1 - t) A + (1 - t^-1) A^T, so that B(omega) is the Levine-Tristram form.
inline LMatrix hermitian_form(const QMatrix& a) {
  const LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::t();
  return one_minus_t * exactmat::to_laurent(a) + one_minus_t.reciprocal() * exactmat::to_laurent(a.transpose());
}

inline SignatureCount signature_at(const SeifertMatrix& s, Angle angle) {
  return hermitian_signature_at(hermitian_form(s.matrix()), angle);
}

inline SignatureCount signature_at(const SeifertMatrix& s, long a, long q) {
  return signature_at(s, Angle::make(a, q));
}

inline SignatureFunction signature_function(const SeifertMatrix& s) {
  return hermitian_signature_function(hermitian_form(s.matrix()));
}

/// |Delta(-1)|.
inline BigInt determinant_invariant(const SeifertMatrix& s) {
  if (!s.is_integral()) throw DomainError("the knot determinant needs an integral Seifert matrix");
  return poly::eval_rational(alexander(s), Rational(-1)).abs().num();
}

/// Levine's formula: 0 if Delta(-1) = +-1 mod 8, else 1. Needs Delta(1) = +-1.
inline int arf_from_alexander(const LaurentPoly& delta) {
  const Rational at_one = poly::eval_rational(delta, Rational(1));
  if (!delta.is_integral() || at_one.abs() != Rational(1)) {
    throw DomainError("Arf invariant needs an integral Alexander polynomial with Delta(1) = +-1");
  }
  BigInt r = poly::eval_rational(delta, Rational(-1)).abs().num() % 8;
  return (r == 1 || r == 7) ? 0 : 1;
}

inline int arf(const SeifertMatrix& s) {
  if (!s.is_integral()) throw DomainError("Arf invariant is undefined for rational Seifert matrices");
  return arf_from_alexander(alexander(s));
}

struct FoxMilnorResult {
  bool pass = false;
  std::optional<LaurentPoly> witness;  // f with Delta = f(t) f(t^-1) up to units
  std::string reason;                  // why the test failed
};

/// Tests Delta = f(t) f(t^-1) over Q up to units.
inline FoxMilnorResult fox_milnor(const LaurentPoly& delta) {
  if (delta.is_zero()) throw DomainError("fox_milnor: zero polynomial");
  poly::Factorization fac = poly::factor_rational(delta);
  auto reciprocal_of = [](const IntPoly& g) { return poly::primitive_part(g.reversed()); };

  LaurentPoly f(1);
  std::vector<bool> used(fac.factors.size(), false);
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    if (used[i]) continue;
    const auto& [g, m] = fac.factors[i];
    IntPoly g_star = reciprocal_of(g);
    if (g_star == g) {
      if (m % 2 != 0) {
        return {false, std::nullopt,
                "self-reciprocal factor " + poly::to_string(g) + " has odd multiplicity " + std::to_string(m)};
      }
      for (int k = 0; k < m / 2; ++k) f *= LaurentPoly::from_dense(g);
      used[i] = true;
      continue;
    }
    std::size_t partner = fac.factors.size();
    for (std::size_t j = i + 1; j < fac.factors.size(); ++j) {
      if (!used[j] && fac.factors[j].first == g_star) partner = j;
    }
    if (partner == fac.factors.size() || fac.factors[partner].second != m) {
      return {false, std::nullopt,
              "factor " + poly::to_string(g) + " is not matched by its reciprocal with equal multiplicity"};
    }
    // The member of the pair that sorts last goes into f.
    const IntPoly& chosen = poly::canonical_less(g, g_star) ? g_star : g;
    for (int k = 0; k < m; ++k) f *= LaurentPoly::from_dense(chosen);
    used[i] = used[partner] = true;
  }
  Rational root;
  if (rational_sqrt(fac.content.abs(), root)) f *= LaurentPoly(root);
  return {true, f, {}};
}

inline SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  std::optional<Integrality> req;
  if (!a.is_integral() || !b.is_integral()) req = Integrality::rational;
  return SeifertMatrix(exactmat::block_sum(a.matrix(), b.matrix()), req);
}

/// -A^T, a Seifert matrix for the mirror image with reversed orientation.
inline SeifertMatrix mirror(const SeifertMatrix& s) {
  std::optional<Integrality> req;
  if (!s.is_integral()) req = Integrality::rational;
  return SeifertMatrix(-s.matrix().transpose(), req);
}

}  // namespace bingcheck::seifert
