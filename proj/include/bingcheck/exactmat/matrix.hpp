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
#include <string>
#include <utility>
#include <vector>

#include "bingcheck/error.hpp"
#include "bingcheck/poly/laurent.hpp"
#include "bingcheck/rational.hpp"

namespace bingcheck::exactmat {

using poly::LaurentPoly;

/// Dense row-major matrix over an exact commutative ring.
template <class Scalar>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& fill = Scalar{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n, const Scalar& zero = Scalar(0), const Scalar& one = Scalar(1)) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const Scalar&>()))> {
    Matrix<decltype(f(std::declval<const Scalar&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: inner dimensions differ");
    Matrix c(a.rows_, b.cols_, a.data_.empty() && b.data_.empty() ? Scalar{} : zero_like(a, b));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }
  friend Matrix operator*(const Scalar& s, Matrix a) {
    for (auto& v : a.data_) v = s * v;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shapes differ");
  }
  // Zero of the scalar ring taken from an existing entry (needed for rings whose
  // zero depends on a modulus).
  static Scalar zero_like(const Matrix& a, const Matrix& b) {
    const Scalar& s = a.data_.empty() ? b.data_.front() : a.data_.front();
    return s - s;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using QMatrix = Matrix<Rational>;
using LMatrix = Matrix<LaurentPoly>;

namespace detail {

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) { return poly::exact_quotient(a, b); }
inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline bool is_zero(const LaurentPoly& a) { return a.is_zero(); }

}  // namespace detail

/// Determinant by Bareiss fraction-free elimination; all divisions are exact.
template <class Scalar>
Scalar det(Matrix<Scalar> m) {
  if (!m.is_square()) throw DomainError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::is_zero(m(k, k))) {
      std::size_t r = k + 1;
      while (r < n && detail::is_zero(m(r, k))) ++r;
      if (r == n) return Scalar(0);
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = detail::exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
    }
    prev = m(k, k);
  }
  Scalar d = m(n - 1, n - 1);
  return negate ? -d : d;
}

/// Inverse over Q by Gauss-Jordan elimination.
inline QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) throw SingularMatrixError("matrix is singular");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    }
    const Rational scale = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

inline std::size_t rank(QMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

template <class Scalar>
Matrix<Scalar> block_sum(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out(a.rows() + b.rows(), a.cols() + b.cols(), Scalar(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

inline LMatrix to_laurent(const QMatrix& m) {
  return m.map([](const Rational& r) { return LaurentPoly(r); });
}

inline LMatrix block_sum(const QMatrix& a, const LMatrix& b) { return block_sum(to_laurent(a), b); }
inline LMatrix block_sum(const LMatrix& a, const QMatrix& b) { return block_sum(a, to_laurent(b)); }

/// Entrywise t -> t^n.
inline LMatrix mat_substitute_power(const LMatrix& m, long n) {
  if (n == 0) throw DomainError("mat_substitute_power: exponent must be nonzero");
  return m.map([n](const LaurentPoly& f) { return f.substitute_power(n); });
}

/// Entrywise t -> t^-1 followed by transposition.
inline LMatrix conjugate_transpose(const LMatrix& m) { return mat_substitute_power(m, -1).transpose(); }

inline bool is_hermitian(const LMatrix& m) { return m.is_square() && conjugate_transpose(m) == m; }

template <class Scalar>
bool is_symmetric(const Matrix<Scalar>& m) {
  return m.is_square() && m.transpose() == m;
}

struct SignatureCount {
  int signature = 0;
  int nullity = 0;
  friend bool operator==(const SignatureCount&, const SignatureCount&) = default;
};

/// Signature and nullity of a rational symmetric matrix by congruence
/// diagonalization. Pivot on the diagonal entry of largest absolute value; when
/// the remaining diagonal is zero, split off a hyperbolic 2x2 block.
inline SignatureCount sym_signature(QMatrix s) {
  if (!is_symmetric(s)) throw DomainError("sym_signature: matrix is not symmetric");
  SignatureCount out;
  std::size_t n = s.rows();
  auto swap_index = [&s](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < s.cols(); ++j) std::swap(s(a, j), s(b, j));
    for (std::size_t i = 0; i < s.rows(); ++i) std::swap(s(i, a), s(i, b));
  };
  std::size_t k = 0;
  while (k < n) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (s(i, i).is_zero()) continue;
      if (best == n || s(i, i).abs() > s(best, best).abs()) best = i;
    }
    if (best != n) {
      swap_index(k, best);
      const Rational p = s(k, k);
      out.signature += p.sign();
      for (std::size_t i = k + 1; i < n; ++i) {
        if (s(i, k).is_zero()) continue;
        const Rational f = s(i, k) / p;
        for (std::size_t j = k + 1; j < n; ++j) s(i, j) -= f * s(k, j);
      }
      for (std::size_t i = k + 1; i < n; ++i) s(i, k) = s(k, i) = Rational(0);
      ++k;
      continue;
    }
    // Zero diagonal: find an off-diagonal nonzero.
    std::size_t pi = n, pj = n;
    for (std::size_t i = k; i < n && pi == n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!s(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) {
      out.nullity = static_cast<int>(n - k);
      break;
    }
    swap_index(k, pi);
    swap_index(k + 1, pj);
    // Block [[0, b], [b, 0]] has inverse [[0, 1/b], [1/b, 0]], signature 0.
    const Rational binv = s(k, k + 1).inverse();
    for (std::size_t i = k + 2; i < n; ++i) {
      for (std::size_t j = k + 2; j < n; ++j) {
        // S_ij -= x_i P^-1 x_j^T with x_i = (s(i,k), s(i,k+1))
        s(i, j) -= binv * (s(i, k) * s(k + 1, j) + s(i, k + 1) * s(k, j));
      }
    }
    for (std::size_t i = k + 2; i < n; ++i) {
      s(i, k) = s(k, i) = s(i, k + 1) = s(k + 1, i) = Rational(0);
    }
    k += 2;
  }
  return out;
}

/// Coefficients, ascending, of det(x I - M) by Berkowitz's division-free
/// algorithm. Works over any commutative ring; zero and one are passed
/// explicitly.
template <class R>
std::vector<R> berkowitz(const Matrix<R>& m, const R& zero, const R& one) {
  if (!m.is_square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // descending coefficients of the current leading principal minor's polynomial
  std::vector<R> v{one};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C
    std::vector<R> t;
    t.reserve(r + 2);
    t.push_back(one);
    t.push_back(zero - m(r, r));
    std::vector<R> col(r, zero);
    for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      R dot = zero;
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * col[i];
      t.push_back(zero - dot);
      if (k + 1 < r) {
        std::vector<R> next(r, zero);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * col[j];
        }
        col = std::move(next);
      }
    }
    std::vector<R> nv(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nv[i] += t[i - j] * v[j];
    }
    v = std::move(nv);
  }
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace bingcheck::exactmat
