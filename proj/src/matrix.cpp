// Copyright 2026 The nahm-dynkin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nahm/matrix.hpp"

#include <algorithm>
#include <map>

#include "nahm/error.hpp"

namespace nahm {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_ints(const IntMatrix& m) {
  std::size_t r = m.size(), c = r ? m[0].size() : 0;
  RationalMatrix out(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (m[i].size() != c) throw Error(ErrorCode::InvalidArgument, "ragged matrix");
    for (std::size_t j = 0; j < c; ++j) out(i, j) = Rational(static_cast<long>(m[i][j]));
  }
  return out;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<std::int64_t>& d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Rational(static_cast<long>(d[i]));
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<Rational> RationalMatrix::leading_minors() const {
  if (!is_square()) throw Error(ErrorCode::InvalidArgument, "minors of a non-square matrix");
  // Plain elimination without row swaps: the k-th pivot is minor_k / minor_{k-1}.
  RationalMatrix w = *this;
  std::vector<Rational> minors;
  Rational acc = 1;
  const std::size_t n = rows_;
  for (std::size_t k = 0; k < n; ++k) {
    Rational piv = w(k, k);
    acc *= piv;
    minors.push_back(acc);
    if (sgn(piv) == 0) {
      for (std::size_t rest = k + 1; rest < n; ++rest) {
        RationalMatrix sub(rest + 1, rest + 1);
        for (std::size_t i = 0; i <= rest; ++i)
          for (std::size_t j = 0; j <= rest; ++j) sub(i, j) = (*this)(i, j);
        minors.push_back(determinant(sub));
      }
      return minors;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(w(i, k)) == 0) continue;
      Rational f = w(i, k) / piv;
      for (std::size_t j = k; j < n; ++j) w(i, j) -= f * w(k, j);
    }
  }
  return minors;
}

bool RationalMatrix::is_positive_definite() const {
  if (!is_symmetric()) return false;
  for (const auto& m : leading_minors())
    if (sgn(m) <= 0) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = s * m(i, j);
  return c;
}

std::vector<Rational> operator*(const RationalMatrix& m, const std::vector<Rational>& v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

namespace {

struct IntegerForm {
  std::vector<std::vector<BigInt>> rows;
  BigInt scale;  // original = rows / scale
};

IntegerForm integer_form(const RationalMatrix& m) {
  BigInt l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  IntegerForm f{std::vector<std::vector<BigInt>>(m.rows(), std::vector<BigInt>(m.cols())), l};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) f.rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  return f;
}

// Fraction-free Gauss-Jordan on an n x w integer array. Returns the determinant
// of the leading n x n block (sign included) or 0 if singular. On success every
// diagonal entry of the leading block equals that determinant.
BigInt bareiss_jordan(std::vector<std::vector<BigInt>>& a, std::size_t n) {
  const std::size_t w = a.empty() ? 0 : a[0].size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a[p][k]) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < w; ++j) {
        if (j == k) continue;
        BigInt v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  // Rows swapped during elimination do not move the columns, so the pivot
  // product equals det up to the swap sign.
  return sign > 0 ? prev : BigInt(-prev);
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntegerForm f = integer_form(m);
  BigInt d = bareiss_jordan(f.rows, m.rows());
  Rational out(d);
  BigInt sp;
  mpz_pow_ui(sp.get_mpz_t(), f.scale.get_mpz_t(), m.rows());
  out /= Rational(sp);
  out.canonicalize();
  return out;
}

RationalMatrix rational_inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  IntegerForm f = integer_form(m);
  for (std::size_t i = 0; i < n; ++i) {
    f.rows[i].resize(2 * n);
    f.rows[i][n + i] = 1;
  }
  BigInt det = bareiss_jordan(f.rows, n);
  if (sgn(det) == 0) throw Error(ErrorCode::Singular, "matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt& piv = f.rows[i][i];
    for (std::size_t j = 0; j < n; ++j) {
      Rational v(f.rows[i][n + j] * f.scale, piv);
      v.canonicalize();
      inv(i, j) = v;
    }
  }
  return inv;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

namespace {

std::vector<Rational> row_signature(const RationalMatrix& m, std::size_t i) {
  std::vector<Rational> s;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j != i) s.push_back(m(i, j));
  for (std::size_t j = 0; j < m.rows(); ++j)
    if (j != i) s.push_back(m(j, i));
  std::sort(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(m.cols() - 1));
  std::sort(s.begin() + static_cast<std::ptrdiff_t>(m.cols() - 1), s.end());
  s.push_back(m(i, i));
  return s;
}

bool extend(const RationalMatrix& a, const RationalMatrix& b, const std::vector<std::vector<std::size_t>>& cand,
            std::vector<std::size_t>& pi, std::vector<char>& used, std::size_t i) {
  const std::size_t n = a.rows();
  if (i == n) return true;
  for (std::size_t c : cand[i]) {
    if (used[c]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j)
      ok = b(i, j) == a(c, pi[j]) && b(j, i) == a(pi[j], c);
    if (!ok) continue;
    used[c] = 1;
    pi[i] = c;
    if (extend(a, b, cand, pi, used, i + 1)) return true;
    used[c] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_permutation(const RationalMatrix& a, const RationalMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) return std::nullopt;
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> sa(n), sb(n);
  for (std::size_t i = 0; i < n; ++i) {
    sa[i] = row_signature(a, i);
    sb[i] = row_signature(b, i);
  }
  std::vector<std::vector<std::size_t>> cand(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < n; ++c)
      if (sa[c] == sb[i]) cand[i].push_back(c);
    if (cand[i].empty()) return std::nullopt;
  }
  std::vector<std::size_t> pi(n);
  std::vector<char> used(n, 0);
  if (!extend(a, b, cand, pi, used, 0)) return std::nullopt;
  return pi;
}

bool permutation_equivalent(const RationalMatrix& a, const RationalMatrix& b) {
  return find_permutation(a, b).has_value();
}

}  // namespace nahm
