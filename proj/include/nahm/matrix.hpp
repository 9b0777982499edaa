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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nahm/numeric.hpp"

namespace nahm {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_ints(const IntMatrix& m);
  static RationalMatrix diagonal(const std::vector<std::int64_t>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  Rational trace() const;
  bool is_symmetric() const;
  /// Leading principal minors, computed exactly.
  std::vector<Rational> leading_minors() const;
  bool is_positive_definite() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& m);
std::vector<Rational> operator*(const RationalMatrix& m, const std::vector<Rational>& v);

Rational determinant(const RationalMatrix& m);

/// Exact inverse by fraction-free (Bareiss) Gauss-Jordan elimination.
RationalMatrix rational_inverse(const RationalMatrix& m);

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// pi with b(i,j) == a(pi[i], pi[j]) for all i, j, if one exists.
std::optional<std::vector<std::size_t>> find_permutation(const RationalMatrix& a, const RationalMatrix& b);
bool permutation_equivalent(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace nahm
