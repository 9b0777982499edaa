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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nahm/numeric.hpp"

namespace nahm {

/// Truncated Laurent series in q^(1/grain) with big-integer coefficients.
///
/// Coefficient i of coeffs() multiplies q^((min_exp + i) / grain); everything
/// at exponents >= order / grain is unknown. Values are immutable and kept in
/// canonical form: no leading zero coefficient and the smallest grain that
/// represents every stored exponent and the truncation point.
class QSeries {
 public:
  QSeries();  // zero series truncated at q^0

  QSeries(std::int64_t grain, std::int64_t min_exp, std::vector<BigInt> coeffs, std::int64_t order);

  static QSeries zero(const Rational& order);
  static QSeries one(const Rational& order);
  static QSeries monomial(const Rational& exponent, const BigInt& coeff, const Rational& order);

  std::int64_t grain() const { return grain_; }
  std::int64_t min_exp() const { return min_exp_; }
  std::int64_t order() const { return order_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  Rational order_exponent() const;
  /// Exponent of the first nonzero term; the truncation point for the zero series.
  Rational leading_exponent() const;
  BigInt leading_coefficient() const;

  /// Same series on grain k * grain(); not canonical, for internal array work.
  std::vector<BigInt> dense_on(std::int64_t grain, std::int64_t from, std::int64_t to) const;

  QSeries shifted(const Rational& exponent) const;
  QSeries truncated(const Rational& order) const;
  QSeries scaled(const BigInt& factor) const;
  QSeries negated() const;

  bool operator==(const QSeries& other) const = default;

 private:
  void canonicalize();

  std::int64_t grain_ = 1;
  std::int64_t min_exp_ = 0;
  std::int64_t order_ = 0;
  std::vector<BigInt> coeffs_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return series_add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return series_sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }
inline QSeries operator-(const QSeries& a) { return a.negated(); }

/// b with a*b = 1 to the requested order, clamped to what a justifies.
QSeries series_inverse(const QSeries& a, const Rational& order);

/// (q^start; q^step)_n, n = nullopt for the infinite product.
QSeries pochhammer(const Rational& start, const Rational& step, std::optional<std::int64_t> n,
                   const Rational& order);

/// (-q^start; q^step)_n.
QSeries plus_pochhammer(const Rational& start, const Rational& step, std::optional<std::int64_t> n,
                        const Rational& order);

/// Product over n >= 1 with n mod modulus in residues of (1 - q^(n/scale_den))^exponent.
QSeries congruence_product(std::int64_t scale_den, std::int64_t modulus,
                           const std::vector<std::int64_t>& residues, int exponent,
                           const Rational& order);

/// Sum over k in Z of (+-1)^k q^(a k^2 + b k + c).
QSeries theta_series(const Rational& a, const Rational& b, const Rational& c, const Rational& order,
                     bool alternating = false);

struct Comparison {
  bool equal = true;
  std::optional<Rational> first_mismatch;
};

Comparison equal_to_order(const QSeries& a, const QSeries& b, const Rational& order);

BigInt coefficient(const QSeries& a, const Rational& exponent);

/// Nonzero terms as (exponent, coefficient), ascending.
std::vector<std::pair<Rational, BigInt>> series_terms(const QSeries& a);

/// Human-readable rendering such as "1 + 120*q + O(q^2)".
std::string format_series(const QSeries& a);

/// Product of factors, each evaluated deep enough that the product is exact to
/// order. Factors are callables taking a truncation order.
QSeries product_to_order(const std::vector<std::function<QSeries(const Rational&)>>& factors,
                         const Rational& order);

nlohmann::json series_to_json(const QSeries& a);
QSeries series_from_json(const nlohmann::json& j);

}  // namespace nahm
