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

#include "nahm/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nahm/error.hpp"

namespace nahm {

namespace {

std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

// gcd of the positive indices i < limit with c[i] != 0; 0 if there are none.
std::int64_t index_stride(const std::vector<BigInt>& c, std::size_t limit) {
  std::int64_t s = 0;
  limit = std::min(limit, c.size());
  for (std::size_t i = 1; i < limit; ++i) {
    if (sgn(c[i]) != 0) {
      s = std::gcd(s, static_cast<std::int64_t>(i));
      if (s == 1) break;
    }
  }
  return s;
}

// Multiply a dense array (exponent 0 at index 0) by (1 - q^e) or (1 + q^e).
void mul_binomial(std::vector<BigInt>& c, std::int64_t e, bool plus) {
  const std::int64_t n = static_cast<std::int64_t>(c.size());
  if (e <= 0 || e >= n) return;
  for (std::int64_t i = n - 1; i >= e; --i) {
    if (plus) c[i] += c[i - e];
    else c[i] -= c[i - e];
  }
}

// Divide by (1 - q^e) or (1 + q^e).
void div_binomial(std::vector<BigInt>& c, std::int64_t e, bool plus) {
  const std::int64_t n = static_cast<std::int64_t>(c.size());
  if (e <= 0 || e >= n) return;
  for (std::int64_t i = e; i < n; ++i) {
    if (plus) c[i] -= c[i - e];
    else c[i] += c[i - e];
  }
}

std::int64_t grid_length(const Rational& order, std::int64_t grain) {
  std::int64_t n = scale_to_grid(order, grain);
  return n < 0 ? 0 : n;
}

QSeries binomial_product(const Rational& start, const Rational& step, std::optional<std::int64_t> n,
                         bool plus, const Rational& order) {
  if (!n) {
    if (sgn(step) <= 0) throw Error(ErrorCode::DivergentProduct, "infinite product with non-positive step");
    if (sgn(start) <= 0)
      throw Error(ErrorCode::InvalidArgument, "infinite product needs a positive starting exponent");
  } else if (*n < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative product length");
  }
  std::int64_t g = lcm64(lcm64(den64(start), den64(step)), den64(order));
  // Factors with exponent e < 0 are rewritten as -q^e (1 - q^-e) or q^e (1 + q^-e).
  Rational shift = 0;
  BigInt scalar = 1;
  std::vector<std::int64_t> exps;
  if (n) {
    for (std::int64_t j = 0; j < *n; ++j) {
      Rational e = start + step * Rational(j);
      if (sgn(e) == 0) {
        if (!plus) return QSeries::zero(order);
        scalar *= 2;
      } else if (sgn(e) < 0) {
        shift += e;
        if (!plus) scalar = -scalar;
        exps.push_back(scale_to_grid(-e, g));
      } else {
        exps.push_back(scale_to_grid(e, g));
      }
    }
  }
  Rational body_order = order - shift;
  std::int64_t len = grid_length(body_order, g);
  std::vector<BigInt> c(static_cast<std::size_t>(len));
  if (len > 0) c[0] = scalar;
  if (n) {
    for (std::int64_t e : exps) mul_binomial(c, e, plus);
  } else {
    std::int64_t e0 = scale_to_grid(start, g), de = scale_to_grid(step, g);
    for (std::int64_t e = e0; e < len; e += de) mul_binomial(c, e, plus);
  }
  if (len == 0) return QSeries::zero(order);
  return QSeries(g, 0, std::move(c), len).shifted(shift);
}

}  // namespace

QSeries::QSeries() = default;

QSeries::QSeries(std::int64_t grain, std::int64_t min_exp, std::vector<BigInt> coeffs, std::int64_t order)
    : grain_(grain), min_exp_(min_exp), order_(order), coeffs_(std::move(coeffs)) {
  if (grain_ < 1) throw Error(ErrorCode::InvalidArgument, "grain must be positive");
  if (order_ < min_exp_ || static_cast<std::int64_t>(coeffs_.size()) != order_ - min_exp_)
    throw Error(ErrorCode::InvalidArgument, "coefficient count does not match order - min_exp");
  canonicalize();
}

QSeries QSeries::zero(const Rational& order) {
  std::int64_t g = den64(order);
  std::int64_t o = scale_to_grid(order, g);
  return QSeries(g, o, {}, o);
}

QSeries QSeries::one(const Rational& order) { return monomial(0, 1, order); }

QSeries QSeries::monomial(const Rational& exponent, const BigInt& coeff, const Rational& order) {
  if (exponent >= order || sgn(coeff) == 0) return zero(order);
  std::int64_t g = lcm64(den64(exponent), den64(order));
  std::int64_t m = scale_to_grid(exponent, g), o = scale_to_grid(order, g);
  std::vector<BigInt> c(static_cast<std::size_t>(o - m));
  c[0] = coeff;
  return QSeries(g, m, std::move(c), o);
}

void QSeries::canonicalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && sgn(coeffs_[first]) == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    min_exp_ = order_;
  } else if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    min_exp_ += static_cast<std::int64_t>(first);
  }
  std::int64_t d = std::gcd(grain_, std::gcd(iabs(min_exp_), iabs(order_)));
  for (std::size_t i = 1; i < coeffs_.size() && d > 1; ++i)
    if (sgn(coeffs_[i]) != 0) d = std::gcd(d, static_cast<std::int64_t>(i));
  if (d > 1) {
    std::vector<BigInt> c;
    c.reserve(coeffs_.size() / static_cast<std::size_t>(d) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); i += static_cast<std::size_t>(d)) c.push_back(std::move(coeffs_[i]));
    coeffs_ = std::move(c);
    grain_ /= d;
    min_exp_ /= d;
    order_ /= d;
  }
}

Rational QSeries::order_exponent() const { return make_rational(order_, grain_); }

Rational QSeries::leading_exponent() const { return make_rational(min_exp_, grain_); }

BigInt QSeries::leading_coefficient() const { return coeffs_.empty() ? BigInt(0) : coeffs_[0]; }

std::vector<BigInt> QSeries::dense_on(std::int64_t grain, std::int64_t from, std::int64_t to) const {
  if (grain % grain_ != 0) throw Error(ErrorCode::OffGrain, "target grain is not a multiple of the series grain");
  const std::int64_t k = grain / grain_;
  if (to > order_ * k) throw Error(ErrorCode::InsufficientOrder, "series truncated below requested range");
  std::vector<BigInt> out(static_cast<std::size_t>(std::max<std::int64_t>(0, to - from)));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t e = (min_exp_ + static_cast<std::int64_t>(i)) * k;
    if (e >= to) break;
    if (e >= from && sgn(coeffs_[i]) != 0) out[static_cast<std::size_t>(e - from)] = coeffs_[i];
  }
  return out;
}

QSeries QSeries::shifted(const Rational& exponent) const {
  std::int64_t g = lcm64(grain_, den64(exponent));
  std::int64_t k = g / grain_;
  std::int64_t s = scale_to_grid(exponent, g);
  std::vector<BigInt> c(static_cast<std::size_t>((order_ - min_exp_) * k));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(k)] = coeffs_[i];
  std::int64_t mn = min_exp_ * k + s, o = order_ * k + s;
  return QSeries(g, mn, std::move(c), o);
}

QSeries QSeries::truncated(const Rational& order) const {
  if (order >= order_exponent()) return *this;
  std::int64_t g = lcm64(grain_, den64(order));
  std::int64_t o = scale_to_grid(order, g);
  std::int64_t mn = min_exp_ * (g / grain_);
  if (o <= mn) return QSeries(g, o, {}, o);
  return QSeries(g, mn, dense_on(g, mn, o), o);
}

QSeries QSeries::scaled(const BigInt& factor) const {
  std::vector<BigInt> c = coeffs_;
  for (auto& x : c) x *= factor;
  return QSeries(grain_, min_exp_, std::move(c), order_);
}

QSeries QSeries::negated() const { return scaled(BigInt(-1)); }

QSeries series_add(const QSeries& a, const QSeries& b) {
  std::int64_t g = lcm64(a.grain(), b.grain());
  std::int64_t ka = g / a.grain(), kb = g / b.grain();
  std::int64_t o = std::min(a.order() * ka, b.order() * kb);
  std::int64_t mn = std::min({a.min_exp() * ka, b.min_exp() * kb, o});
  std::vector<BigInt> c(static_cast<std::size_t>(o - mn));
  for (const QSeries* s : {&a, &b}) {
    std::int64_t k = g / s->grain();
    const auto& sc = s->coeffs();
    for (std::size_t i = 0; i < sc.size(); ++i) {
      std::int64_t e = (s->min_exp() + static_cast<std::int64_t>(i)) * k;
      if (e >= o) break;
      if (sgn(sc[i]) != 0) c[static_cast<std::size_t>(e - mn)] += sc[i];
    }
  }
  return QSeries(g, mn, std::move(c), o);
}

QSeries series_sub(const QSeries& a, const QSeries& b) { return series_add(a, b.negated()); }

QSeries series_mul(const QSeries& a, const QSeries& b) {
  std::int64_t g = lcm64(a.grain(), b.grain());
  std::int64_t ka = g / a.grain(), kb = g / b.grain();
  std::int64_t ma = a.min_exp() * ka, mb = b.min_exp() * kb;
  std::int64_t o = std::min(a.order() * ka + mb, b.order() * kb + ma);
  std::int64_t mn = std::min(ma + mb, o);
  std::int64_t len = o - mn;
  std::vector<BigInt> c(static_cast<std::size_t>(len));
  if (!a.is_zero() && !b.is_zero() && len > 0) {
    // Work on the compressed grids: stored indices of a are multiples of ka, of b of kb.
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::int64_t sa = index_stride(ac, static_cast<std::size_t>((len + ka - 1) / ka)) * ka;
    std::int64_t sb = index_stride(bc, static_cast<std::size_t>((len + kb - 1) / kb)) * kb;
    std::int64_t s = std::gcd(sa, sb);
    if (s == 0) s = len;
    std::vector<std::pair<std::int64_t, const BigInt*>> nza, nzb;
    for (std::size_t i = 0; i < ac.size() && static_cast<std::int64_t>(i) * ka < len; ++i)
      if (sgn(ac[i]) != 0) nza.emplace_back(static_cast<std::int64_t>(i) * ka / s, &ac[i]);
    for (std::size_t j = 0; j < bc.size() && static_cast<std::int64_t>(j) * kb < len; ++j)
      if (sgn(bc[j]) != 0) nzb.emplace_back(static_cast<std::int64_t>(j) * kb / s, &bc[j]);
    const std::int64_t clen = (len + s - 1) / s;
    std::vector<BigInt> cc(static_cast<std::size_t>(clen));
    for (const auto& [i, x] : nza) {
      for (const auto& [j, y] : nzb) {
        if (i + j >= clen) break;
        mpz_addmul(cc[static_cast<std::size_t>(i + j)].get_mpz_t(), x->get_mpz_t(), y->get_mpz_t());
      }
    }
    for (std::int64_t t = 0; t < clen; ++t) c[static_cast<std::size_t>(t * s)] = std::move(cc[static_cast<std::size_t>(t)]);
  }
  return QSeries(g, mn, std::move(c), o);
}

QSeries series_inverse(const QSeries& a, const Rational& order) {
  if (a.is_zero() || (a.leading_coefficient() != 1 && a.leading_coefficient() != -1))
    throw Error(ErrorCode::NonUnitLeading, "leading coefficient must be +1 or -1");
  std::int64_t g = lcm64(a.grain(), den64(order));
  std::int64_t k = g / a.grain();
  std::int64_t m = a.min_exp() * k;
  std::int64_t justified = a.order() * k - 2 * m;
  std::int64_t o = std::min(scale_to_grid(order, g), justified);
  std::int64_t len = o + m;
  if (len <= 0) return QSeries(g, o, {}, o);
  const auto& ac = a.coeffs();
  std::vector<std::pair<std::int64_t, const BigInt*>> nz;
  std::int64_t s = 0;
  for (std::size_t i = 1; i < ac.size() && static_cast<std::int64_t>(i) * k < len; ++i) {
    if (sgn(ac[i]) != 0) {
      nz.emplace_back(static_cast<std::int64_t>(i) * k, &ac[i]);
      s = std::gcd(s, static_cast<std::int64_t>(i) * k);
    }
  }
  if (s == 0) s = len;
  const BigInt u = ac[0];
  std::vector<BigInt> b(static_cast<std::size_t>(len));
  b[0] = u;
  BigInt acc;
  for (std::int64_t t = s; t < len; t += s) {
    acc = 0;
    for (const auto& [i, x] : nz) {
      if (i > t) break;
      mpz_addmul(acc.get_mpz_t(), x->get_mpz_t(), b[static_cast<std::size_t>(t - i)].get_mpz_t());
    }
    if (u == 1) b[static_cast<std::size_t>(t)] = -acc;
    else b[static_cast<std::size_t>(t)] = acc;
  }
  return QSeries(g, -m, std::move(b), o);
}

QSeries pochhammer(const Rational& start, const Rational& step, std::optional<std::int64_t> n,
                   const Rational& order) {
  return binomial_product(start, step, n, false, order);
}

QSeries plus_pochhammer(const Rational& start, const Rational& step, std::optional<std::int64_t> n,
                        const Rational& order) {
  return binomial_product(start, step, n, true, order);
}

QSeries congruence_product(std::int64_t scale_den, std::int64_t modulus,
                           const std::vector<std::int64_t>& residues, int exponent,
                           const Rational& order) {
  if (scale_den < 1 || modulus < 1) throw Error(ErrorCode::InvalidArgument, "scale and modulus must be positive");
  if (exponent != 1 && exponent != -1) throw Error(ErrorCode::InvalidArgument, "exponent must be +1 or -1");
  if (residues.empty()) throw Error(ErrorCode::InvalidArgument, "empty residue set");
  std::vector<char> allowed(static_cast<std::size_t>(modulus), 0);
  for (auto r : residues) {
    if (r < 0 || r >= modulus) throw Error(ErrorCode::InvalidArgument, "residue out of range");
    allowed[static_cast<std::size_t>(r)] = 1;
  }
  std::int64_t g = lcm64(scale_den, den64(order));
  std::int64_t len = grid_length(order, g);
  if (len == 0) return QSeries::zero(order);
  std::vector<BigInt> c(static_cast<std::size_t>(len));
  c[0] = 1;
  const std::int64_t unit = g / scale_den;
  for (std::int64_t n = 1; n * unit < len; ++n) {
    if (!allowed[static_cast<std::size_t>(n % modulus)]) continue;
    if (exponent > 0) mul_binomial(c, n * unit, false);
    else div_binomial(c, n * unit, false);
  }
  return QSeries(g, 0, std::move(c), len);
}

QSeries theta_series(const Rational& a, const Rational& b, const Rational& c, const Rational& order,
                     bool alternating) {
  if (sgn(a) <= 0) throw Error(ErrorCode::IndefiniteTheta, "quadratic coefficient must be positive");
  std::int64_t g = lcm64(lcm64(den64(a), den64(b)), lcm64(den64(c), den64(order)));
  std::int64_t o = scale_to_grid(order, g);
  std::vector<std::pair<std::int64_t, int>> terms;
  BigInt k0 = floor_rational(Rational(-b / (2 * a)));
  auto visit = [&](const BigInt& k) {
    Rational e = a * k * k + b * k + c;
    if (e >= order) return false;
    int sign = (alternating && mpz_odd_p(k.get_mpz_t())) ? -1 : 1;
    terms.emplace_back(scale_to_grid(e, g), sign);
    return true;
  };
  for (BigInt k = k0; visit(k); --k) {}
  for (BigInt k = k0 + 1; visit(k); ++k) {}
  if (terms.empty()) return QSeries::zero(order);
  std::int64_t mn = o;
  for (auto& t : terms) mn = std::min(mn, t.first);
  std::vector<BigInt> coeff(static_cast<std::size_t>(o - mn));
  for (auto& t : terms) coeff[static_cast<std::size_t>(t.first - mn)] += t.second;
  return QSeries(g, mn, std::move(coeff), o);
}

Comparison equal_to_order(const QSeries& a, const QSeries& b, const Rational& order) {
  if (a.order_exponent() < order || b.order_exponent() < order)
    throw Error(ErrorCode::InsufficientOrder, "comparison to q^" + to_string(order) + " but series known only to q^" +
                                                  to_string(std::min(a.order_exponent(), b.order_exponent())));
  std::int64_t g = lcm64(lcm64(a.grain(), b.grain()), den64(order));
  std::int64_t o = scale_to_grid(order, g);
  std::int64_t lo = std::min({a.min_exp() * (g / a.grain()), b.min_exp() * (g / b.grain()), o});
  auto da = a.dense_on(g, lo, o);
  auto db = b.dense_on(g, lo, o);
  for (std::size_t i = 0; i < da.size(); ++i)
    if (da[i] != db[i]) return {false, make_rational(lo + static_cast<std::int64_t>(i), g)};
  return {true, std::nullopt};
}

BigInt coefficient(const QSeries& a, const Rational& exponent) {
  Rational scaled = exponent * a.grain();
  if (scaled.get_den() != 1) throw Error(ErrorCode::OffGrain, "exponent " + to_string(exponent) + " is off the grain");
  BigInt k = scaled.get_num();
  if (k >= a.order()) throw Error(ErrorCode::OutOfRange, "exponent " + to_string(exponent) + " is beyond the truncation");
  if (k < a.min_exp()) return 0;
  return a.coeffs()[static_cast<std::size_t>(to_int64(k) - a.min_exp())];
}

std::vector<std::pair<Rational, BigInt>> series_terms(const QSeries& a) {
  std::vector<std::pair<Rational, BigInt>> out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (sgn(a.coeffs()[i]) != 0)
      out.emplace_back(make_rational(a.min_exp() + static_cast<std::int64_t>(i), a.grain()), a.coeffs()[i]);
  return out;
}

std::string format_series(const QSeries& a) {
  std::ostringstream os;
  bool first = true;
  auto power = [](const Rational& e) {
    if (e == 0) return std::string();
    if (e == 1) return std::string("q");
    if (e.get_den() == 1 && sgn(e) > 0) return "q^" + to_string(e);
    return "q^(" + to_string(e) + ")";
  };
  for (const auto& [e, c] : series_terms(a)) {
    BigInt mag = abs(c);
    std::string p = power(e);
    if (first) os << (sgn(c) < 0 ? "-" : "");
    else os << (sgn(c) < 0 ? " - " : " + ");
    if (p.empty()) os << mag;
    else if (mag == 1) os << p;
    else os << mag << "*" << p;
    first = false;
  }
  if (!first) os << " + ";
  os << "O(" << power(a.order_exponent()) << ")";
  std::string s = os.str();
  if (s == "O()") s = "O(1)";
  return s;
}

QSeries product_to_order(const std::vector<std::function<QSeries(const Rational&)>>& factors,
                         const Rational& order) {
  if (factors.empty()) return QSeries::one(order);
  std::vector<QSeries> vals;
  for (const auto& f : factors) vals.push_back(f(order));
  for (int round = 0; round < 64; ++round) {
    Rational lead_sum = 0;
    for (const auto& v : vals) lead_sum += v.leading_exponent();
    bool again = false;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      Rational need = order - (lead_sum - vals[i].leading_exponent());
      if (vals[i].order_exponent() < need) {
        vals[i] = factors[i](need);
        again = true;
      }
    }
    if (!again) break;
  }
  QSeries out = vals[0];
  for (std::size_t i = 1; i < vals.size(); ++i) out = series_mul(out, vals[i]);
  if (out.order_exponent() < order)
    throw Error(ErrorCode::InsufficientOrder, "product could not be resolved to the requested order");
  return out.truncated(order);
}

nlohmann::json series_to_json(const QSeries& a) {
  nlohmann::json j;
  j["grain"] = a.grain();
  j["min_exp"] = a.min_exp();
  j["order"] = a.order();
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : a.coeffs()) cs.push_back(c.get_str());
  j["coeffs"] = std::move(cs);
  return j;
}

QSeries series_from_json(const nlohmann::json& j) {
  try {
    std::vector<BigInt> c;
    for (const auto& x : j.at("coeffs")) c.emplace_back(x.get<std::string>());
    return QSeries(j.at("grain").get<std::int64_t>(), j.at("min_exp").get<std::int64_t>(), std::move(c),
                   j.at("order").get<std::int64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::ParseError, "bad coefficient string");
  }
}

}  // namespace nahm
