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

#include "nahm/nahm_sum.hpp"

#include <thread>

#include "nahm/error.hpp"

namespace nahm {

std::int64_t default_order(std::size_t rank) {
  if (rank <= 2) return 200;
  if (rank <= 4) return 120;
  if (rank <= 6) return 60;
  return 30;
}

namespace {

// Q(n) = sum_i delta_i/2 (n_i + sum_{j<i} l_ij n_j + beta_i)^2 + gamma, obtained
// by completing squares from the last coordinate down.
struct SquareForm {
  std::vector<Rational> delta, beta;
  std::vector<std::vector<Rational>> l;
  Rational gamma;
};

SquareForm complete_squares(const NahmQuadruple& q) {
  const std::size_t r = q.rank();
  RationalMatrix m = q.AD();
  std::vector<Rational> b = q.B;
  SquareForm f;
  f.delta.resize(r);
  f.beta.resize(r);
  f.l.assign(r, {});
  f.gamma = 0;
  for (std::size_t ii = r; ii-- > 0;) {
    const Rational d = m(ii, ii);
    f.delta[ii] = d;
    f.beta[ii] = b[ii] / d;
    f.l[ii].resize(ii);
    for (std::size_t j = 0; j < ii; ++j) f.l[ii][j] = m(ii, j) / d;
    for (std::size_t j = 0; j < ii; ++j) {
      for (std::size_t k = 0; k < ii; ++k) m(j, k) -= m(j, ii) * m(ii, k) / d;
      b[j] -= m(j, ii) * b[ii] / d;
    }
    f.gamma -= b[ii] * b[ii] / (2 * d);
  }
  return f;
}

BigInt integral(const Rational& x) {
  if (x.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "internal scaling is not integral");
  return x.get_num();
}

class Enumerator {
 public:
  Enumerator(const NahmQuadruple& q, const Rational& order, const std::optional<LatticeConstraint>& c)
      : q_(q), constraint_(c), r_(q.rank()) {
    q.validate();
    if (c) c->validate(r_);
    target_ = order - q.C;
    SquareForm f = complete_squares(q);
    // Integer scaling: v_i = den_i n_i + sum L_ij n_j + Bt_i and
    // Omega * Q = Omega * gamma + sum W_i v_i^2.
    den_.resize(r_);
    lint_.resize(r_);
    bt_.resize(r_);
    w_.resize(r_);
    std::vector<Rational> wr(r_);
    BigInt omega = target_.get_den();
    mpz_lcm(omega.get_mpz_t(), omega.get_mpz_t(), f.gamma.get_den_mpz_t());
    for (std::size_t i = 0; i < r_; ++i) {
      BigInt d = f.beta[i].get_den();
      for (const auto& x : f.l[i]) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
      den_[i] = d;
      bt_[i] = integral(f.beta[i] * Rational(d));
      for (const auto& x : f.l[i]) lint_[i].push_back(integral(x * Rational(d)));
      wr[i] = f.delta[i] / (2 * Rational(d * d));
      mpz_lcm(omega.get_mpz_t(), omega.get_mpz_t(), wr[i].get_den_mpz_t());
    }
    omega_ = omega;
    for (std::size_t i = 0; i < r_; ++i) w_[i] = integral(wr[i] * Rational(omega));
    s0_ = integral(f.gamma * Rational(omega));
    limit_ = integral(target_ * Rational(omega));

    // Exponent grid of the bare quadratic part.
    std::int64_t g = 1;
    RationalMatrix ad = q.AD();
    for (std::size_t i = 0; i < r_; ++i) {
      g = lcm64(g, den64(q.B[i]));
      for (std::size_t j = 0; j < r_; ++j) g = lcm64(g, den64(ad(i, j)));
    }
    grain_ = lcm64(2 * g, den64(target_));
    top_ = scale_to_grid(target_, grain_);
    base_ = std::min(to_int64(floor_rational(f.gamma * Rational(static_cast<long>(grain_)))), top_);
    maxlen_ = to_int64(ceil_rational(target_ - f.gamma));
    if (maxlen_ < 0) maxlen_ = 0;
  }

  std::int64_t result_length() const { return top_ - base_; }

  // Walk the pruned tree. Slices of the first coordinate congruent to
  // slice mod stride are handled; leaves are reported through accumulate.
  template <class Leaf>
  void walk(std::int64_t slice, std::int64_t stride, Leaf&& leaf) {
    if (maxlen_ == 0) return;
    n_.assign(r_, 0);
    s_.assign(r_ + 1, BigInt());
    s_[0] = s0_;
    p_.assign(r_ + 1, std::vector<BigInt>(static_cast<std::size_t>(maxlen_)));
    p_[0][0] = 1;
    slice_ = slice;
    stride_ = stride;
    descend(0, leaf);
  }

  const BigInt& omega() const { return omega_; }
  std::int64_t grain() const { return grain_; }
  std::int64_t base() const { return base_; }
  std::int64_t top() const { return top_; }
  const std::vector<std::int64_t>& point() const { return n_; }

  bool admissible() const {
    if (!constraint_) return true;
    BigInt acc = 0;
    for (std::size_t i = 0; i < r_; ++i) acc += BigInt(static_cast<long>(constraint_->weights[i])) * n_[i];
    BigInt m = acc % BigInt(static_cast<long>(constraint_->modulus));
    if (m < 0) m += constraint_->modulus;
    return m == constraint_->residue;
  }

 private:
  template <class Leaf>
  void descend(std::size_t k, Leaf& leaf) {
    const BigInt& prev = s_[k];
    BigInt room = limit_ - prev;
    BigInt lenz;
    mpz_cdiv_q(lenz.get_mpz_t(), room.get_mpz_t(), omega_.get_mpz_t());
    const std::int64_t len = std::min<std::int64_t>(to_int64(lenz), maxlen_);
    std::vector<BigInt>& p = p_[k + 1];
    for (std::int64_t t = 0; t < len; ++t) p[t] = p_[k][t];
    BigInt lin = bt_[k];
    for (std::size_t j = 0; j < k; ++j) lin += lint_[k][j] * n_[j];
    BigInt v, s;
    const std::int64_t d = q_.D[k];
    for (std::int64_t nk = 0;; ++nk) {
      if (nk > 0) {
        const std::int64_t step = d * nk;
        for (std::int64_t t = step; t < len; ++t) p[t] += p[t - step];
      }
      n_[k] = nk;
      v = den_[k] * nk + lin;
      s = prev + w_[k] * v * v;
      if (s >= limit_) {
        if (sgn(v) >= 0) break;
        continue;
      }
      if (k == 0 && nk % stride_ != slice_) continue;
      s_[k + 1] = s;
      if (k + 1 == r_) {
        if (admissible()) leaf(s, p);
      } else {
        descend(k + 1, leaf);
      }
    }
    n_[k] = 0;
  }

  const NahmQuadruple& q_;
  std::optional<LatticeConstraint> constraint_;
  std::size_t r_;
  Rational target_;
  std::vector<BigInt> den_, bt_, w_;
  std::vector<std::vector<BigInt>> lint_;
  BigInt omega_, s0_, limit_;
  std::int64_t grain_ = 1, top_ = 0, base_ = 0, maxlen_ = 0;
  std::int64_t slice_ = 0, stride_ = 1;
  std::vector<std::int64_t> n_;
  std::vector<BigInt> s_;
  std::vector<std::vector<BigInt>> p_;
};

void run_slice(Enumerator& e, std::int64_t slice, std::int64_t stride, std::vector<BigInt>& out) {
  out.assign(static_cast<std::size_t>(e.result_length()), BigInt());
  const std::int64_t g = e.grain();
  BigInt scaled;
  e.walk(slice, stride, [&](const BigInt& s, const std::vector<BigInt>& p) {
    // exponent index of the leaf is s * g / omega
    scaled = s * g;
    mpz_divexact(scaled.get_mpz_t(), scaled.get_mpz_t(), e.omega().get_mpz_t());
    const std::int64_t idx = to_int64(scaled) - e.base();
    const std::int64_t avail = e.top() - e.base() - idx;
    const std::int64_t terms = std::min<std::int64_t>(static_cast<std::int64_t>(p.size()), (avail + g - 1) / g);
    for (std::int64_t t = 0; t < terms; ++t) {
      if (sgn(p[t]) == 0) continue;
      out[static_cast<std::size_t>(idx + t * g)] += p[t];
    }
  });
}

}  // namespace

Rational min_exponent_tail(const NahmQuadruple& q, const std::vector<std::int64_t>& prefix) {
  q.validate();
  if (prefix.size() > q.rank()) throw Error(ErrorCode::InvalidArgument, "prefix longer than rank");
  SquareForm f = complete_squares(q);
  Rational total = f.gamma;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    Rational v = Rational(static_cast<long>(prefix[i])) + f.beta[i];
    for (std::size_t j = 0; j < i; ++j) v += f.l[i][j] * Rational(static_cast<long>(prefix[j]));
    total += f.delta[i] * v * v / 2;
  }
  return total;
}

QSeries nahm_sum(const NahmQuadruple& q, const Rational& order, const std::optional<LatticeConstraint>& constraint,
                 unsigned jobs) {
  Enumerator proto(q, order, constraint);
  const std::int64_t g = proto.grain();
  std::vector<BigInt> total;
  if (jobs <= 1) {
    run_slice(proto, 0, 1, total);
  } else {
    std::vector<std::vector<BigInt>> parts(jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        Enumerator e(q, order, constraint);
        run_slice(e, static_cast<std::int64_t>(t), static_cast<std::int64_t>(jobs), parts[t]);
      });
    }
    for (auto& th : pool) th.join();
    total = std::move(parts[0]);
    for (unsigned t = 1; t < jobs; ++t)
      for (std::size_t i = 0; i < total.size(); ++i) total[i] += parts[t][i];
  }
  QSeries bare(g, proto.base(), std::move(total), proto.top());
  return bare.shifted(q.C);
}

std::vector<std::vector<std::int64_t>> contributing_points(const NahmQuadruple& q, const Rational& order,
                                                           const std::optional<LatticeConstraint>& constraint) {
  Enumerator e(q, order, constraint);
  std::vector<std::vector<std::int64_t>> pts;
  e.walk(0, 1, [&](const BigInt&, const std::vector<BigInt>&) { pts.push_back(e.point()); });
  return pts;
}

}  // namespace nahm
