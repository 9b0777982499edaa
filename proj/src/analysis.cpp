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

#include "nahm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nahm/error.hpp"

namespace nahm {

namespace {

using Mat = std::vector<std::vector<double>>;

Mat to_double(const RationalMatrix& a) {
  Mat m(a.rows(), std::vector<double>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j).get_d();
  return m;
}

// prod_j x_j^a_ij, evaluated in logs.
std::vector<double> nahm_map(const Mat& a, const std::vector<double>& x) {
  const std::size_t r = x.size();
  std::vector<double> out(r);
  for (std::size_t i = 0; i < r; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < r; ++j) s += a[i][j] * std::log(x[j]);
    out[i] = std::exp(s);
  }
  return out;
}

double residual_of(const Mat& a, const std::vector<double>& x) {
  auto p = nahm_map(a, x);
  double res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) res = std::max(res, std::fabs(1 - x[i] - p[i]));
  return res;
}

bool inside(const std::vector<double>& x) {
  for (double v : x)
    if (!(v > 0 && v < 1)) return false;
  return true;
}

// Solve m * y = b by partial-pivot elimination; false if singular.
bool solve_linear(Mat m, std::vector<double> b, std::vector<double>& y) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(m[i][k]) > std::fabs(m[p][k])) p = i;
    if (std::fabs(m[p][k]) < 1e-300) return false;
    std::swap(m[p], m[k]);
    std::swap(b[p], b[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      b[i] -= f * b[k];
    }
  }
  y.assign(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= m[k][j] * y[j];
    y[k] = s / m[k][k];
  }
  return true;
}

}  // namespace

NahmSolution solve_nahm_equation(const RationalMatrix& a, double tol, int max_iter) {
  if (!a.is_square() || a.rows() == 0) throw Error(ErrorCode::InvalidArgument, "Nahm equation needs a square matrix");
  const Mat m = to_double(a);
  const std::size_t r = m.size();
  NahmSolution sol;
  sol.x.assign(r, 0.5);
  double res = residual_of(m, sol.x);
  double damp = 1.0;
  // Damped fixed point x <- (1 - t) x + t (1 - prod x^a).
  const int fixed_budget = std::min(max_iter, 2000);
  while (sol.iterations < fixed_budget && res >= tol) {
    auto p = nahm_map(m, sol.x);
    std::vector<double> next(r);
    for (std::size_t i = 0; i < r; ++i) next[i] = (1 - damp) * sol.x[i] + damp * (1 - p[i]);
    ++sol.iterations;
    if (!inside(next)) {
      damp *= 0.5;
      continue;
    }
    double nres = residual_of(m, next);
    if (nres > res) damp = std::max(damp * 0.5, 1e-6);
    sol.x = std::move(next);
    res = nres;
  }
  // Newton polish in u = log(x / (1 - x)) on log(1 - x_i) - sum_j a_ij log x_j = 0.
  while (res >= tol && sol.iterations < max_iter) {
    std::vector<double> g(r), u(r);
    Mat jac(r, std::vector<double>(r));
    for (std::size_t i = 0; i < r; ++i) {
      double s = std::log1p(-sol.x[i]);
      for (std::size_t j = 0; j < r; ++j) s -= m[i][j] * std::log(sol.x[j]);
      g[i] = -s;
      u[i] = std::log(sol.x[i] / (1 - sol.x[i]));
      for (std::size_t j = 0; j < r; ++j) jac[i][j] = -m[i][j] * (1 - sol.x[j]);
      jac[i][i] -= sol.x[i];
    }
    std::vector<double> step;
    ++sol.iterations;
    if (!solve_linear(jac, g, step)) break;
    double t = 1.0;
    bool moved = false;
    for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
      std::vector<double> cand(r);
      for (std::size_t i = 0; i < r; ++i) cand[i] = 1 / (1 + std::exp(-(u[i] + t * step[i])));
      if (!inside(cand)) continue;
      double cres = residual_of(m, cand);
      if (cres < res || ls == 59) {
        sol.x = std::move(cand);
        res = cres;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  sol.residual = res;
  if (!(res < tol)) throw Error(ErrorCode::NoConvergence, "Nahm equation residual " + std::to_string(res));
  return sol;
}

double rogers_dilogarithm(double x) {
  if (!(x > 0 && x < 1)) throw Error(ErrorCode::DomainError, "Rogers dilogarithm needs 0 < x < 1");
  constexpr double pi2_6 = std::numbers::pi * std::numbers::pi / 6;
  if (x > 0.5) return pi2_6 - rogers_dilogarithm(1 - x);
  double li2 = 0, pw = x;
  for (int k = 1; k < 200; ++k) {
    double term = pw / (static_cast<double>(k) * k);
    li2 += term;
    if (term < 1e-18 * li2) break;
    pw *= x;
  }
  return li2 + 0.5 * std::log(x) * std::log1p(-x);
}

double saddle_central_charge(const RationalMatrix& a, const std::vector<std::int64_t>& d) {
  if (d.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "D length differs from rank");
  NahmSolution s = solve_nahm_equation(a.transpose());
  double sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) sum += static_cast<double>(d[i]) * rogers_dilogarithm(1 - s.x[i]);
  return 6 / (std::numbers::pi * std::numbers::pi) * sum;
}

double laplace_growth_exponent(const RationalMatrix& a, const std::vector<std::int64_t>& d) {
  if (d.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "D length differs from rank");
  NahmSolution s = solve_nahm_equation(a);
  double sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) sum += rogers_dilogarithm(1 - s.x[i]) / static_cast<double>(d[i]);
  return 6 / (std::numbers::pi * std::numbers::pi) * sum;
}

double cardy_estimate(const QSeries& series, const Rational& lo, const Rational& hi) {
  if (hi < 50) throw Error(ErrorCode::InsufficientData, "window must reach exponent 50");
  if (series.order_exponent() <= hi) throw Error(ErrorCode::InsufficientData, "series truncated inside the window");
  std::vector<double> xs, ys;
  for (const auto& [e, c] : series_terms(series)) {
    if (e < lo || e > hi) continue;
    if (sgn(c) < 0) throw Error(ErrorCode::InsufficientData, "negative coefficient in the window");
    const double n = e.get_d();
    if (n <= 0) continue;
    // log of a big integer without overflow
    long ex = 0;
    double mant = mpz_get_d_2exp(&ex, c.get_mpz_t());
    xs.push_back(std::sqrt(n));
    ys.push_back(std::log(mant) + static_cast<double>(ex) * std::log(2.0) + 0.75 * std::log(n));
  }
  if (xs.size() < 3) throw Error(ErrorCode::InsufficientData, "too few nonzero coefficients in the window");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx <= 0) throw Error(ErrorCode::InsufficientData, "degenerate window");
  const double beta = sxy / sxx;
  return 3 * beta * beta / (2 * std::numbers::pi * std::numbers::pi);
}

}  // namespace nahm
