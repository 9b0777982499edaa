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
#include <vector>

#include "nahm/matrix.hpp"
#include "nahm/qseries.hpp"

namespace nahm {

struct NahmSolution {
  std::vector<double> x;
  double residual = 0;
  int iterations = 0;
};

/// Solution in (0,1)^r of 1 - x_i = prod_j x_j^a_ij.
NahmSolution solve_nahm_equation(const RationalMatrix& a, double tol = 1e-12, int max_iter = 100000);

/// Li2(x) + log(x) log(1-x) / 2 for 0 < x < 1.
double rogers_dilogarithm(double x);

/// (6/pi^2) sum_i d_i L(1 - x_i) where x solves the Nahm equation of A^t.
/// Reproduces tr(D) h(X)/(h(X)+h(Y)) for the Dynkin-pair quadruples.
double saddle_central_charge(const RationalMatrix& a, const std::vector<std::int64_t>& d);

/// (6/pi^2) sum_i L(1 - x_i) / d_i where x solves the Nahm equation of A: the
/// growth exponent of the bare sum as q -> 1 along the positive reals.
double laplace_growth_exponent(const RationalMatrix& a, const std::vector<std::int64_t>& d);

/// Least-squares fit of log a_n = alpha + 2 pi sqrt(c n / 6) - (3/4) log n
/// over the nonzero coefficients with lo <= n <= hi. Coarse check only.
double cardy_estimate(const QSeries& series, const Rational& lo, const Rational& hi);

}  // namespace nahm
