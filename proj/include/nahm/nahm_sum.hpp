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
#include <vector>

#include "nahm/qseries.hpp"
#include "nahm/quadruple.hpp"

namespace nahm {

/// Truncation order (integer exponent units) used when a caller gives none.
std::int64_t default_order(std::size_t rank);

/// Exact minimum of n^t AD n / 2 + n^t B over real completions of the prefix.
Rational min_exponent_tail(const NahmQuadruple& q, const std::vector<std::int64_t>& prefix);

/// Sum over n in N^r (restricted by the constraint if given) of
/// q^(n^t AD n / 2 + n^t B + C) / prod_i (q^d_i; q^d_i)_{n_i}, truncated at order.
/// jobs > 1 splits the first coordinate across threads; the result does not
/// depend on jobs.
QSeries nahm_sum(const NahmQuadruple& q, const Rational& order,
                 const std::optional<LatticeConstraint>& constraint = std::nullopt, unsigned jobs = 1);

/// Lattice points the enumerator reaches whose exponent (including C) is below order.
std::vector<std::vector<std::int64_t>> contributing_points(const NahmQuadruple& q, const Rational& order,
                                                           const std::optional<LatticeConstraint>& constraint =
                                                               std::nullopt);

}  // namespace nahm
