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


// Randomised and exhaustive property checks shared by the unit tests and the
// acceptance runner. Each returns counts so callers can report them.

#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "nahm/nahm_sum.hpp"
#include "nahm/registry.hpp"
#include "oracles.hpp"

namespace props {

using nahm::BigInt;
using nahm::QSeries;
using nahm::Rational;

struct Outcome {
  int checked = 0;
  int failed = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failed++ == 0) first_failure = what;
  }
  bool ok() const { return checked > 0 && failed == 0; }
};

inline QSeries random_series(std::mt19937_64& rng, bool unit_leading = false, bool zero_start = false) {
  static const std::int64_t grains[] = {1, 2, 3, 4, 6};
  std::int64_t g = grains[rng() % 5];
  std::int64_t len = 3 + static_cast<std::int64_t>(rng() % 18);
  std::int64_t min = zero_start ? 0 : static_cast<std::int64_t>(rng() % 11) - 5;
  std::vector<BigInt> c(static_cast<std::size_t>(len));
  for (auto& x : c) {
    x = static_cast<long>(rng() % 101) - 50;
    if (rng() % 10 == 0) x *= BigInt("1000000000000000000000000000001");
  }
  if (unit_leading) c[0] = (rng() % 2) ? 1 : -1;
  return QSeries(g, min, std::move(c), min + len);
}

inline bool same_to_common_order(const QSeries& a, const QSeries& b) {
  Rational o = std::min(a.order_exponent(), b.order_exponent());
  return nahm::equal_to_order(a, b, o).equal;
}

inline Outcome ring_axioms(int cases, std::uint64_t seed = 20261016) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int i = 0; i < cases; ++i) {
    QSeries a = random_series(rng), b = random_series(rng), c = random_series(rng);
    ++out.checked;
    if (!same_to_common_order((a + b) + c, a + (b + c))) out.fail("associativity of + at case " + std::to_string(i));
    if (!same_to_common_order(a * (b + c), a * b + a * c)) out.fail("distributivity at case " + std::to_string(i));
    if (!same_to_common_order(a * b, b * a)) out.fail("commutativity of * at case " + std::to_string(i));
    if (!same_to_common_order((a * b) * c, a * (b * c))) out.fail("associativity of * at case " + std::to_string(i));
    if (!same_to_common_order(a - a, QSeries::zero(a.order_exponent()))) out.fail("a - a at case " + std::to_string(i));
  }
  return out;
}

inline Outcome inverse_roundtrips(int cases, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int i = 0; i < cases; ++i) {
    QSeries a = random_series(rng, true, true);
    Rational n = a.order_exponent();
    QSeries b = nahm::series_inverse(a, n);
    ++out.checked;
    if (!nahm::equal_to_order(a * b, QSeries::one(n), n).equal) out.fail("a * inverse(a) != 1 at case " + std::to_string(i));
    // shifted inputs invert to the opposite shift
    Rational s(static_cast<long>(rng() % 7) - 3, a.grain());
    s.canonicalize();
    QSeries as = a.shifted(s);
    QSeries bs = nahm::series_inverse(as, n - s);
    if (!nahm::equal_to_order(as * bs, QSeries::one(n), n).equal)
      out.fail("shifted round trip at case " + std::to_string(i));
  }
  return out;
}

inline Outcome theta_brute_force(int cases, std::uint64_t seed = 11) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int i = 0; i < cases; ++i) {
    Rational a(1 + static_cast<long>(rng() % 12), 1 + static_cast<long>(rng() % 4));
    Rational b(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4));
    Rational c(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 8));
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    Rational order(10 + static_cast<long>(rng() % 60));
    bool alt = rng() % 2;
    ++out.checked;
    auto got = oracle::nonzero_terms(nahm::theta_series(a, b, c, order, alt));
    if (got != oracle::theta_counts(a, b, c, order, alt))
      out.fail("theta a=" + nahm::to_string(a) + " b=" + nahm::to_string(b) + " c=" + nahm::to_string(c));
  }
  return out;
}

struct SumCase {
  std::string label;
  nahm::NahmQuadruple q;
  std::optional<nahm::LatticeConstraint> constraint;
};

/// Every distinct rank <= 3 sum the registry expands, on either side.
inline std::vector<SumCase> small_registry_sums() {
  std::vector<SumCase> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& label, const nahm::NahmQuadruple& q,
                 const std::optional<nahm::LatticeConstraint>& c) {
    if (q.rank() > 3) return;
    nlohmann::json key = {{"q", nahm::quadruple_to_json(q)}, {"c", c ? nahm::constraint_to_json(*c) : nullptr}};
    if (seen.insert(key.dump()).second) out.push_back({label, q, c});
  };
  std::function<void(const std::string&, const nahm::Expr&)> walk = [&](const std::string& id, const nahm::Expr& e) {
    if (e.op == nahm::ExprOp::Nahm) add(id + " (right side)", e.quadruple, e.constraint);
    for (const auto& ch : e.children) walk(id, ch);
  };
  for (const auto& rec : nahm::load_registry()) {
    add(rec.id, nahm::resolve_lhs(rec.lhs), rec.lhs.constraint);
    walk(rec.id, rec.rhs);
  }
  return out;
}

/// Pruned enumeration against the naive box loop: same series, and every
/// point the box loop finds contributing is visited by the enumerator.
inline Outcome oracle_equivalence(const Rational& order = 20) {
  Outcome out;
  for (const auto& c : small_registry_sums()) {
    ++out.checked;
    std::vector<std::vector<std::int64_t>> naive_pts;
    auto naive = oracle::naive_nahm_sum(c.q, order, c.constraint, &naive_pts);
    auto fast = oracle::nonzero_terms(nahm::nahm_sum(c.q, order, c.constraint));
    if (naive != fast) {
      out.fail(c.label + ": series differ");
      continue;
    }
    auto visited = nahm::contributing_points(c.q, order, c.constraint);
    std::set<std::vector<std::int64_t>> vs(visited.begin(), visited.end());
    for (const auto& p : naive_pts)
      if (!vs.count(p)) {
        out.fail(c.label + ": enumeration skipped a contributing point");
        break;
      }
  }
  return out;
}

}  // namespace props
