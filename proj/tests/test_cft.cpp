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


#include <algorithm>
#include <future>
#include <numeric>

#include "doctest.h"
#include "nahm/cft.hpp"
#include "nahm/error.hpp"
#include "nahm/nahm_sum.hpp"
#include "oracles.hpp"

using namespace nahm;

namespace {

QSeries inv_q_q(const Rational& order) { return series_inverse(pochhammer(1, 1, std::nullopt, order), order); }

QSeries normalized(const QSeries& s) { return s.shifted(-s.leading_exponent()); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

Rational vir_h(std::int64_t p, std::int64_t pp, std::int64_t r, std::int64_t s) {
  std::int64_t x = p * r - pp * s;
  return make_rational(x * x - (p - pp) * (p - pp), 4 * p * pp);
}

}  // namespace

TEST_CASE("Lee-Yang characters") {
  auto mods = virasoro_modules(5, 2);
  REQUIRE(mods.size() == 2);
  QSeries g = congruence_product(1, 5, {1, 4}, -1, 60), h = congruence_product(1, 5, {2, 3}, -1, 60);
  QSeries lo = virasoro_character(5, 2, mods[0].r, mods[0].s, 60);
  QSeries hi = virasoro_character(5, 2, mods[1].r, mods[1].s, 60);
  CHECK(lo.leading_exponent() == make_rational(-1, 60));
  CHECK(hi.leading_exponent() == make_rational(11, 60));
  CHECK(equal_to_order(normalized(lo), g, 59).equal);
  CHECK(equal_to_order(normalized(hi), h, 59).equal);
  CHECK(effective_character(MinimalFamily::Virasoro, 5, 2, Sector::NS, 1, 30).series ==
        virasoro_character(5, 2, mods[0].r, mods[0].s, 30));
  CHECK(effective_character(MinimalFamily::Virasoro, 5, 2, Sector::NS, 2, 30).effective_weight == make_rational(1, 5));
  CHECK(code_of([] { effective_character(MinimalFamily::Virasoro, 5, 2, Sector::NS, 3, 30); }) ==
        ErrorCode::IndexOutOfRange);
}

TEST_CASE("Ising characters against fermion partitions") {
  // even and odd halves of prod (1 + q^(n - 1/2)), and prod (1 + q^n)
  std::vector<std::int64_t> odd;
  for (std::int64_t k = 1; k < 120; k += 2) odd.push_back(k);
  auto half = oracle::distinct_part_counts(120, odd);
  std::vector<std::int64_t> all(60);
  std::iota(all.begin(), all.end(), 1);
  auto dist = oracle::distinct_part_counts(60, all);

  QSeries vac = virasoro_character(4, 3, 1, 1, 60);
  CHECK(vac.leading_exponent() == make_rational(-1, 48));
  QSeries v = normalized(vac);
  for (long n = 0; n < 6; ++n) CHECK(coefficient(v, n) == std::vector<long>{1, 0, 1, 1, 2, 2}[static_cast<std::size_t>(n)]);
  QSeries eps = normalized(virasoro_character(4, 3, 1, 3, 60));
  QSeries sig = normalized(virasoro_character(4, 3, 1, 2, 60));
  for (long n = 0; n < 59; ++n) {
    CHECK(coefficient(v, n) == half[static_cast<std::size_t>(2 * n)]);
    CHECK(coefficient(eps, n) == half[static_cast<std::size_t>(2 * n + 1)]);
    CHECK(coefficient(sig, n) == dist[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("M(2r+3,2) characters match the sum-side products") {
  for (std::int64_t r = 1; r <= 4; ++r) {
    std::int64_t m = 2 * r + 3;
    std::vector<std::vector<BigInt>> chars, prods;
    for (const auto& e : virasoro_modules(m, 2)) {
      auto c = normalized(virasoro_character(m, 2, e.r, e.s, 80)).truncated(70);
      chars.push_back(c.dense_on(1, 0, 70));
    }
    for (std::int64_t s = 1; s <= r + 1; ++s) {
      std::vector<std::int64_t> keep;
      for (std::int64_t k = 0; k < m; ++k)
        if (k != 0 && k != s && k != m - s) keep.push_back(k);
      prods.push_back(congruence_product(1, m, keep, -1, 70).dense_on(1, 0, 70));
    }
    std::sort(chars.begin(), chars.end());
    std::sort(prods.begin(), prods.end());
    CHECK(chars == prods);
  }
}

TEST_CASE("leading exponents and counts") {
  for (auto [p, pp] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {5, 4}, {6, 5}, {7, 2}, {11, 2}, {7, 3}}) {
    auto mods = virasoro_modules(p, pp);
    CHECK(mods.size() == static_cast<std::size_t>((p - 1) * (pp - 1) / 2));
    Rational c = virasoro_central_charge(p, pp);
    CHECK(c == 1 - Rational(6 * (p - pp) * (p - pp)) / (p * pp));
    for (const auto& e : mods) {
      CHECK(e.weight == vir_h(p, pp, e.r, e.s));
      QSeries ch = virasoro_character(p, pp, e.r, e.s, 20);
      CHECK(ch.leading_exponent() == e.weight - c / 24);
      CHECK(ch.leading_coefficient() == 1);
      for (const auto& x : ch.coeffs()) CHECK(x >= 0);
    }
    CHECK(std::is_sorted(mods.begin(), mods.end(), [](auto& a, auto& b) { return a.weight < b.weight; }));
  }
}

TEST_CASE("super-Virasoro weights") {
  auto weights = [](Sector s) {
    std::vector<Rational> out;
    for (const auto& e : super_virasoro_modules(8, 6, s)) out.push_back(e.weight);
    return out;
  };
  std::vector<Rational> ns{0, make_rational(1, 32), make_rational(1, 12), make_rational(5, 32), make_rational(1, 4),
                           make_rational(5, 6), make_rational(33, 32), make_rational(5, 4), 3};
  std::vector<Rational> rr{make_rational(5, 96), make_rational(1, 16), make_rational(3, 32),
                           make_rational(5, 16), make_rational(41, 96), make_rational(9, 16),
                           make_rational(23, 32), make_rational(29, 16), make_rational(67, 32)};
  CHECK(weights(Sector::NS) == ns);
  CHECK(weights(Sector::R) == rr);
  CHECK(super_virasoro_modules(84, 2, Sector::NS).size() == 21);
  CHECK(super_virasoro_modules(84, 2, Sector::R).size() == 21);
}

TEST_CASE("super-Virasoro leading exponents") {
  for (auto [p, pp] : std::vector<std::pair<int, int>>{{8, 2}, {8, 6}, {12, 2}, {10, 4}}) {
    Rational c = super_virasoro_central_charge(p, pp);
    CHECK(c == Rational(3, 2) * (1 - Rational(2 * (p - pp) * (p - pp)) / (p * pp)));
    for (Sector sec : {Sector::NS, Sector::R})
      for (const auto& e : super_virasoro_modules(p, pp, sec)) {
        QSeries ch = super_virasoro_character(p, pp, sec, e.r, e.s, 20);
        std::int64_t x = p * e.r - pp * e.s;
        if (sec == Sector::R) CHECK(ch.leading_exponent() == make_rational(x * x, 8 * p * pp));
        CHECK(ch.leading_exponent() == e.weight - c / 24);
        for (const auto& k : ch.coeffs()) CHECK(k >= 0);
      }
  }
  CHECK(code_of([] { super_virasoro_character(8, 2, Sector::NS, 1, 2, 10); }) == ErrorCode::SectorParityMismatch);
  CHECK(code_of([] { super_virasoro_character(8, 2, Sector::R, 1, 1, 10); }) == ErrorCode::SectorParityMismatch);
}

TEST_CASE("U(1) characters") {
  QSeries u = u1_character(3, 0, 40);
  CHECK(u.leading_exponent() == make_rational(-1, 24));
  QSeries n = normalized(u);
  for (long k = 0; k < 4; ++k) CHECK(coefficient(n, k) == std::vector<long>{1, 1, 2, 5}[static_cast<std::size_t>(k)]);
  CHECK(equal_to_order(n, theta_series(3, 0, 0, 40) * inv_q_q(40), 39).equal);
  CHECK(u1_character(3, 3, 20).leading_exponent() == make_rational(3, 4) - make_rational(1, 24));
  CHECK(spec_weight(u1_char(3, make_rational(3, 4))) == make_rational(3, 4));

  for (std::int64_t K : {1, 2, 3, 8, 12}) {
    QSeries diff = u1_character(K, 0, 40) - u1_character(K, K, 40);
    QSeries want = (theta_series(make_rational(K, 4), 0, 0, 50, true) * inv_q_q(50)).shifted(make_rational(-1, 24));
    CHECK(equal_to_order(diff, want, 39).equal);
  }
  CHECK(code_of([] { u1_character(3, 4, 10); }) == ErrorCode::InvalidLabel);
  CHECK(code_of([] { u1_character(3, -1, 10); }) == ErrorCode::InvalidLabel);
}

TEST_CASE("free fermion") {
  RationalMatrix one(1, 1);
  one(0, 0) = 1;
  NahmQuadruple q{one, {0}, make_rational(-1, 48), {1}};
  CHECK(free_fermion_character(Sector::NS, 40) == nahm_sum(q, 40));

  QSeries r = free_fermion_character(Sector::R, 40);
  CHECK(r.leading_exponent() == make_rational(1, 24));
  std::vector<std::int64_t> all(45);
  std::iota(all.begin(), all.end(), 1);
  auto dist = oracle::distinct_part_counts(45, all);
  QSeries rn = normalized(r);
  for (long k = 0; k < 39; ++k) CHECK(coefficient(rn, k) == dist[static_cast<std::size_t>(k)]);
  CHECK(coefficient(rn, 3) == 2);
}

TEST_CASE("parafermions") {
  // k = 2 is the Ising model
  auto mods = parafermion_modules(2);
  REQUIRE(mods.size() == 3);
  for (const auto& e : mods) {
    QSeries pf = parafermion_character(2, e.l, e.m, 40);
    bool matched = false;
    for (const auto& v : virasoro_modules(4, 3))
      if (v.weight == e.weight) {
        matched = true;
        CHECK(pf == virasoro_character(4, 3, v.r, v.s, 40));
      }
    CHECK(matched);
  }
  CHECK(parafermion_central_charge(2) == make_rational(1, 2));

  std::vector<Rational> z4;
  for (const auto& e : parafermion_modules(4)) z4.push_back(e.weight);
  CHECK(z4 == std::vector<Rational>{0, make_rational(1, 16), make_rational(1, 12), make_rational(1, 3),
                                    make_rational(9, 16), make_rational(3, 4), 1});
  for (std::int64_t k = 2; k <= 6; ++k) {
    CHECK(parafermion_central_charge(k) == make_rational(2 * (k - 1), k + 2));
    for (const auto& e : parafermion_modules(k)) {
      QSeries ch = parafermion_character(k, e.l, e.m, 20);
      CHECK(ch.leading_exponent() == e.weight - parafermion_central_charge(k) / 24);
      for (const auto& x : ch.coeffs()) CHECK(x >= 0);
    }
  }
  CHECK(code_of([] { parafermion_character(4, 5, 1, 10); }) == ErrorCode::InvalidLabel);
  CHECK(code_of([] { parafermion_character(4, 2, 1, 10); }) == ErrorCode::InvalidLabel);
}

TEST_CASE("composite characters") {
  auto vir65 = [](const Rational& w) { return character(vir_char(6, 5, w), 40); };
  CHECK(composite_character(CompositeName::MSub65, 0, 40) == vir65(0) + vir65(3));
  CHECK(composite_character(CompositeName::MSub65, make_rational(2, 5), 40) ==
        vir65(make_rational(2, 5)) + vir65(make_rational(7, 5)));
  CHECK(composite_character(CompositeName::MSub65, make_rational(2, 3), 40) == vir65(make_rational(2, 3)));
  CHECK(composite_weights(CompositeName::D2A).size() == 4);
  for (auto name : {CompositeName::MSub65, CompositeName::D2A})
    for (const auto& w : composite_weights(name)) {
      QSeries ch = composite_character(name, w, 30);
      CHECK(ch.leading_coefficient() >= 1);
      for (const auto& x : ch.coeffs()) CHECK(x >= 0);
    }
  CHECK(code_of([] { composite_character(CompositeName::D2A, make_rational(1, 3), 10); }) == ErrorCode::InvalidLabel);
}

TEST_CASE("tensor products") {
  CharacterSpec a = vir_eff_char(5, 2, 0), b = composite_char(CompositeName::MSub65, make_rational(2, 3));
  CharacterSpec t = tensor_char({a, b});
  QSeries ta = character(a, 30), tb = character(b, 30), tt = character(t, 30);
  CHECK(tt.leading_exponent() == ta.leading_exponent() + tb.leading_exponent());
  CHECK(equal_to_order(tt, ta * tb, 29).equal);
  CHECK(spec_weight(t) == spec_weight(a) + spec_weight(b));
}

TEST_CASE("spec validation and interchange") {
  CHECK(code_of([] { validate_spec(vir_char(4, 2, 0)); }) == ErrorCode::InvalidLabel);
  CHECK(code_of([] { validate_spec(vir_char(5, 2, make_rational(1, 7))); }) == ErrorCode::InvalidLabel);
  std::vector<CharacterSpec> specs{vir_char(5, 2, make_rational(-1, 5)),
                                   vir_eff_char(11, 2, 0),
                                   svir_char(8, 2, Sector::R, make_rational(1, 16)),
                                   svir_eff_char(12, 2, Sector::NS, 0),
                                   u1_char(12, make_rational(3, 4)),
                                   fermion_char(Sector::R),
                                   pf_char(4, make_rational(3, 4)),
                                   composite_char(CompositeName::D2A, make_rational(1, 2)),
                                   tensor_char({fermion_char(Sector::NS), pf_char(2, 0)})};
  for (const auto& s : specs) {
    auto j = spec_to_json(s);
    CHECK(spec_from_json(nlohmann::json::parse(j.dump())) == s);
  }
}

TEST_CASE("memoized lookups are stable under concurrency") {
  CharacterSpec s = svir_eff_char(20, 2, Sector::NS, 0);
  std::vector<std::future<QSeries>> fs;
  for (int i = 0; i < 8; ++i) fs.push_back(std::async(std::launch::async, [&] { return character(s, 40); }));
  QSeries first = fs[0].get();
  for (std::size_t i = 1; i < fs.size(); ++i) CHECK(fs[i].get() == first);
  CHECK(character(s, 40) == first);
  CHECK(character(s, 20) == first.truncated(20));
}
