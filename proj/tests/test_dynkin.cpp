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


#include <fstream>

#include "doctest.h"
#include "nahm/dynkin.hpp"
#include "nahm/error.hpp"
#include "nahm/matrix.hpp"

using namespace nahm;

namespace {

std::vector<DiagramKind> all_kinds(int max_rank) {
  std::vector<DiagramKind> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= 8; ++r) out.push_back({Family::E, r});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::T, r});
  return out;
}

Rational c_of(const char* x, const char* y) { return central_charge(parse_kind(x), parse_kind(y)); }

}  // namespace

TEST_CASE("cartan data matches the golden transcription") {
  std::ifstream in(NAHM_TEST_DATA "/cartan_golden.json");
  REQUIRE(in.good());
  auto golden = nlohmann::json::parse(in);
  REQUIRE(golden.size() == 39);
  for (const auto& g : golden) {
    auto got = cartan_to_json(cartan_data(parse_kind(g["kind"].get<std::string>())));
    CHECK_MESSAGE(got == g, g["kind"]);
    CHECK(got.dump() == g.dump());
  }
}

TEST_CASE("spec examples") {
  auto g2 = cartan_data(parse_kind("G2"));
  CHECK(g2.cartan == IntMatrix{{2, -1}, {-3, 2}});
  CHECK(g2.dvec == std::vector<std::int64_t>{1, 3});
  CHECK(g2.coxeter == 6);
  auto t1 = cartan_data(parse_kind("T1"));
  CHECK(t1.cartan == IntMatrix{{1}});
  CHECK(t1.coxeter == 3);
  auto b2 = cartan_data(parse_kind("B2"));
  CHECK(b2.aliased);
  CHECK(b2.kind == parse_kind("C2"));
  CHECK(b2.dvec == std::vector<std::int64_t>{1, 2});
  auto d3 = cartan_data(parse_kind("D3"));
  CHECK(d3.aliased);
  CHECK(d3.cartan == cartan_data(parse_kind("A3")).cartan);
  CHECK_FALSE(cartan_data(parse_kind("E8")).aliased);
  CHECK(parse_kind("c_3") == DiagramKind{Family::C, 3});
  CHECK(to_string(parse_kind("e7")) == "E7");

  for (const char* bad : {"E9", "E5", "F3", "G3", "B1", "C1", "D2", "A0", "T0", "X2", "A", ""}) {
    try {
      cartan_data(parse_kind(bad));
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::InvalidRank || e.code() == ErrorCode::ParseError));
    }
  }
  try {
    cartan_data(parse_kind("E9"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidRank);
  }
}

TEST_CASE("catalog invariants") {
  for (const auto& k : all_kinds(10)) {
    auto d = cartan_data(k);
    std::size_t r = d.cartan.size();
    for (std::size_t i = 0; i < r; ++i) {
      bool t_corner = k.family == Family::T && i + 1 == r;
      CHECK(d.cartan[i][i] == (t_corner ? 1 : 2));
    }
    RationalMatrix cd = RationalMatrix::from_ints(d.cartan) * RationalMatrix::diagonal(d.dvec);
    CHECK(cd.is_symmetric());
    for (const auto& m : cd.leading_minors()) CHECK(m > 0);
  }
}

TEST_CASE("quadruple construction") {
  auto q = build_quadruple(parse_kind("A1"), parse_kind("T1"));
  CHECK(q.A == RationalMatrix::from_ints({{2}}));
  CHECK(q.D == std::vector<std::int64_t>{1});
  CHECK(q.C == make_rational(-1, 60));
  CHECK(q.B == std::vector<Rational>{0});

  auto t1c2 = build_quadruple(parse_kind("T1"), parse_kind("C2"));
  RationalMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = make_rational(1, 2);
  a(1, 0) = 1;
  a(1, 1) = 1;
  CHECK(t1c2.A == a);
  CHECK(t1c2.D == std::vector<std::int64_t>{1, 2});
  CHECK(t1c2.C == make_rational(-3, 56));

  // A(A1, C_r) D(A1, C_r) = 2 C(T_r)^-1
  for (int r = 2; r <= 6; ++r) {
    auto qq = build_quadruple({Family::A, 1}, {Family::C, r});
    auto tr = RationalMatrix::from_ints(cartan_data({Family::T, r}).cartan);
    CHECK(qq.AD() == Rational(2) * rational_inverse(tr));
  }
  for (const auto& x : all_kinds(4))
    for (const auto& y : all_kinds(4)) {
      auto qq = build_quadruple(x, y);
      CHECK_NOTHROW(qq.validate());
      CHECK(qq.C == -central_charge(x, y) / 24);
    }
}

TEST_CASE("central charges") {
  CHECK(c_of("T1", "E8") == make_rational(8, 11));
  CHECK(c_of("E8", "T1") == make_rational(80, 11));
  CHECK(c_of("A1", "E8") == make_rational(1, 2));
  CHECK(c_of("T1", "T1") == make_rational(1, 2));
  CHECK(c_of("T1", "A1") == make_rational(3, 5));
  CHECK(c_of("T2", "A1") == make_rational(10, 7));
  CHECK(c_of("A1", "B3") == make_rational(5, 4));
  CHECK(c_of("T1", "C2") == make_rational(9, 7));
  CHECK(c_of("A2", "A1") == make_rational(6, 5));
  CHECK(c_of("A1", "A2") == make_rational(4, 5));
  for (int r = 1; r <= 8; ++r) {
    CHECK(central_charge({Family::A, 1}, {Family::T, r}) == make_rational(2 * r, 2 * r + 3));
    CHECK(central_charge({Family::T, 1}, {Family::T, 2 * r + 1}) ==
          make_rational(1, 2) + make_rational(2 * r, 2 * r + 3));
    if (r >= 3) CHECK(central_charge({Family::A, 1}, {Family::B, r}) == make_rational(2 * r - 1, r + 1));
    if (r >= 4) CHECK(central_charge({Family::T, 1}, {Family::D, r}) == make_rational(3 * r, 2 * r + 1));
  }
  // c(X,Y) + c(Y,X) = tr D(X,Y)
  for (const auto& x : all_kinds(8))
    for (const auto& y : all_kinds(8)) {
      auto q = build_quadruple(x, y);
      std::int64_t tr = 0;
      for (auto d : q.D) tr += d;
      CHECK(central_charge(x, y) + central_charge(y, x) == tr);
    }
}

TEST_CASE("dual quadruples") {
  NahmQuadruple q{RationalMatrix::from_ints({{2}}), {0}, make_rational(-1, 60), {1}};
  auto d = dual_quadruple(q);
  RationalMatrix half(1, 1);
  half(0, 0) = make_rational(1, 2);
  CHECK(d.A == half);
  CHECK(d.C == make_rational(-1, 40));
  CHECK(dual_quadruple(d) == q);

  NahmQuadruple withb{RationalMatrix::from_ints({{2, 1}, {1, 2}}), {1, make_rational(1, 2)}, make_rational(1, 7), {1, 1}};
  auto db = dual_quadruple(withb);
  CHECK(db.A * withb.A == RationalMatrix::identity(2));
  CHECK(db.B == rational_inverse(withb.A) * withb.B);

  for (const auto& x : all_kinds(4))
    for (const auto& y : all_kinds(4)) {
      auto a = dual_quadruple(build_quadruple(x, y));
      auto b = build_quadruple(y, x);
      CHECK(permutation_equivalent(a.A, b.A));
      CHECK(a.C == b.C);
    }
  NahmQuadruple sing{RationalMatrix::from_ints({{1, 1}, {1, 1}}), {0, 0}, 0, {1, 1}};
  CHECK_THROWS_AS(dual_quadruple(sing), Error);
}
