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


#include <set>

#include "doctest.h"
#include "nahm/error.hpp"
#include "nahm/nahm_sum.hpp"
#include "nahm/registry.hpp"

using namespace nahm;

namespace {

const std::vector<std::string> kMandatory = {
    "RR-G", "RR-H", "AG-r1-s1", "AG-r1-s2", "AG-r4-s5", "Melzer-r1", "Melzer-r2", "Melzer-r3",
    "WarnaarOdd-r1", "WarnaarOdd-r2", "WarnaarOdd-r3", "BKRS-r2", "BKRS-r3", "BKRS-r4", "Bressoud-r2-s1",
    "Bressoud-r4-s5", "KKMM-r3-even", "KKMM-r3-odd", "KKMM-r4-even", "KKMM-r4-odd", "KKMM-r5-even",
    "KKMM-r5-odd", "WarnaarC-r2", "WarnaarC-r3", "WarnaarC-r4", "T1Dr-r3", "T1Dr-r4", "T1Dr-r5",
    "T1Dr-product-r3", "T1Dr-product-r4", "T1Dr-product-r5", "A1Cr-r2", "A1Cr-r3", "T1Cr-r2-1", "T1Cr-r2-2",
    "T1Cr-r2-3", "T1Cr-r3-1", "T1Cr-r3-2", "T1Cr-r3-3", "T1Cr-r3-4", "A1F4", "A1F4b", "T1F4", "T1F4b",
    "A1G2", "T1E6", "T1E8", "E8T1-coeffs", "T1A11", "T1A12", "T1A2", "A2T1", "T2T11", "T2T12", "T2T13",
    "T2T14", "T1A3-f1form", "T1A3-f2form", "A1A21", "A1A22", "A2A11", "A2A12", "A1A3", "A1A32", "A1B3-1",
    "A1B3-2", "A1B3-3", "A1A5", "A1A52", "T1G2-conj", "G2T1-conj", "A1E8-fermionic", "T2A1-1", "T2A1-2",
    "T2A1-3"};

}  // namespace

TEST_CASE("registry contents") {
  const auto& reg = load_registry();
  CHECK(reg.size() >= 60);
  std::set<std::string> ids;
  for (const auto& r : reg) ids.insert(r.id);
  CHECK(ids.size() == reg.size());
  for (const auto& id : kMandatory) CHECK_MESSAGE(ids.count(id), id);
  for (std::int64_t r = 1; r <= 4; ++r)
    for (std::int64_t s = 1; s <= r + 1; ++s) CHECK(ids.count("AG-r" + std::to_string(r) + "-s" + std::to_string(s)));
  for (std::int64_t r = 2; r <= 4; ++r)
    for (std::int64_t s = 1; s <= r + 1; ++s)
      CHECK(ids.count("Bressoud-r" + std::to_string(r) + "-s" + std::to_string(s)));

  std::set<std::string> anchors;
  for (const auto& r : reg) {
    CHECK_NOTHROW(validate_record(r));
    CHECK(anchors.insert(r.source.tag + "|" + r.source.anchor).second);
    if (r.status == RecordStatus::Provisional) CHECK_FALSE(r.note.empty());
  }
  CHECK(find_record("T1G2-conj").status == RecordStatus::Conjectural);
  CHECK(find_record("G2T1-conj").status == RecordStatus::Conjectural);
  CHECK(find_record("T1A3-f1form").status == RecordStatus::Provisional);
  CHECK(find_record("T2T14").requires_external_data);
  CHECK(find_record("T2T14").lhs.c_override == make_rational(19, 96));
  try {
    find_record("no-such-record");
    FAIL("found a missing record");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownRecord);
  }
}

TEST_CASE("right-hand sides have the expected shape") {
  const Expr& g = find_record("RR-G").rhs;
  CHECK(g == e_cprod(1, 5, {1, 4}, -1));
  const Expr& e8 = find_record("E8T1-coeffs").rhs;
  REQUIRE(e8.op == ExprOp::Coeffs);
  CHECK(e8.values == std::vector<BigInt>{1, 120, 1660, 12320, 68210});
  auto lhs = resolve_lhs(find_record("RR-G").lhs);
  CHECK(lhs.A == RationalMatrix::from_ints({{2}}));
  CHECK(lhs.C == 0);
}

TEST_CASE("spot checks") {
  auto rr = verify_identity(find_record("RR-G"), Rational(100));
  CHECK(rr.equal);
  CHECK(rr.order == 100);
  CHECK_FALSE(rr.first_mismatch);
  CHECK(verify_identity(find_record("T1Dr-r3"), Rational(60)).equal);
  CHECK(verify_identity(find_record("E8T1-coeffs")).equal);
  CHECK_THROWS_AS(verify_identity(find_record("E8T1-coeffs"), Rational(6)), Error);
  CHECK_THROWS_AS(verify_identity(find_record("T2T12")), Error);
}

TEST_CASE("an injected fault is located") {
  int mutated = 0;
  for (const auto& rec : load_registry()) {
    if (rec.requires_external_data || rec.status != RecordStatus::Proved || rec.rhs.op != ExprOp::Sum) continue;
    for (std::size_t i = 0; i < rec.rhs.weights.size(); ++i) {
      if (rec.rhs.weights[i] != 2) continue;
      IdentityRecord bad = rec;
      bad.rhs.weights[i] = 3;
      Rational order = std::min<std::int64_t>(rec.default_order, 40);
      auto rep = verify_identity(bad, order);
      CHECK_MESSAGE(!rep.equal, rec.id);
      REQUIRE(rep.first_mismatch.has_value());
      CHECK_MESSAGE(*rep.first_mismatch == evaluate(rec.rhs.children[i], order).leading_exponent(), rec.id);
      ++mutated;
    }
  }
  CHECK(mutated >= 3);
}

TEST_CASE("parity-split sums add up") {
  for (int r = 3; r <= 5; ++r) {
    std::string base = "KKMM-r" + std::to_string(r);
    const auto& even = find_record(base + "-even");
    const auto& odd = find_record(base + "-odd");
    REQUIRE(even.lhs.constraint.has_value());
    REQUIRE(odd.lhs.constraint.has_value());
    CHECK(resolve_lhs(even.lhs) == resolve_lhs(odd.lhs));
    auto whole = nahm_sum(resolve_lhs(even.lhs), 40);
    CHECK(whole == nahm_sum(resolve_lhs(even.lhs), 40, even.lhs.constraint) +
                       nahm_sum(resolve_lhs(odd.lhs), 40, odd.lhs.constraint));
    CHECK(verify_identity(find_record(base + "-split"), Rational(40)).equal);
  }
}

TEST_CASE("serialization round trip") {
  auto j = registry_to_json(load_registry());
  std::string first = j.dump(2);
  auto back = registry_from_json(nlohmann::json::parse(first));
  CHECK(back == load_registry());
  CHECK(registry_to_json(back).dump(2) == first);
  for (const auto& r : load_registry()) CHECK(record_from_json(record_to_json(r)) == r);
  auto broken = nlohmann::json::parse(first);
  broken["records"].push_back(broken["records"][0]);
  CHECK_THROWS_AS(registry_from_json(broken), Error);
}

TEST_CASE("suite selection") {
  CHECK(run_suite(SuiteFilter{{"no-such"}, {}, false}, std::nullopt).empty());
  CHECK(run_suite(SuiteFilter{{}, {"no-such-tag"}, false}, std::nullopt).empty());
  auto all = select_records(load_registry(), {});
  for (const auto* r : all) CHECK_FALSE(r->requires_external_data);
  auto with_ext = select_records(load_registry(), SuiteFilter{{}, {}, true});
  CHECK(with_ext.size() == load_registry().size());
  CHECK(all.size() < with_ext.size());
  auto conj = select_records(load_registry(), SuiteFilter{{}, {"conjectural"}, false});
  CHECK(conj.size() == 2);

  auto reports = run_suite(SuiteFilter{{}, {"conjectural"}, false}, Rational(100), 2);
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) {
    CHECK(r.equal);
    CHECK(r.status == RecordStatus::Conjectural);
  }
  // a clamp keeps the finite list inside its range
  auto e8 = run_suite(SuiteFilter{{"E8T1-coeffs"}, {}, false}, Rational(50));
  REQUIRE(e8.size() == 1);
  CHECK(e8[0].order == 5);
  CHECK(e8[0].equal);
}

TEST_CASE("suite verdicts") {
  VerificationReport ok{"a", RecordStatus::Proved, 10, true, std::nullopt, "", 0};
  VerificationReport prov{"b", RecordStatus::Provisional, 10, false, Rational(1), "", 0};
  VerificationReport bad{"c", RecordStatus::Conjectural, 10, false, Rational(2), "", 0};
  CHECK(suite_passed({ok, prov}));
  CHECK_FALSE(suite_passed({ok, prov, bad}));
  auto j = report_to_json(bad, false);
  CHECK_FALSE(j.contains("wall_time"));
  CHECK(report_to_json(bad, true).contains("wall_time"));
}

TEST_CASE("reports do not depend on the thread count") {
  SuiteFilter f{{}, {"cft-character"}, false};
  auto one = reports_to_json(run_suite(f, Rational(30), 1), false).dump();
  auto many = reports_to_json(run_suite(f, Rational(30), 6), false).dump();
  CHECK(one == many);
}
