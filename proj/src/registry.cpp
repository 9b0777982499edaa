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


#include "nahm/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "nahm/error.hpp"
#include "nahm/nahm_sum.hpp"

namespace nahm {

const char* to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::Proved: return "proved";
    case RecordStatus::Conjectural: return "conjectural";
    case RecordStatus::Provisional: return "provisional";
  }
  return "?";
}

RecordStatus parse_status(const std::string& s) {
  if (s == "proved") return RecordStatus::Proved;
  if (s == "conjectural") return RecordStatus::Conjectural;
  if (s == "provisional") return RecordStatus::Provisional;
  throw Error(ErrorCode::ParseError, "unknown status '" + s + "'");
}

NahmQuadruple resolve_lhs(const LhsSpec& lhs) {
  if (lhs.pair.has_value() == lhs.quadruple.has_value())
    throw Error(ErrorCode::InvalidArgument, "left side needs exactly one of pair or quadruple");
  NahmQuadruple q = lhs.pair ? build_quadruple(lhs.pair->first, lhs.pair->second) : *lhs.quadruple;
  if (lhs.b_override) {
    if (lhs.b_override->size() != q.rank()) throw Error(ErrorCode::InvalidArgument, "B override has wrong length");
    q.B = *lhs.b_override;
  }
  if (lhs.c_override) q.C = *lhs.c_override;
  q.validate();
  if (lhs.constraint) lhs.constraint->validate(q.rank());
  return q;
}

void validate_record(const IdentityRecord& rec) {
  if (rec.id.empty()) throw Error(ErrorCode::InvalidArgument, "record without id");
  auto fail = [&](const std::string& m) { throw Error(ErrorCode::InvalidArgument, rec.id + ": " + m); };
  if (rec.source.tag.empty() || rec.source.anchor.empty()) fail("missing source");
  if (rec.default_order < 1) fail("default order must be positive");
  if (rec.max_order && *rec.max_order < rec.default_order) fail("default order exceeds max order");
  if (rec.status == RecordStatus::Provisional && rec.note.empty()) fail("provisional record needs a note");
  if (rec.requires_external_data && rec.note.empty()) fail("external-data record needs a note");
  resolve_lhs(rec.lhs);
  validate_expr(rec.rhs);
}

namespace {

void check_unique(const std::vector<IdentityRecord>& recs) {
  std::set<std::string> ids, anchors;
  for (const auto& r : recs) {
    validate_record(r);
    if (!ids.insert(r.id).second) throw Error(ErrorCode::InvalidArgument, "duplicate record id " + r.id);
    if (!anchors.insert(r.source.tag + "|" + r.source.anchor).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate source anchor in " + r.id);
  }
}

}  // namespace

const std::vector<IdentityRecord>& load_registry() {
  static const std::vector<IdentityRecord> records = [] {
    auto recs = builtin_records();
    std::sort(recs.begin(), recs.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    check_unique(recs);
    return recs;
  }();
  return records;
}

const IdentityRecord& find_record(const std::string& id) {
  for (const auto& r : load_registry())
    if (r.id == id) return r;
  throw Error(ErrorCode::UnknownRecord, "no record '" + id + "'");
}

VerificationReport verify_identity(const IdentityRecord& rec, const std::optional<Rational>& order, unsigned jobs) {
  if (rec.requires_external_data)
    throw Error(ErrorCode::InvalidArgument, rec.id + " needs data not available here: " + rec.note);
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = rec.id;
  rep.status = rec.status;
  rep.order = order ? *order : Rational(static_cast<long>(rec.default_order));
  if (sgn(rep.order) <= 0) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  NahmQuadruple q = resolve_lhs(rec.lhs);
  QSeries lhs = nahm_sum(q, rep.order, rec.lhs.constraint, jobs);
  QSeries rhs = evaluate(rec.rhs, rep.order, jobs);
  Comparison cmp = equal_to_order(lhs, rhs, rep.order);
  rep.equal = cmp.equal;
  rep.first_mismatch = cmp.first_mismatch;
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<const IdentityRecord*> select_records(const std::vector<IdentityRecord>& records,
                                                  const SuiteFilter& filter) {
  std::vector<const IdentityRecord*> out;
  for (const auto& r : records) {
    bool named = filter.ids.count(r.id) > 0;
    if (!filter.ids.empty() && !named) continue;
    if (!filter.tags.empty() &&
        std::none_of(r.tags.begin(), r.tags.end(), [&](const auto& t) { return filter.tags.count(t) > 0; }))
      continue;
    // naming a record explicitly is not enough to run it without its data
    if (r.requires_external_data && !filter.include_external) continue;
    out.push_back(&r);
  }
  return out;
}

std::vector<VerificationReport> run_suite(const std::vector<IdentityRecord>& records, const SuiteFilter& filter,
                                          const std::optional<Rational>& order_override, unsigned jobs) {
  auto chosen = select_records(records, filter);
  std::vector<VerificationReport> out(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < chosen.size();) {
      const IdentityRecord& rec = *chosen[i];
      std::optional<Rational> order = order_override;
      if (order && rec.max_order && *order > *rec.max_order) order = Rational(static_cast<long>(*rec.max_order));
      try {
        out[i] = verify_identity(rec, order, 1);
      } catch (const std::exception& ex) {
        VerificationReport rep;
        rep.id = rec.id;
        rep.status = rec.status;
        rep.order = order ? *order : Rational(static_cast<long>(rec.default_order));
        rep.error = ex.what();
        out[i] = rep;
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(chosen.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::vector<VerificationReport> run_suite(const SuiteFilter& filter, const std::optional<Rational>& order_override,
                                          unsigned jobs) {
  return run_suite(load_registry(), filter, order_override, jobs);
}

bool suite_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const auto& r) { return r.equal || r.status == RecordStatus::Provisional; });
}

nlohmann::json report_to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::json j = {{"id", r.id},
                      {"status", to_string(r.status)},
                      {"order", rational_to_json(r.order)},
                      {"equal", r.equal},
                      {"first_mismatch", nullptr}};
  if (r.first_mismatch) j["first_mismatch"] = rational_to_json(*r.first_mismatch);
  if (!r.error.empty()) j["error"] = r.error;
  if (with_timing) j["wall_time"] = r.wall_time;
  return j;
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& rs, bool with_timing) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rs) j.push_back(report_to_json(r, with_timing));
  return j;
}

namespace {

nlohmann::json rationals_to_json(const std::vector<Rational>& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(rational_to_json(x));
  return j;
}

}  // namespace

nlohmann::json record_to_json(const IdentityRecord& rec) {
  nlohmann::json lhs = nlohmann::json::object();
  if (rec.lhs.pair) lhs["pair"] = {to_string(rec.lhs.pair->first), to_string(rec.lhs.pair->second)};
  if (rec.lhs.quadruple) lhs["quadruple"] = quadruple_to_json(*rec.lhs.quadruple);
  if (rec.lhs.b_override) lhs["B"] = rationals_to_json(*rec.lhs.b_override);
  if (rec.lhs.c_override) lhs["C"] = rational_to_json(*rec.lhs.c_override);
  if (rec.lhs.constraint) lhs["constraint"] = constraint_to_json(*rec.lhs.constraint);
  nlohmann::json j = {{"id", rec.id},
                      {"source", {{"tag", rec.source.tag}, {"anchor", rec.source.anchor}}},
                      {"lhs", lhs},
                      {"rhs", expr_to_json(rec.rhs)},
                      {"default_order", rec.default_order},
                      {"status", to_string(rec.status)},
                      {"tags", rec.tags}};
  if (rec.max_order) j["max_order"] = *rec.max_order;
  if (!rec.note.empty()) j["note"] = rec.note;
  if (rec.requires_external_data) j["requires_external_data"] = true;
  return j;
}

IdentityRecord record_from_json(const nlohmann::json& j) {
  try {
    IdentityRecord rec;
    rec.id = j.at("id").get<std::string>();
    rec.source.tag = j.at("source").at("tag").get<std::string>();
    rec.source.anchor = j.at("source").at("anchor").get<std::string>();
    const auto& lhs = j.at("lhs");
    if (lhs.contains("pair"))
      rec.lhs.pair = std::make_pair(parse_kind(lhs["pair"].at(0).get<std::string>()),
                                    parse_kind(lhs["pair"].at(1).get<std::string>()));
    if (lhs.contains("quadruple")) rec.lhs.quadruple = quadruple_from_json(lhs["quadruple"]);
    if (lhs.contains("B")) {
      std::vector<Rational> b;
      for (const auto& x : lhs["B"]) b.push_back(rational_from_json(x));
      rec.lhs.b_override = b;
    }
    if (lhs.contains("C")) rec.lhs.c_override = rational_from_json(lhs["C"]);
    if (lhs.contains("constraint")) rec.lhs.constraint = constraint_from_json(lhs["constraint"]);
    rec.rhs = expr_from_json(j.at("rhs"));
    rec.default_order = j.at("default_order").get<std::int64_t>();
    if (j.contains("max_order")) rec.max_order = j["max_order"].get<std::int64_t>();
    rec.status = parse_status(j.at("status").get<std::string>());
    rec.note = j.value("note", std::string());
    rec.requires_external_data = j.value("requires_external_data", false);
    rec.tags = j.value("tags", std::vector<std::string>{});
    return rec;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("bad record: ") + ex.what());
  }
}

nlohmann::json registry_to_json(const std::vector<IdentityRecord>& records) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : records) j.push_back(record_to_json(r));
  return {{"records", j}};
}

std::vector<IdentityRecord> registry_from_json(const nlohmann::json& j) {
  std::vector<IdentityRecord> out;
  try {
    for (const auto& r : j.at("records")) out.push_back(record_from_json(r));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("bad registry: ") + ex.what());
  }
  check_unique(out);
  return out;
}

}  // namespace nahm
