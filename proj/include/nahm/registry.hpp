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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nahm/dynkin.hpp"
#include "nahm/expr.hpp"
#include "nahm/quadruple.hpp"

namespace nahm {

/// proved: not labelled a conjecture where it comes from. conjectural: labelled
/// one, still checked to the truncation order. provisional: the data admits
/// more than one reading; failures do not count against a suite run.
enum class RecordStatus { Proved, Conjectural, Provisional };

const char* to_string(RecordStatus s);
RecordStatus parse_status(const std::string& s);

struct RecordSource {
  std::string tag;     // identity family
  std::string anchor;  // unique human-readable handle within the family
  bool operator==(const RecordSource&) const = default;
};

struct LhsSpec {
  std::optional<std::pair<DiagramKind, DiagramKind>> pair;
  std::optional<NahmQuadruple> quadruple;
  std::optional<std::vector<Rational>> b_override;
  std::optional<Rational> c_override;
  std::optional<LatticeConstraint> constraint;
  bool operator==(const LhsSpec&) const = default;
};

struct IdentityRecord {
  std::string id;
  RecordSource source;
  LhsSpec lhs;
  Expr rhs;
  std::int64_t default_order = 40;
  std::optional<std::int64_t> max_order;  // set when the right side is a finite list
  RecordStatus status = RecordStatus::Proved;
  std::string note;
  bool requires_external_data = false;
  std::vector<std::string> tags;

  bool operator==(const IdentityRecord&) const = default;
};

struct VerificationReport {
  std::string id;
  RecordStatus status = RecordStatus::Proved;
  Rational order;
  bool equal = false;
  std::optional<Rational> first_mismatch;
  std::string error;  // set when the check itself threw; equal is then false
  double wall_time = 0;
};

/// The quadruple the left side expands: pair or explicit, then overrides.
NahmQuadruple resolve_lhs(const LhsSpec& lhs);

/// Throws on any violated record invariant.
void validate_record(const IdentityRecord& rec);

const std::vector<IdentityRecord>& load_registry();

const IdentityRecord& find_record(const std::string& id);

/// Order defaults to the record's default_order. Throws InvalidArgument for
/// records flagged as needing external data.
VerificationReport verify_identity(const IdentityRecord& rec, const std::optional<Rational>& order = std::nullopt,
                                   unsigned jobs = 1);

struct SuiteFilter {
  std::set<std::string> ids;   // empty: no id restriction
  std::set<std::string> tags;  // empty: no tag restriction; otherwise any tag matches
  bool include_external = false;
};

std::vector<const IdentityRecord*> select_records(const std::vector<IdentityRecord>& records,
                                                  const SuiteFilter& filter);

/// Order override is clamped to each record's max_order. Reports sorted by id.
std::vector<VerificationReport> run_suite(const SuiteFilter& filter, const std::optional<Rational>& order_override,
                                          unsigned jobs = 1);
std::vector<VerificationReport> run_suite(const std::vector<IdentityRecord>& records, const SuiteFilter& filter,
                                          const std::optional<Rational>& order_override, unsigned jobs = 1);

/// True iff every non-provisional report is equal.
bool suite_passed(const std::vector<VerificationReport>& reports);

nlohmann::json report_to_json(const VerificationReport& r, bool with_timing = true);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& rs, bool with_timing = true);

nlohmann::json record_to_json(const IdentityRecord& rec);
IdentityRecord record_from_json(const nlohmann::json& j);

nlohmann::json registry_to_json(const std::vector<IdentityRecord>& records);
std::vector<IdentityRecord> registry_from_json(const nlohmann::json& j);

/// Built-in record table; defined separately from the runner.
std::vector<IdentityRecord> builtin_records();

}  // namespace nahm
