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
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nahm/matrix.hpp"
#include "nahm/quadruple.hpp"

namespace nahm {

enum class Family { A, B, C, D, E, F, G, T };

struct DiagramKind {
  Family family = Family::A;
  int rank = 1;

  auto operator<=>(const DiagramKind&) const = default;
};

/// Parses "E8", "T1", "C_3" (case-insensitive family letter).
DiagramKind parse_kind(std::string_view text);
std::string to_string(const DiagramKind& kind);

struct CartanData {
  DiagramKind kind;       // the kind actually returned
  DiagramKind requested;  // differs from kind when an alias was applied
  bool aliased = false;
  IntMatrix cartan;
  std::vector<std::int64_t> dvec;
  std::int64_t coxeter = 0;
};

/// B2 is returned as C2 and D3 as A3 with aliased set.
CartanData cartan_data(const DiagramKind& kind);

/// Canonical one-line JSON used by the catalog command and the golden file.
nlohmann::json cartan_to_json(const CartanData& data);

/// A = C(X) (x) C(Y)^-1, B = 0, C = -c(X,Y)/24, D = D(X) (x) D(Y).
NahmQuadruple build_quadruple(const DiagramKind& x, const DiagramKind& y);

/// tr(D(X) (x) D(Y)) h(X) / (h(X) + h(Y)).
Rational central_charge(const DiagramKind& x, const DiagramKind& y);

/// (A^-1, A^-1 B, B^t (AD)^-1 B / 2 - tr(D)/24 - C, D).
NahmQuadruple dual_quadruple(const NahmQuadruple& q);

}  // namespace nahm
