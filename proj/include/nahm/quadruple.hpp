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
#include <vector>

#include "json.hpp"
#include "nahm/matrix.hpp"

namespace nahm {

/// (A, B, C, D) data of a generalized Nahm sum; D is the positive diagonal.
struct NahmQuadruple {
  RationalMatrix A;
  std::vector<Rational> B;
  Rational C;
  std::vector<std::int64_t> D;

  std::size_t rank() const { return D.size(); }
  RationalMatrix AD() const;
  /// Throws InvalidArgument on shape errors, NotPositiveDefinite if AD is not
  /// symmetric positive-definite.
  void validate() const;

  bool operator==(const NahmQuadruple& other) const = default;
};

/// Restricts the summation to weights . n == residue (mod modulus).
struct LatticeConstraint {
  std::vector<std::int64_t> weights;
  std::int64_t modulus = 1;
  std::int64_t residue = 0;

  void validate(std::size_t rank) const;
  bool operator==(const LatticeConstraint& other) const = default;
};

/// Rationals are written as strings "p/q"; A as nested arrays.
nlohmann::json quadruple_to_json(const NahmQuadruple& q);
NahmQuadruple quadruple_from_json(const nlohmann::json& j);
nlohmann::json constraint_to_json(const LatticeConstraint& c);
LatticeConstraint constraint_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& x);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace nahm
