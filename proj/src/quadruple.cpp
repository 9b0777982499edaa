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

#include "nahm/quadruple.hpp"

#include "nahm/error.hpp"

namespace nahm {

RationalMatrix NahmQuadruple::AD() const {
  RationalMatrix m = A;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= Rational(static_cast<long>(D[j]));
  return m;
}

void NahmQuadruple::validate() const {
  const std::size_t r = D.size();
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "empty quadruple");
  if (A.rows() != r || A.cols() != r || B.size() != r)
    throw Error(ErrorCode::InvalidArgument, "quadruple shape mismatch");
  for (auto d : D)
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "D entries must be positive integers");
  RationalMatrix ad = AD();
  if (!ad.is_symmetric()) throw Error(ErrorCode::NotPositiveDefinite, "A*D is not symmetric");
  if (!ad.is_positive_definite()) throw Error(ErrorCode::NotPositiveDefinite, "A*D is not positive-definite");
}

void LatticeConstraint::validate(std::size_t rank) const {
  if (weights.size() != rank) throw Error(ErrorCode::InvalidArgument, "constraint weight count differs from rank");
  if (modulus < 1) throw Error(ErrorCode::InvalidArgument, "constraint modulus must be positive");
  if (residue < 0 || residue >= modulus) throw Error(ErrorCode::InvalidArgument, "constraint residue out of range");
}

nlohmann::json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_array() && j.size() == 2) return make_rational(j[0].get<long>(), j[1].get<long>());
  throw Error(ErrorCode::ParseError, "expected a rational, got " + j.dump());
}

nlohmann::json quadruple_to_json(const NahmQuadruple& q) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < q.A.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < q.A.cols(); ++j) row.push_back(rational_to_json(q.A(i, j)));
    a.push_back(row);
  }
  nlohmann::json b = nlohmann::json::array();
  for (const auto& x : q.B) b.push_back(rational_to_json(x));
  nlohmann::json j;
  j["A"] = a;
  j["B"] = b;
  j["C"] = rational_to_json(q.C);
  j["D"] = q.D;
  return j;
}

NahmQuadruple quadruple_from_json(const nlohmann::json& j) {
  try {
    NahmQuadruple q;
    const auto& a = j.at("A");
    const std::size_t r = a.size();
    q.A = RationalMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i].size() != r) throw Error(ErrorCode::ParseError, "A must be square");
      for (std::size_t k = 0; k < r; ++k) q.A(i, k) = rational_from_json(a[i][k]);
    }
    if (j.contains("B")) {
      for (const auto& x : j.at("B")) q.B.push_back(rational_from_json(x));
    } else {
      q.B.assign(r, Rational(0));
    }
    q.C = j.contains("C") ? rational_from_json(j.at("C")) : Rational(0);
    if (j.contains("D")) q.D = j.at("D").get<std::vector<std::int64_t>>();
    else q.D.assign(r, 1);
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

nlohmann::json constraint_to_json(const LatticeConstraint& c) {
  nlohmann::json j;
  j["weights"] = c.weights;
  j["modulus"] = c.modulus;
  j["residue"] = c.residue;
  return j;
}

LatticeConstraint constraint_from_json(const nlohmann::json& j) {
  try {
    LatticeConstraint c;
    c.weights = j.at("weights").get<std::vector<std::int64_t>>();
    c.modulus = j.at("modulus").get<std::int64_t>();
    c.residue = j.at("residue").get<std::int64_t>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace nahm
