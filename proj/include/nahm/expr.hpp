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
#include <string>
#include <vector>

#include "json.hpp"
#include "nahm/cft.hpp"
#include "nahm/qseries.hpp"
#include "nahm/quadruple.hpp"

namespace nahm {

enum class ExprOp { Sum, Prod, Char, CProd, Poch, Theta, Shift, Nahm, Coeffs };

const char* to_string(ExprOp op);

/// Right-hand side of an identity. One flat node type; each op reads only
/// the fields it needs.
struct Expr {
  ExprOp op = ExprOp::Sum;

  // sum: integer weight per child. prod: factors. shift: single operand.
  std::vector<std::int64_t> weights;
  std::vector<Expr> children;

  CharacterSpec spec;

  // cprod: prod over n >= 1 with n mod modulus in residues of (1 - q^(n/scale))^power
  std::int64_t scale = 1;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues;
  int power = 1;

  // poch: prod over k >= 0 of (1 -+ q^(start + k*step))^power
  Rational start;
  Rational step;
  bool plus = false;

  // theta: sum over k of (+-1)^k q^(a k^2 + b k + c)
  Rational a, b, c;
  bool alternating = false;

  Rational by;  // shift

  NahmQuadruple quadruple;
  std::optional<LatticeConstraint> constraint;

  // coeffs: values[i] at exponent start + i/grain, exact below start + size/grain
  std::int64_t grain = 1;
  std::vector<BigInt> values;

  bool operator==(const Expr& other) const = default;
};

Expr e_sum(std::vector<std::pair<std::int64_t, Expr>> terms);
Expr e_prod(std::vector<Expr> factors);
Expr e_char(CharacterSpec spec);
Expr e_cprod(std::int64_t scale, std::int64_t modulus, std::vector<std::int64_t> residues, int power);
Expr e_poch(const Rational& start, const Rational& step, bool plus, int power);
Expr e_theta(const Rational& a, const Rational& b, const Rational& c, bool alternating = false);
Expr e_shift(const Rational& by, Expr operand);
Expr e_nahm(NahmQuadruple q, std::optional<LatticeConstraint> constraint = std::nullopt);
Expr e_coeffs(const Rational& start, std::int64_t grain, std::vector<BigInt> values);

/// Structural checks: arities, argument ranges, character labels.
void validate_expr(const Expr& e);

/// Exact to `order`; throws InsufficientOrder when a coefficient list runs out.
QSeries evaluate(const Expr& e, const Rational& order, unsigned jobs = 1);

/// Every character spec referenced anywhere below `e`.
std::vector<CharacterSpec> referenced_characters(const Expr& e);

nlohmann::json expr_to_json(const Expr& e);
Expr expr_from_json(const nlohmann::json& j);

}  // namespace nahm
