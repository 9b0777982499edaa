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


#include "nahm/expr.hpp"

#include <functional>

#include "nahm/error.hpp"
#include "nahm/nahm_sum.hpp"

namespace nahm {

namespace {

struct OpName {
  ExprOp op;
  const char* name;
};

constexpr OpName kOps[] = {{ExprOp::Sum, "sum"},     {ExprOp::Prod, "prod"},   {ExprOp::Char, "char"},
                           {ExprOp::CProd, "cprod"}, {ExprOp::Poch, "poch"},   {ExprOp::Theta, "theta"},
                           {ExprOp::Shift, "shift"}, {ExprOp::Nahm, "nahm"},   {ExprOp::Coeffs, "coeffs"}};

ExprOp parse_op(const std::string& s) {
  for (const auto& o : kOps)
    if (s == o.name) return o.op;
  throw Error(ErrorCode::ParseError, "unknown expression op '" + s + "'");
}

void check_power(int p) {
  if (p != 1 && p != -1) throw Error(ErrorCode::InvalidArgument, "power must be +1 or -1");
}

}  // namespace

const char* to_string(ExprOp op) {
  for (const auto& o : kOps)
    if (o.op == op) return o.name;
  return "?";
}

Expr e_sum(std::vector<std::pair<std::int64_t, Expr>> terms) {
  Expr e;
  e.op = ExprOp::Sum;
  for (auto& [w, t] : terms) {
    e.weights.push_back(w);
    e.children.push_back(std::move(t));
  }
  return e;
}

Expr e_prod(std::vector<Expr> factors) {
  Expr e;
  e.op = ExprOp::Prod;
  e.children = std::move(factors);
  return e;
}

Expr e_char(CharacterSpec spec) {
  Expr e;
  e.op = ExprOp::Char;
  e.spec = std::move(spec);
  return e;
}

Expr e_cprod(std::int64_t scale, std::int64_t modulus, std::vector<std::int64_t> residues, int power) {
  Expr e;
  e.op = ExprOp::CProd;
  e.scale = scale;
  e.modulus = modulus;
  e.residues = std::move(residues);
  e.power = power;
  return e;
}

Expr e_poch(const Rational& start, const Rational& step, bool plus, int power) {
  Expr e;
  e.op = ExprOp::Poch;
  e.start = start;
  e.step = step;
  e.plus = plus;
  e.power = power;
  return e;
}

Expr e_theta(const Rational& a, const Rational& b, const Rational& c, bool alternating) {
  Expr e;
  e.op = ExprOp::Theta;
  e.a = a;
  e.b = b;
  e.c = c;
  e.alternating = alternating;
  return e;
}

Expr e_shift(const Rational& by, Expr operand) {
  Expr e;
  e.op = ExprOp::Shift;
  e.by = by;
  e.children.push_back(std::move(operand));
  return e;
}

Expr e_nahm(NahmQuadruple q, std::optional<LatticeConstraint> constraint) {
  Expr e;
  e.op = ExprOp::Nahm;
  e.quadruple = std::move(q);
  e.constraint = std::move(constraint);
  return e;
}

Expr e_coeffs(const Rational& start, std::int64_t grain, std::vector<BigInt> values) {
  Expr e;
  e.op = ExprOp::Coeffs;
  e.start = start;
  e.grain = grain;
  e.values = std::move(values);
  return e;
}

void validate_expr(const Expr& e) {
  switch (e.op) {
    case ExprOp::Sum:
      if (e.weights.size() != e.children.size()) throw Error(ErrorCode::InvalidArgument, "sum weight count mismatch");
      for (const auto& c : e.children) validate_expr(c);
      return;
    case ExprOp::Prod:
      for (const auto& c : e.children) validate_expr(c);
      return;
    case ExprOp::Char:
      validate_spec(e.spec);
      return;
    case ExprOp::CProd:
      if (e.scale < 1 || e.modulus < 1 || e.residues.empty())
        throw Error(ErrorCode::InvalidArgument, "cprod needs positive scale, modulus and residues");
      for (auto r : e.residues)
        if (r < 0 || r >= e.modulus) throw Error(ErrorCode::InvalidArgument, "cprod residue out of range");
      check_power(e.power);
      return;
    case ExprOp::Poch:
      if (sgn(e.start) <= 0 || sgn(e.step) <= 0)
        throw Error(ErrorCode::DivergentProduct, "infinite product needs positive start and step");
      check_power(e.power);
      return;
    case ExprOp::Theta:
      if (sgn(e.a) <= 0) throw Error(ErrorCode::IndefiniteTheta, "quadratic coefficient must be positive");
      return;
    case ExprOp::Shift:
      if (e.children.size() != 1) throw Error(ErrorCode::InvalidArgument, "shift takes one operand");
      validate_expr(e.children[0]);
      return;
    case ExprOp::Nahm:
      e.quadruple.validate();
      if (e.constraint) e.constraint->validate(e.quadruple.rank());
      return;
    case ExprOp::Coeffs:
      if (e.grain < 1 || e.values.empty()) throw Error(ErrorCode::InvalidArgument, "coeffs needs values");
      scale_to_grid(e.start, e.grain);
      return;
  }
}

QSeries evaluate(const Expr& e, const Rational& order, unsigned jobs) {
  switch (e.op) {
    case ExprOp::Sum: {
      QSeries acc = QSeries::zero(order);
      for (std::size_t i = 0; i < e.children.size(); ++i)
        acc = acc + evaluate(e.children[i], order, jobs).scaled(BigInt(static_cast<long>(e.weights[i])));
      return acc.truncated(order);
    }
    case ExprOp::Prod: {
      std::vector<std::function<QSeries(const Rational&)>> fs;
      for (const auto& c : e.children) fs.push_back([&c, jobs](const Rational& o) { return evaluate(c, o, jobs); });
      return product_to_order(fs, order);
    }
    case ExprOp::Char:
      return character(e.spec, order);
    case ExprOp::CProd:
      return congruence_product(e.scale, e.modulus, e.residues, e.power, order);
    case ExprOp::Poch: {
      validate_expr(e);
      QSeries p = e.plus ? plus_pochhammer(e.start, e.step, std::nullopt, order)
                         : pochhammer(e.start, e.step, std::nullopt, order);
      return e.power > 0 ? p : series_inverse(p, order);
    }
    case ExprOp::Theta:
      return theta_series(e.a, e.b, e.c, order, e.alternating);
    case ExprOp::Shift:
      if (e.children.size() != 1) throw Error(ErrorCode::InvalidArgument, "shift takes one operand");
      return evaluate(e.children[0], order - e.by, jobs).shifted(e.by);
    case ExprOp::Nahm:
      return nahm_sum(e.quadruple, order, e.constraint, jobs);
    case ExprOp::Coeffs: {
      std::int64_t from = scale_to_grid(e.start, e.grain);
      std::int64_t to = from + static_cast<std::int64_t>(e.values.size());
      if (order > Rational(to, e.grain))
        throw Error(ErrorCode::InsufficientOrder,
                    "coefficient list is exact only below q^" + to_string(Rational(to, e.grain)));
      return QSeries(e.grain, from, e.values, to).truncated(order);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "bad expression op");
}

std::vector<CharacterSpec> referenced_characters(const Expr& e) {
  std::vector<CharacterSpec> out;
  if (e.op == ExprOp::Char) out.push_back(e.spec);
  for (const auto& c : e.children) {
    auto sub = referenced_characters(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

nlohmann::json expr_to_json(const Expr& e) {
  nlohmann::json j;
  j["op"] = to_string(e.op);
  switch (e.op) {
    case ExprOp::Sum:
      j["terms"] = nlohmann::json::array();
      for (std::size_t i = 0; i < e.children.size(); ++i)
        j["terms"].push_back({{"coeff", e.weights[i]}, {"expr", expr_to_json(e.children[i])}});
      break;
    case ExprOp::Prod:
      j["factors"] = nlohmann::json::array();
      for (const auto& c : e.children) j["factors"].push_back(expr_to_json(c));
      break;
    case ExprOp::Char:
      j["spec"] = spec_to_json(e.spec);
      break;
    case ExprOp::CProd:
      j["scale"] = e.scale;
      j["modulus"] = e.modulus;
      j["residues"] = e.residues;
      j["power"] = e.power;
      break;
    case ExprOp::Poch:
      j["start"] = rational_to_json(e.start);
      j["step"] = rational_to_json(e.step);
      j["sign"] = e.plus ? "plus" : "minus";
      j["power"] = e.power;
      break;
    case ExprOp::Theta:
      j["a"] = rational_to_json(e.a);
      j["b"] = rational_to_json(e.b);
      j["c"] = rational_to_json(e.c);
      j["alternating"] = e.alternating;
      break;
    case ExprOp::Shift:
      j["by"] = rational_to_json(e.by);
      j["expr"] = expr_to_json(e.children.at(0));
      break;
    case ExprOp::Nahm:
      j["quadruple"] = quadruple_to_json(e.quadruple);
      if (e.constraint) j["constraint"] = constraint_to_json(*e.constraint);
      break;
    case ExprOp::Coeffs:
      j["start"] = rational_to_json(e.start);
      j["grain"] = e.grain;
      j["values"] = nlohmann::json::array();
      for (const auto& v : e.values) j["values"].push_back(v.get_str());
      break;
  }
  return j;
}

Expr expr_from_json(const nlohmann::json& j) {
  try {
    Expr e;
    e.op = parse_op(j.at("op").get<std::string>());
    switch (e.op) {
      case ExprOp::Sum:
        for (const auto& t : j.at("terms")) {
          e.weights.push_back(t.at("coeff").get<std::int64_t>());
          e.children.push_back(expr_from_json(t.at("expr")));
        }
        break;
      case ExprOp::Prod:
        for (const auto& f : j.at("factors")) e.children.push_back(expr_from_json(f));
        break;
      case ExprOp::Char:
        e.spec = spec_from_json(j.at("spec"));
        break;
      case ExprOp::CProd:
        e.scale = j.value("scale", std::int64_t{1});
        e.modulus = j.at("modulus").get<std::int64_t>();
        e.residues = j.at("residues").get<std::vector<std::int64_t>>();
        e.power = j.value("power", -1);
        break;
      case ExprOp::Poch:
        e.start = rational_from_json(j.at("start"));
        e.step = rational_from_json(j.at("step"));
        e.plus = j.value("sign", std::string("minus")) == "plus";
        e.power = j.value("power", 1);
        break;
      case ExprOp::Theta:
        e.a = rational_from_json(j.at("a"));
        e.b = j.contains("b") ? rational_from_json(j["b"]) : Rational(0);
        e.c = j.contains("c") ? rational_from_json(j["c"]) : Rational(0);
        e.alternating = j.value("alternating", false);
        break;
      case ExprOp::Shift:
        e.by = rational_from_json(j.at("by"));
        e.children.push_back(expr_from_json(j.at("expr")));
        break;
      case ExprOp::Nahm:
        e.quadruple = quadruple_from_json(j.at("quadruple"));
        if (j.contains("constraint")) e.constraint = constraint_from_json(j["constraint"]);
        break;
      case ExprOp::Coeffs:
        e.start = j.contains("start") ? rational_from_json(j["start"]) : Rational(0);
        e.grain = j.value("grain", std::int64_t{1});
        for (const auto& v : j.at("values"))
          e.values.push_back(v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<long>()));
        break;
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, std::string("bad expression: ") + ex.what());
  }
}

}  // namespace nahm
