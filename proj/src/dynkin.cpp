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

#include "nahm/dynkin.hpp"

#include <cctype>

#include "nahm/error.hpp"

namespace nahm {

namespace {

const char kFamilyLetters[] = "ABCDEFGT";

IntMatrix chain(int r) {
  IntMatrix m(static_cast<std::size_t>(r), std::vector<std::int64_t>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i) {
    m[i][i] = 2;
    if (i + 1 < r) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return m;
}

void check_rank(const DiagramKind& k) {
  const int r = k.rank;
  bool ok = false;
  switch (k.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 3; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
    case Family::T: ok = r >= 1; break;
  }
  if (!ok) throw Error(ErrorCode::InvalidRank, "no diagram " + to_string(k));
}

}  // namespace

DiagramKind parse_kind(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '_') s.push_back(ch);
  if (s.size() < 2) throw Error(ErrorCode::ParseError, "bad diagram name '" + std::string(text) + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  const char* pos = std::char_traits<char>::find(kFamilyLetters, 8, f);
  if (!pos) throw Error(ErrorCode::ParseError, "unknown family in '" + std::string(text) + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])) || rank > 1000)
      throw Error(ErrorCode::ParseError, "bad rank in '" + std::string(text) + "'");
    rank = rank * 10 + (s[i] - '0');
  }
  return {static_cast<Family>(pos - kFamilyLetters), rank};
}

std::string to_string(const DiagramKind& kind) {
  return std::string(1, kFamilyLetters[static_cast<int>(kind.family)]) + std::to_string(kind.rank);
}

CartanData cartan_data(const DiagramKind& requested) {
  check_rank(requested);
  CartanData out;
  out.requested = requested;
  out.kind = requested;
  if (requested.family == Family::B && requested.rank == 2) out.kind = {Family::C, 2};
  if (requested.family == Family::D && requested.rank == 3) out.kind = {Family::A, 3};
  out.aliased = out.kind != requested;
  const int r = out.kind.rank;
  out.dvec.assign(static_cast<std::size_t>(r), 1);
  switch (out.kind.family) {
    case Family::A:
      out.cartan = chain(r);
      out.coxeter = r + 1;
      break;
    case Family::B:
      out.cartan = chain(r);
      out.cartan[r - 2][r - 1] = -2;
      for (int i = 0; i + 1 < r; ++i) out.dvec[i] = 2;
      out.coxeter = 2 * r;
      break;
    case Family::C:
      out.cartan = chain(r);
      out.cartan[r - 1][r - 2] = -2;
      out.dvec[r - 1] = 2;
      out.coxeter = 2 * r;
      break;
    case Family::D:
      out.cartan = chain(r);
      out.cartan[r - 2][r - 1] = out.cartan[r - 1][r - 2] = 0;
      out.cartan[r - 3][r - 1] = out.cartan[r - 1][r - 3] = -1;
      out.coxeter = 2 * r - 2;
      break;
    case Family::E: {
      out.cartan.assign(static_cast<std::size_t>(r), std::vector<std::int64_t>(static_cast<std::size_t>(r), 0));
      for (int i = 0; i < r; ++i) out.cartan[i][i] = 2;
      std::vector<std::pair<int, int>> edges = {{0, 2}, {1, 3}, {2, 3}};
      for (int k = 3; k + 1 < r; ++k) edges.emplace_back(k, k + 1);
      for (auto [a, b] : edges) out.cartan[a][b] = out.cartan[b][a] = -1;
      out.coxeter = r == 6 ? 12 : (r == 7 ? 18 : 30);
      break;
    }
    case Family::F:
      out.cartan = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
      out.dvec = {2, 2, 1, 1};
      out.coxeter = 12;
      break;
    case Family::G:
      out.cartan = {{2, -1}, {-3, 2}};
      out.dvec = {1, 3};
      out.coxeter = 6;
      break;
    case Family::T:
      out.cartan = chain(r);
      out.cartan[r - 1][r - 1] = 1;
      out.coxeter = 2 * r + 1;
      break;
  }
  return out;
}

nlohmann::json cartan_to_json(const CartanData& data) {
  nlohmann::json out;
  out["kind"] = to_string(data.kind);
  out["cartan"] = data.cartan;
  out["dvec"] = data.dvec;
  out["coxeter"] = data.coxeter;
  if (data.aliased) out["alias_of"] = to_string(data.requested);
  return out;
}

Rational central_charge(const DiagramKind& x, const DiagramKind& y) {
  CartanData cx = cartan_data(x), cy = cartan_data(y);
  std::int64_t tx = 0, ty = 0;
  for (auto d : cx.dvec) tx += d;
  for (auto d : cy.dvec) ty += d;
  return make_rational(tx * ty * cx.coxeter, cx.coxeter + cy.coxeter);
}

NahmQuadruple build_quadruple(const DiagramKind& x, const DiagramKind& y) {
  CartanData cx = cartan_data(x), cy = cartan_data(y);
  NahmQuadruple q;
  q.A = kronecker(RationalMatrix::from_ints(cx.cartan), rational_inverse(RationalMatrix::from_ints(cy.cartan)));
  for (auto a : cx.dvec)
    for (auto b : cy.dvec) q.D.push_back(a * b);
  q.B.assign(q.D.size(), Rational(0));
  q.C = -central_charge(x, y) / 24;
  q.validate();
  return q;
}

NahmQuadruple dual_quadruple(const NahmQuadruple& q) {
  NahmQuadruple d;
  d.A = rational_inverse(q.A);
  d.B = d.A * q.B;
  d.D = q.D;
  RationalMatrix adinv = rational_inverse(q.AD());
  std::vector<Rational> w = adinv * q.B;
  Rational quad = 0;
  for (std::size_t i = 0; i < q.B.size(); ++i) quad += q.B[i] * w[i];
  Rational trd = 0;
  for (auto x : q.D) trd += Rational(static_cast<long>(x));
  d.C = quad / 2 - trd / 24 - q.C;
  return d;
}

}  // namespace nahm
