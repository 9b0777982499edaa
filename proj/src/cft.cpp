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

#include "nahm/cft.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "nahm/error.hpp"

namespace nahm {

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

void check_virasoro(std::int64_t p, std::int64_t pp) {
  if (p < 2 || pp < 2 || std::gcd(p, pp) != 1)
    throw Error(ErrorCode::InvalidLabel, "M(" + std::to_string(p) + "," + std::to_string(pp) + ") is not a minimal model");
}

void check_super(std::int64_t p, std::int64_t pp) {
  if (p < 2 || pp < 2 || (p - pp) % 2 != 0 || std::gcd((p > pp ? p - pp : pp - p) / 2, pp) != 1)
    throw Error(ErrorCode::InvalidLabel,
                "SM(" + std::to_string(p) + "," + std::to_string(pp) + ") is not a super minimal model");
}

void check_rs(std::int64_t p, std::int64_t pp, std::int64_t r, std::int64_t s) {
  if (r < 1 || r > pp - 1 || s < 1 || s > p - 1)
    throw Error(ErrorCode::InvalidLabel, "label (" + std::to_string(r) + "," + std::to_string(s) + ") out of range");
}

QSeries inverse_euler(const Rational& order) { return congruence_product(1, 1, {0}, -1, order); }

// Sum over k of q^E1(k) - q^E2(k) where E1, E2 are the squared exponents
// relative to the k = 0 leading term, divided by den. All relative exponents
// lie on (1/grain) Z and are >= 0.
QSeries theta_difference(std::int64_t p, std::int64_t pp, std::int64_t r, std::int64_t s, std::int64_t den,
                         const Rational& rel_order) {
  const BigInt a = BigInt(p * r) - BigInt(pp * s);
  const BigInt b = BigInt(p * r) + BigInt(pp * s);
  const BigInt two_ppp = BigInt(2 * p * pp);
  const Rational scale(BigInt(1), BigInt(den * p * pp));
  std::vector<std::pair<Rational, int>> terms;
  auto e_of = [&](const BigInt& k, const BigInt& c) {
    BigInt t = two_ppp * k + c;
    Rational e(t * t - a * a);
    e *= scale;
    return Rational(e);
  };
  for (long kk = 0;; ++kk) {
    bool any = false;
    for (long sgnk : {1L, -1L}) {
      if (kk == 0 && sgnk < 0) continue;
      BigInt k = kk * sgnk;
      Rational e1 = e_of(k, a), e2 = e_of(k, b);
      if (e1 < rel_order) { terms.emplace_back(e1, 1); any = true; }
      if (e2 < rel_order) { terms.emplace_back(e2, -1); any = true; }
    }
    if (!any && kk >= 2) break;
  }
  QSeries out = QSeries::zero(rel_order);
  // Collect on a dense grid.
  std::int64_t g = den64(rel_order);
  for (auto& t : terms) g = lcm64(g, den64(t.first));
  std::int64_t len = scale_to_grid(rel_order, g);
  if (len <= 0) return out;
  std::vector<BigInt> c(static_cast<std::size_t>(len));
  for (auto& t : terms) c[static_cast<std::size_t>(scale_to_grid(t.first, g))] += t.second;
  return QSeries(g, 0, std::move(c), len);
}

}  // namespace

const char* to_string(Sector s) { return s == Sector::NS ? "NS" : "R"; }

Sector parse_sector(const std::string& s) {
  if (s == "NS" || s == "ns") return Sector::NS;
  if (s == "R" || s == "r") return Sector::R;
  throw Error(ErrorCode::ParseError, "unknown sector '" + s + "'");
}

Rational virasoro_central_charge(std::int64_t p, std::int64_t pp) {
  check_virasoro(p, pp);
  return 1 - R(6 * (p - pp) * (p - pp), p * pp);
}

Rational super_virasoro_central_charge(std::int64_t p, std::int64_t pp) {
  check_super(p, pp);
  return R(3, 2) * (1 - R(2 * (p - pp) * (p - pp), p * pp));
}

std::vector<ModuleEntry> virasoro_modules(std::int64_t p, std::int64_t pp) {
  check_virasoro(p, pp);
  std::vector<ModuleEntry> out;
  for (std::int64_t r = 1; r < pp; ++r)
    for (std::int64_t s = 1; s < p; ++s) {
      if (std::make_pair(pp - r, p - s) < std::make_pair(r, s)) continue;
      out.push_back({r, s, R((p * r - pp * s) * (p * r - pp * s) - (p - pp) * (p - pp), 4 * p * pp)});
    }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.weight < y.weight; });
  return out;
}

std::vector<ModuleEntry> super_virasoro_modules(std::int64_t p, std::int64_t pp, Sector sector) {
  check_super(p, pp);
  std::vector<ModuleEntry> out;
  const int parity = sector == Sector::NS ? 0 : 1;
  for (std::int64_t r = 1; r < pp; ++r)
    for (std::int64_t s = 1; s < p; ++s) {
      if (((r - s) % 2 + 2) % 2 != parity) continue;
      if (std::make_pair(pp - r, p - s) < std::make_pair(r, s)) continue;
      Rational h = R((p * r - pp * s) * (p * r - pp * s) - (p - pp) * (p - pp), 8 * p * pp);
      if (sector == Sector::R) h += R(1, 16);
      out.push_back({r, s, h});
    }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.weight < y.weight; });
  return out;
}

Rational virasoro_min_weight(std::int64_t p, std::int64_t pp) { return virasoro_modules(p, pp).front().weight; }

Rational super_virasoro_min_weight(std::int64_t p, std::int64_t pp) {
  return std::min(super_virasoro_modules(p, pp, Sector::NS).front().weight,
                  super_virasoro_modules(p, pp, Sector::R).front().weight);
}

QSeries virasoro_character(std::int64_t p, std::int64_t pp, std::int64_t r, std::int64_t s, const Rational& order) {
  check_virasoro(p, pp);
  check_rs(p, pp, r, s);
  const Rational lead = R((p * r - pp * s) * (p * r - pp * s), 4 * p * pp) - R(1, 24);
  const Rational rel = order - lead;
  if (rel <= 0) return QSeries::zero(order);
  QSeries body = theta_difference(p, pp, r, s, 4, rel);
  return series_mul(body, inverse_euler(rel)).shifted(lead);
}

QSeries super_virasoro_character(std::int64_t p, std::int64_t pp, Sector sector, std::int64_t r, std::int64_t s,
                                 const Rational& order) {
  check_super(p, pp);
  check_rs(p, pp, r, s);
  const bool even = ((r - s) % 2 + 2) % 2 == 0;
  if (even != (sector == Sector::NS))
    throw Error(ErrorCode::SectorParityMismatch, "r - s parity does not match the sector");
  Rational lead = R((p * r - pp * s) * (p * r - pp * s), 8 * p * pp);
  if (sector == Sector::NS) lead -= R(1, 16);
  const Rational rel = order - lead;
  if (rel <= 0) return QSeries::zero(order);
  QSeries body = theta_difference(p, pp, r, s, 8, rel);
  QSeries pref = sector == Sector::NS ? plus_pochhammer(R(1, 2), 1, std::nullopt, rel)
                                      : plus_pochhammer(1, 1, std::nullopt, rel);
  return series_mul(series_mul(body, pref), inverse_euler(rel)).shifted(lead);
}

QSeries u1_character(std::int64_t K, std::int64_t m, const Rational& order) {
  if (K < 1 || m < 0 || m > K) throw Error(ErrorCode::InvalidLabel, "U(1) label out of range");
  const Rational lead = R(m * m, 4 * K) - R(1, 24);
  const Rational rel = order - lead;
  if (rel <= 0) return QSeries::zero(order);
  QSeries body = theta_series(K, m, 0, rel);
  return series_mul(body, inverse_euler(rel)).shifted(lead);
}

QSeries free_fermion_character(Sector sector, const Rational& order) {
  if (sector == Sector::NS) {
    const Rational lead = R(-1, 48);
    return plus_pochhammer(R(1, 2), 1, std::nullopt, order - lead).shifted(lead);
  }
  const Rational lead = R(1, 24);
  if (order <= lead) return QSeries::zero(order);
  return plus_pochhammer(1, 1, std::nullopt, order - lead).shifted(lead);
}

// ---------------------------------------------------------------- parafermions

Rational parafermion_central_charge(std::int64_t k) { return R(2 * (k - 1), k + 2); }

namespace {

void check_pf(std::int64_t k, std::int64_t l, std::int64_t m) {
  if (k < 1 || l < 0 || l > k || ((l - m) % 2 + 2) % 2 != 0)
    throw Error(ErrorCode::InvalidLabel, "parafermion label out of range");
}

// Reduce (l, m) to |m| <= l using (l, m) ~ (k - l, m -+ k) and m ~ -m.
std::pair<std::int64_t, std::int64_t> pf_reduce(std::int64_t k, std::int64_t l, std::int64_t m) {
  m = ((m % (2 * k)) + 2 * k) % (2 * k);
  if (m > k) m -= 2 * k;
  if (m < 0) m = -m;
  if (m > l) {
    l = k - l;
    m = k - m;
  }
  return {l, m};
}

using Laurent = std::map<std::int64_t, BigInt>;

// Grade-by-grade quotient of the level-k Weyl-Kac numerator by the denominator,
// as Laurent polynomials in the sl2 weight variable. The weights at grade g are
// bounded by l + 2 sqrt(k g) + 2, far inside the window |w| <= k * grades used
// for the numerator terms.
std::vector<Laurent> affine_weight_multiplicities(std::int64_t k, std::int64_t l, std::int64_t grades) {
  std::vector<Laurent> num(static_cast<std::size_t>(grades)), den(static_cast<std::size_t>(grades));
  for (std::int64_t j = -grades - 2; j <= grades + 2; ++j) {
    std::int64_t e = (k + 2) * j * j + (l + 1) * j;
    if (e >= 0 && e < grades) num[e][2 * (k + 2) * j + l + 1] += 1;
    e = (k + 2) * j * j - (l + 1) * j;
    if (e >= 0 && e < grades) num[e][2 * (k + 2) * j - l - 1] -= 1;
    e = 2 * j * j + j;
    if (e >= 0 && e < grades) den[e][4 * j + 1] += 1;
    e = 2 * j * j - j;
    if (e >= 0 && e < grades) den[e][4 * j - 1] -= 1;
  }
  std::vector<Laurent> x;
  for (std::int64_t g = 0; g < grades; ++g) {
    Laurent p = num[g];
    for (std::int64_t j = 1; j <= g; ++j) {
      for (const auto& [a, va] : den[j])
        for (const auto& [b, vb] : x[g - j]) p[a + b] -= va * vb;
    }
    for (auto it = p.begin(); it != p.end();) it = sgn(it->second) == 0 ? p.erase(it) : std::next(it);
    // Divide by (w - 1/w) from the top weight down.
    Laurent y;
    std::int64_t guard = 0;
    while (!p.empty()) {
      auto top = std::prev(p.end());
      std::int64_t t = top->first;
      BigInt v = top->second;
      p.erase(top);
      y[t - 1] = v;
      BigInt& below = p[t - 2];
      below += v;
      if (sgn(below) == 0) p.erase(t - 2);
      if (++guard > 1000000) throw Error(ErrorCode::InvalidArgument, "parafermion division did not terminate");
    }
    x.push_back(std::move(y));
  }
  return x;
}

}  // namespace

Rational parafermion_weight(std::int64_t k, std::int64_t l, std::int64_t m) {
  check_pf(k, l, m);
  auto [ll, mm] = pf_reduce(k, l, m);
  return R(ll * (ll + 2), 4 * (k + 2)) - R(mm * mm, 4 * k);
}

std::vector<ParafermionEntry> parafermion_modules(std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidLabel, "parafermion level must be positive");
  std::vector<ParafermionEntry> out;
  for (std::int64_t l = 0; l <= k; ++l)
    for (std::int64_t m = 0; m <= l; m += 1) {
      if ((l - m) % 2) continue;
      Rational w = parafermion_weight(k, l, m);
      bool seen = false;
      for (const auto& e : out) seen = seen || e.weight == w;
      if (!seen) out.push_back({l, m, w});
    }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; });
  return out;
}

QSeries parafermion_character(std::int64_t k, std::int64_t l, std::int64_t m, const Rational& order) {
  check_pf(k, l, m);
  auto [ll, mm] = pf_reduce(k, l, m);
  const Rational base = R(ll * (ll + 2), 4 * (k + 2)) - R(3 * k, 24 * (k + 2)) + R(1, 24) - R(mm * mm, 4 * k);
  const Rational rel = order - base;
  if (rel <= 0) return QSeries::zero(order);
  const std::int64_t grades = to_int64(ceil_rational(rel));
  auto x = affine_weight_multiplicities(k, ll, grades);
  std::vector<BigInt> c(static_cast<std::size_t>(grades));
  for (std::int64_t g = 0; g < grades; ++g) {
    auto it = x[g].find(mm);
    if (it != x[g].end()) c[g] = it->second;
  }
  QSeries body(1, 0, std::move(c), grades);
  return series_mul(body, pochhammer(1, 1, std::nullopt, grades)).truncated(rel).shifted(base);
}

// ---------------------------------------------------------------- composites

const char* to_string(CompositeName n) { return n == CompositeName::MSub65 ? "msub65" : "d2a"; }

CompositeName parse_composite(const std::string& s) {
  if (s == "msub65") return CompositeName::MSub65;
  if (s == "d2a") return CompositeName::D2A;
  throw Error(ErrorCode::ParseError, "unknown composite '" + s + "'");
}

std::vector<Rational> composite_weights(CompositeName n) {
  if (n == CompositeName::MSub65) return {R(0), R(2, 5), R(2, 3), R(1, 15)};
  return {R(0), R(1, 2), R(1, 10), R(3, 5)};
}

namespace {

ModuleEntry module_by_weight(const std::vector<ModuleEntry>& mods, const Rational& w) {
  for (const auto& m : mods)
    if (m.weight == w) return m;
  throw Error(ErrorCode::InvalidLabel, "no module of weight " + to_string(w));
}

QSeries vir_weight(std::int64_t p, std::int64_t pp, const Rational& w, const Rational& order) {
  const ModuleEntry m = module_by_weight(virasoro_modules(p, pp), w);
  return virasoro_character(p, pp, m.r, m.s, order);
}

}  // namespace

QSeries composite_character(CompositeName name, const Rational& weight, const Rational& order) {
  auto ws = composite_weights(name);
  if (std::find(ws.begin(), ws.end(), weight) == ws.end())
    throw Error(ErrorCode::InvalidLabel, std::string(to_string(name)) + " has no weight " + to_string(weight));
  if (name == CompositeName::MSub65) {
    auto v = [&](const Rational& w) { return vir_weight(6, 5, w, order); };
    if (weight == 0) return v(0) + v(3);
    if (weight == R(2, 5)) return v(R(2, 5)) + v(R(7, 5));
    return v(weight);
  }
  // Ising x tricritical Ising extended by the weight-2 current.
  auto pair = [&](const Rational& hi, const Rational& ht) {
    return product_to_order({[hi](const Rational& o) { return vir_weight(4, 3, hi, o); },
                             [ht](const Rational& o) { return vir_weight(5, 4, ht, o); }},
                            order);
  };
  const Rational half = R(1, 2);
  if (weight == 0) return pair(0, 0) + pair(half, R(3, 2));
  if (weight == half) return pair(half, 0) + pair(0, R(3, 2));
  if (weight == R(1, 10)) return pair(0, R(1, 10)) + pair(half, R(3, 5));
  return pair(0, R(3, 5)) + pair(half, R(1, 10));
}

// ---------------------------------------------------------------- effective models

EffectiveCharacter effective_character(MinimalFamily family, std::int64_t p, std::int64_t pp, Sector sector,
                                       std::int64_t j, const Rational& order) {
  std::vector<ModuleEntry> mods;
  Rational hmin;
  if (family == MinimalFamily::Virasoro) {
    mods = virasoro_modules(p, pp);
    hmin = mods.front().weight;
  } else {
    mods = super_virasoro_modules(p, pp, sector);
    hmin = super_virasoro_min_weight(p, pp);
  }
  if (j < 1 || j > static_cast<std::int64_t>(mods.size()))
    throw Error(ErrorCode::IndexOutOfRange, "effective index " + std::to_string(j) + " out of range");
  const auto& m = mods[static_cast<std::size_t>(j - 1)];
  EffectiveCharacter out;
  out.series = family == MinimalFamily::Virasoro ? virasoro_character(p, pp, m.r, m.s, order)
                                                 : super_virasoro_character(p, pp, sector, m.r, m.s, order);
  out.effective_weight = m.weight - hmin;
  out.r = m.r;
  out.s = m.s;
  return out;
}

// ---------------------------------------------------------------- specs

CharacterSpec vir_char(std::int64_t p, std::int64_t pp, const Rational& weight) {
  return {"virasoro", {p, pp}, std::nullopt, "weight", {}, weight, {}};
}
CharacterSpec vir_eff_char(std::int64_t p, std::int64_t pp, const Rational& eff_weight) {
  return {"virasoro", {p, pp}, std::nullopt, "eff_weight", {}, eff_weight, {}};
}
CharacterSpec svir_char(std::int64_t p, std::int64_t pp, Sector sector, const Rational& weight) {
  return {"super_virasoro", {p, pp}, sector, "weight", {}, weight, {}};
}
CharacterSpec svir_eff_char(std::int64_t p, std::int64_t pp, Sector sector, const Rational& eff_weight) {
  return {"super_virasoro", {p, pp}, sector, "eff_weight", {}, eff_weight, {}};
}
CharacterSpec u1_char(std::int64_t K, const Rational& weight) { return {"u1", {K}, std::nullopt, "weight", {}, weight, {}}; }
CharacterSpec fermion_char(Sector sector) { return {"free_fermion", {}, sector, "weight", {}, sector == Sector::NS ? R(0) : R(1, 16), {}}; }
CharacterSpec pf_char(std::int64_t k, const Rational& weight) { return {"parafermion", {k}, std::nullopt, "weight", {}, weight, {}}; }
CharacterSpec composite_char(CompositeName name, const Rational& weight) {
  return {to_string(name), {}, std::nullopt, "weight", {}, weight, {}};
}
CharacterSpec tensor_char(std::vector<CharacterSpec> factors) {
  return {"tensor", {}, std::nullopt, "", {}, 0, std::move(factors)};
}

namespace {

struct Resolved {
  std::int64_t r = 0, s = 0;  // minimal models
  Rational weight;
};

void need_params(const CharacterSpec& spec, std::size_t n) {
  if (spec.params.size() != n) throw Error(ErrorCode::InvalidLabel, spec.family + " expects " + std::to_string(n) + " parameters");
}

Resolved resolve_minimal(const CharacterSpec& spec) {
  need_params(spec, 2);
  const std::int64_t p = spec.params[0], pp = spec.params[1];
  const bool super = spec.family == "super_virasoro";
  if (super && !spec.sector) throw Error(ErrorCode::InvalidLabel, "super_virasoro needs a sector");
  const Sector sec = spec.sector.value_or(Sector::NS);
  std::vector<ModuleEntry> mods = super ? super_virasoro_modules(p, pp, sec) : virasoro_modules(p, pp);
  const Rational hmin = super ? super_virasoro_min_weight(p, pp) : mods.front().weight;
  if (spec.label_kind == "rs") {
    if (spec.label_ints.size() != 2) throw Error(ErrorCode::InvalidLabel, "rs label needs two integers");
    const std::int64_t r = spec.label_ints[0], s = spec.label_ints[1];
    check_rs(p, pp, r, s);
    Rational h;
    if (super) {
      const bool even = ((r - s) % 2 + 2) % 2 == 0;
      if (even != (sec == Sector::NS)) throw Error(ErrorCode::SectorParityMismatch, "r - s parity does not match the sector");
      h = R((p * r - pp * s) * (p * r - pp * s) - (p - pp) * (p - pp), 8 * p * pp) + (sec == Sector::R ? R(1, 16) : R(0));
    } else {
      h = R((p * r - pp * s) * (p * r - pp * s) - (p - pp) * (p - pp), 4 * p * pp);
    }
    return {r, s, h};
  }
  if (spec.label_kind == "eff_index") {
    if (spec.label_ints.size() != 1) throw Error(ErrorCode::InvalidLabel, "eff_index label needs one integer");
    const std::int64_t j = spec.label_ints[0];
    if (j < 1 || j > static_cast<std::int64_t>(mods.size())) throw Error(ErrorCode::IndexOutOfRange, "effective index out of range");
    const auto& m = mods[static_cast<std::size_t>(j - 1)];
    return {m.r, m.s, m.weight};
  }
  Rational w;
  if (spec.label_kind == "weight") w = spec.label_weight;
  else if (spec.label_kind == "eff_weight") w = spec.label_weight + hmin;
  else throw Error(ErrorCode::InvalidLabel, "unknown label kind '" + spec.label_kind + "'");
  const auto& m = module_by_weight(mods, w);
  return {m.r, m.s, m.weight};
}

std::int64_t resolve_u1(const CharacterSpec& spec) {
  need_params(spec, 1);
  const std::int64_t K = spec.params[0];
  if (K < 1) throw Error(ErrorCode::InvalidLabel, "U(1) level must be positive");
  if (spec.label_kind == "m") {
    if (spec.label_ints.size() != 1) throw Error(ErrorCode::InvalidLabel, "m label needs one integer");
    const std::int64_t m = spec.label_ints[0];
    if (m < 0 || m > K) throw Error(ErrorCode::InvalidLabel, "U(1) charge out of range");
    return m;
  }
  if (spec.label_kind != "weight") throw Error(ErrorCode::InvalidLabel, "unknown label kind for u1");
  for (std::int64_t m = 0; m <= K; ++m)
    if (R(m * m, 4 * K) == spec.label_weight) return m;
  throw Error(ErrorCode::InvalidLabel, "U(1)_" + std::to_string(K) + " has no weight " + to_string(spec.label_weight));
}

std::pair<std::int64_t, std::int64_t> resolve_pf(const CharacterSpec& spec) {
  need_params(spec, 1);
  const std::int64_t k = spec.params[0];
  if (spec.label_kind == "lm") {
    if (spec.label_ints.size() != 2) throw Error(ErrorCode::InvalidLabel, "lm label needs two integers");
    check_pf(k, spec.label_ints[0], spec.label_ints[1]);
    return pf_reduce(k, spec.label_ints[0], spec.label_ints[1]);
  }
  if (spec.label_kind != "weight") throw Error(ErrorCode::InvalidLabel, "unknown label kind for parafermion");
  for (const auto& e : parafermion_modules(k))
    if (e.weight == spec.label_weight) return {e.l, e.m};
  throw Error(ErrorCode::InvalidLabel, "parafermion has no weight " + to_string(spec.label_weight));
}

QSeries compute_character(const CharacterSpec& spec, const Rational& order) {
  const std::string& f = spec.family;
  if (f == "virasoro") {
    Resolved x = resolve_minimal(spec);
    return virasoro_character(spec.params[0], spec.params[1], x.r, x.s, order);
  }
  if (f == "super_virasoro") {
    Resolved x = resolve_minimal(spec);
    return super_virasoro_character(spec.params[0], spec.params[1], *spec.sector, x.r, x.s, order);
  }
  if (f == "u1") return u1_character(spec.params.at(0), resolve_u1(spec), order);
  if (f == "free_fermion") {
    if (!spec.sector) throw Error(ErrorCode::InvalidLabel, "free_fermion needs a sector");
    return free_fermion_character(*spec.sector, order);
  }
  if (f == "parafermion") {
    auto [l, m] = resolve_pf(spec);
    return parafermion_character(spec.params[0], l, m, order);
  }
  if (f == "msub65" || f == "d2a") return composite_character(parse_composite(f), spec.label_weight, order);
  if (f == "tensor") {
    std::vector<std::function<QSeries(const Rational&)>> fs;
    for (const auto& sub : spec.factors) fs.push_back([sub](const Rational& o) { return character(sub, o); });
    return product_to_order(fs, order);
  }
  throw Error(ErrorCode::InvalidLabel, "unknown character family '" + f + "'");
}

struct Memo {
  std::shared_mutex mu;
  std::map<std::string, QSeries> table;
};

Memo& memo() {
  static Memo m;
  return m;
}

}  // namespace

void validate_spec(const CharacterSpec& spec) {
  const std::string& f = spec.family;
  if (f == "virasoro" || f == "super_virasoro") resolve_minimal(spec);
  else if (f == "u1") resolve_u1(spec);
  else if (f == "free_fermion") {
    if (!spec.sector) throw Error(ErrorCode::InvalidLabel, "free_fermion needs a sector");
  } else if (f == "parafermion") resolve_pf(spec);
  else if (f == "msub65" || f == "d2a") {
    auto ws = composite_weights(parse_composite(f));
    if (std::find(ws.begin(), ws.end(), spec.label_weight) == ws.end())
      throw Error(ErrorCode::InvalidLabel, f + " has no weight " + to_string(spec.label_weight));
  } else if (f == "tensor") {
    if (spec.factors.empty()) throw Error(ErrorCode::InvalidLabel, "empty tensor product");
    for (const auto& s : spec.factors) validate_spec(s);
  } else {
    throw Error(ErrorCode::InvalidLabel, "unknown character family '" + f + "'");
  }
}

Rational spec_weight(const CharacterSpec& spec) {
  const std::string& f = spec.family;
  if (f == "virasoro" || f == "super_virasoro") return resolve_minimal(spec).weight;
  if (f == "u1") {
    std::int64_t m = resolve_u1(spec);
    return R(m * m, 4 * spec.params[0]);
  }
  if (f == "free_fermion") return spec.sector == Sector::R ? R(1, 16) : R(0);
  if (f == "parafermion") {
    auto [l, m] = resolve_pf(spec);
    return parafermion_weight(spec.params[0], l, m);
  }
  if (f == "tensor") {
    Rational w = 0;
    for (const auto& s : spec.factors) w += spec_weight(s);
    return w;
  }
  validate_spec(spec);
  return spec.label_weight;
}

QSeries character(const CharacterSpec& spec, const Rational& order) {
  const std::string key = spec_to_json(spec).dump();
  Memo& m = memo();
  {
    std::shared_lock lock(m.mu);
    auto it = m.table.find(key);
    if (it != m.table.end() && it->second.order_exponent() >= order) return it->second.truncated(order);
  }
  validate_spec(spec);
  QSeries s = compute_character(spec, order);
  {
    std::unique_lock lock(m.mu);
    auto it = m.table.find(key);
    if (it == m.table.end() || it->second.order_exponent() < s.order_exponent()) m.table[key] = s;
  }
  return s;
}

nlohmann::json spec_to_json(const CharacterSpec& spec) {
  nlohmann::json j;
  j["family"] = spec.family;
  if (!spec.params.empty()) j["params"] = spec.params;
  if (spec.sector) j["sector"] = to_string(*spec.sector);
  if (spec.family == "tensor") {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : spec.factors) fs.push_back(spec_to_json(f));
    j["factors"] = fs;
    return j;
  }
  nlohmann::json label;
  label["kind"] = spec.label_kind;
  if (!spec.label_ints.empty()) label["ints"] = spec.label_ints;
  if (spec.label_kind == "weight" || spec.label_kind == "eff_weight") label["weight"] = to_string(spec.label_weight);
  j["label"] = label;
  return j;
}

CharacterSpec spec_from_json(const nlohmann::json& j) {
  try {
    CharacterSpec s;
    s.family = j.at("family").get<std::string>();
    if (j.contains("params")) s.params = j.at("params").get<std::vector<std::int64_t>>();
    if (j.contains("sector")) s.sector = parse_sector(j.at("sector").get<std::string>());
    if (s.family == "tensor") {
      for (const auto& f : j.at("factors")) s.factors.push_back(spec_from_json(f));
      return s;
    }
    const auto& label = j.at("label");
    s.label_kind = label.at("kind").get<std::string>();
    if (label.contains("ints")) s.label_ints = label.at("ints").get<std::vector<std::int64_t>>();
    if (label.contains("weight")) s.label_weight = parse_rational(label.at("weight").get<std::string>());
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace nahm
