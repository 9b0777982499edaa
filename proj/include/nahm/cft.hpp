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
#include "nahm/qseries.hpp"

namespace nahm {

enum class Sector { NS, R };

const char* to_string(Sector s);
Sector parse_sector(const std::string& s);

/// One irreducible module of a minimal model, identified labels removed.
struct ModuleEntry {
  std::int64_t r = 0, s = 0;
  Rational weight;
};

Rational virasoro_central_charge(std::int64_t p, std::int64_t pp);
Rational super_virasoro_central_charge(std::int64_t p, std::int64_t pp);

/// Distinct modules sorted by ascending weight.
std::vector<ModuleEntry> virasoro_modules(std::int64_t p, std::int64_t pp);
std::vector<ModuleEntry> super_virasoro_modules(std::int64_t p, std::int64_t pp, Sector sector);

/// Smallest weight over all modules (both sectors for the super case).
Rational virasoro_min_weight(std::int64_t p, std::int64_t pp);
Rational super_virasoro_min_weight(std::int64_t p, std::int64_t pp);

QSeries virasoro_character(std::int64_t p, std::int64_t pp, std::int64_t r, std::int64_t s, const Rational& order);
QSeries super_virasoro_character(std::int64_t p, std::int64_t pp, Sector sector, std::int64_t r, std::int64_t s,
                                 const Rational& order);
/// Weight m^2 / (4K), 0 <= m <= K.
QSeries u1_character(std::int64_t K, std::int64_t m, const Rational& order);
QSeries free_fermion_character(Sector sector, const Rational& order);

struct ParafermionEntry {
  std::int64_t l = 0, m = 0;
  Rational weight;
};

Rational parafermion_central_charge(std::int64_t k);
Rational parafermion_weight(std::int64_t k, std::int64_t l, std::int64_t m);
/// One representative label per distinct weight, ascending.
std::vector<ParafermionEntry> parafermion_modules(std::int64_t k);
QSeries parafermion_character(std::int64_t k, std::int64_t l, std::int64_t m, const Rational& order);

enum class CompositeName { MSub65, D2A };
const char* to_string(CompositeName n);
CompositeName parse_composite(const std::string& s);
std::vector<Rational> composite_weights(CompositeName n);
QSeries composite_character(CompositeName name, const Rational& weight, const Rational& order);

enum class MinimalFamily { Virasoro, Super };

struct EffectiveCharacter {
  QSeries series;
  Rational effective_weight;  // weight minus the model's minimal weight
  std::int64_t r = 0, s = 0;
};

/// j-th character (1-based, ascending weight) of the effective model.
EffectiveCharacter effective_character(MinimalFamily family, std::int64_t p, std::int64_t pp, Sector sector,
                                       std::int64_t j, const Rational& order);

/// Symbolic reference to a character. Label kinds:
///   "rs"         ints = {r, s}            virasoro, super_virasoro
///   "weight"     weight = conformal weight  all families except tensor
///   "eff_weight" weight = h - h_min       virasoro, super_virasoro
///   "eff_index"  ints = {j}               virasoro, super_virasoro
///   "m"          ints = {m}               u1
///   "lm"         ints = {l, m}            parafermion
struct CharacterSpec {
  std::string family;  // virasoro, super_virasoro, u1, free_fermion, parafermion, msub65, d2a, tensor
  std::vector<std::int64_t> params;
  std::optional<Sector> sector;
  std::string label_kind;
  std::vector<std::int64_t> label_ints;
  Rational label_weight;
  std::vector<CharacterSpec> factors;

  bool operator==(const CharacterSpec& other) const = default;
};

CharacterSpec vir_char(std::int64_t p, std::int64_t pp, const Rational& weight);
CharacterSpec vir_eff_char(std::int64_t p, std::int64_t pp, const Rational& eff_weight);
CharacterSpec svir_char(std::int64_t p, std::int64_t pp, Sector sector, const Rational& weight);
CharacterSpec svir_eff_char(std::int64_t p, std::int64_t pp, Sector sector, const Rational& eff_weight);
CharacterSpec u1_char(std::int64_t K, const Rational& weight);
CharacterSpec fermion_char(Sector sector);
CharacterSpec pf_char(std::int64_t k, const Rational& weight);
CharacterSpec composite_char(CompositeName name, const Rational& weight);
CharacterSpec tensor_char(std::vector<CharacterSpec> factors);

/// Throws InvalidLabel, SectorParityMismatch, IndexOutOfRange as appropriate.
void validate_spec(const CharacterSpec& spec);

/// Conformal weight of the referenced module (sum over tensor factors).
Rational spec_weight(const CharacterSpec& spec);

/// Expansion of the referenced character; memoized, thread-safe.
QSeries character(const CharacterSpec& spec, const Rational& order);

nlohmann::json spec_to_json(const CharacterSpec& spec);
CharacterSpec spec_from_json(const nlohmann::json& j);

}  // namespace nahm
