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


#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nahm/analysis.hpp"
#include "nahm/cft.hpp"
#include "nahm/dynkin.hpp"
#include "nahm/error.hpp"
#include "nahm/nahm_sum.hpp"
#include "nahm/registry.hpp"

namespace nahm::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* kCacheEnv = "NAHM_CACHE_DIR";

struct Options {
  std::vector<std::string> kinds;
  std::string pair;
  std::string quadruple_file;
  std::string char_json;
  std::string constraint_json;
  std::string b_text;
  std::string c_text;
  std::int64_t order = 0;
  bool no_prefactor = false;
  std::vector<std::string> ids;
  std::vector<std::string> tags;
  std::string registry_file;
  std::string export_file;
  bool include_external = false;
  bool timing = false;
  bool all = false;
  unsigned jobs = 1;
  std::string format = "text";
  std::string output;
  std::string cache_dir;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

std::pair<DiagramKind, DiagramKind> parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--pair expects X,Y");
  return {parse_kind(text.substr(0, comma)), parse_kind(text.substr(comma + 1))};
}

std::vector<Rational> parse_vector(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rational(item));
  return out;
}

NahmQuadruple quadruple_from_options(const Options& o) {
  if (o.pair.empty() == o.quadruple_file.empty()) throw UsageError("give exactly one of --pair or --quadruple");
  NahmQuadruple q;
  if (!o.pair.empty()) {
    auto [x, y] = parse_pair(o.pair);
    q = build_quadruple(x, y);
  } else {
    q = quadruple_from_json(parse_json(read_file(o.quadruple_file)));
  }
  if (!o.b_text.empty()) {
    q.B = parse_vector(o.b_text);
    if (q.B.size() != q.rank()) throw Error(ErrorCode::InvalidArgument, "--B has the wrong length");
  }
  if (!o.c_text.empty()) q.C = parse_rational(o.c_text);
  if (o.no_prefactor) q.C = 0;
  q.validate();
  return q;
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path), out_(fallback) {}
  std::ostream& stream() { return path_.empty() ? out_ : buf_; }
  void flush() {
    if (path_.empty()) return;
    std::ofstream f(path_, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path_);
    f << buf_.str();
  }

 private:
  std::string path_;
  std::ostream& out_;
  std::ostringstream buf_;
};

std::string cache_directory(const Options& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* env = std::getenv(kCacheEnv)) return env;
  return {};
}

/// Nahm sum, read from or written to the cache when a directory is configured.
QSeries cached_nahm_sum(const NahmQuadruple& q, const Rational& order, const std::optional<LatticeConstraint>& c,
                        const Options& o) {
  std::string dir = cache_directory(o);
  if (dir.empty()) return nahm_sum(q, order, c, o.jobs);
  nlohmann::json key = {{"quadruple", quadruple_to_json(q)}, {"order", rational_to_json(order)}};
  key["constraint"] = c ? constraint_to_json(*c) : nlohmann::json(nullptr);
  std::string key_text = key.dump();
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(content_hash(key_text)));
  std::filesystem::path path = std::filesystem::path(dir) / name;
  if (std::filesystem::exists(path)) {
    try {
      auto j = nlohmann::json::parse(read_file(path.string()));
      if (j.at("key").dump() == key_text) return series_from_json(j.at("series"));
    } catch (const std::exception&) {
      // unreadable entries are recomputed and overwritten
    }
  }
  QSeries s = nahm_sum(q, order, c, o.jobs);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    f << nlohmann::json({{"key", key}, {"series", series_to_json(s)}}).dump();
  }
  std::filesystem::rename(tmp, path, ec);
  return s;
}

std::string matrix_text(const RationalMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + to_string(m(i, j));
    s += "]\n";
  }
  return s;
}

std::string vector_text(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

std::vector<DiagramKind> standard_catalog() {
  std::vector<DiagramKind> out;
  for (int r = 1; r <= 8; ++r) out.push_back({Family::A, r});
  for (int r = 3; r <= 8; ++r) out.push_back({Family::B, r});
  for (int r = 2; r <= 8; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= 8; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= 8; ++r) out.push_back({Family::E, r});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  for (int r = 1; r <= 8; ++r) out.push_back({Family::T, r});
  return out;
}

void run_catalog(const Options& o, std::ostream& out) {
  std::vector<DiagramKind> kinds;
  for (const auto& k : o.kinds) kinds.push_back(parse_kind(k));
  if (kinds.empty()) kinds = standard_catalog();
  if (o.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& k : kinds) j.push_back(cartan_to_json(cartan_data(k)));
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& k : kinds) {
    CartanData d = cartan_data(k);
    out << to_string(d.requested);
    if (d.aliased) out << " (= " << to_string(d.kind) << ")";
    out << "  rank " << d.cartan.size() << "  coxeter " << d.coxeter << "  D = (";
    for (std::size_t i = 0; i < d.dvec.size(); ++i) out << (i ? ", " : "") << d.dvec[i];
    out << ")\n";
    for (const auto& row : d.cartan) {
      out << "  [";
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << row[j];
      out << "]\n";
    }
  }
}

void run_expand(const Options& o, std::ostream& out) {
  QSeries s;
  nlohmann::json meta;
  if (!o.char_json.empty()) {
    if (!o.pair.empty() || !o.quadruple_file.empty()) throw UsageError("--char excludes --pair and --quadruple");
    if (o.no_prefactor || !o.constraint_json.empty()) throw UsageError("--no-prefactor and --constraint apply to sums");
    std::string text = o.char_json[0] == '@' ? read_file(o.char_json.substr(1)) : o.char_json;
    CharacterSpec spec = spec_from_json(parse_json(text));
    validate_spec(spec);
    Rational order = o.order ? Rational(static_cast<long>(o.order)) : Rational(40);
    s = character(spec, order);
    meta["character"] = spec_to_json(spec);
  } else {
    NahmQuadruple q = quadruple_from_options(o);
    std::optional<LatticeConstraint> c;
    if (!o.constraint_json.empty()) {
      c = constraint_from_json(parse_json(o.constraint_json));
      c->validate(q.rank());
    }
    Rational order = o.order ? Rational(static_cast<long>(o.order)) : Rational(default_order(q.rank()));
    s = cached_nahm_sum(q, order, c, o);
    meta["quadruple"] = quadruple_to_json(q);
    if (c) meta["constraint"] = constraint_to_json(*c);
  }
  if (o.format == "json") {
    meta["series"] = series_to_json(s);
    out << meta.dump(2) << "\n";
  } else {
    out << format_series(s) << "\n";
  }
}

std::string verdict(const VerificationReport& r) {
  if (!r.error.empty()) return "ERROR " + r.error;
  if (!r.equal) return "MISMATCH at q^" + (r.first_mismatch ? to_string(*r.first_mismatch) : std::string("?"));
  return r.status == RecordStatus::Conjectural ? "conjecture-consistent" : "equal";
}

int run_verify(const Options& o, std::ostream& out) {
  std::vector<IdentityRecord> imported;
  const std::vector<IdentityRecord>* records = &load_registry();
  if (!o.registry_file.empty()) {
    imported = registry_from_json(parse_json(read_file(o.registry_file)));
    records = &imported;
  }
  if (!o.export_file.empty()) {
    std::ofstream f(o.export_file, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.export_file);
    f << registry_to_json(*records).dump(2) << "\n";
    return 0;
  }
  SuiteFilter filter;
  for (const auto& id : o.ids) {
    bool known = std::any_of(records->begin(), records->end(), [&](const auto& r) { return r.id == id; });
    if (!known) throw Error(ErrorCode::UnknownRecord, "no record '" + id + "'");
    filter.ids.insert(id);
  }
  filter.tags.insert(o.tags.begin(), o.tags.end());
  filter.include_external = o.include_external;
  std::optional<Rational> order;
  if (o.order) order = Rational(static_cast<long>(o.order));
  auto reports = run_suite(*records, filter, order, o.jobs);
  bool ok = suite_passed(reports);
  if (o.format == "json") {
    out << nlohmann::json({{"reports", reports_to_json(reports, o.timing)}, {"passed", ok}}).dump(2) << "\n";
  } else {
    std::size_t width = 4;
    for (const auto& r : reports) width = std::max(width, r.id.size());
    for (const auto& r : reports) {
      out << r.id << std::string(width + 2 - r.id.size(), ' ') << to_string(r.status) << "  order "
          << to_string(r.order) << "  " << verdict(r);
      if (o.timing) {
        char t[32];
        std::snprintf(t, sizeof t, "  %.3fs", r.wall_time);
        out << t;
      }
      out << "\n";
    }
    std::size_t bad = std::count_if(reports.begin(), reports.end(), [](const auto& r) {
      return !r.equal && r.status != RecordStatus::Provisional;
    });
    out << reports.size() << " checked, " << bad << " failing" << (ok ? "" : " -- FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

std::vector<DiagramKind> ceff_set() {
  std::vector<DiagramKind> s;
  for (const char* k : {"A1", "T1", "A2", "T2", "A3", "T3", "G2", "C2", "C3", "C4", "B3", "F4", "E6", "E7", "E8",
                        "D4", "D5"})
    s.push_back(parse_kind(k));
  return s;
}

std::string doubles_text(const std::vector<double>& v) {
  std::string s = "(";
  char buf[32];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.10f", i ? ", " : "", v[i]);
    s += buf;
  }
  return s + ")";
}

void run_ceff(const Options& o, std::ostream& out) {
  struct Item {
    std::string name;
    NahmQuadruple q;
    std::optional<Rational> formula;
  };
  std::vector<Item> items;
  if (o.all) {
    if (!o.pair.empty() || !o.quadruple_file.empty()) throw UsageError("--all excludes --pair and --quadruple");
    for (const auto& x : ceff_set())
      for (const auto& y : ceff_set())
        if (cartan_data(x).cartan.size() * cartan_data(y).cartan.size() <= 8)
          items.push_back({"(" + to_string(x) + "," + to_string(y) + ")", build_quadruple(x, y), central_charge(x, y)});
  } else if (!o.pair.empty() && o.quadruple_file.empty()) {
    auto [x, y] = parse_pair(o.pair);
    items.push_back({"(" + to_string(x) + "," + to_string(y) + ")", build_quadruple(x, y), central_charge(x, y)});
  } else if (o.pair.empty() && !o.quadruple_file.empty()) {
    NahmQuadruple q = quadruple_from_json(parse_json(read_file(o.quadruple_file)));
    q.validate();
    items.push_back({"quadruple", q, std::nullopt});
  } else {
    throw UsageError("ceff needs one of --pair, --quadruple or --all");
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& it : items) {
    // the saddle solves the equation of the transpose; see analysis
    NahmSolution sol = solve_nahm_equation(it.q.A.transpose());
    double saddle = saddle_central_charge(it.q.A, it.q.D);
    if (o.format == "json") {
      nlohmann::json row = {{"name", it.name}, {"x", sol.x}, {"saddle", saddle}};
      if (it.formula) {
        row["formula"] = to_string(*it.formula);
        row["diff"] = std::fabs(saddle - it.formula->get_d());
      }
      rows.push_back(row);
      continue;
    }
    char line[200];
    if (it.formula) {
      std::snprintf(line, sizeof line, "%-10s formula %-7s = %.10f  saddle %.10f  diff %.2e\n", it.name.c_str(),
                    to_string(*it.formula).c_str(), it.formula->get_d(), saddle, std::fabs(saddle - it.formula->get_d()));
    } else {
      std::snprintf(line, sizeof line, "%-10s saddle %.10f\n", it.name.c_str(), saddle);
    }
    out << line;
    if (items.size() == 1) out << "  x = " << doubles_text(sol.x) << "\n";
  }
  if (o.format == "json") out << rows.dump(2) << "\n";
}

void run_dual(const Options& o, std::ostream& out) {
  NahmQuadruple d = dual_quadruple(quadruple_from_options(o));
  if (o.format == "json") {
    out << quadruple_to_json(d).dump(2) << "\n";
    return;
  }
  out << "A =\n" << matrix_text(d.A) << "B = " << vector_text(d.B) << "\nC = " << to_string(d.C) << "\nD = (";
  for (std::size_t i = 0; i < d.D.size(); ++i) out << (i ? ", " : "") << d.D[i];
  out << ")\n";
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--output", o.output, "write to this file instead of stdout");
}

void add_lhs(CLI::App* sub, Options& o) {
  sub->add_option("--pair", o.pair, "diagram pair X,Y");
  sub->add_option("--quadruple", o.quadruple_file, "quadruple JSON file");
  sub->add_option("--B", o.b_text, "override the linear term, comma separated");
  sub->add_option("--C", o.c_text, "override the constant exponent");
}

}  // namespace

std::uint64_t content_hash(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Nahm sums of Dynkin pairs, characters and identity checks", "nahmctl"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "print Cartan data");
  catalog->add_option("kinds", o.kinds, "diagrams such as E8 or C3; default: ranks up to 8");
  add_common(catalog, o);

  auto* expand = app.add_subcommand("expand", "expand a Nahm sum or a character");
  add_lhs(expand, o);
  expand->add_option("--char", o.char_json, "character spec JSON, or @file");
  expand->add_option("--constraint", o.constraint_json, "lattice constraint JSON");
  expand->add_option("--order", o.order, "truncation order")->check(CLI::PositiveNumber);
  expand->add_flag("--no-prefactor", o.no_prefactor, "force the constant exponent to 0");
  expand->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  expand->add_option("--cache-dir", o.cache_dir, std::string("series cache; default from ") + kCacheEnv);
  add_common(expand, o);

  auto* verify = app.add_subcommand("verify", "check registry identities");
  verify->add_option("--id", o.ids, "record id (repeatable)");
  verify->add_option("--tag", o.tags, "record tag (repeatable)");
  verify->add_option("--order", o.order, "override every record's order")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", o.jobs, "records checked in parallel")->check(CLI::PositiveNumber);
  verify->add_option("--registry", o.registry_file, "use this registry file instead of the built-in one");
  verify->add_option("--export-registry", o.export_file, "write the registry as JSON and exit");
  verify->add_flag("--include-external", o.include_external, "also run records lacking complete data");
  verify->add_flag("--timing", o.timing, "include wall times");
  add_common(verify, o);

  auto* ceff = app.add_subcommand("ceff", "compare the saddle-point central charge with the formula");
  ceff->add_option("--pair", o.pair, "diagram pair X,Y");
  ceff->add_option("--quadruple", o.quadruple_file, "quadruple JSON file");
  ceff->add_flag("--all", o.all, "every pair from the standard set with rank at most 8");
  add_common(ceff, o);

  auto* dual = app.add_subcommand("dual", "print the dual quadruple");
  add_lhs(dual, o);
  dual->add_flag("--no-prefactor", o.no_prefactor, "force the constant exponent to 0 first");
  add_common(dual, o);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  try {
    Sink sink(o.output, out);
    int code = 0;
    if (*catalog) run_catalog(o, sink.stream());
    else if (*expand) run_expand(o, sink.stream());
    else if (*verify) code = run_verify(o, sink.stream());
    else if (*ceff) run_ceff(o, sink.stream());
    else if (*dual) run_dual(o, sink.stream());
    sink.flush();
    return code;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nahm::cli
