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


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = nahm::cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("nahm-cli-test-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::vector<fs::path> files() const {
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(path)) out.push_back(e.path());
    return out;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("expansion of a rank-8 sum") {
  auto r = run({"expand", "--pair", "E8,T1", "--order", "5", "--no-prefactor"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + 120*q + 1660*q^2 + 12320*q^3 + 68210*q^4 + O(q^5)\n");
  auto j = run({"expand", "--pair", "E8,T1", "--order", "5", "--no-prefactor", "--format", "json"});
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["series"]["coeffs"] == nlohmann::json::array({"1", "120", "1660", "12320", "68210"}));
  // jobs do not change the bytes
  CHECK(run({"expand", "--pair", "T1,E6", "--order", "15", "--jobs", "4"}).out ==
        run({"expand", "--pair", "T1,E6", "--order", "15", "--jobs", "1"}).out);
}

TEST_CASE("expansion of characters and constrained sums") {
  auto c = run({"expand", "--char", R"({"family":"virasoro","params":[5,2],"label":{"kind":"eff_weight","weight":"0"}})",
                "--order", "5"});
  INFO(c.err);
  CHECK(c.code == 0);
  CHECK(c.out.rfind("q^(-1/60)", 0) == 0);
  auto s = run({"expand", "--pair", "A1,D4", "--order", "6", "--constraint",
                R"({"weights":[0,0,1,1],"modulus":2,"residue":0})"});
  CHECK(s.code == 0);
  CHECK(run({"expand", "--pair", "A1,D4", "--char", "{}"}).code == 2);
}

TEST_CASE("verification") {
  auto r = run({"verify", "--id", "RR-G", "--order", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("RR-G") != std::string::npos);
  CHECK(r.out.find("equal") != std::string::npos);
  CHECK(r.out.find("1 checked, 0 failing") != std::string::npos);
  auto conj = run({"verify", "--tag", "conjectural", "--order", "30"});
  CHECK(conj.code == 0);
  CHECK(conj.out.find("conjecture-consistent") != std::string::npos);
  CHECK(conj.out.find(" proved ") == std::string::npos);
  auto j = run({"verify", "--id", "RR-H", "--order", "50", "--format", "json"});
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["passed"] == true);
  REQUIRE(parsed["reports"].size() == 1);
  CHECK(parsed["reports"][0]["equal"] == true);
  CHECK_FALSE(parsed["reports"][0].contains("wall_time"));
  CHECK(run({"verify", "--tag", "cft-character", "--order", "20", "--jobs", "1"}).out ==
        run({"verify", "--tag", "cft-character", "--order", "20", "--jobs", "5"}).out);
}

TEST_CASE("a failing import makes verify exit non-zero") {
  TempDir dir("verify");
  fs::path reg = dir.path / "reg.json";
  REQUIRE(run({"verify", "--export-registry", reg.string()}).code == 0);
  auto j = nlohmann::json::parse(slurp(reg));
  for (auto& rec : j["records"])
    if (rec["id"] == "T1E6") rec["rhs"]["factors"][1]["terms"][2]["coeff"] = 3;
  std::ofstream(dir.path / "bad.json") << j.dump();
  auto r = run({"verify", "--registry", (dir.path / "bad.json").string(), "--id", "T1E6", "--order", "20"});
  CHECK(r.code == 1);
  CHECK(r.out.find("MISMATCH") != std::string::npos);
  // the export reproduces itself through an import
  fs::path again = dir.path / "again.json";
  REQUIRE(run({"verify", "--registry", reg.string(), "--export-registry", again.string()}).code == 0);
  CHECK(slurp(reg) == slurp(again));
}

TEST_CASE("central charge and duality") {
  auto r = run({"ceff", "--pair", "T1,E8", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j[0]["formula"] == "8/11");
  CHECK(std::abs(j[0]["saddle"].get<double>() - 8.0 / 11) < 1e-6);
  CHECK(j[0]["diff"].get<double>() < 1e-6);
  auto all = nlohmann::json::parse(run({"ceff", "--all", "--format", "json"}).out);
  CHECK(all.size() > 100);
  for (const auto& row : all) CHECK(row["diff"].get<double>() < 1e-6);
  auto d = nlohmann::json::parse(run({"dual", "--pair", "A1,T1", "--format", "json"}).out);
  CHECK(d["A"] == nlohmann::json::array({nlohmann::json::array({"1/2"})}));
  CHECK(d["C"] == "-1/40");
}

TEST_CASE("exit codes") {
  auto unknown = run({"verify", "--id", "nope"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.rfind("UnknownRecord", 0) == 0);
  auto rank = run({"catalog", "E9"});
  CHECK(rank.code == 1);
  CHECK(rank.err.rfind("InvalidRank", 0) == 0);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"expand", "--pair", "A1,T1", "--order", "0"}).code == 2);
  CHECK(run({"expand", "--pair", "A1,T1", "--jobs", "0"}).code == 2);
  CHECK(run({"catalog", "--format", "yaml"}).code == 2);
  CHECK(run({"ceff"}).code == 2);
}

TEST_CASE("catalog output matches the golden transcription") {
  auto r = run({"catalog", "--format", "json"});
  CHECK(r.code == 0);
  auto golden = nlohmann::json::parse(slurp(NAHM_TEST_DATA "/cartan_golden.json"));
  CHECK(nlohmann::json::parse(r.out) == golden);
  for (const auto& g : golden)
    if (g["kind"] == "G2") CHECK(run({"catalog", "G2", "--format", "json"}).out == nlohmann::json::array({g}).dump(2) + "\n");
  auto text = run({"catalog", "B2"});
  CHECK(text.out.find("C2") != std::string::npos);
}

TEST_CASE("output files") {
  TempDir dir("out");
  fs::path p = dir.path / "series.txt";
  auto r = run({"expand", "--pair", "A1,T1", "--order", "10", "--output", p.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(p) == run({"expand", "--pair", "A1,T1", "--order", "10"}).out);
}

TEST_CASE("series cache") {
  TempDir dir("cache");
  std::vector<std::string> args{"expand", "--pair", "T1,E6", "--order", "12", "--format", "json",
                                "--cache-dir", dir.path.string()};
  auto fresh = run(args);
  REQUIRE(fresh.code == 0);
  auto files = dir.files();
  REQUIRE(files.size() == 1);
  auto hit = run(args);
  CHECK(hit.out == fresh.out);
  CHECK(run({"expand", "--pair", "T1,E6", "--order", "12", "--format", "json"}).out == fresh.out);

  // the entry is actually read: a doctored series shows through
  auto entry = nlohmann::json::parse(slurp(files[0]));
  entry["series"]["coeffs"][0] = "7";
  std::ofstream(files[0], std::ios::trunc) << entry.dump();
  CHECK(run(args).out != fresh.out);
  // an entry filed under the wrong key is ignored and replaced
  entry["key"]["order"] = "13";
  std::ofstream(files[0], std::ios::trunc) << entry.dump();
  CHECK(run(args).out == fresh.out);
  CHECK(run(args).out == fresh.out);

  // the environment supplies the directory when no flag is given
  TempDir env("env");
  ::setenv("NAHM_CACHE_DIR", env.path.string().c_str(), 1);
  CHECK(run({"expand", "--pair", "A1,T1", "--order", "30"}).code == 0);
  CHECK(env.files().size() == 1);
  CHECK(run({"expand", "--pair", "A1,T2", "--order", "30", "--cache-dir", dir.path.string()}).code == 0);
  CHECK(env.files().size() == 1);
  CHECK(dir.files().size() == 2);
  ::unsetenv("NAHM_CACHE_DIR");
}
