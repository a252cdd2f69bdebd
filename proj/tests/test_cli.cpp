#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "so7/atlas.hpp"
#include "so7/cli_app.hpp"
#include "so7/group.hpp"
#include "so7/signed_perm.hpp"

namespace fs = std::filesystem;
using so7::SignedPerm;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = so7::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path fresh_dir(const std::string& name) {
  fs::path p = fs::path("cli-test-tmp") / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

size_t count_lines(const std::string& s) {
  size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

// Split a generator/element dump into 7x7 integer matrices.
std::vector<SignedPerm> read_matrix_blocks(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::vector<SignedPerm> out;
  std::array<std::array<int, 7>, 7> m;
  int row = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      REQUIRE(row == 0);
      continue;
    }
    std::istringstream ls(line);
    for (int c = 0; c < 7; ++c) REQUIRE((ls >> m[row][c]));
    if (++row == 7) {
      out.push_back(SignedPerm::from_matrix(m));
      row = 0;
    }
  }
  REQUIRE(row == 0);
  return out;
}

}  // namespace

TEST_CASE("cli help and usage errors") {
  RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("so7-atlas") != std::string::npos);

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"report"}).code == 2);  // missing id
}

TEST_CASE("cli list") {
  RunResult text = run({"list"});
  CHECK(text.code == 0);
  CHECK(count_lines(text.out) == 24);
  CHECK(text.out.find("case2-z7\t56\tcase 2") != std::string::npos);

  RunResult json = run({"--json", "list"});
  CHECK(json.code == 0);
  auto arr = nlohmann::json::parse(json.out);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 24);
  CHECK(arr[0]["id"] == "case1-psl27");
  CHECK(arr[0]["order"] == 168);
}

TEST_CASE("cli report") {
  fs::path cache = fresh_dir("report");
  RunResult first =
      run({"--cache-dir", cache.string(), "report", "case2-z7"});
  REQUIRE(first.code == 0);
  auto j = nlohmann::json::parse(first.out);
  CHECK(j["id"] == "case2-z7");
  CHECK(j["order"] == 56);
  CHECK(j["case"] == 2);
  CHECK(j["split"] == "split");
  CHECK(j["irreducible"] == true);
  CHECK(j["transitive"] == true);
  CHECK(j["clifford"]["nfc"] == 7);
  CHECK(j["clifford"]["fc_paper"] == 1);
  CHECK(j["clifford"]["fc_orbit"] == 1);
  CHECK(j["clifford"]["direct_classes"] == 8);
  CHECK(j["table1"]["claimed_total"] == 8);
  CHECK(j["table1"]["match_nfc"] == true);
  CHECK(j["table1"]["match_fc"] == true);
  CHECK(j["table1"]["match_total"] == true);

  CHECK(fs::exists(cache / "case2-z7.group"));

  // Second run answers from the cache, byte for byte.
  RunResult second =
      run({"--cache-dir", cache.string(), "report", "case2-z7"});
  CHECK(second.code == 0);
  CHECK(second.out == first.out);

  RunResult text = run(
      {"--cache-dir", cache.string(), "--no-json", "report", "case2-z7"});
  CHECK(text.code == 0);
  CHECK(text.out.find("order 56") != std::string::npos);
  CHECK(text.out.find("matches") != std::string::npos);

  RunResult unknown =
      run({"--cache-dir", cache.string(), "report", "case9-wat"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("error") != std::string::npos);
}

TEST_CASE("cli export") {
  fs::path dir = fresh_dir("export");
  fs::path gens_path = dir / "gens.txt";
  RunResult r = run({"export", "case3-z7", gens_path.string()});
  REQUIRE(r.code == 0);
  std::vector<SignedPerm> gens = read_matrix_blocks(gens_path);
  REQUIRE(gens.size() == 7);
  for (size_t k = 0; k < 6; ++k) CHECK(gens[k].is_diagonal());
  CHECK(gens[6] == so7::alpha());

  fs::path all_path = dir / "all.txt";
  RunResult full =
      run({"export", "case3-z7", all_path.string(), "--elements"});
  REQUIRE(full.code == 0);
  std::vector<SignedPerm> blocks = read_matrix_blocks(all_path);
  REQUIRE(blocks.size() == 7 + 448);
  std::vector<SignedPerm> elems(blocks.begin() + 7, blocks.end());
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  CHECK(elems == so7::named_group("case3-z7").elements());
}

TEST_CASE("cli split-check") {
  fs::path cache = fresh_dir("split");
  RunResult split =
      run({"--cache-dir", cache.string(), "split-check", "case3-z7"});
  REQUIRE(split.code == 0);
  auto j = nlohmann::json::parse(split.out);
  CHECK(j["split"] == "split");
  REQUIRE(j.contains("complement_generators"));
  CHECK(!j["complement_generators"].empty());

  RunResult nonsplit = run(
      {"--cache-dir", cache.string(), "split-check", "case2-psl32-nonsplit"});
  REQUIRE(nonsplit.code == 0);
  auto jn = nlohmann::json::parse(nonsplit.out);
  CHECK(jn["split"] == "nonsplit");
  CHECK(!jn.contains("complement_generators"));

  RunResult na =
      run({"--cache-dir", cache.string(), "split-check", "case1-psl27"});
  REQUIRE(na.code == 0);
  CHECK(nlohmann::json::parse(na.out)["split"] == "not-applicable");
}

TEST_CASE("cli rejects corrupted caches") {
  fs::path cache = fresh_dir("corrupt-header");
  REQUIRE(run({"--cache-dir", cache.string(), "report", "case2-z7"}).code ==
          0);
  {
    std::ofstream f(cache / "case2-z7.group", std::ios::trunc);
    f << "not a cache\n";
  }
  RunResult bad = run({"--cache-dir", cache.string(), "report", "case2-z7"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("cache file") != std::string::npos);

  fs::path cache2 = fresh_dir("corrupt-body");
  REQUIRE(run({"--cache-dir", cache2.string(), "report", "case2-z7"}).code ==
          0);
  fs::path file = cache2 / "case2-z7.group";
  std::vector<std::string> lines;
  {
    std::ifstream in(file);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  REQUIRE(lines.size() == 58);  // header + 56 elements + order line
  lines[2] = lines[1];          // duplicate breaks sortedness
  {
    std::ofstream outf(file, std::ios::trunc);
    for (const std::string& l : lines) outf << l << '\n';
  }
  RunResult tampered =
      run({"--cache-dir", cache2.string(), "report", "case2-z7"});
  CHECK(tampered.code == 2);
  CHECK(tampered.err.find("cache file") != std::string::npos);
}
