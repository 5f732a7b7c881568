#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "json.hpp"
#include "support.hpp"

using namespace rvdeg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

template <class F>
Run run(F&& f) {
  std::ostringstream out, err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("rvdeg_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::vector<nlohmann::json> lines(const std::string& s) {
  std::vector<nlohmann::json> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("table command", "[cli]") {
  Config cfg;
  auto r = run([&](auto& o, auto& e) { return cli::cmd_table("A5", cfg, o, e); });
  CHECK(r.code == 0);
  CHECK(r.out.find("degrees: 1 3 3 4 5") != std::string::npos);
  CHECK(r.out.find("5 rows, 5 real") != std::string::npos);

  r = run([&](auto& o, auto& e) { return cli::cmd_table("C4", cfg, o, e); });
  CHECK(r.out.find("4 rows, 2 real") != std::string::npos);

  const auto bad = scratch("badfile.grp");
  write(bad, "degree 3\n(1,4)\n");
  r = run([&](auto& o, auto& e) { return cli::cmd_table(bad.string(), cfg, o, e); });
  CHECK(r.code != 0);
  CHECK(r.err.find("line 2") != std::string::npos);

  cfg.order_cap = 50;
  r = run([&](auto& o, auto& e) { return cli::cmd_table("A5", cfg, o, e); });
  CHECK(r.code != 0);

  cfg = {};
  cfg.machine = true;
  r = run([&](auto& o, auto& e) { return cli::cmd_table("S3", cfg, o, e); });
  CHECK(lines(r.out).at(0)["degrees"] == nlohmann::json{1, 1, 2});
}

TEST_CASE("verify command", "[cli]") {
  Config cfg;
  cfg.machine = true;
  auto r = run([&](auto& o, auto& e) { return cli::cmd_verify("SL2x5circC4", cfg, o, e); });
  CHECK(r.code == 0);
  auto j = lines(r.out).at(0);
  CHECK(j["verdict"] == "CaseII");
  CHECK(j["case"] == "II");
  CHECK(j["H_order"] == 4);
  CHECK(j["O_order"] == 1);
  CHECK(j["K"] == "SL2_5");

  r = run([&](auto& o, auto& e) { return cli::cmd_verify("S5", cfg, o, e); });
  CHECK(r.code == 0);
  j = lines(r.out).at(0);
  CHECK(j["verdict"] == "HypothesisFails");
  CHECK(j["witness_degree"] == 6);

  r = run([&](auto& o, auto& e) { return cli::cmd_verify("C12", cfg, o, e); });
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0)["verdict"] == "SolvableSkip");

  r = run([&](auto& o, auto& e) { return cli::cmd_verify("NoSuchGroup", cfg, o, e); });
  CHECK(r.code != 0);

  // the fixed field names, in order
  r = run([&](auto& o, auto& e) { return cli::cmd_verify("A5", cfg, o, e); });
  const auto ordered = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = ordered.begin(); it != ordered.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"name", "order", "classes", "prime", "cd_rv", "cd_rv_odd", "verdict", "case",
                                         "theorem_b", "witness_degree", "K", "H_order", "O_order", "lemmas", "ms"});
  CHECK(ordered["ms"].is_null());

  cfg.machine = false;
  r = run([&](auto& o, auto& e) { return cli::cmd_verify("A5", cfg, o, e); });
  CHECK(r.out.find("verdict: CaseI") != std::string::npos);
}

TEST_CASE("info command", "[cli]") {
  Config cfg;
  cfg.machine = true;
  auto r = run([&](auto& o, auto& e) { return cli::cmd_info("SL2_5oC4", cfg, o, e); });
  CHECK(r.code == 0);
  auto j = lines(r.out).at(0);
  CHECK(j["order"] == 240);
  CHECK(j["radical_order"] == 4);  // K n R = Z(K), so |R| = 240 * 2 / 120
  CHECK(j["K"] == "SL2_5");
  CHECK(j["solvable"] == false);
}

TEST_CASE("scan command", "[cli]") {
  Config cfg;
  cfg.machine = true;

  const auto two = scratch("two.txt");
  write(two, "# two simple groups\nA5\nL2(8)\n");
  auto r = run([&](auto& o, auto& e) { return cli::cmd_scan(two.string(), cfg, o, e); });
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0]["verdict"] == "CaseI");
  CHECK(ls[1]["verdict"] == "CaseI");
  CHECK(ls[2]["summary"]["CaseI"] == 2);

  const auto empty = scratch("empty.txt");
  write(empty, "");
  r = run([&](auto& o, auto& e) { return cli::cmd_scan(empty.string(), cfg, o, e); });
  CHECK(r.code == 0);
  ls = lines(r.out);
  REQUIRE(ls.size() == 1);
  for (auto& [k, v] : ls[0]["summary"].items()) CHECK(v == 0);

  // per-group errors do not stop the scan
  const auto grp = scratch("s4.grp");
  write(grp, "degree 4\n(1,2)\n(1,2,3,4)\n");
  const auto mixed = scratch("mixed.txt");
  write(mixed, "NoSuchGroup\ns4.grp\nA5\n");
  r = run([&](auto& o, auto& e) { return cli::cmd_scan(mixed.string(), cfg, o, e); });
  ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0].contains("error"));
  CHECK(ls[1]["order"] == 24);
  CHECK(ls[2]["verdict"] == "CaseI");
  CHECK(ls[3]["summary"]["errors"] == 1);
}

TEST_CASE("default scan: no violations, parallel output in corpus order", "[cli]") {
  Config cfg;
  cfg.machine = true;
  auto serial = run([&](auto& o, auto& e) { return cli::cmd_scan(std::nullopt, cfg, o, e); });
  CHECK(serial.code == 0);
  auto ls = lines(serial.out);
  const auto corpus = catalog::default_corpus();
  REQUIRE(ls.size() == corpus.size() + 1);
  for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(ls[i]["name"] == corpus[i].name);
  CHECK(ls.back()["summary"]["Violation"] == 0);
  CHECK(ls.back()["summary"]["mismatches"] == 0);

  cfg.jobs = 4;
  auto parallel = run([&](auto& o, auto& e) { return cli::cmd_scan(std::nullopt, cfg, o, e); });
  CHECK(parallel.out == serial.out);
}

TEST_CASE("cache hits reproduce cache misses", "[cli]") {
  const auto dir = scratch("cache");
  fs::remove_all(dir);
  Config cfg;
  cfg.machine = true;
  cfg.cache_dir = dir.string();
  for (const char* name : {"A5", "SL2_5oC4", "PSL2_8"}) {
    GroupAnalysis miss(catalog::resolve(name), cfg);
    CHECK(!load_or_compute_table(miss));
    GroupAnalysis hit(catalog::resolve(name), cfg);
    CHECK(load_or_compute_table(hit));
    CHECK(to_machine_line(build_report(miss)) == to_machine_line(build_report(hit)));
  }
  // the key separates seeds and primes
  const auto spec = catalog::resolve("A5");
  Config other = cfg;
  other.seed = 1;
  CHECK(cache_key(spec, cfg) != cache_key(spec, other));
  other = cfg;
  other.prime_override = 181;
  CHECK(cache_key(spec, cfg) != cache_key(spec, other));

  // a corrupt entry is recomputed
  for (const auto& f : fs::directory_iterator(dir)) write(f.path(), "corrupt");
  GroupAnalysis again(spec, cfg);
  CHECK(!load_or_compute_table(again));
  CHECK(verify_orthogonality(again.table(), again.classes()).ok);
}
