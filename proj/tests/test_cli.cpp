#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sumrank/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sumrank::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("volume command") {
  const auto r = run({"volume", "--q", "2", "--m", "2", "--eta", "2", "--ell", "2", "--radius", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "t,sphere,ball\n0,1,1\n1,18,19\n2,93,112\n3,108,220\n4,36,256\n");
  // --n instead of --ell
  CHECK(run({"volume", "--q", "2", "--m", "2", "--eta", "2", "--n", "4"}).out == r.out);
}

TEST_CASE("json output") {
  const auto r = run({"--format", "json", "volume", "--q", "3", "--m", "2", "--eta", "1", "--ell", "2"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "volume");
  CHECK(doc["params"]["n"] == 2);
  CHECK(doc["rows"].size() == 3);
  CHECK(doc["rows"][2]["sphere"] == "64");
  // options given after the subcommand are accepted as well
  CHECK(run({"volume", "--q", "3", "--m", "2", "--eta", "1", "--ell", "2", "--format", "json"}).out == r.out);
}

TEST_CASE("curve command schema") {
  const auto r = run({"curve-sp-gv", "--q", "2", "--m", "4", "--eta", "2", "--ell", "4", "--grid", "8"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 9);
  CHECK(ls[0] ==
        "delta,d,R_singleton,R_sp_exact,R_sp_simplified,R_sp_asymptotic,R_gv_exact,R_gv_simplified,R_gv_asymptotic,"
        "R_sp_asymptotic_raw,R_gv_asymptotic_raw");
  CHECK(ls[1].rfind("0.125,1,", 0) == 0);
  CHECK(ls[8].rfind("1,8,", 0) == 0);
  const auto doc = nlohmann::json::parse(run({"--format", "json", "curve-sp-gv", "--q", "2", "--m", "4", "--eta", "2", "--ell", "4", "--grid", "8"}).out);
  for (const auto& row : doc["rows"])
    for (const char* col : {"R_singleton", "R_sp_exact", "R_sp_simplified", "R_sp_asymptotic", "R_gv_exact", "R_gv_simplified", "R_gv_asymptotic"}) {
      if (row[col].is_null()) continue;
      CHECK(row[col].get<double>() >= 0.0);
      CHECK(row[col].get<double>() <= 1.0);
    }
  const auto explicit_deltas = run({"curve-sp-gv", "--q", "2", "--m", "4", "--eta", "2", "--ell", "4", "--deltas", "0.5,1", "--gv-asymptotic", "limit"});
  CHECK(lines(explicit_deltas.out).size() == 3);
}

TEST_CASE("bounds command") {
  const auto r = run({"bounds", "--q", "2", "--m", "2", "--eta", "2", "--ell", "2"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "d,k_singleton,k_sp_exact,k_sp_simplified,k_gv_exact,k_gv_simplified");
  CHECK(ls[1] == "1,4,4,4,4,");
  const auto with_k = run({"bounds", "--q", "2", "--m", "2", "--eta", "2", "--ell", "2", "--d", "3", "--k", "1"});
  CHECK(lines(with_k.out).size() == 2);
}

TEST_CASE("genericity command") {
  const auto r = run({"genericity", "--q", "2", "--m", "10", "--eta", "2", "--ell", "2", "--k", "2"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "bound,lower,upper,raw_lower,failure_logq");
  CHECK(ls[1].rfind("A,0.90625,,0.90625,", 0) == 0);
  CHECK(ls[4].rfind("BR,", 0) == 0);
  const auto gv = run({"genericity", "--q", "2", "--m", "6", "--eta", "2", "--ell", "2", "--d", "2"});
  REQUIRE(gv.code == 0);
  CHECK(lines(gv.out)[1].rfind("2,", 0) == 0);
  CHECK(run({"genericity", "--q", "2", "--m", "6", "--eta", "2", "--ell", "2", "--d", "2", "--epsilon", "0.9"}).code == 2);
}

TEST_CASE("mmin command") {
  const auto r = run({"mmin", "--q", "4", "--n", "512", "--k", "128", "--bounds", "A,U,BR"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 11);  // header + the 10 divisors of 512
  CHECK(ls[0] == "ell,mmin_A,mmin_U_lemma,mmin_U_printed,mmin_BR");
  CHECK(ls[1].rfind("1,", 0) == 0);
  CHECK(ls[10].rfind("512,", 0) == 0);
  const auto only_a = run({"mmin", "--q", "4", "--n", "16", "--k", "4", "--bounds", "A", "--ells", "2,4"});
  REQUIRE(only_a.code == 0);
  CHECK(lines(only_a.out).size() == 3);
  CHECK(lines(only_a.out)[1].substr(lines(only_a.out)[1].size() - 3) == ",,,");
  CHECK(run({"mmin", "--q", "4", "--n", "16", "--k", "4", "--ells", "3"}).code == 2);
  CHECK(run({"mmin", "--q", "4", "--n", "16", "--k", "4", "--bounds", "Z"}).code == 2);
}

TEST_CASE("montecarlo command is deterministic") {
  const std::vector<std::string> args{"--seed", "17", "montecarlo", "--q", "2", "--m", "6", "--eta", "2", "--ell", "2", "--k", "2", "--trials", "60"};
  const auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(lines(a.out)[0] == "predicate,k,d,trials,successes,estimate,seed,lower_A,lower_U");
  const auto dist = run({"montecarlo", "--q", "2", "--m", "6", "--eta", "2", "--ell", "2", "--k", "1", "--trials", "30", "--predicate", "distance", "--d", "2"});
  CHECK(dist.code == 0);
  CHECK(run({"montecarlo", "--q", "2", "--m", "6", "--eta", "2", "--ell", "2", "--k", "1", "--predicate", "distance"}).code == 2);
}

TEST_CASE("errors and exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"nope"}).code == 2);
  CHECK(run({"volume", "--q", "6", "--m", "2", "--eta", "2", "--ell", "2"}).code == 2);
  CHECK(run({"volume", "--q", "2", "--m", "2", "--eta", "2"}).code == 2);
  CHECK(run({"volume", "--q", "2", "--m", "2", "--eta", "3", "--n", "4"}).code == 2);
  CHECK(run({"volume", "--q", "2", "--m", "2", "--eta", "2", "--ell", "2", "--radius", "9"}).code == 2);
  CHECK(run({"--format", "xml", "volume", "--q", "2", "--m", "2", "--eta", "2", "--ell", "2"}).code == 2);
  const auto bad = run({"volume", "--q", "6", "--m", "2", "--eta", "2", "--ell", "2"});
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--out", "/nonexistent-dir/x.csv", "volume", "--q", "2", "--m", "2", "--eta", "2", "--ell", "2"}).code == 1);
}

TEST_CASE("--out writes the same bytes as standard output") {
  const std::string path = "cli_test_out.csv";
  const auto to_file = run({"--out", path, "volume", "--q", "2", "--m", "3", "--eta", "2", "--ell", "2"});
  REQUIRE(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == run({"volume", "--q", "2", "--m", "3", "--eta", "2", "--ell", "2"}).out);
  std::remove(path.c_str());
}
