#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

std::string quote(const std::string& a) {
  std::string q = "'";
  for (char c : a) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::vector<std::string>& args) {
  std::string errfile = "kw_cli_stderr.txt";
  std::string cmd = quote(KW_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>" + errfile;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out, slurp(errfile)};
}

struct Golden {
  const char* name;
  int code;
  std::vector<std::string> args;
};

const std::vector<Golden> kGoldens = {
    {"search_primes", 0, {"search-primes", "-p", "3", "--count", "2"}},
    {"rank_n0", 0, {"rank", "-p", "3", "-a", "1", "-q", "7", "-r", "11", "-n", "0"}},
    {"rank_nmax", 0, {"rank", "-p", "3", "-a", "2", "-q", "7", "-r", "11", "--n-max", "2"}},
    {"balanced_7", 0, {"balanced", "3", "7"}},
    {"balanced_77", 0, {"balanced", "3", "77", "--mode", "both"}},
    {"coprime", 0, {"witness", "coprime", "-p", "3", "--set", "s,s+1,s+2"}},
    {"shift", 0, {"witness", "shift", "-p", "3", "--set", "1,2", "--elem", "s"}},
    {"gamma_times", 0, {"witness", "gamma-times", "-p", "3", "--F1", "0,1", "--F2", "0,s"}},
    {"gamma_plus_false", 1, {"witness", "gamma-plus", "-p", "3", "--F1", "0", "--F2", "0", "--F3", "0"}},
    {"inject", 0, {"witness", "inject", "-p", "3", "--A", "0,1", "--B", "0,1,s"}},
    {"axioms", 0, {"witness", "axioms", "-p", "3", "-n", "4", "-m", "4"}},
    {"curve_j", 0, {"curve", "j", "-p", "3", "-N", "1"}},
    {"curve_torsion", 0, {"curve", "torsion", "-p", "3", "-N", "2"}},
    {"curve_mul", 0, {"curve", "mul", "-p", "3", "-N", "4", "2", "(s; s^3+2*s^2+s)"}},
    {"poly_powers", 0, {"family", "poly-powers", "-p", "3", "--f", "s+1", "-n", "2"}},
    {"kummer_case", 0, {"kummer", "case", "-p", "7", "--b", "s", "--place", "s", "--ell", "3"}},
    {"lemma_congruentes1", 0, {"kummer", "verify-lemma", "-p", "7", "--lemma", "congruentes1", "--input", "x=s", "--input", "b=s+2", "--input", "c=3", "--place", "s+6", "--ell", "3"}},
    {"tower_bounded", 0, {"tower", "bounded", "-p", "3", "--place", "inf", "-r", "11", "--ell", "5", "--n-max", "3"}},
    {"tower_factor_tsv", 0, {"--format", "tsv", "tower", "factor", "-p", "3", "--place", "s+2", "-r", "11", "-n", "1"}},
};

}  // namespace

TEST_CASE("golden outputs") {
  for (const Golden& g : kGoldens) {
    CAPTURE(g.name);
    Run r = run(g.args);
    CHECK(r.code == g.code);
    CHECK(r.out == slurp(std::string(KW_GOLDEN_DIR) + "/" + g.name + ".out"));
  }
}

TEST_CASE("every json line carries the schema tag") {
  for (const Golden& g : kGoldens) {
    if (g.args[0] == "--format") continue;
    std::istringstream lines(run(g.args).out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
      auto j = nlohmann::json::parse(line);
      CHECK(j.at("schema") == 1);
      CHECK(j.at("kind").is_string());
      ++count;
    }
    CHECK(count >= 1);
  }
}

TEST_CASE("tsv flattens the json record") {
  Run js = run({"--json", "witness", "gamma-times", "-p", "3", "--F1", "0,1", "--F2", "0,s"});
  Run ts = run({"--format", "tsv", "witness", "gamma-times", "-p", "3", "--F1", "0,1", "--F2", "0,s"});
  REQUIRE(js.code == 0);
  REQUIRE(ts.code == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(ts.out.find("alpha\t" + j["alpha"].get<std::string>() + "\n") != std::string::npos);
  CHECK(ts.out.find("product_set.3\t" + j["product_set"][3].get<std::string>() + "\n") != std::string::npos);
}

TEST_CASE("verdict exit codes") {
  CHECK(run({"witness", "gamma-plus", "-p", "3", "--F1", "0", "--F2", "0", "--F3", "0,s"}).code == 0);
  // "not balanced" is an answer, not a failed check
  CHECK(run({"balanced", "3", "11"}).code == 0);
  CHECK(run({"tower", "bounded", "-p", "3", "--place", "s+2", "-r", "11", "--ell", "5", "--n-max", "2"}).code == 0);
  Run lem = run({"kummer", "verify-lemma", "-p", "7", "--lemma", "congruentes1", "--input", "x=s", "--input", "b=s+2",
                 "--input", "c=3", "--place", "s+6", "--ell", "3"});
  CHECK(lem.code == 0);
  CHECK(nlohmann::json::parse(lem.out).at("verdict").at("conclusion_holds") == true);
}

TEST_CASE("errors and usage") {
  Run bad_q = run({"rank", "-p", "3", "-a", "1", "-q", "3", "-r", "11", "-n", "0"});
  CHECK(bad_q.code == 2);
  CHECK(bad_q.err.rfind("error: ", 0) == 0);
  CHECK(bad_q.out.empty());

  Run badn = run({"curve", "j", "-p", "3", "-N", "3"});
  CHECK(badn.code == 2);
  CHECK(badn.err.find("BadN") != std::string::npos);

  Run size = run({"witness", "inject", "-p", "3", "--A", "0,1,2", "--B", "s"});
  CHECK(size.code == 2);
  CHECK(size.err.find("SizeMismatch") != std::string::npos);

  Run lit = run({"witness", "coprime", "-p", "3", "--set", "s+,1"});
  CHECK(lit.code == 2);

  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"rank", "-a", "1"}).code == 2);
  CHECK(run({"--format", "xml", "balanced", "3", "7"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("quick verification pipeline") {
  Run v = run({"verify", "--suite", "quick"});
  CHECK(v.code == 0);
  auto j = nlohmann::json::parse(v.out);
  CHECK(j.at("ok") == true);
  std::vector<std::string> stages;
  for (const auto& st : j.at("stages")) stages.push_back(st.at("stage"));
  CHECK(stages == std::vector<std::string>{"primes", "rank", "points", "family", "witnesses"});

  Run v5 = run({"verify", "--suite", "quick", "-p", "5"});
  CHECK(v5.code == 0);
  auto j5 = nlohmann::json::parse(v5.out);
  for (const auto& st : j5.at("stages"))
    if (st.at("stage") == "family") CHECK(st.at("status") == "skipped: no non-torsion point at bound");

  CHECK(run({"verify", "--suite", "quick", "-p", "9"}).code == 2);
}
