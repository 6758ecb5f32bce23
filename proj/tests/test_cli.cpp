#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

const char* cli_binary() {
  const char* bin = std::getenv("MDDKIT_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "MDDKIT_BIN must point at the CLI binary");
  return bin;
}

CliResult run_cli(const std::string& args) {
  const fs::path dir = fs::temp_directory_path();
  const fs::path out = dir / "mddkit_test_stdout.txt";
  const fs::path err = dir / "mddkit_test_stderr.txt";
  const std::string cmd = std::string(cli_binary()) + " " + args + " > " + out.string() +
                          " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  return {WEXITSTATUS(raw), slurp(out), slurp(err)};
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream f(p);
  f << content;
  return p;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("size-report emits the expected row for the degree-2 square") {
  const auto res = run_cli("size-report --spec complete-degree:2:1:2");
  REQUIRE(res.exit_code == 0);
  const auto ls = lines_of(res.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] ==
        "source,n,r_raw,r_min,gens_words,tree_words,mdd_words,nodes,edges,width,branching");
  CHECK(ls[1] == "complete-degree:n=2:b=2,2,3,3,6,19,17,5,6,3,3");
}

TEST_CASE("size-report with no specs prints only the header") {
  const auto res = run_cli("size-report");
  CHECK(res.exit_code == 0);
  CHECK(lines_of(res.out).size() == 1);
}

TEST_CASE("size-report reads monomial files, serial and parallel agree") {
  const auto file = write_file("mddkit_gens.txt", "n 2\n2 0\n1 1\n0 2\n3 1\n");
  const auto serial = run_cli("size-report --input " + file.string());
  const auto par = run_cli("size-report --par --input " + file.string());
  REQUIRE(serial.exit_code == 0);
  CHECK(serial.out == par.out);
  const auto ls = lines_of(serial.out);
  REQUIRE(ls.size() == 2);
  // 4 raw generators, 3 minimal
  CHECK(ls[1].find(",2,4,3,6,") != std::string::npos);
}

TEST_CASE("dot and sequential output") {
  const auto file = write_file("mddkit_dot.txt", "n 2\n1 2\n");
  const auto dot = run_cli("dot --input " + file.string());
  REQUIRE(dot.exit_code == 0);
  CHECK(dot.out.rfind("digraph mdd {", 0) == 0);

  const auto seq = run_cli("dot --seq --input " + file.string());
  REQUIRE(seq.exit_code == 0);
  const auto ls = lines_of(seq.out);
  REQUIRE(ls.size() == 3);  // path of two edges
  CHECK(ls[0] == "0");
}

TEST_CASE("groebner: compute, verify, stats") {
  const auto file = write_file("mddkit_xy.txt", "p 7\nn 2\norder grevlex\nx1\nx2\n");
  const auto res = run_cli("groebner --input " + file.string() + " --verify --stats");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("x1") != std::string::npos);
  CHECK(res.out.find("x2") != std::string::npos);

  const auto brace = res.out.find('{');
  REQUIRE(brace != std::string::npos);
  const auto stats = nlohmann::json::parse(res.out.substr(brace));
  for (const char* key : {"membership_tests", "insertions", "koszul_skips", "syzygy_skips",
                          "zero_reductions", "nonzero_reductions", "pairs_processed",
                          "blocked_filter_hits"})
    CHECK(stats.contains(key));

  const auto oracle = run_cli("groebner --engine buchberger --verify --input " + file.string());
  CHECK(oracle.exit_code == 0);
}

TEST_CASE("groebner engines agree on cyclic-4") {
  const std::string cyclic4 =
      "p 65521\nn 4\norder grevlex\n"
      "x1 + x2 + x3 + x4\n"
      "x1*x2 + x2*x3 + x3*x4 + x4*x1\n"
      "x1*x2*x3 + x2*x3*x4 + x3*x4*x1 + x4*x1*x2\n"
      "x1*x2*x3*x4 - 1\n";
  const auto file = write_file("mddkit_cyclic4.txt", cyclic4);
  const auto res = run_cli("groebner --input " + file.string() + " --verify");
  CHECK(res.exit_code == 0);
}

TEST_CASE("parse errors exit with code 2 and a location") {
  const auto file = write_file("mddkit_bad.txt", "p 7\nn 2\nx0^2\n");
  const auto res = run_cli("groebner --input " + file.string());
  CHECK(res.exit_code == 2);
  CHECK(res.err.find("line 3") != std::string::npos);

  const auto missing = run_cli("groebner --input /nonexistent/system.txt");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("groebner").exit_code == 1);           // missing --input
  CHECK(run_cli("no-such-command").exit_code == 1);
  const auto file = write_file("mddkit_x.txt", "p 7\nn 1\nx1\n");
  CHECK(run_cli("groebner --engine buchberger --stats --input " + file.string()).exit_code == 1);
}

TEST_CASE("bench-membership with zero queries prints only the header") {
  const auto res = run_cli(
      "bench-membership --family random-small-degree --n 4 --r 20 --bound 5 --queries 0");
  REQUIRE(res.exit_code == 0);
  const auto ls = lines_of(res.out);
  REQUIRE(ls.size() == 1);
  CHECK(ls[0] == "backend,threads,n,r,queries,reps,ns_per_query,agreement");
}

TEST_CASE("bench-membership produces timing rows") {
  const auto res = run_cli(
      "bench-membership --family random-small-degree --n 5 --r 30 --bound 5 --queries 200 "
      "--reps 2 --threads 2");
  REQUIRE(res.exit_code == 0);
  const auto ls = lines_of(res.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[1].rfind("mdd,1,", 0) == 0);
  CHECK(ls[2].rfind("naive-list,1,", 0) == 0);
  CHECK(ls[3].rfind("mdd,2,", 0) == 0);
}
