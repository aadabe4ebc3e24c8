#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fibmulti/cli.hpp"

using namespace fibmulti;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fibmulti_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, ComputeExamples) {
  auto r = run({"compute", "fib-nm", "--n", "2", "--m", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "8\n");
  r = run({"compute", "gen-nm", "--g0", "2", "--g1", "1", "--n", "2", "--m", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "7\n");
  EXPECT_EQ(run({"compute", "lucas-nm", "--n", "2", "--m", "2"}).out, "7\n");
  EXPECT_EQ(run({"compute", "fib", "--k", "-4"}).out, "-3\n");
  EXPECT_EQ(run({"compute", "lucas", "--k", "6", "--via", "identity"}).out, "18\n");
  EXPECT_EQ(run({"compute", "fib", "--k", "100"}).out, "354224848179261915075\n");
}

TEST(Cli, NegativeSeedValues) {
  auto r = run({"compute", "gen-nm", "--g0", "-2", "--g1", "7", "--n", "3", "--m", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, to_decimal(gen_fib({-2, 7}, 12)) + "\n");
  r = run({"compute", "gen-nm", "--g0=-2", "--g1=7", "--n", "3", "--m", "4", "--via", "oracle"});
  EXPECT_EQ(r.out, to_decimal(gen_fib({-2, 7}, 12)) + "\n");
}

TEST(Cli, ComputeJsonAndCsv) {
  auto r = run({"compute", "fib-nm", "--n", "2", "--m", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["value"], "8");
  EXPECT_EQ(doc["via"], "identity");
  r = run({"--format", "csv", "compute", "fib-nm", "--n", "2", "--m", "3"});
  EXPECT_EQ(r.out, "quantity,n,m,via,value\nfib-nm,2,3,identity,8\n");
}

TEST(Cli, IdentityAndOracleAgreeOnRandomSample) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> idx(1, 40);
  std::uniform_int_distribution<int> seed(-50, 50);
  for (int trial = 0; trial < 60; ++trial) {
    const std::string n = std::to_string(idx(rng)), m = std::to_string(idx(rng));
    for (const char* form : {"fib-nm", "lucas-nm"}) {
      auto a = run({"compute", form, "--n", n, "--m", m, "--via", "identity"});
      auto b = run({"compute", form, "--n", n, "--m", m, "--via", "oracle"});
      ASSERT_EQ(a.code, 0);
      ASSERT_EQ(a.out, b.out) << form << " " << n << " " << m;
    }
    const std::string g0 = "--g0=" + std::to_string(seed(rng)), g1 = "--g1=" + std::to_string(seed(rng));
    auto a = run({"compute", "gen-nm", g0, g1, "--n", n, "--m", m});
    auto b = run({"compute", "gen-nm", g0, g1, "--n", n, "--m", m, "--via", "oracle"});
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(a.out, b.out);
    const std::string k = std::to_string(idx(rng) - 20);
    for (const char* form : {"fib", "lucas"})
      ASSERT_EQ(run({"compute", form, "--k", k, "--via", "identity"}).out,
                run({"compute", form, "--k", k, "--via", "oracle"}).out);
  }
}

TEST(Cli, InvalidInputsExitTwoWithoutOutput) {
  const std::vector<std::vector<std::string>> cases{
      {"compute", "fib-nm", "--n", "0", "--m", "3"},
      {"compute", "lucas-nm", "--n", "2", "--m", "0"},
      {"compute", "fib-nm", "--n", "abc", "--m", "3"},
      {"compute", "gen-nm", "--g0", "1.5", "--g1", "1", "--n", "2", "--m", "2"},
      {"compute", "gen-nm", "--g0", "12x", "--g1", "1", "--n", "2", "--m", "2"},
      {"compute", "fib-nm", "--n", "2"},
      {"compute", "fib-nm", "--n", "2", "--m", "3", "--via", "magic"},
      {"compute", "fib-nm", "--n", "3037000500", "--m", "3037000500"},
      {"compute"},
      {},
      {"frobnicate"},
      {"verify", "--targets", "t9", "--n-max", "2", "--m-max", "2"},
      {"verify", "--targets", "t1", "--n-max", "0", "--m-max", "2"},
      {"verify", "--targets", "t1", "--n-max", "3", "--m-max", "3", "--seeds", "/nonexistent/seeds.txt"},
      {"bench", "--n", "0", "--m", "1"},
      {"table", "--theorem", "4", "--n", "2", "--m", "2"},
      {"table", "--theorem", "1", "--n", "2", "--m", "2", "--g0", "3"},
      {"compute", "fib-nm", "--n", "2", "--m", "3", "--format", "xml"},
  };
  for (const auto& args : cases) {
    auto r = run(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    EXPECT_EQ(r.code, 2) << joined;
    EXPECT_TRUE(r.out.empty()) << joined << " -> " << r.out;
    EXPECT_FALSE(r.err.empty()) << joined;
  }
}

TEST(Cli, HelpExitsZero) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("compute"), std::string::npos);
}

TEST(Cli, VerifyReportsAndExitCode) {
  auto r = run({"verify", "--targets", "t1", "--n-max", "1", "--m-max", "1", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["checked"], 1);
  EXPECT_EQ(doc["failed"], 0);

  r = run({"verify", "--targets", "t1,t2,t3,docagne,waring", "--n-max", "6", "--m-max", "6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("total      checked=" + std::to_string(36 * 4 + 36 * 6) + " "), std::string::npos) << r.out;

  r = run({"verify", "--targets", "docagne", "--n-min", "-5", "--n-max", "5", "--m-min", "-5", "--m-max", "5",
           "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("docagne,121,121,0"), std::string::npos) << r.out;
}

TEST(Cli, VerifySeedsFile) {
  const auto path = temp_file("seeds.txt");
  {
    std::ofstream f(path);
    f << "5,-8\n\n-1,-1\r\n 4 , 0 \n";
  }
  auto r = run({"verify", "--targets", "t3", "--n-max", "4", "--m-max", "4", "--seeds", path.string(), "--format",
                "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["checked"], 16 * 3);

  {
    std::ofstream f(path);
    f << "5;8\n";
  }
  r = run({"verify", "--targets", "t3", "--n-max", "2", "--m-max", "2", "--seeds", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  std::filesystem::remove(path);
}

TEST(Cli, OutFileReceivesDocument) {
  const auto path = temp_file("out.json");
  auto r = run({"compute", "lucas-nm", "--n", "3", "--m", "3", "--format", "json", "--out", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(ss.str())["value"], "76");
  std::filesystem::remove(path);
}

TEST(Cli, BenchCsv) {
  auto r = run({"bench", "--n", "2", "--m", "50", "--reps", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "strategy,n,m,result_digits,wall_time_ns");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_NE(line.find(",2,50,21,"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 3);
}

// The table's term values must add up to what compute prints.
TEST(Cli, TableSumsToCompute) {
  struct Case {
    std::string theorem, form;
    std::vector<std::string> extra;
  };
  const std::vector<Case> cases{{"1", "fib-nm", {}}, {"2", "lucas-nm", {}}, {"3", "gen-nm", {"--g0=-2", "--g1=7"}}};
  for (const auto& c : cases) {
    for (auto [n, m] : {std::pair{3, 4}, {2, 7}, {5, 1}, {6, 9}}) {
      std::vector<std::string> table_args{"table", "--theorem", c.theorem, "--n", std::to_string(n), "--m",
                                          std::to_string(m), "--format", "json"};
      std::vector<std::string> compute_args{"compute", c.form, "--n", std::to_string(n), "--m", std::to_string(m)};
      for (const auto& e : c.extra) {
        table_args.push_back(e);
        compute_args.push_back(e);
      }
      auto t = run(table_args);
      ASSERT_EQ(t.code, 0) << t.err;
      const auto doc = nlohmann::json::parse(t.out);
      SeqValue sum = 0;
      for (const auto& term : doc["terms"]) sum += parse_seq_value(term["value"].get<std::string>());
      auto comp = run(compute_args);
      ASSERT_EQ(comp.code, 0) << comp.err;
      EXPECT_EQ(to_decimal(sum) + "\n", comp.out) << c.theorem << " " << n << " " << m;
      EXPECT_EQ(doc["total"].get<std::string>() + "\n", comp.out);
    }
  }
}

TEST(Cli, TableText) {
  auto r = run({"table", "--theorem", "1", "--n", "3", "--m", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("total: 144"), std::string::npos) << r.out;
}
