#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#ifndef GMM_CLI_PATH
#error "GMM_CLI_PATH must point at the built gmm binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code = -1;
  std::string out;
};

Result gmm_cli(const std::string& args) {
  const std::string cmd = std::string(GMM_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gmm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

  fs::path dir_;
};

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(gmm_cli("").code, 1);
  EXPECT_EQ(gmm_cli("frobnicate").code, 1);
  EXPECT_EQ(gmm_cli("motifs --tau 9").code, 1);
  EXPECT_EQ(gmm_cli("census --graph " + path("missing.edges")).code, 1);
  write("bad.edges", "0 1\nx y\n");
  EXPECT_EQ(gmm_cli("census --graph " + path("bad.edges")).code, 2);
  const Result v = gmm_cli("--version");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("0.1.0"), std::string::npos);
}

TEST_F(Cli, MotifsAndCensus) {
  const Result m = gmm_cli("motifs --tau 4");
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(std::count(m.out.begin(), m.out.end(), '\n'), 10);

  ASSERT_EQ(gmm_cli("generate petersen --out " + path("p.edges")).code, 0);
  const Result c = gmm_cli("census --graph " + path("p.edges") + " --tau 3 --mappings");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "index,V,E,count,mappings\n0,2,1,15,30\n1,3,2,30,60\n2,3,3,0,0\n");
  EXPECT_EQ(gmm_cli("census --graph " + path("p.edges") + " --tau 4 --jobs 1").out,
            gmm_cli("census --graph " + path("p.edges") + " --tau 4 --jobs 4").out);
}

TEST_F(Cli, GenerateIsSeedDetermined) {
  const Result a = gmm_cli("generate ba --n 50 --m 2 --seed 7");
  const Result b = gmm_cli("generate ba --n 50 --m 2 --seed 7");
  const Result c = gmm_cli("generate ba --n 50 --m 2 --seed 8");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_EQ(gmm_cli("generate er").code, 1);
}

TEST_F(Cli, SimulateReplayRoundTrip) {
  write("config.json", json{{"base", {{"kind", "ba"}, {"n", 20}, {"m", 2}}},
                            {"tau", 4},
                            {"growth", {{"kind", "ba"}, {"m", 2}}},
                            {"termination", {{"ceiling", 80}}},
                            {"seed", 11}}
                           .dump());
  for (const char* jobs : {"1", "4"}) {
    ASSERT_EQ(gmm_cli("simulate --config " + path("config.json") + " --out " + path(std::string("g") + jobs) +
                      " --trace " + path(std::string("t") + jobs) + " --jobs " + jobs)
                  .code,
              0);
  }
  EXPECT_EQ(slurp(path("g1")), slurp(path("g4")));
  EXPECT_EQ(slurp(path("t1")), slurp(path("t4")));
  const Result replayed = gmm_cli("replay --config " + path("config.json") + " --trace " + path("t1"));
  EXPECT_EQ(replayed.code, 0);
  EXPECT_EQ(replayed.out, slurp(path("g1")));

  // A seed override produces a trace that no longer matches the config.
  ASSERT_EQ(gmm_cli("simulate --config " + path("config.json") + " --seed 12 --out " + path("g12") + " --trace " +
                    path("t12"))
                .code,
            0);
  EXPECT_EQ(gmm_cli("replay --config " + path("config.json") + " --trace " + path("t12")).code, 2);
  EXPECT_FALSE(json::parse(slurp(path("t1"))).contains("wall_time_seconds"));
  ASSERT_EQ(gmm_cli("simulate --config " + path("config.json") + " --record-timing --out " + path("gt") +
                    " --trace " + path("tt"))
                .code,
            0);
  EXPECT_TRUE(json::parse(slurp(path("tt"))).contains("wall_time_seconds"));
}

TEST_F(Cli, BadConfigIsARuntimeError) {
  write("config.json", R"({"tau": 3, "colour": "blue"})");
  EXPECT_EQ(gmm_cli("simulate --config " + path("config.json")).code, 2);
  write("broken.json", "{not json");
  EXPECT_EQ(gmm_cli("simulate --config " + path("broken.json")).code, 2);
}

TEST_F(Cli, FitReportsJson) {
  ASSERT_EQ(gmm_cli("generate er --n 60 --p 0.5 --seed 3 --out " + path("er.edges")).code, 0);
  const Result b = gmm_cli("fit --graph " + path("er.edges") + " --method binomial --p 0.5 --csv " + path("fit.csv"));
  ASSERT_EQ(b.code, 0);
  const json report = json::parse(b.out);
  EXPECT_GE(report["r2"].get<double>(), 0.0);
  EXPECT_TRUE(fs::exists(path("fit.csv")));

  write("degrees.txt", "1 1 1 2 2 3 5 8\n13");
  const Result m = gmm_cli("fit --degrees " + path("degrees.txt") + " --method powerlaw-mle --x-min 1");
  ASSERT_EQ(m.code, 0);
  EXPECT_GT(json::parse(m.out)["alpha"].get<double>(), 1.0);
  EXPECT_EQ(gmm_cli("fit --method binomial").code, 1);
}

TEST_F(Cli, ExperimentsAreByteIdenticalAcrossJobs) {
  write("settings.json", json{{"er_sizes", {30}},
                              {"er_seeds", 3},
                              {"ws_n", 30},
                              {"ws_base_n", 10},
                              {"ws_p_grid", {0.1, 1.0}},
                              {"ws_seeds", 2},
                              {"ba_n", 30},
                              {"ba_m_values", {1, 3}},
                              {"ba_classic_runs", 3},
                              {"ba_base_sizes", {10}},
                              {"ba_runs_per_base", 3},
                              {"demo_ceiling", 40}}
                             .dump());
  for (const char* name : {"er", "ws", "ba", "demo"}) {
    const std::string base = "experiment " + std::string(name) + " --config " + path("settings.json");
    ASSERT_EQ(gmm_cli(base + " --jobs 1 --out-dir " + path(std::string(name) + "_1")).code, 0) << name;
    ASSERT_EQ(gmm_cli(base + " --jobs 4 --out-dir " + path(std::string(name) + "_4")).code, 0) << name;
    for (const auto& entry : fs::directory_iterator(dir_ / (std::string(name) + "_1"))) {
      const fs::path twin = dir_ / (std::string(name) + "_4") / entry.path().filename();
      EXPECT_EQ(slurp(entry.path()), slurp(twin)) << entry.path();
    }
  }
  EXPECT_EQ(gmm_cli("experiment sir --out-dir " + path("x")).code, 1);
}

TEST_F(Cli, Demo) {
  const Result r = gmm_cli("demo --out-dir " + path("demo"));
  ASSERT_EQ(r.code, 0);
  const json trace = json::parse(slurp(path("demo/demo_trace.json")));
  EXPECT_LE(trace["records"].size(), 125u);
  ASSERT_EQ(gmm_cli("demo --out-dir " + path("again")).code, 0);
  EXPECT_EQ(slurp(path("demo/demo.edges")), slurp(path("again/demo.edges")));
  EXPECT_EQ(slurp(path("demo/demo_trace.json")), slurp(path("again/demo_trace.json")));
}

}  // namespace
