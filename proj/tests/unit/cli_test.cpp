#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

int run(const std::string& args) {
  const std::string cmd = std::string(FMMC_LAB_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fmmc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(Cli, ConductanceReport) {
  ASSERT_EQ(run("conductance --family cycle:6 --out " + path("c.json")), 0);
  const auto j = nlohmann::json::parse(slurp(path("c.json")));
  EXPECT_EQ(j["psi_star_num"], 2);
  EXPECT_EQ(j["psi_star_den"], 3);
}

TEST_F(Cli, CapViolationExitCode) {
  EXPECT_EQ(run("conductance --family path:30"), 2);
}

TEST_F(Cli, InvalidInputExitCode) {
  EXPECT_EQ(run("fmmc --family path:3 --star-union 2:2"), 1);
  EXPECT_EQ(run("theorem1 --family cycle:6 --eps 0.5"), 1);
}

TEST_F(Cli, GraphFileAndCsvEmbedding) {
  {
    std::ofstream g(path("g.txt"));
    g << "3 2\n0 1\n1 2\n";
    std::ofstream f(path("f.csv"));
    f << "0,0\n1,0\n1,1\n";
  }
  ASSERT_EQ(run("theorem2 --graph " + path("g.txt") + " --embedding " + path("f.csv") +
                " --dim 20 --trials 3 --goodness-trials 100 --out " + path("t.json")),
            0);
  const auto j = nlohmann::json::parse(slurp(path("t.json")));
  EXPECT_EQ(j["config"]["n"], 3);
  EXPECT_EQ(j["trials"].size(), 3u);
}

TEST_F(Cli, FmmcWritesHistory) {
  ASSERT_EQ(run("fmmc --family path:4 --max-iters 50 --out " + path("f.json") + " --csv " + path("h.csv")), 0);
  const std::string csv = slurp(path("h.csv"));
  EXPECT_EQ(csv.rfind("iter,mu,gap,step\n", 0), 0u);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  const std::string args = "pipeline --family cycle:6 --dim 20 --trials 4 --goodness-trials 200 --max-iters 300";
  ASSERT_EQ(run(args + " --out " + path("a.json") + " --csv " + path("a.csv")), 0);
  ASSERT_EQ(run(args + " --out " + path("b.json") + " --csv " + path("b.csv")), 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
}

}  // namespace
