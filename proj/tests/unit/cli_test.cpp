#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lclab/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lclab");
  std::ostringstream out;
  std::ostringstream err;
  const int code = lclab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("LCLAB_CACHE"); }
};

}  // namespace

TEST_F(CliTest, TriangleCsv) {
  const auto r = run({"triangle", "--g", "one", "--h", "id", "--n", "6", "--format", "csv"});
  EXPECT_EQ(r.code, lclab::cli::kExitPass) << r.err;
  EXPECT_NE(r.out.find("6,720,120,274,225,85,15,1"), std::string::npos) << r.out;
}

TEST_F(CliTest, TriangleSingleRow) {
  const auto r = run({"triangle", "--g", "sigma", "--h", "id", "--n", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1: 1\n");
}

TEST_F(CliTest, TriangleJson) {
  const auto r = run({"triangle", "--g", "sigma", "--h", "id", "--n", "4", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("[\"7/4\",\"59/24\",\"3/4\",\"1/24\"]"), std::string::npos) << r.out;
}

TEST_F(CliTest, Table1) {
  const auto r = run({"check", "table1", "--m-max", "7"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2 5 17 54 162 469 1330\n");
  const auto short_scan = run({"check", "table1", "--m-max", "4", "--n-limit", "20"});
  EXPECT_EQ(short_scan.code, lclab::cli::kExitFailures);
  EXPECT_EQ(short_scan.out, "2 5 17 -\n");
}

TEST_F(CliTest, NoIdentity) {
  const auto r = run({"check", "no-identity", "--n-max", "10"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST_F(CliTest, VerticalFailures) {
  const auto r = run({"check", "vertical", "--g", "one", "--h", "id", "--m", "1", "--n-max", "10"});
  EXPECT_EQ(r.code, lclab::cli::kExitFailures);
  EXPECT_NE(r.out.find("(2,1) (3,1) (4,1) (5,1) (6,1) (7,1) (8,1) (9,1)\n"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("(10,1)"), std::string::npos);

  const auto json = run({"check", "vertical", "--g", "one", "--h", "id", "--m", "1", "--n-max", "10",
                         "--format", "json"});
  EXPECT_EQ(json.code, lclab::cli::kExitFailures);
  EXPECT_NE(json.out.find("\"failures\":[[2,1],[3,1]"), std::string::npos) << json.out;
}

TEST_F(CliTest, OtherChecksPass) {
  for (const std::vector<std::string>& args : {
           std::vector<std::string>{"check", "horizontal", "--g", "sigma", "--h", "id", "--n-max", "40"},
           {"check", "cscan", "--g", "sigma", "--h", "id", "--C", "2", "--m-max", "5"},
           {"check", "conversion", "--g", "sigma", "--n-max", "20"},
           {"check", "genfun", "--g", "square", "--h", "one", "--n-max", "12", "--xs", "1,-1,1/2"},
           {"check", "euler", "--g", "sigma", "--n-max", "15", "--x", "2"},
           {"check", "hz", "--C", "3/2", "--m-max", "6"},
           {"check", "closed-forms", "--n-max", "12"},
           {"--jobs", "1", "check", "horizontal", "--g", "one", "--h", "one", "--n-max", "20"},
       }) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << args[1] << "\n" << r.out << r.err;
  }
}

TEST_F(CliTest, CScanReportsFirstColumnSeparately) {
  const auto plain = run({"check", "cscan", "--g", "one", "--h", "id", "--C", "2", "--m-max", "7"});
  EXPECT_EQ(plain.code, 0) << plain.out;
  EXPECT_NE(plain.out.find("m=1 column"), std::string::npos) << plain.out;
  const auto with_m1 =
      run({"check", "cscan", "--g", "one", "--h", "id", "--C", "2", "--m-max", "7", "--include-m1"});
  EXPECT_EQ(with_m1.code, lclab::cli::kExitFailures);
  EXPECT_NE(with_m1.out.find("(2,1)"), std::string::npos) << with_m1.out;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({"triangle", "--g", "tau", "--h", "id", "--n", "3"}).code, lclab::cli::kExitUsage);
  EXPECT_EQ(run({"triangle", "--g", "one", "--n", "3"}).code, lclab::cli::kExitUsage);
  EXPECT_EQ(run({"check", "hz", "--C", "1", "--m-max", "3"}).code, lclab::cli::kExitUsage);
  EXPECT_EQ(run({"check", "bogus"}).code, lclab::cli::kExitUsage);
  EXPECT_EQ(run({}).code, lclab::cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, lclab::cli::kExitPass);
}

TEST_F(CliTest, CustomTableAndOutFile) {
  const fs::path dir = fs::temp_directory_path() / "lclab-cli-test";
  fs::create_directories(dir);
  std::ofstream(dir / "g.txt") << "# sigma~\n1\n3/2\n4/3\n7/4\n";
  std::ofstream(dir / "bad.txt") << "2\n1\n";

  const auto out = dir / "tri.txt";
  const auto r = run({"--out", out.string(), "triangle", "--g", "custom=" + (dir / "g.txt").string(),
                      "--h", "one", "--n", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::stringstream text;
  text << std::ifstream(out).rdbuf();
  EXPECT_NE(text.str().find("2: 3/2 1"), std::string::npos) << text.str();

  const auto bad = run({"triangle", "--g", "custom=" + (dir / "bad.txt").string(), "--h", "one", "--n", "2"});
  EXPECT_EQ(bad.code, lclab::cli::kExitUsage);
  EXPECT_NE(bad.err.find("g(1)"), std::string::npos) << bad.err;
  fs::remove_all(dir);
}

TEST_F(CliTest, CacheIsReusedAndEnvOverrides) {
  const fs::path flag_dir = fs::temp_directory_path() / "lclab-cli-cache-flag";
  const fs::path env_dir = fs::temp_directory_path() / "lclab-cli-cache-env";
  fs::remove_all(flag_dir);
  fs::remove_all(env_dir);

  const auto cold = run({"--cache", flag_dir.string(), "check", "horizontal", "--g", "sigma", "--h", "id",
                         "--n-max", "30", "--format", "json"});
  ASSERT_EQ(cold.code, 0) << cold.err;
  EXPECT_FALSE(fs::is_empty(flag_dir));
  const auto warm = run({"--cache", flag_dir.string(), "check", "horizontal", "--g", "sigma", "--h", "id",
                         "--n-max", "30", "--format", "json"});
  EXPECT_EQ(warm.out, cold.out);

  setenv("LCLAB_CACHE", env_dir.string().c_str(), 1);
  const auto env = run({"--cache", flag_dir.string(), "triangle", "--g", "id", "--h", "one", "--n", "5"});
  unsetenv("LCLAB_CACHE");
  EXPECT_EQ(env.code, 0);
  EXPECT_TRUE(fs::exists(env_dir) && !fs::is_empty(env_dir));
  fs::remove_all(flag_dir);
  fs::remove_all(env_dir);
}
