#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PROJCLUST_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string temp_csv(const std::string& stem) {
  return (std::filesystem::temp_directory_path() / ("projclust_cli_" + stem + ".csv")).string();
}

}  // namespace

TEST(Cli, GenThenMst) {
  const auto path = temp_csv("star");
  ASSERT_EQ(run("gen --kind star-identity --size 10 --output " + path).status, 0);
  const auto r = run("mst --input " + path);
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j.at("cost").get<double>(), 10.0);
  EXPECT_EQ(j.at("edges").size(), 10u);
  std::filesystem::remove(path);
}

TEST(Cli, SingleSolveOutputIsByteIdentical) {
  const auto path = temp_csv("uniform");
  ASSERT_EQ(run("gen --kind uniform --size 40 --dim 6 --seed 3 --output " + path).status, 0);
  for (const std::string cmd : {"fl --project 5 --seed 7", "fl --squared", "radii",
                                "mst --project 3 --seed 2", "doubling --seed 1"}) {
    const auto a = run(cmd + " --input " + path);
    const auto b = run(cmd + " --input " + path);
    EXPECT_EQ(a.status, 0) << cmd;
    EXPECT_FALSE(a.out.empty()) << cmd;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
  std::filesystem::remove(path);
}

TEST(Cli, ExperimentDigestIsStable) {
  const std::string args =
      "experiment ratio-sweep --task mst --d-values 2,4 --kind uniform --size 30 "
      "--dim 8 --trials 3 --seed 5";
  const auto a = nlohmann::json::parse(run(args).out);
  const auto b = nlohmann::json::parse(run(args).out);
  EXPECT_EQ(a.at("deterministic_digest"), b.at("deterministic_digest"));
  EXPECT_EQ(a.at("records").size(), 6u);
}

TEST(Cli, SizeGuardExitsWithTwo) {
  const auto path = temp_csv("big");
  ASSERT_EQ(run("gen --kind uniform --size 30 --dim 2 --output " + path).status, 0);
  EXPECT_EQ(run("optimum --input " + path).status, 2);
  EXPECT_EQ(run("optimum --max-n 40 --input " + path).status, 2);
  std::filesystem::remove(path);
}

TEST(Cli, BadUsageExitsWithOne) {
  EXPECT_EQ(run("mst --no-such-flag").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("mst --input /nonexistent/points.csv").status, 1);
  EXPECT_EQ(run("gen --kind nope --size 3").status, 1);
}
