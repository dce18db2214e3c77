#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "trilie/io.hpp"

using namespace trilie;

#ifndef TRILIE_CLI_PATH
#define TRILIE_CLI_PATH "trilie"
#endif

namespace {

struct Process {
  int status = -1;
  std::string out;
};

Process cli(const std::string& args, const std::string& env = "") {
  Process p;
  const std::string cmd = env + (env.empty() ? "" : " ") + TRILIE_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return p;
}

}  // namespace

TEST(Cli, MatchesLibraryRun) {
  JobSpec j;
  j.command = Command::Gen;
  j.n = 3;
  j.gamma = "1,0,1";
  const Process p = cli("gen -n 3 --gamma 1,0,1 --format json");
  EXPECT_EQ(p.status, 0);
  EXPECT_EQ(p.out, run(j).output);

  j.command = Command::Verify;
  j.n = 4;
  j.gamma = "1,0,0,1";
  j.vars = Vars::Algebra;
  j.clear = true;
  j.seed = 5;
  const Process v = cli("verify -n 4 --gamma 1,0,0,1 --vars algebra --clear --seed 5");
  EXPECT_EQ(v.status, 0);
  EXPECT_EQ(v.out, run(j).output);
}

TEST(Cli, CountText) {
  const Process p = cli("count -n 4 --gamma 1,0,0,-2 --format text");
  EXPECT_EQ(p.status, 0);
  EXPECT_EQ(p.out, "1\n");
}

TEST(Cli, ExitCodes) {
  const Process equal = cli("gen -n 2 --gamma 1,1");
  EXPECT_EQ(equal.status, kExitDomain);
  EXPECT_EQ(Json::parse(equal.out)["error"], "DomainError");
  EXPECT_EQ(cli("gen -n 3 --gamma 1,zz,1").status, kExitUsage);
  EXPECT_EQ(cli("frobnicate -n 3 --gamma 1,0,1").status, kExitUsage);
  EXPECT_EQ(Json::parse(cli("gen -n 3 --gamma 1,0,1 --format pdf").out)["error"], "ParseError");
  EXPECT_EQ(cli("gen -n 3 --gamma 1,0,1 --bogus").status, kExitUsage);
  EXPECT_EQ(cli("--help").status, 0);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  const Process one = cli("verify -n 5 --gamma 2,1,0,1,2", "TRILIE_THREADS=1");
  const Process four = cli("verify -n 5 --gamma 2,1,0,1,2", "TRILIE_THREADS=4");
  EXPECT_EQ(one.status, 0);
  EXPECT_EQ(one.out, four.out);
}
