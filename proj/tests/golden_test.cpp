#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "battery.hpp"
#include "trilie/io.hpp"

using namespace trilie;
using namespace trilie::testing;

// Byte-exact comparison of CLI documents against tests/fixtures. Set
// TRILIE_REGENERATE=1 to rewrite the fixtures instead.

namespace {

struct GoldenJob {
  JobSpec job;
  std::string file;
};

GoldenJob make(Command command, int n, const std::string& gamma, Vars vars = Vars::Dual,
               Format format = Format::Json, bool clear = false) {
  GoldenJob g;
  g.job.command = command;
  g.job.n = n;
  g.job.gamma = gamma;
  g.job.vars = vars;
  g.job.format = format;
  g.job.clear = clear;
  std::string name = to_string(command);
  if (vars == Vars::Algebra) name += "_algebra";
  if (clear) name += "_clear";
  name += "_n" + std::to_string(n) + "_" + gamma_slug(gamma);
  name += format == Format::Json ? ".json" : format == Format::Latex ? ".tex" : ".txt";
  g.file = name;
  return g;
}

std::vector<GoldenJob> golden_jobs() {
  std::vector<GoldenJob> jobs;
  for (const auto& e : load_battery()) jobs.push_back(make(Command::Gen, e.n, e.gamma));
  jobs.push_back(make(Command::Gen, 3, "1,0,1", Vars::Algebra, Format::Json, true));
  jobs.push_back(make(Command::Gen, 4, "1,0,0,1", Vars::Algebra, Format::Json, true));
  jobs.push_back(make(Command::Gen, 3, "1,0,1", Vars::Dual, Format::Latex));
  jobs.push_back(make(Command::Gen, 4, "1,0,0,-2", Vars::Algebra, Format::Latex));
  jobs.push_back(make(Command::Gen, 6, "1,0,0,2,3,0", Vars::Dual, Format::Text));
  for (const auto& [n, gamma] : std::vector<std::pair<int, std::string>>{
           {3, "1,0,1"}, {4, "1,0,0,1"}, {4, "1,0,0,-2"}, {5, "2,1,0,1,2"}}) {
    jobs.push_back(make(Command::Verify, n, gamma));
  }
  jobs.push_back(make(Command::Classify, 4, "1,0,0,-2"));
  jobs.push_back(make(Command::Classify, 6, "1,2,0,5,2,1"));
  jobs.push_back(make(Command::Count, 4, "1,0,0,-2"));
  jobs.push_back(make(Command::Lifted, 2, "1,-1"));
  jobs.push_back(make(Command::Lifted, 3, "1,0,1"));
  jobs.push_back(make(Command::Lemma2, 5, "1,0,0,0,1"));
  jobs.push_back(make(Command::Normcheck, 4, "1,0,0,-2"));
  jobs.push_back(make(Command::Normcheck, 5, "2,1,0,1,2"));
  jobs.push_back(make(Command::Symcheck, 3, "1,0,1"));
  jobs.push_back(make(Command::Symcheck, 5, "2,1,0,1,2"));
  jobs.push_back(make(Command::Symcheck, 3, "1,0,1", Vars::Dual, Format::Latex));
  return jobs;
}

bool regenerating() {
  const char* v = std::getenv("TRILIE_REGENERATE");
  return v && std::string(v) == "1";
}

}  // namespace

TEST(Golden, Fixtures) {
  const auto jobs = golden_jobs();
  for (const auto& g : jobs) {
    const RunResult r = run(g.job);
    ASSERT_EQ(r.exit_code, kExitOk) << g.file << "\n" << r.output;
    const std::string path = fixture_path(g.file);
    if (regenerating()) {
      std::ofstream(path, std::ios::binary) << r.output;
      continue;
    }
    const std::string expected = read_file(path);
    ASSERT_FALSE(expected.empty()) << "missing fixture " << path;
    EXPECT_EQ(r.output, expected) << g.file;
  }
}

TEST(Golden, RunIsDeterministic) {
  for (const auto& g : golden_jobs()) EXPECT_EQ(run(g.job).output, run(g.job).output) << g.file;
}
