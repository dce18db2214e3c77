#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "trilie/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Invariants of the triangular Lie algebras t_gamma(n)"};
  std::string command;
  std::string vars = "dual";
  std::string format = "json";
  trilie::JobSpec job;
  app.add_option("command", command, "gen | verify | classify | count | lifted | lemma2 | normcheck | symcheck")
      ->required();
  app.add_option("-n", job.n, "Matrix size");
  app.add_option("--gamma", job.gamma, "Comma-separated exact rationals, e.g. 1,0,1 or 1/2,-3/2");
  app.add_option("--vars", vars, "dual | algebra");
  app.add_option("--format", format, "json | latex | text");
  app.add_option("--seed", job.seed, "Seed for sampled checks");
  app.add_flag("--clear", job.clear, "Clear the denominator of the rational member");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << trilie::error_json(trilie::ErrorKind::ParseError, e.what());
    return trilie::kExitUsage;
  }

  try {
    job.command = trilie::parse_command(command);
    job.vars = trilie::parse_vars(vars);
    job.format = trilie::parse_format(format);
  } catch (const trilie::Error& e) {
    std::cout << trilie::error_json(e.kind(), e.what());
    return trilie::exit_code_for(e.kind());
  }

  const trilie::RunResult result = trilie::run(job);
  std::cout << result.output;
  return result.exit_code;
}
