#include <iostream>

#include <CLI11.hpp>

#include "fibrephi/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace fibrephi::cli;

  CLI::App app{"Bounds and exact values of the fibre invariant phi of polynomial projections"};
  app.require_subcommand(1);

  std::string path;
  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "stratify, bound phi and apply the exactness rules");
  analyze->add_option("file", path, "setup file")->required();
  analyze->add_option("--max-power", analyze_args.max_power, "check fibred powers 1..I");
  analyze->add_option("--seed", analyze_args.seed, "seed for oracle sampling");
  analyze->add_option("--json", analyze_args.json_out, "also write the report here");
  analyze->add_flag("--timings", analyze_args.timings, "record wall-clock timings");
  analyze->add_flag("!--no-oracle", analyze_args.oracle, "skip the sampled fibre check");

  auto* stratify = app.add_subcommand("stratify", "fibre-dimension stratification only");
  stratify->add_option("file", path, "setup file")->required();

  unsigned power = 1;
  auto* verify = app.add_subcommand("verify-power", "vertical components of one fibred power");
  verify->add_option("file", path, "setup file")->required();
  verify->add_option("--i", power, "fibred power")->required()->check(CLI::PositiveNumber);

  std::string dir;
  auto* corpus = app.add_subcommand("corpus", "check every *.setup fixture in a directory");
  corpus->add_option("dir", dir, "fixture directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_error;
  }

  if (*analyze)
    return run_analyze(path, analyze_args, std::cout, std::cerr);
  if (*stratify)
    return run_stratify(path, std::cout, std::cerr);
  if (*verify)
    return run_verify_power(path, power, std::cout, std::cerr);
  return run_corpus(dir, std::cout, std::cerr);
}
