#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fibrephi/cli/report.hpp"

namespace fibrephi::cli {

enum ExitCode : int { exit_ok = 0, exit_error = 1, exit_inconclusive = 2, exit_mismatch = 3 };

struct AnalyzeArgs {
  unsigned max_power = 0;
  std::uint64_t seed = 0;
  std::string json_out; // empty: stdout only
  bool timings = false;
  bool oracle = true;
};

/// Full pipeline for one setup; throws on errors, including oracle mismatches.
struct Analysis {
  PhiReport report;
  ReportContext context;
  Json document;
  bool inconclusive = false;
};
Analysis analyze_file(const SetupFile& file, const AnalyzeArgs& args);

int run_analyze(const std::string& path, const AnalyzeArgs& args, std::ostream& out,
                std::ostream& err);
int run_stratify(const std::string& path, std::ostream& out, std::ostream& err);
int run_verify_power(const std::string& path, unsigned i, std::ostream& out, std::ostream& err);

struct CorpusRow {
  std::string path;
  bool passed = false;
  std::vector<std::string> problems;
};

/// Fixtures are the *.setup files of `dir`, sorted by path.
std::vector<CorpusRow> check_corpus(const std::string& dir, std::uint64_t seed = 0);
int run_corpus(const std::string& dir, std::ostream& out, std::ostream& err);

} // namespace fibrephi::cli
