#include "fibrephi/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "fibrephi/error.hpp"

namespace fibrephi::cli {

namespace {

class Stopwatch {
public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

Json header(const SetupFile& file) {
  Json doc;
  doc["tool"] = tool_name;
  doc["version"] = tool_version;
  doc["input_digest"] = sha256_hex(file.text);
  doc["dims"] = dims_json(file.setup.dims());
  return doc;
}

} // namespace

Analysis analyze_file(const SetupFile& file, const AnalyzeArgs& args) {
  Analysis a;
  Stopwatch clock;
  AnalyzeOptions options;
  options.max_power = args.max_power;
  a.report = analyze(file.setup, options);
  const double analysis_time = clock.lap();
  a.context.seed = args.seed;
  if (args.oracle && !a.report.source_empty) {
    OracleOptions oracle;
    oracle.seed = args.seed;
    a.context.oracle = check_stratification(file.setup.source_ideal(), file.setup.projection(),
                                            a.report.strata, oracle);
    if (a.context.oracle->mismatches > 0)
      throw InternalInconsistency(std::to_string(a.context.oracle->mismatches) +
                                  " sampled fibres disagree with the stratification");
  }
  if (args.timings) {
    a.context.timings["analysis_seconds"] = analysis_time;
    a.context.timings["oracle_seconds"] = clock.lap();
  }
  a.inconclusive = a.report.vertical.verdict == Verdict::inconclusive;
  if (a.report.powers)
    for (const auto& c : a.report.powers->checks)
      a.inconclusive = a.inconclusive || c.verdict == Verdict::inconclusive;
  a.document = report_json(file, a.report, a.context);
  return a;
}

int run_analyze(const std::string& path, const AnalyzeArgs& args, std::ostream& out,
                std::ostream& err) {
  try {
    const auto file = load_setup(path);
    const auto a = analyze_file(file, args);
    const std::string text = a.document.dump(2) + "\n";
    out << text;
    if (!args.json_out.empty()) {
      std::ofstream f(args.json_out, std::ios::binary);
      if (!f)
        throw Error("cannot write " + args.json_out);
      f << text;
    }
    return a.inconclusive ? exit_inconclusive : exit_ok;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
}

int run_stratify(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    const auto file = load_setup(path);
    Json doc = header(file);
    if (file.setup.source_empty()) {
      doc["strata"] = Json::array();
      doc["lambda"] = nullptr;
    } else {
      const auto strat = stratify_by_fibre_dimension(file.setup);
      doc["strata"] = strata_json(strat);
      doc["lambda"] = strat.lambda() ? Json(*strat.lambda()) : Json(nullptr);
    }
    out << doc.dump(2) << "\n";
    return exit_ok;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
}

int run_verify_power(const std::string& path, unsigned i, std::ostream& out, std::ostream& err) {
  try {
    const auto file = load_setup(path);
    const auto power = fibred_power(file.setup, i);
    const auto v = has_vertical_component(power.ideal, power.projection);
    Json doc = header(file);
    doc["i"] = i;
    doc["generators"] = power.ideal.generator_strings();
    doc["vertical"] = vertical_json(v);
    out << doc.dump(2) << "\n";
    return v.verdict == Verdict::inconclusive ? exit_inconclusive : exit_ok;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
}

std::vector<CorpusRow> check_corpus(const std::string& dir, std::uint64_t seed) {
  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".setup")
      paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());

  std::vector<CorpusRow> rows;
  for (const auto& path : paths) {
    CorpusRow row{path, false, {}};
    try {
      const auto file = load_setup(path);
      AnalyzeArgs args;
      args.seed = seed;
      args.max_power = file.expect.max_power.value_or(0);
      const auto a = analyze_file(file, args);
      row.problems = compare_expectations(file.expect, a.report);
      if (file.expect.empty())
        row.problems.push_back("fixture has no expect block");
    } catch (const std::exception& e) {
      row.problems.push_back(std::string("error: ") + e.what());
    }
    row.passed = row.problems.empty();
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_corpus(const std::string& dir, std::ostream& out, std::ostream& err) {
  std::vector<CorpusRow> rows;
  try {
    rows = check_corpus(dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
  std::size_t failed = 0;
  for (const auto& row : rows) {
    out << (row.passed ? "PASS  " : "FAIL  ") << row.path << "\n";
    for (const auto& p : row.problems)
      out << "      " << p << "\n";
    failed += row.passed ? 0 : 1;
  }
  out << rows.size() - failed << "/" << rows.size() << " fixtures pass\n";
  return failed ? exit_mismatch : exit_ok;
}

} // namespace fibrephi::cli
