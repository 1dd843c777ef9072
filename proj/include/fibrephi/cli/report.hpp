#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibrephi/cli/setup_file.hpp"
#include "fibrephi/invariant.hpp"

namespace fibrephi::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* tool_name = "fibrephi";
inline constexpr const char* tool_version = "0.1.0";

std::string sha256_hex(const std::string& data);

struct ReportContext {
  std::uint64_t seed = 0;
  std::optional<OracleReport> oracle;
  /// Empty unless timings were requested; keeps reports byte-identical.
  std::map<std::string, double> timings;
};

Json extended_json(const ExtendedNat& v);
Json dims_json(const SetupDims& d);
Json strata_json(const Stratification& strat);
Json vertical_json(const VerticalResult& v);
Json oracle_json(const OracleReport& report);

Json report_json(const SetupFile& file, const PhiReport& report, const ReportContext& context);

/// Expectation mismatches of a fixture, one line each; empty when all hold.
std::vector<std::string> compare_expectations(const Expectations& expect, const PhiReport& report);

/// The report's string form of a purity check, e.g. "pure:3".
std::string purity_string(const PurityCheck& p);

} // namespace fibrephi::cli
