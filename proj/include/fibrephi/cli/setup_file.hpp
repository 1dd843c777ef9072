#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibrephi/geometry.hpp"

namespace fibrephi::cli {

/// Expected results of a corpus fixture. Values are kept as the strings the
/// report uses ("infinity", "true", "none", ...).
struct Expectations {
  std::optional<std::string> phi_upper;
  std::optional<std::string> phi_lower;
  std::optional<std::string> phi_exact;
  std::optional<std::string> tag;
  std::optional<std::vector<std::pair<int, int>>> strata; // (j, image dim)
  std::optional<std::string> vertical;
  std::optional<std::vector<std::pair<unsigned, std::string>>> fibred_powers;
  std::optional<std::string> multiplicity;
  std::optional<unsigned> max_power;
  std::optional<std::string> purity;

  bool empty() const;
};

struct SetupFile {
  std::string path;
  std::string text;
  std::vector<std::string> vars_target;
  std::vector<std::string> vars_source;
  std::vector<Polynomial> ambient;
  bool target_equals_ambient = true;
  std::vector<Polynomial> target;
  std::vector<Polynomial> source;
  Attestations attestations;
  Expectations expect;
  ProjectionSetup setup;
};

SetupFile parse_setup(const std::string& text, const std::string& path = "<input>");
SetupFile load_setup(const std::string& path);

/// Canonical text form; parse_setup(print_setup(s)) prints back identically.
std::string print_setup(const SetupFile& file);

} // namespace fibrephi::cli
