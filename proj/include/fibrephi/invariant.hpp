#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibrephi/geometry.hpp"

namespace fibrephi {

/// A natural number or infinity.
class ExtendedNat {
public:
  ExtendedNat() = default;
  ExtendedNat(std::int64_t value);
  static ExtendedNat infinity() { return ExtendedNat(); }

  bool is_infinite() const noexcept { return !value_; }
  std::int64_t value() const;
  std::string to_string() const;

  bool operator==(const ExtendedNat&) const = default;
  std::strong_ordering operator<=>(const ExtendedNat& other) const;

private:
  std::optional<std::int64_t> value_;
};

/// min over j > m - n of floor((n - dim f(X_j) - 1) / (j - (m - n))).
ExtendedNat phi_upper(const Stratification& strat, int m, int n);

/// min over j != lambda of floor((N - dim f(X_j) - 1) / (j - (k - r))).
ExtendedNat phi_lower(const Stratification& strat, int N, int k, int r);

/// floor((d - 1) / q).
std::int64_t multiplicity_bound(int d, int q);

enum class ExactnessTag {
  smooth_target,
  bounds_meet,
  complete_intersection,
  curve_target,
  fibred_power_determined,
};
const char* to_string(ExactnessTag tag);

struct PowerCheck {
  unsigned i = 1;
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
};

struct PowerScan {
  std::vector<PowerCheck> checks;
  /// Set when some power has a vertical component and all earlier ones
  /// were certified free of them.
  std::optional<ExtendedNat> exact;
  /// phi >= at_least, from the leading run of certified powers.
  std::int64_t at_least = 0;
};

/// Checks the fibred powers 1..i_max for vertical components, stopping at
/// the first one that has some or cannot be decided.
PowerScan phi_by_fibred_powers(const ProjectionSetup& setup, unsigned i_max);

struct MultiplicityQuery {
  int d = 0;
  int q = 0;
  std::vector<Rational> special_point; // eta_0
  std::string route;
};

struct MultiplicityResult {
  std::optional<MultiplicityQuery> query;
  std::optional<std::int64_t> bound;
  std::string reason; // why the premises fail, when they do
};

struct AnalyzeOptions {
  unsigned max_power = 0; // 0 skips the fibred-power scan
  bool multiplicity = true;
  StratifyOptions stratify;
  SplitOptions split;
};

struct PhiReport {
  SetupDims dims;
  bool source_empty = false;
  PurityCheck source_purity;
  PurityCheck target_purity;
  std::optional<bool> target_irreducible;
  VerticalResult vertical;
  Stratification strata;
  std::optional<int> lambda;

  std::optional<ExtendedNat> upper;
  std::string upper_unavailable;
  std::optional<ExtendedNat> lower;
  std::string lower_basis; // "formula" or "vertical-component"
  std::string lower_unavailable;

  std::optional<ExtendedNat> exact;
  std::optional<ExactnessTag> tag;
  std::vector<ExactnessTag> rules_fired;

  std::optional<PowerScan> powers;
  MultiplicityResult multiplicity;

  std::vector<std::string> warnings;
  std::vector<std::string> notes;
};

/// Runs everything: purity, stratification, vertical components, both
/// bounds, exactness rules, and optionally the fibred-power scan and the
/// multiplicity bound. Throws InternalInconsistency when the results
/// contradict each other.
PhiReport analyze(const ProjectionSetup& setup, const AnalyzeOptions& options = {});

/// The single rational point of V(ideal), or nullopt when V(ideal) is not
/// exactly one rational point.
std::optional<std::vector<Rational>> single_point(const Ideal& ideal);

} // namespace fibrephi
