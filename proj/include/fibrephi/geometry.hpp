#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fibrephi/groebner.hpp"

namespace fibrephi {

/// The target side of a projection Q[y, x] -> Q[y]: shared by X and by
/// every fibred power of X.
struct Projection {
  RingPtr ring;             // (y, x...)
  RingPtr target_ring;      // y only
  RingPtr source_ring;      // x only
  Ideal target_ideal;       // I_Y in target_ring
  Ideal target_ideal_full;  // I_Y in ring
  int target_dim = -1;      // n
  /// Whether V(I_Y) is irreducible as far as component splitting can tell;
  /// nullopt when the splitting hit its depth cap.
  std::optional<bool> target_irreducible;

  static Projection make(RingPtr ring, Ideal target_ideal_in_target_ring);

  std::size_t target_count() const { return ring->target_count(); }
  std::size_t source_count() const { return ring->source_count(); }
  std::uint64_t source_mask() const;
  /// Polynomial of `ring` involving only y, moved into target_ring.
  Polynomial to_target(const Polynomial& p) const;
  Polynomial from_target(const Polynomial& p) const;
  /// Polynomial of `ring` involving only x, moved into source_ring.
  Polynomial to_source(const Polynomial& p) const;
  /// The order with x >> y, grevlex inside both blocks.
  MonomialOrder relative_order() const { return MonomialOrder::elimination(target_count()); }
};

struct Attestations {
  bool target_locally_irreducible = false;
  bool target_pure_dimensional = false;
};

struct SetupDims {
  int N = -1; // dim of the ambient target
  int n = -1; // dim Y
  int k = 0;  // number of source variables
  int r = 0;  // number of source generators
  int m = -1; // dim X
};

/// Data of Y in an ambient target, X in Y x affine k-space, and the
/// projection X -> Y. Every derived number is recomputed on construction.
class ProjectionSetup {
public:
  /// `ambient`, `target` and `source` are polynomials of `ring`; ambient and
  /// target generators may only involve target variables. With
  /// `target_equals_ambient` the `target` list is ignored.
  static ProjectionSetup build(RingPtr ring, std::vector<Polynomial> ambient,
                               bool target_equals_ambient, std::vector<Polynomial> target,
                               std::vector<Polynomial> source, Attestations attestations);

  const Projection& projection() const noexcept { return projection_; }
  const RingPtr& ring() const noexcept { return projection_.ring; }
  const Ideal& ambient_ideal() const noexcept { return ambient_; }
  const Ideal& target_ideal() const noexcept { return projection_.target_ideal; }
  const std::vector<Polynomial>& source_generators() const noexcept { return source_; }
  /// J = I_Y + (source generators), the ideal of X.
  const Ideal& source_ideal() const noexcept { return full_; }
  bool target_equals_ambient() const noexcept { return target_equals_ambient_; }
  const Attestations& attestations() const noexcept { return attestations_; }
  const SetupDims& dims() const noexcept { return dims_; }
  /// X is empty (J is the unit ideal).
  bool source_empty() const noexcept { return source_empty_; }
  /// V(I_ambient + source generators) equals X, so the r generators cut X
  /// out of the ambient target times affine k-space.
  bool generators_define_source() const noexcept { return generators_define_source_; }

private:
  Projection projection_;
  Ideal ambient_{nullptr};
  std::vector<Polynomial> source_;
  Ideal full_{nullptr};
  bool target_equals_ambient_ = true;
  Attestations attestations_;
  SetupDims dims_;
  bool source_empty_ = false;
  bool generators_define_source_ = true;
};

enum class Verdict { no, yes, inconclusive };
const char* to_string(Verdict v);

struct ImageClosure {
  Ideal ideal; // in the target ring
  int dimension = -1;
};

/// Closure of f(V(J)): the x-variables eliminated.
ImageClosure image_closure(const Ideal& J, const Projection& projection);

struct Fibre {
  Ideal ideal; // in the source ring
  int dimension = -1;
};

/// f^{-1}(eta) for a rational point eta of Y. Throws PreconditionError when
/// eta is off the target variety.
Fibre fibre_at_point(const Ideal& J, const Projection& projection, const std::vector<Rational>& eta);
Fibre fibre_at_point(const ProjectionSetup& setup, const std::vector<Rational>& eta);

struct LeadingCoefficient {
  Polynomial coefficient;   // in the target ring
  Monomial source_monomial; // x-leading monomial of the basis element
  /// Radical member of the constraint ideal: vanishes identically there.
  bool flagged = false;
};

/// Views each element of the relative (x >> y) basis of J as a polynomial in
/// x over Q[y] and returns the coefficient of its x-leading monomial, for
/// elements of positive x-degree. Coefficients vanishing on V(constraints)
/// are flagged; `constraints` defaults to I_Y.
std::vector<LeadingCoefficient> relative_leading_coefficients(const Ideal& J,
                                                              const Projection& projection);
std::vector<LeadingCoefficient> relative_leading_coefficients(const Ideal& J,
                                                              const Projection& projection,
                                                              const Ideal& constraints);

/// Locally closed y-locus {constraints = 0, inequations != 0} over which
/// the fibre dimension is constant.
struct Cell {
  Ideal constraints;                   // target ring
  std::vector<Polynomial> inequations; // target ring
  Ideal closure;                       // constraints : (product of inequations)^inf
  int closure_dim = -1;

  std::string describe() const;
};

struct Stratum {
  int j = 0;
  Ideal image_ideal; // target ring; ideal of the closure of the union of its cells
  int image_dim = -1;
  std::vector<Cell> cells;
};

struct Stratification {
  std::vector<Stratum> strata; // sorted by j
  std::vector<int> fibre_dimensions() const;
  /// Minimum fibre dimension; nullopt when X is empty.
  std::optional<int> lambda() const;
  const Stratum* find(int j) const;
};

struct StratifyOptions {
  std::size_t max_depth = 64;
};

/// Fibre-dimension stratification by recursive case splitting on the
/// leading coefficients of relative Gröbner bases. The label of a cell is
/// the dimension of the whole fibre over each of its points.
Stratification stratify_by_fibre_dimension(const Ideal& J, const Projection& projection,
                                           const StratifyOptions& options = {});
Stratification stratify_by_fibre_dimension(const ProjectionSetup& setup,
                                           const StratifyOptions& options = {});

struct VerticalResult {
  Verdict verdict = Verdict::inconclusive;
  std::optional<Polynomial> witness; // in the ring of J
  std::string reason;
};

/// Whether some irreducible component of V(J) has an image with empty
/// interior in Y.
VerticalResult has_vertical_component(const Ideal& J, const Projection& projection);

struct FibredPower {
  unsigned i = 1;
  Projection projection; // ring (y, x^(1), ..., x^(i))
  Ideal ideal;           // I_Y + the source generators in each copy
};

FibredPower fibred_power(const ProjectionSetup& setup, unsigned i);

struct SplitOptions {
  std::size_t max_depth = 16;
  /// Also split pure pieces along zero divisors; off gives the
  /// equidimensional decomposition only.
  bool zero_divisor_splitting = true;
};

struct ComponentSplit {
  std::vector<Ideal> pieces; // varieties are unions of components, pairwise sharing none
  bool complete = true;      // false when the depth cap stopped the splitting
};

/// Pseudo-components of V(J) by equidimensional and zero-divisor splitting.
ComponentSplit split_components_partial(const Ideal& J, const SplitOptions& options = {});
/// As above; throws ResourceError when the depth cap is hit.
std::vector<Ideal> split_components(const Ideal& J, const SplitOptions& options = {});

/// V(a) minus V(b), closed: the ideal of the components of V(a) not inside V(b).
Ideal variety_difference(const Ideal& a, const Ideal& b);

struct PurityCheck {
  enum class Status { pure, mixed, unconfirmed };
  Status status = Status::unconfirmed;
  int dimension = -1;
  std::vector<int> piece_dims; // decreasing
  bool pure() const { return status == Status::pure; }
};

const char* to_string(PurityCheck::Status s);

PurityCheck pure_dimension_check(const Ideal& J, const SplitOptions& options = {});

/// Random rational point of {constraints = 0, inequations != 0} in the
/// target ring, with coordinates of height <= `height`. nullopt when an
/// attempt fails (no rational root, inequation vanishes).
std::optional<std::vector<Rational>> sample_point(const Ideal& constraints,
                                                  const std::vector<Polynomial>& inequations,
                                                  std::mt19937_64& rng, unsigned height = 100);

struct OracleCell {
  int j = 0;
  std::string cell;
  std::size_t attempts = 0;
  std::size_t points = 0;
  std::size_t mismatches = 0;
};

struct OracleReport {
  std::vector<OracleCell> cells;
  std::size_t points = 0;
  std::size_t mismatches = 0;
  std::size_t skipped_cells = 0;
};

struct OracleOptions {
  std::uint64_t seed = 0;
  std::size_t attempts_per_cell = 200;
  std::size_t points_per_cell = 20;
  unsigned height = 100;
};

/// Samples rational points of every cell and compares fibre_at_point
/// dimensions against the cell labels.
OracleReport check_stratification(const Ideal& J, const Projection& projection,
                                  const Stratification& strat, const OracleOptions& options);

} // namespace fibrephi
