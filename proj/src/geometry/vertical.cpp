#include <algorithm>

#include "fibrephi/error.hpp"
#include "fibrephi/geometry.hpp"

namespace fibrephi {

VerticalResult has_vertical_component(const Ideal& J, const Projection& projection) {
  VerticalResult out;
  if (is_unit_ideal(J)) {
    out.verdict = Verdict::no;
    out.reason = "the source is empty";
    return out;
  }
  if (!projection.target_irreducible.value_or(false)) {
    out.reason = projection.target_irreducible ? "the target splits into several pieces"
                                               : "target irreducibility could not be settled";
    return out;
  }

  const int n = projection.target_dim;
  const auto image = image_closure(J, projection);
  if (image.dimension < n) {
    out.verdict = Verdict::yes;
    for (const auto& g : image.ideal.generators())
      if (!radical_member(g, projection.target_ideal)) {
        out.witness = projection.from_target(g);
        break;
      }
    out.reason = "the image closure has dimension " + std::to_string(image.dimension) + " < " +
                 std::to_string(n);
    return out;
  }

  // Leading coefficients vanishing on Y are pushed into the ideal until the
  // relative basis has none left; this keeps V(J).
  Ideal current = J;
  std::vector<Polynomial> coefficients;
  for (;;) {
    const auto lcs = relative_leading_coefficients(current, projection);
    const auto& gb = current.groebner(projection.relative_order());
    for (const auto& g : gb.elements)
      if (g.involves_only(0, projection.target_count()) &&
          !radical_member(projection.to_target(g), projection.target_ideal)) {
        out.reason = "relative basis has a y-only element not vanishing on the target";
        return out;
      }
    std::vector<Polynomial> flagged;
    coefficients.clear();
    for (const auto& lc : lcs) {
      if (lc.coefficient.is_constant())
        continue;
      if (lc.flagged)
        flagged.push_back(projection.from_target(lc.coefficient));
      else
        coefficients.push_back(lc.coefficient.primitive());
    }
    if (flagged.empty())
      break;
    current = current.with(flagged);
  }

  std::sort(coefficients.begin(), coefficients.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.to_string() < b.to_string(); });
  coefficients.erase(std::unique(coefficients.begin(), coefficients.end()), coefficients.end());

  Ideal saturated = current;
  for (const auto& h : coefficients)
    saturated = saturation(saturated, projection.from_target(h)).ideal;
  for (const auto& g : saturated.generators())
    if (!radical_member(g, J)) {
      out.verdict = Verdict::yes;
      out.witness = g;
      out.reason = "a component lies over the zero set of the leading coefficients";
      return out;
    }
  out.verdict = Verdict::no;
  out.reason = "every component dominates the target";
  return out;
}

} // namespace fibrephi
