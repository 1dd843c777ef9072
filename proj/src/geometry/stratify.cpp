#include <algorithm>
#include <map>
#include <set>

#include "fibrephi/error.hpp"
#include "fibrephi/geometry.hpp"

namespace fibrephi {

std::string Cell::describe() const {
  std::string s = "V" + constraints.to_string();
  if (!inequations.empty()) {
    s += " minus V(";
    for (std::size_t i = 0; i < inequations.size(); ++i) {
      if (i)
        s += " * ";
      s += "(" + inequations[i].to_string() + ")";
    }
    s += ")";
  }
  return s;
}

std::vector<int> Stratification::fibre_dimensions() const {
  std::vector<int> out;
  for (const auto& s : strata)
    out.push_back(s.j);
  return out;
}

std::optional<int> Stratification::lambda() const {
  if (strata.empty())
    return std::nullopt;
  return strata.front().j;
}

const Stratum* Stratification::find(int j) const {
  for (const auto& s : strata)
    if (s.j == j)
      return &s;
  return nullptr;
}

namespace {

std::string canonical(const Ideal& ideal) {
  std::string s;
  for (const auto& g : ideal.standard_basis().elements)
    s += g.to_string() + ";";
  return s;
}

Polynomial normalized(const Polynomial& p) { return p.primitive().monic(MonomialOrder::grevlex()); }

class Stratifier {
public:
  Stratifier(const Ideal& J, const Projection& projection, const StratifyOptions& options)
      : J_(J), p_(projection), options_(options) {}

  void run() { visit(p_.target_ideal, 0); }

  std::map<int, std::vector<Cell>> cells;

private:
  void visit(Ideal constraints, std::size_t depth) {
    if (depth > options_.max_depth)
      throw ResourceError("stratification depth cap exceeded");
    if (!visited_.insert(canonical(constraints)).second)
      return;

    const std::size_t t = p_.target_count();
    const std::size_t arity = p_.ring->arity();
    std::vector<Polynomial> lcs;
    std::vector<Monomial> x_leads;
    for (;;) {
      std::vector<Polynomial> lifted;
      for (const auto& c : constraints.generators())
        lifted.push_back(p_.from_target(c));
      const Ideal local = J_.with(lifted);
      const auto& gb = local.groebner(p_.relative_order());
      if (gb.is_unit())
        return;

      std::vector<Polynomial> y_only;
      lcs.clear();
      x_leads.clear();
      for (std::size_t e = 0; e < gb.elements.size(); ++e) {
        const Monomial x_lead = gb.leading[e].restricted(t, arity);
        if (x_lead.is_one()) {
          y_only.push_back(p_.to_target(gb.elements[e]));
          continue;
        }
        const auto by_x = gb.elements[e].coefficients_in(t, arity);
        lcs.push_back(p_.to_target(by_x.at(x_lead)));
        x_leads.push_back(x_lead);
      }
      constraints = Ideal(p_.target_ring, std::move(y_only));
      if (is_unit_ideal(constraints))
        return;

      std::vector<Polynomial> vanishing;
      for (const auto& h : lcs)
        if (!h.is_constant() && radical_member(h, constraints))
          vanishing.push_back(h);
      if (vanishing.empty())
        break;
      constraints = constraints.with(vanishing);
    }

    const int d = combinatorial_dimension(x_leads, p_.source_mask());

    std::vector<Polynomial> inequations;
    for (const auto& h : lcs) {
      if (h.is_constant())
        continue;
      auto n = normalized(h);
      if (std::find(inequations.begin(), inequations.end(), n) == inequations.end())
        inequations.push_back(std::move(n));
    }
    std::sort(inequations.begin(), inequations.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.to_string() < b.to_string(); });

    Polynomial product = Polynomial::constant(p_.target_ring, 1);
    for (const auto& h : inequations)
      product = product * h;
    Ideal closure = saturation(constraints, product).ideal;
    if (!is_unit_ideal(closure)) {
      Cell cell{constraints, inequations, closure, krull_dimension(closure)};
      cells[d].push_back(std::move(cell));
    }

    for (const auto& h : inequations)
      visit(constraints.with(h), depth + 1);
  }

  const Ideal& J_;
  const Projection& p_;
  const StratifyOptions& options_;
  std::set<std::string> visited_;
};

} // namespace

Stratification stratify_by_fibre_dimension(const Ideal& J, const Projection& projection,
                                           const StratifyOptions& options) {
  Stratifier s(J, projection, options);
  s.run();
  Stratification out;
  for (auto& [j, cells] : s.cells) {
    Stratum stratum{j, cells.front().closure, -1, {}};
    for (std::size_t c = 1; c < cells.size(); ++c)
      stratum.image_ideal = intersection(stratum.image_ideal, cells[c].closure);
    stratum.image_dim = krull_dimension(stratum.image_ideal);
    stratum.cells = std::move(cells);
    out.strata.push_back(std::move(stratum));
  }
  return out;
}

Stratification stratify_by_fibre_dimension(const ProjectionSetup& setup,
                                           const StratifyOptions& options) {
  return stratify_by_fibre_dimension(setup.source_ideal(), setup.projection(), options);
}

} // namespace fibrephi
