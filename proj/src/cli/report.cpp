#include "fibrephi/cli/report.hpp"

#include <cstdio>

#include <openssl/evp.h>

namespace fibrephi::cli {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

Json extended_json(const ExtendedNat& v) {
  if (v.is_infinite())
    return "infinity";
  return v.value();
}

Json dims_json(const SetupDims& d) {
  return Json{{"N", d.N}, {"n", d.n}, {"k", d.k}, {"r", d.r}, {"m", d.m}};
}

namespace {

Json basis_strings(const Ideal& ideal) {
  Json out = Json::array();
  for (const auto& g : ideal.standard_basis().elements)
    out.push_back(g.to_string());
  return out;
}

Json purity_json(const PurityCheck& p) {
  return Json{{"status", to_string(p.status)},
              {"dimension", p.dimension},
              {"piece_dims", p.piece_dims}};
}

std::string verdict_string(Verdict v) { return to_string(v); }

} // namespace

std::string purity_string(const PurityCheck& p) {
  return std::string(to_string(p.status)) + ":" + std::to_string(p.dimension);
}

Json strata_json(const Stratification& strat) {
  Json out = Json::array();
  for (const auto& s : strat.strata) {
    Json cells = Json::array();
    for (const auto& c : s.cells) {
      Json ineq = Json::array();
      for (const auto& h : c.inequations)
        ineq.push_back(h.to_string());
      cells.push_back(Json{{"constraints", basis_strings(c.constraints)},
                           {"inequations", ineq},
                           {"closure_dim", c.closure_dim}});
    }
    out.push_back(Json{{"j", s.j},
                       {"image_dim", s.image_dim},
                       {"image_ideal", basis_strings(s.image_ideal)},
                       {"cells", cells}});
  }
  return out;
}

Json vertical_json(const VerticalResult& v) {
  Json out{{"verdict", verdict_string(v.verdict)}};
  out["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
  out["reason"] = v.reason;
  return out;
}

Json oracle_json(const OracleReport& report) {
  Json cells = Json::array();
  for (const auto& c : report.cells)
    cells.push_back(Json{{"j", c.j},
                         {"cell", c.cell},
                         {"attempts", c.attempts},
                         {"points", c.points},
                         {"mismatches", c.mismatches}});
  return Json{{"points", report.points},
              {"mismatches", report.mismatches},
              {"skipped_cells", report.skipped_cells},
              {"cells", cells}};
}

Json report_json(const SetupFile& file, const PhiReport& r, const ReportContext& context) {
  Json doc;
  doc["tool"] = tool_name;
  doc["version"] = tool_version;
  doc["input_digest"] = sha256_hex(file.text);
  doc["seed"] = context.seed;
  doc["dims"] = dims_json(r.dims);
  doc["attestations"] = Json{
      {"target_locally_irreducible", file.attestations.target_locally_irreducible},
      {"target_pure_dimensional", file.attestations.target_pure_dimensional}};
  doc["source_empty"] = r.source_empty;
  doc["purity"] = Json{{"source", purity_json(r.source_purity)},
                       {"target", purity_json(r.target_purity)}};
  doc["target_irreducible"] =
      r.target_irreducible ? Json(*r.target_irreducible) : Json("unsettled");
  doc["vertical"] = vertical_json(r.vertical);
  doc["strata"] = strata_json(r.strata);
  doc["lambda"] = r.lambda ? Json(*r.lambda) : Json(nullptr);
  doc["phi_upper"] = r.upper ? extended_json(*r.upper) : Json(r.upper_unavailable);
  doc["phi_lower"] = r.lower ? extended_json(*r.lower) : Json(r.lower_unavailable);
  doc["phi_lower_basis"] = r.lower ? Json(r.lower_basis) : Json(nullptr);
  doc["phi_exact"] = r.exact ? extended_json(*r.exact) : Json(nullptr);
  doc["exactness_tag"] = r.tag ? Json(to_string(*r.tag)) : Json(nullptr);
  Json fired = Json::array();
  for (auto t : r.rules_fired)
    fired.push_back(to_string(t));
  doc["rules_fired"] = fired;

  Json powers = Json::array();
  if (r.powers)
    for (const auto& c : r.powers->checks)
      powers.push_back(Json{{"i", c.i}, {"verdict", verdict_string(c.verdict)}, {"reason", c.reason}});
  doc["fibred_powers"] = powers;
  if (r.powers)
    doc["fibred_power_bound"] =
        Json{{"at_least", r.powers->at_least},
             {"exact", r.powers->exact ? extended_json(*r.powers->exact) : Json(nullptr)}};
  else
    doc["fibred_power_bound"] = nullptr;

  Json mult{{"value", r.multiplicity.bound ? Json(*r.multiplicity.bound) : Json(nullptr)}};
  if (r.multiplicity.query) {
    const auto& q = *r.multiplicity.query;
    Json point = Json::array();
    for (const auto& c : q.special_point)
      point.push_back(to_string(c));
    mult["d"] = q.d;
    mult["q"] = q.q;
    mult["special_point"] = point;
    mult["route"] = q.route;
  } else {
    mult["reason"] = r.multiplicity.reason;
  }
  doc["multiplicity_bound"] = mult;
  doc["oracle"] = context.oracle ? oracle_json(*context.oracle) : Json(nullptr);
  doc["warnings"] = r.warnings;
  doc["notes"] = r.notes;
  Json timings = Json::object();
  for (const auto& [k, v] : context.timings)
    timings[k] = v;
  doc["timings"] = timings;
  return doc;
}

std::vector<std::string> compare_expectations(const Expectations& x, const PhiReport& r) {
  std::vector<std::string> out;
  auto check = [&](const char* what, const std::optional<std::string>& expected,
                   const std::string& actual) {
    if (expected && *expected != actual)
      out.push_back(std::string(what) + ": expected " + *expected + ", got " + actual);
  };
  auto ext = [](const std::optional<ExtendedNat>& v, const std::string& otherwise) {
    return v ? v->to_string() : otherwise;
  };
  check("phi_upper", x.phi_upper, ext(r.upper, "unavailable"));
  check("phi_lower", x.phi_lower, ext(r.lower, "unavailable"));
  check("phi_exact", x.phi_exact, ext(r.exact, "none"));
  check("tag", x.tag, r.tag ? to_string(*r.tag) : "none");
  check("vertical", x.vertical, to_string(r.vertical.verdict));
  check("multiplicity", x.multiplicity,
        r.multiplicity.bound ? std::to_string(*r.multiplicity.bound) : "none");
  check("purity", x.purity, purity_string(r.source_purity));
  if (x.strata) {
    std::vector<std::pair<int, int>> actual;
    for (const auto& s : r.strata.strata)
      actual.emplace_back(s.j, s.image_dim);
    if (actual != *x.strata) {
      std::string a;
      for (auto [j, d] : actual)
        a += (a.empty() ? "" : ", ") + std::to_string(j) + ":" + std::to_string(d);
      out.push_back("strata: got " + (a.empty() ? std::string("none") : a));
    }
  }
  if (x.fibred_powers) {
    std::vector<std::pair<unsigned, std::string>> actual;
    if (r.powers)
      for (const auto& c : r.powers->checks)
        actual.emplace_back(c.i, to_string(c.verdict));
    if (actual != *x.fibred_powers) {
      std::string a;
      for (const auto& [i, v] : actual)
        a += (a.empty() ? "" : ", ") + std::to_string(i) + ":" + v;
      out.push_back("fibred_powers: got " + (a.empty() ? std::string("none") : a));
    }
  }
  return out;
}

} // namespace fibrephi::cli
