#include "fibrephi/cli/setup_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "fibrephi/error.hpp"

namespace fibrephi::cli {

bool Expectations::empty() const {
  return !phi_upper && !phi_lower && !phi_exact && !tag && !strata && !vertical && !fibred_powers &&
         !multiplicity && !max_power && !purity;
}

namespace {

struct Entry {
  std::string value;
  std::size_t line = 0;
  std::size_t column = 0; // of the first value character
};

std::string trim(std::string_view s, std::size_t* lead = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r'))
    ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
    --e;
  if (lead)
    *lead = b;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail(const std::string& what, const Entry& at, std::size_t offset = 0) {
  throw ParseError("line " + std::to_string(at.line) + ", column " +
                       std::to_string(at.column + offset) + ": " + what,
                   offset, at.line, at.column + offset);
}

std::vector<std::pair<std::string, std::size_t>> split_commas(const std::string& s) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      std::size_t lead = 0;
      out.emplace_back(trim(std::string_view(s).substr(start, i - start), &lead), start + lead);
      start = i + 1;
    }
  }
  return out;
}

bool parse_bool(const Entry& e) {
  if (e.value == "true")
    return true;
  if (e.value == "false")
    return false;
  fail("expected true or false, got '" + e.value + "'", e);
}

std::vector<std::string> parse_names(const Entry& e) {
  std::vector<std::string> out;
  if (e.value.empty())
    fail("empty variable list", e);
  for (auto& [name, offset] : split_commas(e.value)) {
    if (name.empty())
      fail("empty variable name", e, offset);
    out.push_back(name);
  }
  return out;
}

std::vector<Polynomial> parse_polys(const Entry& e, const RingPtr& ring, bool zero_means_empty) {
  if (e.value.empty())
    fail("empty polynomial list", e);
  std::vector<Polynomial> out;
  try {
    out = parse_polynomial_list(e.value, ring, false);
  } catch (const ParseError& err) {
    fail(err.what(), e, err.position());
  }
  if (zero_means_empty && out.size() == 1 && out.front().is_zero())
    return {};
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].is_zero())
      fail("zero generator", e, split_commas(e.value)[i].second);
  return out;
}

unsigned parse_unsigned(const Entry& e, const std::string& text, std::size_t offset = 0) {
  if (text.empty() || text.size() > 9 || text.find_first_not_of("0123456789") != std::string::npos)
    fail("expected a natural number, got '" + text + "'", e, offset);
  return static_cast<unsigned>(std::stoul(text));
}

int parse_int(const Entry& e, const std::string& text, std::size_t offset) {
  if (text.size() > 1 && text[0] == '-')
    return -static_cast<int>(parse_unsigned(e, text.substr(1), offset + 1));
  return static_cast<int>(parse_unsigned(e, text, offset));
}

std::vector<std::pair<std::string, std::string>> parse_pairs(const Entry& e) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& [item, offset] : split_commas(e.value)) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      fail("expected a:b pairs", e, offset);
    out.emplace_back(trim(item.substr(0, colon)), trim(item.substr(colon + 1)));
  }
  return out;
}

void read_expectation(Expectations& x, const std::string& key, const Entry& e) {
  auto verdict = [&](const std::string& v) {
    if (v != "true" && v != "false" && v != "inconclusive")
      fail("expected true, false or inconclusive, got '" + v + "'", e);
    return v;
  };
  if (key == "phi_upper") {
    x.phi_upper = e.value;
  } else if (key == "phi_lower") {
    x.phi_lower = e.value;
  } else if (key == "phi_exact") {
    x.phi_exact = e.value;
  } else if (key == "tag") {
    x.tag = e.value;
  } else if (key == "vertical") {
    x.vertical = verdict(e.value);
  } else if (key == "multiplicity") {
    x.multiplicity = e.value;
  } else if (key == "purity") {
    x.purity = e.value;
  } else if (key == "max_power") {
    x.max_power = parse_unsigned(e, e.value);
  } else if (key == "strata") {
    std::vector<std::pair<int, int>> strata;
    for (auto& [j, d] : parse_pairs(e))
      strata.emplace_back(parse_int(e, j, 0), parse_int(e, d, 0));
    x.strata = std::move(strata);
  } else if (key == "fibred_powers") {
    std::vector<std::pair<unsigned, std::string>> powers;
    for (auto& [i, v] : parse_pairs(e))
      powers.emplace_back(parse_unsigned(e, i), verdict(v));
    x.fibred_powers = std::move(powers);
  } else {
    fail("unknown expectation '" + key + "'", e);
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i)
    s += (i ? ", " : "") + items[i];
  return s;
}

std::string join(const std::vector<Polynomial>& polys) {
  if (polys.empty())
    return "0";
  std::vector<std::string> items;
  for (const auto& p : polys)
    items.push_back(p.to_string());
  return join(items);
}

} // namespace

SetupFile parse_setup(const std::string& text, const std::string& path) {
  std::map<std::string, Entry> entries;
  std::vector<std::pair<std::string, Entry>> expect_entries;
  bool in_expect = false;

  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    if (trim(line).empty())
      continue;
    const bool indented = line[0] == ' ' || line[0] == '\t';
    const auto colon = line.find(':');
    Entry at{"", line_no, 1};
    if (colon == std::string::npos)
      fail("expected 'key: value'", at);
    const std::string key = trim(line.substr(0, colon));
    std::size_t lead = 0;
    at.value = trim(std::string_view(line).substr(colon + 1), &lead);
    at.column = colon + 2 + lead;

    if (indented) {
      if (!in_expect)
        fail("indented line outside an expect block", {"", line_no, 1});
      for (const auto& [k, _] : expect_entries)
        if (k == key)
          fail("duplicate expectation '" + key + "'", at);
      expect_entries.emplace_back(key, at);
      continue;
    }
    in_expect = false;
    if (key == "expect") {
      if (!at.value.empty())
        fail("expect takes an indented block", at);
      in_expect = true;
    }
    if (!entries.emplace(key, at).second)
      fail("duplicate key '" + key + "'", at);
  }

  static const char* known[] = {"vars_target",
                                "vars_source",
                                "ambient_target_ideal",
                                "target_equals_ambient",
                                "target_ideal",
                                "source_ideal",
                                "assert_target_locally_irreducible",
                                "assert_target_pure_dimensional",
                                "expect"};
  for (const auto& [key, at] : entries) {
    bool ok = false;
    for (const char* k : known)
      ok = ok || key == k;
    if (!ok)
      fail("unknown key '" + key + "'", at);
  }
  auto require = [&](const char* key) -> const Entry& {
    auto it = entries.find(key);
    if (it == entries.end())
      throw ParseError(std::string("missing key '") + key + "'", 0, line_no, 1);
    return it->second;
  };

  SetupFile file;
  file.path = path;
  file.text = text;
  file.vars_target = parse_names(require("vars_target"));
  file.vars_source = parse_names(require("vars_source"));
  RingPtr ring;
  try {
    ring = PolynomialRing::make(file.vars_target, file.vars_source);
  } catch (const Error& err) {
    fail(err.what(), require("vars_target"));
  }

  file.ambient = parse_polys(require("ambient_target_ideal"), ring, true);
  file.target_equals_ambient = parse_bool(require("target_equals_ambient"));
  if (auto it = entries.find("target_ideal"); it != entries.end()) {
    file.target = parse_polys(it->second, ring, true);
    if (file.target_equals_ambient) {
      const Ideal a(ring, file.ambient), t(ring, file.target);
      if (a.standard_basis().elements != t.standard_basis().elements)
        fail("target_equals_ambient is true but target_ideal differs from the ambient ideal",
             it->second);
      file.target.clear();
    }
  } else if (!file.target_equals_ambient) {
    require("target_ideal");
  }
  file.source = parse_polys(require("source_ideal"), ring, false);
  if (auto it = entries.find("assert_target_locally_irreducible"); it != entries.end())
    file.attestations.target_locally_irreducible = parse_bool(it->second);
  if (auto it = entries.find("assert_target_pure_dimensional"); it != entries.end())
    file.attestations.target_pure_dimensional = parse_bool(it->second);
  for (const auto& [key, at] : expect_entries)
    read_expectation(file.expect, key, at);

  try {
    file.setup = ProjectionSetup::build(ring, file.ambient, file.target_equals_ambient, file.target,
                                        file.source, file.attestations);
  } catch (const PreconditionError& err) {
    throw PreconditionError(path + ": " + err.what());
  }
  return file;
}

SetupFile load_setup(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_setup(buffer.str(), path);
  } catch (const ParseError& err) {
    throw ParseError(path + ": " + err.what(), err.position(), err.line(), err.column());
  }
}

std::string print_setup(const SetupFile& file) {
  std::ostringstream out;
  out << "vars_target: " << join(file.vars_target) << "\n";
  out << "vars_source: " << join(file.vars_source) << "\n";
  out << "ambient_target_ideal: " << join(file.ambient) << "\n";
  out << "target_equals_ambient: " << (file.target_equals_ambient ? "true" : "false") << "\n";
  if (!file.target_equals_ambient)
    out << "target_ideal: " << join(file.target) << "\n";
  out << "source_ideal: " << join(file.source) << "\n";
  out << "assert_target_locally_irreducible: "
      << (file.attestations.target_locally_irreducible ? "true" : "false") << "\n";
  out << "assert_target_pure_dimensional: "
      << (file.attestations.target_pure_dimensional ? "true" : "false") << "\n";
  const auto& x = file.expect;
  if (x.empty())
    return out.str();
  out << "expect:\n";
  auto line = [&](const char* key, const std::optional<std::string>& v) {
    if (v)
      out << "  " << key << ": " << *v << "\n";
  };
  line("phi_upper", x.phi_upper);
  line("phi_lower", x.phi_lower);
  line("phi_exact", x.phi_exact);
  line("tag", x.tag);
  if (x.strata) {
    std::vector<std::string> items;
    for (auto [j, d] : *x.strata)
      items.push_back(std::to_string(j) + ":" + std::to_string(d));
    out << "  strata: " << join(items) << "\n";
  }
  line("vertical", x.vertical);
  if (x.fibred_powers) {
    std::vector<std::string> items;
    for (const auto& [i, v] : *x.fibred_powers)
      items.push_back(std::to_string(i) + ":" + v);
    out << "  fibred_powers: " << join(items) << "\n";
  }
  line("multiplicity", x.multiplicity);
  if (x.max_power)
    out << "  max_power: " << *x.max_power << "\n";
  line("purity", x.purity);
  return out.str();
}

} // namespace fibrephi::cli
